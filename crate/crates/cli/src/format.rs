//! JSON instance and certificate files.
//!
//! Numbers are written by `serde_json`, which prints every `f64` as the
//! shortest decimal that parses back to the same value, so output files are
//! byte-for-byte reproducible.

use diskstab_core::geometry::{Disk, GeneralizedDisk, Halfplane, Point};
use diskstab_core::stabbing::{StabCertificate, StabTrace, WidePair};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskEntry {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

/// The halfplane `{p : nx * p.x + ny * p.y <= offset}`; the normal need not
/// be unit length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfplaneEntry {
    pub nx: f64,
    pub ny: f64,
    pub offset: f64,
}

/// A family of disks and halfplanes. Disks get ids `0..m` in file order,
/// halfplanes continue from `m`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub disks: Vec<DiskEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub halfplanes: Vec<HalfplaneEntry>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if file.disks.is_empty() && file.halfplanes.is_empty() {
            return Err(CliError::Invalid("instance has no objects".into()));
        }
        Ok(file)
    }

    /// Disks first, then halfplanes; ids are dropped.
    pub fn from_family(family: &[GeneralizedDisk]) -> Self {
        let mut file = InstanceFile::default();
        for g in family {
            match g {
                GeneralizedDisk::Disk(d) => file.disks.push(DiskEntry { cx: d.center.x, cy: d.center.y, r: d.radius }),
                GeneralizedDisk::Halfplane(h) => {
                    file.halfplanes.push(HalfplaneEntry { nx: h.normal.x, ny: h.normal.y, offset: h.offset })
                }
            }
        }
        file
    }

    pub fn to_family(&self) -> Result<Vec<GeneralizedDisk>, CliError> {
        let mut out = Vec::with_capacity(self.disks.len() + self.halfplanes.len());
        for (i, d) in self.disks.iter().enumerate() {
            let disk = Disk::new(i as u32, Point::new(d.cx, d.cy), d.r)
                .map_err(|e| CliError::Invalid(format!("disk {i}: {e}")))?;
            out.push(disk.into());
        }
        for (j, h) in self.halfplanes.iter().enumerate() {
            let id = (self.disks.len() + j) as u32;
            let hp = Halfplane::from_raw(id, Point::new(h.nx, h.ny), h.offset)
                .map_err(|e| CliError::Invalid(format!("halfplane {j}: {e}")))?;
            out.push(hp.into());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointEntry {
    pub x: f64,
    pub y: f64,
}

impl From<Point> for PointEntry {
    fn from(p: Point) -> Self {
        PointEntry { x: p.x, y: p.y }
    }
}

impl From<PointEntry> for Point {
    fn from(p: PointEntry) -> Self {
        Point::new(p.x, p.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDisk {
    pub id: u32,
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl From<Disk> for TraceDisk {
    fn from(d: Disk) -> Self {
        TraceDisk { id: d.id, cx: d.center.x, cy: d.center.y, r: d.radius }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WidePairEntry {
    pub first: TraceDisk,
    pub second: TraceDisk,
    pub lens_angle: f64,
}

impl From<WidePair> for WidePairEntry {
    fn from(w: WidePair) -> Self {
        WidePairEntry { first: w.first.into(), second: w.second.into(), lens_angle: w.lens_angle }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceEntry {
    pub helly_point: Option<PointEntry>,
    pub triple: Option<Vec<TraceDisk>>,
    pub wide_pair: Option<WidePairEntry>,
    pub companion: Option<TraceDisk>,
    pub four_points: Option<Vec<PointEntry>>,
}

impl From<&StabTrace> for TraceEntry {
    fn from(t: &StabTrace) -> Self {
        TraceEntry {
            helly_point: t.helly_point.map(Into::into),
            triple: t.triple.map(|tr| tr.iter().map(|&d| d.into()).collect()),
            wide_pair: t.wide_pair.map(Into::into),
            companion: t.companion.map(Into::into),
            four_points: t.four_points.map(|ps| ps.iter().map(|&p| p.into()).collect()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Translation {
    pub dy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub points: Vec<PointEntry>,
    pub trace: TraceEntry,
    pub delta: f64,
    pub seed: u64,
    pub translation: Translation,
}

impl CertificateFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: CertificateFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if !(1..=5).contains(&file.points.len()) {
            return Err(CliError::Invalid(format!("certificate has {} points, expected 1 to 5", file.points.len())));
        }
        Ok(file)
    }

    pub fn points(&self) -> Vec<Point> {
        self.points.iter().map(|&p| p.into()).collect()
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

impl From<&StabCertificate> for CertificateFile {
    fn from(c: &StabCertificate) -> Self {
        CertificateFile {
            points: c.points.iter().map(|&p| p.into()).collect(),
            trace: (&c.trace).into(),
            delta: c.delta,
            seed: c.seed,
            translation: Translation { dy: c.translation_dy },
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_keys() {
        assert!(matches!(InstanceFile::parse(r#"{"disks":[{"cx":0,"cy":0,"r":1,"z":2}]}"#), Err(CliError::Parse(_))));
        assert!(matches!(InstanceFile::parse(r#"{"disks":[],"extra":1}"#), Err(CliError::Parse(_))));
    }

    #[test]
    fn rejects_empty_and_invalid() {
        assert!(matches!(InstanceFile::parse(r#"{"disks":[]}"#), Err(CliError::Invalid(_))));
        let bad = InstanceFile::parse(r#"{"disks":[{"cx":0,"cy":0,"r":-1}]}"#).unwrap();
        assert!(matches!(bad.to_family(), Err(CliError::Invalid(_))));
    }

    #[test]
    fn halfplane_normals_are_normalized() {
        let file = InstanceFile::parse(r#"{"disks":[{"cx":0,"cy":0,"r":1}],"halfplanes":[{"nx":0,"ny":2,"offset":4}]}"#)
            .unwrap();
        let fam = file.to_family().unwrap();
        match fam[1] {
            GeneralizedDisk::Halfplane(h) => {
                assert_eq!(h.id, 1);
                assert_eq!(h.normal, Point::new(0.0, 1.0));
                assert_eq!(h.offset, 2.0);
            }
            _ => panic!("expected a halfplane"),
        }
    }

    #[test]
    fn numbers_round_trip() {
        let file = InstanceFile {
            disks: vec![DiskEntry { cx: 0.1 + 0.2, cy: 1.0 / 3.0, r: 1e-300 }],
            halfplanes: vec![],
        };
        let text = file.to_json();
        assert!(text.contains("0.30000000000000004"));
        assert_eq!(InstanceFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn certificate_point_count() {
        let cert = |n: usize| {
            let points: Vec<String> = (0..n).map(|_| r#"{"x":0,"y":0}"#.to_string()).collect();
            format!(
                r#"{{"points":[{}],"trace":{{"helly_point":null,"triple":null,"wide_pair":null,"companion":null,"four_points":null}},"delta":0,"seed":0,"translation":{{"dy":0}}}}"#,
                points.join(",")
            )
        };
        assert!(CertificateFile::parse(&cert(1)).is_ok());
        assert!(CertificateFile::parse(&cert(5)).is_ok());
        assert!(matches!(CertificateFile::parse(&cert(0)), Err(CliError::Invalid(_))));
        assert!(matches!(CertificateFile::parse(&cert(6)), Err(CliError::Invalid(_))));
    }
}
