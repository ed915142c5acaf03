//! Seeded instance generation and end-to-end checks shared by tests, the
//! acceptance suite and the CLI.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{intersects, Disk, GeneralizedDisk, Point};

/// Step used to make generated radii pairwise distinct.
pub const RADIUS_JITTER: f64 = 1e-12;

/// Parameters of [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSpec {
    pub n: usize,
    pub seed: u64,
    /// Ratio between the largest and smallest raw radius.
    pub radius_spread: f64,
    /// Relative inflation past the point where the last pair becomes tangent.
    pub slack: f64,
}

impl InstanceSpec {
    pub fn new(n: usize, seed: u64) -> Self {
        InstanceSpec { n, seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        if self.n == 0 {
            return Err(SpecError::Empty);
        }
        if self.slack <= 0.0 || !self.slack.is_finite() {
            return Err(SpecError::Slack);
        }
        if self.radius_spread < 1.0 || !self.radius_spread.is_finite() {
            return Err(SpecError::RadiusSpread);
        }
        Ok(())
    }
}

impl Default for InstanceSpec {
    fn default() -> Self {
        InstanceSpec { n: 16, seed: 0, radius_spread: 2.0, slack: 0.05 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecError {
    Empty,
    Slack,
    RadiusSpread,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Empty => f.write_str("instance needs at least one disk"),
            SpecError::Slack => f.write_str("slack must be positive"),
            SpecError::RadiusSpread => f.write_str("radius spread must be at least 1"),
        }
    }
}

impl core::error::Error for SpecError {}

/// Random pairwise intersecting disks.
///
/// Centers are uniform in the unit square and raw radii uniform in
/// `[1, radius_spread]`, all drawn from a ChaCha8 stream keyed by the seed.
/// Radii are then scaled by `λ (1 + slack)` with `λ = max |c_i c_j| / (r_i + r_j)`,
/// so every pair overlaps with a lens of positive area, and radius `i` gets
/// `(i + 1) * 1e-12` added to make all radii distinct.
pub fn random_instance(spec: &InstanceSpec) -> Result<Vec<Disk>, SpecError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut centers = Vec::with_capacity(spec.n);
    let mut radii = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let x: f64 = rng.gen();
        let y: f64 = rng.gen();
        centers.push(Point::new(x, y));
        let t: f64 = rng.gen();
        radii.push(1.0 + (spec.radius_spread - 1.0) * t);
    }
    let scale = if spec.n >= 2 { max_overlap_ratio(&centers, &radii) * (1.0 + spec.slack) } else { 1.0 };
    Ok(centers
        .into_iter()
        .zip(radii)
        .enumerate()
        .map(|(i, (center, r))| Disk { id: i as u32, center, radius: r * scale + (i + 1) as f64 * RADIUS_JITTER })
        .collect())
}

/// Exact `max_{i≠j} |c_i c_j| / (r_i + r_j)`.
///
/// Each disk `i` is bounded by `U_i = F_i / (r_i + r_min)`, where `F_i` is the
/// distance to the farthest hull vertex of all centers. Disks are scanned in
/// decreasing `U_i` and the scan stops once `U_i` cannot beat the best ratio.
pub fn max_overlap_ratio(centers: &[Point], radii: &[f64]) -> f64 {
    let hull = convex_hull(centers);
    let r_min = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let mut bounds: Vec<(f64, usize)> = centers
        .iter()
        .zip(radii)
        .enumerate()
        .map(|(i, (c, r))| {
            let far = hull.iter().map(|h| c.distance(*h)).fold(0.0, f64::max);
            (far / (r + r_min), i)
        })
        .collect();
    bounds.sort_unstable_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut best = 0.0f64;
    for (bound, i) in bounds {
        if bound <= best {
            break;
        }
        let (ci, ri) = (centers[i], radii[i]);
        for (j, (cj, rj)) in centers.iter().zip(radii).enumerate() {
            if j != i {
                best = best.max(ci.distance(*cj) / (ri + rj));
            }
        }
    }
    best
}

/// Vertices of the convex hull (monotone chain); collinear points dropped.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_unstable_by(Point::lex_cmp);
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: Point, a: Point, b: Point| (a - o).cross(b - o);
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: &mut dyn Iterator<Item = &Point> = if pass == 0 { &mut pts.iter() } else { &mut pts.iter().rev() };
        for &p in iter {
            while hull.len() >= start + 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// First family member containing none of the points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Uncovered {
    pub id: u32,
}

impl fmt::Display for Uncovered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "object {} contains none of the points", self.id)
    }
}

impl core::error::Error for Uncovered {}

/// Checks that every member of `family` contains at least one point.
pub fn verify_stabbing(family: &[GeneralizedDisk], points: &[Point], tol: f64) -> Result<(), Uncovered> {
    match family.iter().find(|g| !points.iter().any(|p| g.contains(*p, tol))) {
        Some(g) => Err(Uncovered { id: g.id() }),
        None => Ok(()),
    }
}

/// First pair of members that do not intersect within `tol`. Quadratic.
pub fn find_disjoint_pair(family: &[GeneralizedDisk], tol: f64) -> Option<(u32, u32)> {
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            if !intersects(a, b, tol) {
                return Some((a.id(), b.id()));
            }
        }
    }
    None
}

/// Wraps plain disks as a generalized family.
pub fn as_family(disks: &[Disk]) -> Vec<GeneralizedDisk> {
    disks.iter().copied().map(GeneralizedDisk::Disk).collect()
}
