//! A thirteen-object family of pairwise intersecting disks and halfplanes
//! designed to resist piercing by three points, and an exhaustive small-`k`
//! piercing check.
//!
//! A unit disk `A` at the origin is touched by three disks `D1, D2, D3` of
//! radius `3 + 2√3` that also touch each other. For each `Di` the two common
//! outer tangents of `A` and `Di` bound halfplanes `Ti-`, `Ti+` that avoid the
//! interior of `A`. Finally `A` is grown to radius `1 + eps1` while staying
//! tangent to `Di` at the contact point `ξi`, then rolled clockwise along `Di`
//! by the angle `eps2`, giving `Ai`.
//!
//! The check does not confirm the design: every parameter pair that passes
//! [`verify_construction`] is pierced by three points. One such set is the
//! contact point of `A` with `T1-`, the contact point of `D1` and `D3`, and a
//! crossing of `∂D2` with the line bounding `T1+`. The last point also lies
//! in `T3-` and `T3+`.

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{
    candidate_points, intersection_witness, intersects, Disk, GeneralizedDisk, Halfplane, Point, DEFAULT_TOL,
};

/// Radius of `D1, D2, D3`: the solution of `√3 (1 + R) = 2R`.
pub const BIG_RADIUS: f64 = 3.0 + 2.0 * 1.7320508075688772;

/// Default `eps1`. Property (ii) fails for `eps1` around `1e-2` and above.
pub const DEFAULT_EPS1: f64 = 5e-3;
/// Default `eps2`. Property (i) needs `eps2` below about `0.02 * eps1`, and
/// property (iii) gets fragile at tolerance `1e-7` much below that.
pub const DEFAULT_EPS2: f64 = 1e-4;

/// Largest family [`min_pierce`] accepts.
pub const MAX_PIERCE_FAMILY: usize = 20;
/// Largest `k` [`min_pierce`] accepts.
pub const MAX_PIERCE_K: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBoundError {
    /// Parameters out of range, or the built configuration fails a check.
    BadEpsilons,
    TooLarge,
}

impl fmt::Display for LowerBoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBoundError::BadEpsilons => {
                f.write_str("need 0 < eps1 <= 0.05 and 0 < eps2 <= eps1/5, and a configuration that verifies")
            }
            LowerBoundError::TooLarge => {
                write!(f, "piercing check limited to {MAX_PIERCE_FAMILY} objects and k <= {MAX_PIERCE_K}")
            }
        }
    }
}

impl core::error::Error for LowerBoundError {}

/// The thirteen objects. Ids: `A` = 0, `Di` = i, `Ti-` = 2i + 2, `Ti+` = 2i + 3,
/// `Ai` = 9 + i, for i = 1, 2, 3.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundConfig {
    pub a: Disk,
    pub d: [Disk; 3],
    /// `[T1-, T1+, T2-, T2+, T3-, T3+]`.
    pub t: [Halfplane; 6],
    pub a_inner: [Disk; 3],
    /// Contact points of `A` with `D1, D2, D3`.
    pub xi: [Point; 3],
    pub eps1: f64,
    pub eps2: f64,
}

impl LowerBoundConfig {
    /// Builds the configuration without checking the parameters.
    pub fn construct(eps1: f64, eps2: f64) -> LowerBoundConfig {
        let r = BIG_RADIUS;
        let origin = Point::new(0.0, 0.0);
        let a = Disk { id: 0, center: origin, radius: 1.0 };
        let dirs: [Point; 3] = core::array::from_fn(|i| {
            Point::from_angle(core::f64::consts::FRAC_PI_2 + i as f64 * 2.0 * core::f64::consts::FRAC_PI_3)
        });
        let d: [Disk; 3] = core::array::from_fn(|i| Disk { id: i as u32 + 1, center: dirs[i] * (1.0 + r), radius: r });

        // Outer tangent with both disks on the side n·p >= -1: n·u = (R-1)/(R+1).
        let cos = (r - 1.0) / (r + 1.0);
        let sin = libm::sqrt(1.0 - cos * cos);
        let mut t = [Halfplane { id: 0, normal: origin, offset: -1.0 }; 6];
        for (i, u) in dirs.iter().enumerate() {
            let minus = *u * cos + u.perp() * sin;
            let plus = *u * cos - u.perp() * sin;
            t[2 * i] = Halfplane { id: 2 * i as u32 + 4, normal: minus, offset: -1.0 };
            t[2 * i + 1] = Halfplane { id: 2 * i as u32 + 5, normal: plus, offset: -1.0 };
        }

        let a_inner: [Disk; 3] = core::array::from_fn(|i| {
            let expanded = dirs[i] * (-eps1);
            let pivot = d[i].center;
            Disk { id: i as u32 + 10, center: pivot + (expanded - pivot).rotated(-eps2), radius: 1.0 + eps1 }
        });
        LowerBoundConfig { a, d, t, a_inner, xi: dirs, eps1, eps2 }
    }

    /// All thirteen objects in id order.
    pub fn family(&self) -> Vec<GeneralizedDisk> {
        let mut out = Vec::with_capacity(13);
        out.push(self.a.into());
        out.extend(self.d.iter().map(|&d| GeneralizedDisk::from(d)));
        out.extend(self.t.iter().map(|&h| GeneralizedDisk::from(h)));
        out.extend(self.a_inner.iter().map(|&d| GeneralizedDisk::from(d)));
        out
    }

    /// The nine points where `A` touches `D1..D3` and the six tangents.
    pub fn tangency_points(&self) -> [Point; 9] {
        let mut out = [Point::new(0.0, 0.0); 9];
        out[..3].copy_from_slice(&self.xi);
        for (slot, h) in out[3..].iter_mut().zip(&self.t) {
            *slot = self.a.center - h.normal * self.a.radius;
        }
        out
    }

    /// Human-readable label of an object id.
    pub fn label(id: u32) -> &'static str {
        const LABELS: [&str; 13] =
            ["A", "D1", "D2", "D3", "T1-", "T1+", "T2-", "T2+", "T3-", "T3+", "A1", "A2", "A3"];
        LABELS.get(id as usize).copied().unwrap_or("?")
    }
}

/// Builds the configuration and checks it with [`verify_construction`].
pub fn build_lower_bound(eps1: f64, eps2: f64) -> Result<LowerBoundConfig, LowerBoundError> {
    if !(eps1 > 0.0 && eps1 <= 0.05 && eps2 > 0.0 && eps2 <= eps1 / 5.0) {
        return Err(LowerBoundError::BadEpsilons);
    }
    let config = LowerBoundConfig::construct(eps1, eps2);
    if !verify_construction(&config, DEFAULT_TOL).all_passed() {
        return Err(LowerBoundError::BadEpsilons);
    }
    Ok(config)
}

/// One flag per checked property; see [`verify_construction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionReport {
    /// `|ξi| = 1`, `ξi ∈ ∂Di`, and the tangencies among `A, D1, D2, D3`.
    pub tangencies: bool,
    pub pairwise_intersecting: bool,
    /// (i) `Ai` meets the other twelve objects.
    pub meets_all: [bool; 3],
    /// (ii) the regions `Ai ∩ X`, `X` among the `Dj` and `Tj±`, are pairwise
    /// disjoint.
    pub regions_disjoint: [bool; 3],
    /// (iii) `ξi ∉ Ai`.
    pub xi_outside: [bool; 3],
    pub tangency_points_distinct: bool,
    /// `{D1, D2, D3}` has no common point.
    pub big_disks_non_helly: bool,
    /// `{T1-, T2-, T3-}` has no common point.
    pub minus_tangents_non_helly: bool,
    /// `{Di, Ti-, Ti+}` has no common point.
    pub tangent_triples_non_helly: [bool; 3],
}

impl ConstructionReport {
    pub fn all_passed(&self) -> bool {
        self.tangencies
            && self.pairwise_intersecting
            && self.big_disks_non_helly
            && self.minus_tangents_non_helly
            && self.tangency_points_distinct
            && [self.meets_all, self.regions_disjoint, self.xi_outside, self.tangent_triples_non_helly]
                .iter()
                .all(|flags| flags.iter().all(|&b| b))
    }

    /// Names of the failed properties.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut check = |ok: bool, name: &'static str| {
            if !ok {
                out.push(name);
            }
        };
        check(self.tangencies, "tangencies");
        check(self.pairwise_intersecting, "pairwise intersection");
        const I: [&str; 3] = ["(i) A1", "(i) A2", "(i) A3"];
        const II: [&str; 3] = ["(ii) A1", "(ii) A2", "(ii) A3"];
        const III: [&str; 3] = ["(iii) A1", "(iii) A2", "(iii) A3"];
        const TT: [&str; 3] = ["{D1,T1-,T1+} non-Helly", "{D2,T2-,T2+} non-Helly", "{D3,T3-,T3+} non-Helly"];
        for i in 0..3 {
            check(self.meets_all[i], I[i]);
            check(self.regions_disjoint[i], II[i]);
            check(self.xi_outside[i], III[i]);
            check(self.tangent_triples_non_helly[i], TT[i]);
        }
        check(self.tangency_points_distinct, "distinct tangency points");
        check(self.big_disks_non_helly, "{D1,D2,D3} non-Helly");
        check(self.minus_tangents_non_helly, "{T1-,T2-,T3-} non-Helly");
        out
    }
}

/// `true` when the objects have no common point. A near-tangent verdict
/// counts as a common point.
fn empty_intersection(objects: &[GeneralizedDisk], tol: f64) -> bool {
    matches!(intersection_witness(objects, tol), Ok(None))
}

/// Checks the properties the impossibility argument relies on.
pub fn verify_construction(config: &LowerBoundConfig, tol: f64) -> ConstructionReport {
    let family = config.family();
    let close = |x: f64, y: f64| (x - y).abs() <= tol * 10.0 * (1.0 + y.abs());
    let mut tangencies = true;
    for (i, di) in config.d.iter().enumerate() {
        let xi = config.xi[i];
        tangencies &= close(xi.distance(config.a.center), config.a.radius);
        tangencies &= close(xi.distance(di.center), di.radius);
        tangencies &= close(di.center.distance(config.a.center), di.radius + config.a.radius);
        for dj in &config.d[i + 1..] {
            tangencies &= close(di.center.distance(dj.center), di.radius + dj.radius);
        }
    }

    let mut pairwise_intersecting = true;
    for (i, x) in family.iter().enumerate() {
        for y in &family[i + 1..] {
            pairwise_intersecting &= intersects(x, y, tol);
        }
    }

    let outer: Vec<GeneralizedDisk> = family[1..10].to_vec();
    let mut meets_all = [true; 3];
    let mut regions_disjoint = [true; 3];
    let mut xi_outside = [true; 3];
    for (i, ai) in config.a_inner.iter().enumerate() {
        let ai = GeneralizedDisk::from(*ai);
        meets_all[i] = family.iter().filter(|g| g.id() != ai.id()).all(|g| intersects(&ai, g, tol));
        for (j, x) in outer.iter().enumerate() {
            for y in &outer[j + 1..] {
                regions_disjoint[i] &= empty_intersection(&[ai, *x, *y], tol);
            }
        }
        xi_outside[i] = !ai.contains(config.xi[i], tol);
    }

    let pts = config.tangency_points();
    let mut tangency_points_distinct = true;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            tangency_points_distinct &= p.distance(*q) > 10.0 * tol;
        }
    }

    let d: Vec<GeneralizedDisk> = config.d.iter().map(|&x| x.into()).collect();
    let t: Vec<GeneralizedDisk> = config.t.iter().map(|&x| x.into()).collect();
    let tangent_triples_non_helly: [bool; 3] =
        core::array::from_fn(|i| empty_intersection(&[d[i], t[2 * i], t[2 * i + 1]], tol));

    ConstructionReport {
        tangencies,
        pairwise_intersecting,
        meets_all,
        regions_disjoint,
        xi_outside,
        tangency_points_distinct,
        big_disks_non_helly: empty_intersection(&d, tol),
        minus_tangents_non_helly: empty_intersection(&[t[0], t[2], t[4]], tol),
        tangent_triples_non_helly,
    }
}

/// Coverage masks of the candidate points, with the first candidate index
/// for each distinct mask.
fn coverage_table(family: &[GeneralizedDisk], tol: f64) -> (Vec<Point>, Vec<u32>) {
    let mut points = Vec::new();
    let mut masks: Vec<u32> = Vec::new();
    for p in candidate_points(family, tol) {
        let mask = family
            .iter()
            .enumerate()
            .filter(|(_, g)| g.contains(p, tol))
            .fold(0u32, |m, (i, _)| m | (1 << i));
        if mask != 0 && !masks.contains(&mask) {
            masks.push(mask);
            points.push(p);
        }
    }
    (points, masks)
}

/// Whether `k` masks cover `full`: branch on the candidates covering the
/// lowest uncovered object.
fn coverable(masks: &[u32], covered: u32, full: u32, k: usize) -> bool {
    if covered == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    let missing = full & !covered;
    let lowest = missing & missing.wrapping_neg();
    masks.iter().filter(|&&m| m & lowest != 0).any(|&m| coverable(masks, covered | m, full, k - 1))
}

/// Lexicographically first index tuple of length `k` covering `full`.
fn first_cover(masks: &[u32], suffix_union: &[u32], start: usize, covered: u32, full: u32, k: usize, picked: &mut Vec<usize>) -> bool {
    if covered == full {
        return true;
    }
    if k == 0 || covered | suffix_union[start] != full {
        return false;
    }
    for i in start..masks.len() {
        if covered | suffix_union[i] != full {
            return false;
        }
        picked.push(i);
        if first_cover(masks, suffix_union, i + 1, covered | masks[i], full, k - 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// At most `k` points piercing every member of `family`, or `None` if no
/// such set exists.
///
/// Any piercing set can be moved onto candidate points (pairwise boundary
/// intersections including tangency points, disk centers, halfplane foot
/// and deep points): each point slides within its cell of the arrangement to
/// a vertex of the cell's closure, or to a center or deep point when the
/// cell has no vertex, without leaving any object it was in. Exhaustive
/// search over candidates is therefore complete. Among the smallest
/// solutions the one with the lexicographically smallest candidate indices
/// is returned.
///
/// The verdict is exact up to `tol`-tolerant containment; it is a numeric
/// certificate, not a proof in exact arithmetic.
pub fn min_pierce(family: &[GeneralizedDisk], k: usize, tol: f64) -> Result<Option<Vec<Point>>, LowerBoundError> {
    if family.len() > MAX_PIERCE_FAMILY || k > MAX_PIERCE_K {
        return Err(LowerBoundError::TooLarge);
    }
    if family.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let full = if family.len() == 32 { u32::MAX } else { (1u32 << family.len()) - 1 };
    let (points, masks) = coverage_table(family, tol);
    if !coverable(&masks, 0, full, k) {
        return Ok(None);
    }
    let mut suffix_union = alloc::vec![0u32; masks.len() + 1];
    for i in (0..masks.len()).rev() {
        suffix_union[i] = suffix_union[i + 1] | masks[i];
    }
    for size in 1..=k {
        let mut picked = Vec::with_capacity(size);
        if first_cover(&masks, &suffix_union, 0, 0, full, size, &mut picked) {
            return Ok(Some(picked.into_iter().map(|i| points[i]).collect()));
        }
    }
    unreachable!("coverable implies a cover of size at most k")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::verify_stabbing;

    #[test]
    fn big_radius_solves_tangency_system() {
        let r = BIG_RADIUS;
        assert!((2.0 * (1.0 + r) * libm::sin(core::f64::consts::FRAC_PI_3) - 2.0 * r).abs() < 1e-12);
        assert!((r - libm::sqrt(3.0) / (2.0 - libm::sqrt(3.0))).abs() < 1e-12);
        let c = LowerBoundConfig::construct(DEFAULT_EPS1, DEFAULT_EPS2);
        assert!((c.d[0].center.norm() - (1.0 + r)).abs() < 1e-12);
        assert!(c.d[0].center.x.abs() < 1e-12 && c.d[0].center.y > 0.0);
    }

    #[test]
    fn default_config_verifies() {
        let c = build_lower_bound(DEFAULT_EPS1, DEFAULT_EPS2).unwrap();
        let report = verify_construction(&c, DEFAULT_TOL);
        assert!(report.all_passed(), "{:?}", report.failures());
        assert_eq!(c.family().len(), 13);
    }

    #[test]
    fn tangents_are_labelled_counterclockwise() {
        let c = LowerBoundConfig::construct(DEFAULT_EPS1, DEFAULT_EPS2);
        let pts = c.tangency_points();
        for i in 0..3 {
            let xi = c.xi[i];
            let (minus, plus) = (pts[3 + 2 * i], pts[4 + 2 * i]);
            assert!(minus.cross(xi) > 0.0, "T{}- precedes ξ{}", i + 1, i + 1);
            assert!(xi.cross(plus) > 0.0, "ξ{} precedes T{}+", i + 1, i + 1);
        }
    }

    #[test]
    fn unexpanded_inner_disk_fails_xi_property() {
        let mut c = LowerBoundConfig::construct(DEFAULT_EPS1, DEFAULT_EPS2);
        c.a_inner[1] = Disk { id: 11, ..c.a };
        let report = verify_construction(&c, DEFAULT_TOL);
        assert!(!report.xi_outside[1]);
        assert!(report.xi_outside[0] && report.xi_outside[2]);
    }

    #[test]
    fn oversized_inner_disks_merge_regions() {
        let c = LowerBoundConfig::construct(0.5, DEFAULT_EPS2);
        let report = verify_construction(&c, DEFAULT_TOL);
        assert!(report.regions_disjoint.iter().any(|&ok| !ok));
    }

    #[test]
    fn bad_epsilons() {
        assert_eq!(build_lower_bound(0.01, 0.0), Err(LowerBoundError::BadEpsilons));
        assert_eq!(build_lower_bound(0.1, 0.001), Err(LowerBoundError::BadEpsilons));
        assert_eq!(build_lower_bound(0.01, 0.005), Err(LowerBoundError::BadEpsilons));
    }

    #[test]
    fn zero_roll_keeps_xi_on_inner_boundary() {
        let c = LowerBoundConfig::construct(DEFAULT_EPS1, 0.0);
        for i in 0..3 {
            let ai = c.a_inner[i];
            assert!((ai.center.distance(c.xi[i]) - ai.radius).abs() < 1e-12);
        }
        assert!(!verify_construction(&c, DEFAULT_TOL).xi_outside.iter().any(|&b| b));
    }

    #[test]
    fn spec_default_epsilons_are_too_large() {
        let report = verify_construction(&LowerBoundConfig::construct(0.01, 0.001), DEFAULT_TOL);
        assert!(!report.pairwise_intersecting);
        assert!(report.regions_disjoint.iter().all(|&ok| !ok));
        assert_eq!(build_lower_bound(0.01, 0.001), Err(LowerBoundError::BadEpsilons));
    }

    #[test]
    fn three_points_pierce_the_configuration() {
        let c = build_lower_bound(DEFAULT_EPS1, DEFAULT_EPS2).unwrap();
        let fam = c.family();
        let three = min_pierce(&fam, 3, DEFAULT_TOL).unwrap().expect("a 3-piercing exists");
        assert_eq!(three.len(), 3);
        assert_eq!(verify_stabbing(&fam, &three, 1e-12), Ok(()));
        assert!(min_pierce(&fam, 2, DEFAULT_TOL).unwrap().is_none());
    }

    #[test]
    fn three_piercing_from_tangency_points() {
        // A ∩ T1-, D1 ∩ D3, and a crossing of ∂D2 with the line of T1+.
        let c = build_lower_bound(DEFAULT_EPS1, DEFAULT_EPS2).unwrap();
        let p = c.tangency_points()[3];
        let q = (c.d[0].center + c.d[2].center) * 0.5;
        let line = c.t[1];
        let s = line.normal.dot(c.d[1].center) - line.offset;
        let h = libm::sqrt(c.d[1].radius * c.d[1].radius - s * s);
        let third = c.d[1].center - line.normal * s + line.normal.perp() * h;
        assert_eq!(verify_stabbing(&c.family(), &[p, q, third], 1e-12), Ok(()));
    }

    #[test]
    fn pierce_limits() {
        let d = GeneralizedDisk::from(Disk { id: 0, center: Point::new(0.0, 0.0), radius: 1.0 });
        assert_eq!(min_pierce(&[d], 5, 1e-9), Err(LowerBoundError::TooLarge));
        assert_eq!(min_pierce(&[d], 1, 1e-9).unwrap().map(|p| p.len()), Some(1));
        assert_eq!(min_pierce(&[], 2, 1e-9), Ok(Some(Vec::new())));
    }
}
