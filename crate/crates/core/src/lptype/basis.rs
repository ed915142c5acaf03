//! Constant-size pieces of the LP-type problem: extreme points, weights of
//! sets with at most three disks, the violation test and basis extension.

use core::cmp::Ordering;

use arrayvec::ArrayVec;

use super::weight::{Destroyer, Weight};
use super::LpError;
use crate::geometry::{circle_intersection_points, Disk, Point};

/// Outcome of [`violation_test`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    NotABasis,
    Violates,
    NoViolation,
}

/// An inclusion-minimal set of at most three disks with its cached weight,
/// smallest destroyer and extreme point. Disks are kept in `(radius, id)`
/// order, so for a non-Helly triple the destroyer is the last one.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    disks: ArrayVec<Disk, 3>,
    pub weight: Weight,
    pub destroyer: Destroyer,
    /// `None` only for the empty basis.
    pub extreme_point: Option<Point>,
}

impl Basis {
    pub fn empty() -> Basis {
        Basis {
            disks: ArrayVec::new(),
            weight: Weight::EMPTY,
            destroyer: Destroyer::Infinity,
            extreme_point: None,
        }
    }

    /// Evaluates a set of one to three disks. The set is not checked for
    /// minimality.
    pub fn from_disks(disks: &[Disk], tol: f64) -> Result<Basis, LpError> {
        if disks.is_empty() {
            return Ok(Basis::empty());
        }
        if disks.len() > 3 {
            return Err(LpError::TooLarge);
        }
        let mut sorted: ArrayVec<Disk, 3> = disks.iter().copied().collect();
        sorted.sort_unstable_by(Disk::order_cmp);
        let (destroyer, extreme) = evaluate_sorted(&sorted, tol)?;
        Ok(Basis {
            disks: sorted,
            weight: destroyer.weight_at(extreme),
            destroyer,
            extreme_point: Some(extreme),
        })
    }

    pub(crate) fn from_parts(disks: &[Disk], destroyer: Destroyer, extreme: Point) -> Basis {
        let mut sorted: ArrayVec<Disk, 3> = disks.iter().copied().collect();
        sorted.sort_unstable_by(Disk::order_cmp);
        Basis { disks: sorted, weight: destroyer.weight_at(extreme), destroyer, extreme_point: Some(extreme) }
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn contains_id(&self, id: u32) -> bool {
        self.disks.iter().any(|d| d.id == id)
    }

    pub(crate) fn translated(&self, offset: Point) -> Basis {
        Basis {
            disks: self.disks.iter().map(|d| d.translated(offset)).collect(),
            weight: self.weight,
            destroyer: match self.destroyer {
                Destroyer::Disk(d) => Destroyer::Disk(d.translated(offset)),
                Destroyer::Infinity => Destroyer::Infinity,
            },
            extreme_point: self.extreme_point.map(|p| p + offset),
        }
    }
}

/// The point of `disk` closest to the destroyer. `None` when the disk and a
/// disk destroyer are concentric (then they overlap and no such point is
/// meaningful).
pub(crate) fn closest_point(disk: &Disk, destroyer: &Destroyer) -> Option<Point> {
    match destroyer {
        Destroyer::Infinity => Some(disk.lowest_point()),
        Destroyer::Disk(d) => {
            let dir = (d.center - disk.center).normalized()?;
            Some(disk.center + dir * disk.radius)
        }
    }
}

/// The unique point of the intersection of one or two disks that is closest
/// to `destroyer`.
///
/// For two disks this is the single-disk minimizer of one of them when it
/// lies in the other, and otherwise the nearer lens vertex.
pub fn extreme_point(helly_disks: &[Disk], destroyer: &Destroyer, tol: f64) -> Result<Point, LpError> {
    match helly_disks {
        [one] => closest_point(one, destroyer).ok_or(LpError::NotDestroyed),
        [a, b] => {
            if !a.intersects_disk(b, tol) {
                return Err(LpError::NotHelly);
            }
            let mut best: Option<(f64, Point)> = None;
            let mut consider = |p: Point| {
                let d = destroyer.distance_to(p);
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, p));
                }
            };
            for (x, y) in [(a, b), (b, a)] {
                if let Some(p) = closest_point(x, destroyer) {
                    if y.contains(p, tol) {
                        consider(p);
                    }
                }
            }
            for v in circle_intersection_points(a, b, tol).unwrap_or_default() {
                consider(v);
            }
            best.map(|(_, p)| p).ok_or(LpError::NotHelly)
        }
        _ => Err(LpError::TooLarge),
    }
}

/// Lowest point of the intersection of at most three disks, or `None` when
/// the intersection is empty. The minimum is attained either at a disk's
/// lowest point or at a lens vertex.
pub(crate) fn lowest_common_point(disks: &[Disk], tol: f64) -> Option<Point> {
    let feasible = |p: &Point| disks.iter().all(|d| d.contains(*p, tol));
    let mut candidates: ArrayVec<Point, 9> = disks.iter().map(Disk::lowest_point).collect();
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            candidates.extend(circle_intersection_points(a, b, tol).unwrap_or_default());
        }
    }
    candidates
        .into_iter()
        .filter(feasible)
        .min_by(|p, q| p.y.total_cmp(&q.y).then(p.x.total_cmp(&q.x)))
}

/// Smallest destroyer and extreme point of one to three disks given in
/// `(radius, id)` order.
fn evaluate_sorted(disks: &[Disk], tol: f64) -> Result<(Destroyer, Point), LpError> {
    match disks {
        [one] => Ok((Destroyer::Infinity, one.lowest_point())),
        [a, b] => {
            if !a.intersects_disk(b, tol) {
                return Err(LpError::InvalidInstance { first: a.id, second: b.id });
            }
            Ok((Destroyer::Infinity, extreme_point(disks, &Destroyer::Infinity, tol)?))
        }
        [a, b, c] => {
            for (x, y) in [(a, b), (a, c), (b, c)] {
                if !x.intersects_disk(y, tol) {
                    return Err(LpError::InvalidInstance { first: x.id, second: y.id });
                }
            }
            if let Some(v) = lowest_common_point(disks, tol) {
                return Ok((Destroyer::Infinity, v));
            }
            let destroyer = Destroyer::Disk(*c);
            Ok((destroyer, extreme_point(&disks[..2], &destroyer, tol)?))
        }
        _ => Err(LpError::TooLarge),
    }
}

/// Decides whether `candidate` can be a basis and, if so, whether adding `e`
/// lowers its weight. Constant time.
pub fn violation_test(candidate: &[Disk], e: &Disk, tol: f64) -> Violation {
    if candidate.len() > 3 {
        return Violation::NotABasis;
    }
    let in_e = |v: Point| if e.contains(v, tol) { Violation::NoViolation } else { Violation::Violates };
    match candidate {
        [] => Violation::Violates,
        [d] => {
            if d.id == e.id {
                return Violation::NoViolation;
            }
            in_e(d.lowest_point())
        }
        [a, b] => {
            if !a.intersects_disk(b, tol) || b.contains(a.lowest_point(), tol) || a.contains(b.lowest_point(), tol) {
                return Violation::NotABasis;
            }
            if a.id == e.id || b.id == e.id {
                return Violation::NoViolation;
            }
            match extreme_point(candidate, &Destroyer::Infinity, tol) {
                Ok(v) => in_e(v),
                Err(_) => Violation::NotABasis,
            }
        }
        [_, _, _] => {
            let mut sorted: ArrayVec<Disk, 3> = candidate.iter().copied().collect();
            sorted.sort_unstable_by(Disk::order_cmp);
            if lowest_common_point(&sorted, tol).is_some() {
                return Violation::NotABasis;
            }
            if sorted.iter().any(|d| d.id == e.id) {
                return Violation::NoViolation;
            }
            let destroyer = sorted[2];
            if e.order_cmp(&destroyer) == Ordering::Greater {
                return Violation::NoViolation;
            }
            match extreme_point(&sorted[..2], &Destroyer::Disk(destroyer), tol) {
                Ok(v) => in_e(v),
                Err(_) => Violation::NotABasis,
            }
        }
        _ => Violation::NotABasis,
    }
}

/// Basis of `basis ∪ {violator}` by enumerating its subsets of size at most
/// three. By monotonicity and the finite-basis property the minimum subset
/// weight equals the weight of the whole set; among minimizers the smallest
/// subset wins, then one containing the violator.
pub fn extend_basis(basis: &Basis, violator: &Disk, tol: f64) -> Result<Basis, LpError> {
    let mut pool: ArrayVec<Disk, 4> = basis.disks().iter().copied().collect();
    if !basis.contains_id(violator.id) {
        pool.push(*violator);
    }
    let violator_bit = pool.iter().position(|d| d.id == violator.id).map_or(0, |i| 1u32 << i);

    let mut evaluated: ArrayVec<(u32, Basis), 15> = ArrayVec::new();
    for mask in 1u32..(1 << pool.len()) {
        if mask.count_ones() > 3 {
            continue;
        }
        let subset: ArrayVec<Disk, 3> = (0..pool.len()).filter(|i| mask & (1 << i) != 0).map(|i| pool[i]).collect();
        evaluated.push((mask, Basis::from_disks(&subset, tol)?));
    }
    let min_weight = evaluated
        .iter()
        .map(|(_, b)| b.weight)
        .min_by(|a, b| a.compare(b, tol))
        .ok_or(LpError::EmptyFamily)?;
    let pick = |need_cover: bool| {
        evaluated
            .iter()
            .filter(|(_, b)| b.weight.approx_eq(&min_weight, tol) && (!need_cover || covers(b, &pool, tol)))
            .min_by_key(|(mask, _)| (mask.count_ones(), mask & violator_bit == 0, *mask))
            .map(|(_, b)| b.clone())
    };
    pick(true).or_else(|| pick(false)).ok_or(LpError::EmptyFamily)
}

/// Whether the extreme point of `basis` lies in every disk of `pool` ranked
/// below its destroyer. Weights within `tol` of each other can still have
/// extreme points far apart, so a tolerant weight tie alone does not make a
/// subset a basis of the pool.
pub(crate) fn covers(basis: &Basis, pool: &[Disk], tol: f64) -> bool {
    let Some(v) = basis.extreme_point else {
        return pool.is_empty();
    };
    pool.iter()
        .filter(|d| match &basis.destroyer {
            Destroyer::Disk(x) => d.order_cmp(x) == Ordering::Less,
            Destroyer::Infinity => true,
        })
        .all(|d| d.contains(v, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::DEFAULT_TOL;
    use crate::lptype::weight::Rad;

    fn disk(id: u32, x: f64, y: f64, r: f64) -> Disk {
        Disk::new(id, Point::new(x, y), r).unwrap()
    }

    fn close(p: Point, q: Point) -> bool {
        p.distance(q) < 1e-12
    }

    #[test]
    fn extreme_point_single_disk() {
        let d = disk(0, 0.0, 5.0, 1.0);
        assert_eq!(extreme_point(&[d], &Destroyer::Infinity, DEFAULT_TOL).unwrap(), Point::new(0.0, 4.0));
        let far = Destroyer::Disk(disk(1, 3.0, 9.0, 1.0));
        let p = extreme_point(&[d], &far, DEFAULT_TOL).unwrap();
        assert!(close(p, Point::new(0.6, 5.8)));
    }

    #[test]
    fn extreme_point_lens_vertex() {
        let a = disk(0, 0.0, 5.0, 1.0);
        let b = disk(1, 1.8, 5.0, 1.0);
        let v = extreme_point(&[a, b], &Destroyer::Infinity, DEFAULT_TOL).unwrap();
        assert!(close(v, Point::new(0.9, 5.0 - libm::sqrt(0.19))));

        let a = disk(0, 0.0, 5.0, 1.0);
        let b = disk(1, 0.5, 5.0, 1.0);
        let dest = Destroyer::Disk(disk(2, 0.25, -10.0, 1.0));
        let v = extreme_point(&[a, b], &dest, DEFAULT_TOL).unwrap();
        assert!(close(v, Point::new(0.25, 5.0 - libm::sqrt(1.0 - 0.0625))));
    }

    #[test]
    fn extreme_point_nested_disks_uses_inner_minimizer() {
        let big = disk(0, 0.0, 5.0, 3.0);
        let small = disk(1, 0.5, 5.0, 1.0);
        let v = extreme_point(&[big, small], &Destroyer::Infinity, DEFAULT_TOL).unwrap();
        assert_eq!(v, Point::new(0.5, 4.0));
        assert_eq!(extreme_point(&[big, disk(2, 10.0, 5.0, 1.0)], &Destroyer::Infinity, DEFAULT_TOL), Err(LpError::NotHelly));
    }

    #[test]
    fn violation_cases() {
        let d = disk(0, 0.0, 5.0, 1.0);
        let four = [d, disk(1, 0.1, 5.0, 1.0), disk(2, 0.2, 5.0, 1.0), disk(3, 0.3, 5.0, 1.0)];
        assert_eq!(violation_test(&four, &d, DEFAULT_TOL), Violation::NotABasis);
        assert_eq!(violation_test(&[d], &d, DEFAULT_TOL), Violation::NoViolation);
        assert_eq!(violation_test(&[d], &disk(1, 0.5, 5.0, 1.0), DEFAULT_TOL), Violation::Violates);
        assert_eq!(violation_test(&[], &d, DEFAULT_TOL), Violation::Violates);
    }

    #[test]
    fn pair_whose_minimum_is_one_disk_is_not_a_basis() {
        let low = disk(0, 0.0, 5.0, 1.0);
        let wide = disk(1, 0.0, 6.0, 3.0);
        assert_eq!(violation_test(&[low, wide], &disk(2, 0.0, 5.0, 2.0), DEFAULT_TOL), Violation::NotABasis);
    }

    fn equilateral_triple() -> [Disk; 3] {
        let side = 2.4;
        let h = side * libm::sqrt(3.0) / 2.0;
        [disk(0, 0.0, 5.0, 1.20), disk(1, side, 5.0, 1.21), disk(2, side / 2.0, 5.0 + h, 1.22)]
    }

    #[test]
    fn triple_violation_depends_on_radius() {
        let t = equilateral_triple();
        // Helly triple is rejected
        let helly = [disk(0, 0.0, 5.0, 1.0), disk(1, 0.5, 5.0, 1.0), disk(2, 0.25, 5.5, 1.0)];
        assert_eq!(violation_test(&helly, &t[0], DEFAULT_TOL), Violation::NotABasis);
        // larger than the destroyer: never violates
        assert_eq!(violation_test(&t, &disk(7, 100.0, 100.0, 5.0), DEFAULT_TOL), Violation::NoViolation);
        // smaller disk missing the extreme point
        assert_eq!(violation_test(&t, &disk(7, 1.2, 3.0, 1.0), DEFAULT_TOL), Violation::Violates);
        // smaller disk covering the tiny lens of the two smaller disks
        assert_eq!(violation_test(&t, &disk(7, 1.2, 5.0, 0.5), DEFAULT_TOL), Violation::NoViolation);
    }

    #[test]
    fn extend_from_empty_and_singleton() {
        let d1 = disk(0, 0.0, 5.0, 1.0);
        let b = extend_basis(&Basis::empty(), &d1, DEFAULT_TOL).unwrap();
        assert_eq!(b.disks(), &[d1]);
        assert_eq!(b.extreme_point, Some(Point::new(0.0, 4.0)));

        let d2 = disk(1, 1.8, 5.0, 1.1);
        let b2 = extend_basis(&b, &d2, DEFAULT_TOL).unwrap();
        assert_eq!(b2.len(), 2);
        // neither singleton reaches the lens weight
        for single in [d1, d2] {
            let w = Basis::from_disks(&[single], DEFAULT_TOL).unwrap().weight;
            assert_eq!(w.compare(&b2.weight, DEFAULT_TOL), Ordering::Greater);
        }
    }

    #[test]
    fn extend_to_non_helly_triple() {
        let [d1, d2, d3] = equilateral_triple();
        let pair = Basis::from_disks(&[d1, d2], DEFAULT_TOL).unwrap();
        assert_eq!(violation_test(pair.disks(), &d3, DEFAULT_TOL), Violation::Violates);
        let b = extend_basis(&pair, &d3, DEFAULT_TOL).unwrap();
        assert_eq!(b.disks(), &[d1, d2, d3]);
        assert_eq!(b.weight.rad, Rad::of(&d3));
        assert_eq!(b.destroyer, Destroyer::Disk(d3));
    }

    #[test]
    fn disjoint_pair_is_invalid() {
        let a = disk(0, 0.0, 5.0, 1.0);
        let b = disk(1, 5.0, 5.0, 1.0);
        assert_eq!(Basis::from_disks(&[a, b], DEFAULT_TOL), Err(LpError::InvalidInstance { first: 0, second: 1 }));
    }
}
