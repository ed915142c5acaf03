use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::basis::{extend_basis, violation_test, Basis, Violation};
use super::weight::Weight;
use super::LpError;
use crate::geometry::{Disk, Point, DEFAULT_TOL};

/// Lowest point of the translated family sits at this height.
const AXIS_MARGIN: f64 = 1.0;

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// The family has a common point.
    Helly { point: Point },
    /// The basis is a non-Helly triple; its largest disk is the smallest
    /// destroyer of the whole family.
    NonHelly { triple: [Disk; 3], smallest_destroyer: Disk },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub violation_tests: usize,
    pub basis_changes: usize,
    /// Containment decisions taken within `10 * tol` of a disk boundary.
    pub near_boundary: usize,
    /// Violations whose extension did not strictly lower the weight.
    pub stalled: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    /// Weight in the translated frame (the one where `D∞` is `y <= 0`).
    pub weight: Weight,
    /// Basis in input coordinates.
    pub basis: Basis,
    pub verdict: Verdict,
    /// Vertical shift applied before solving.
    pub translation_dy: f64,
    pub stats: SolveStats,
}

impl SolveOutcome {
    pub fn is_helly(&self) -> bool {
        matches!(self.verdict, Verdict::Helly { .. })
    }

    pub fn helly_point(&self) -> Option<Point> {
        match self.verdict {
            Verdict::Helly { point } => Some(point),
            Verdict::NonHelly { .. } => None,
        }
    }
}

/// Shifts the family vertically so that its lowest point is at height 1.
/// Returns the shifted disks and the shift.
pub fn lift_above_axis(family: &[Disk]) -> (Vec<Disk>, f64) {
    let lowest = family.iter().map(|d| d.center.y - d.radius).fold(f64::INFINITY, f64::min);
    let dy = AXIS_MARGIN - lowest;
    let shift = Point::new(0.0, dy);
    (family.iter().map(|d| d.translated(shift)).collect(), dy)
}

fn check_input(family: &[Disk]) -> Result<(), LpError> {
    if family.is_empty() {
        return Err(LpError::EmptyFamily);
    }
    if family.iter().any(|d| !d.center.is_finite() || !d.radius.is_finite() || d.radius <= 0.0) {
        return Err(LpError::Degenerate);
    }
    let mut ids: Vec<u32> = family.iter().map(|d| d.id).collect();
    ids.sort_unstable();
    if ids.windows(2).any(|w| w[0] == w[1]) {
        return Err(LpError::Degenerate);
    }
    Ok(())
}

/// [`solve_with_tol`] at [`DEFAULT_TOL`].
pub fn solve(family: &[Disk], seed: u64) -> Result<SolveOutcome, LpError> {
    solve_with_tol(family, seed, DEFAULT_TOL)
}

/// Randomized incremental LP-type solver with move-to-front.
///
/// Disks are visited in a seed-determined order. When a disk violates the
/// current basis, the basis is extended by subset enumeration, the disk moves
/// to the front and the scan restarts. The loop ends after a full pass with no
/// violation, so the final basis has been tested against every disk.
///
/// Pairwise intersection is assumed, not checked; a disjoint pair is only
/// reported if it ends up inside a basis computation.
pub fn solve_with_tol(family: &[Disk], seed: u64, tol: f64) -> Result<SolveOutcome, LpError> {
    check_input(family)?;
    let (mut disks, dy) = lift_above_axis(family);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    disks.shuffle(&mut rng);

    let mut stats = SolveStats::default();
    let mut basis = Basis::empty();
    let mut i = 0;
    while i < disks.len() {
        let h = disks[i];
        if basis.contains_id(h.id) {
            i += 1;
            continue;
        }
        stats.violation_tests += 1;
        match violation_test(basis.disks(), &h, tol) {
            Violation::NoViolation => {
                if let Some(v) = basis.extreme_point {
                    if (v.distance(h.center) - h.radius).abs() <= 10.0 * tol {
                        stats.near_boundary += 1;
                    }
                }
                i += 1;
            }
            Violation::Violates => {
                let next = extend_basis(&basis, &h, tol)?;
                if next.weight.compare(&basis.weight, 0.0) != Ordering::Less {
                    stats.stalled += 1;
                    i += 1;
                    continue;
                }
                basis = next;
                stats.basis_changes += 1;
                disks[..=i].rotate_right(1);
                i = 0;
            }
            Violation::NotABasis => return Err(LpError::InvalidBasis),
        }
    }

    let weight = basis.weight;
    let basis = basis.translated(Point::new(0.0, -dy));
    let verdict = if weight.is_helly() {
        let point = basis.extreme_point.ok_or(LpError::EmptyFamily)?;
        Verdict::Helly { point }
    } else {
        match basis.disks() {
            &[a, b, c] => Verdict::NonHelly { triple: [a, b, c], smallest_destroyer: c },
            _ => return Err(LpError::InvalidBasis),
        }
    };
    Ok(SolveOutcome { weight, basis, verdict, translation_dy: dy, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lptype::weight::Rad;

    fn disk(id: u32, x: f64, y: f64, r: f64) -> Disk {
        Disk::new(id, Point::new(x, y), r).unwrap()
    }

    fn equilateral_triple() -> [Disk; 3] {
        let side = 2.4;
        let h = side * libm::sqrt(3.0) / 2.0;
        [disk(0, 0.0, 0.0, 1.20), disk(1, side, 0.0, 1.21), disk(2, side / 2.0, h, 1.22)]
    }

    #[test]
    fn single_disk_is_helly_at_its_lowest_point() {
        let out = solve(&[disk(4, 0.0, 5.0, 1.0)], 1).unwrap();
        assert_eq!(out.helly_point(), Some(Point::new(0.0, 4.0)));
        assert_eq!(out.translation_dy, -3.0);
        assert_eq!(out.weight.neg_dist, -1.0);
    }

    #[test]
    fn equilateral_triple_is_non_helly() {
        let t = equilateral_triple();
        for seed in 0..10 {
            let out = solve(&t, seed).unwrap();
            match out.verdict {
                Verdict::NonHelly { smallest_destroyer, .. } => assert_eq!(smallest_destroyer.id, 2),
                Verdict::Helly { .. } => panic!("triple has no common point"),
            }
            assert_eq!(out.weight.rad, Rad::of(&t[2]));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(solve(&[], 0).unwrap_err(), LpError::EmptyFamily);
        let d = disk(1, 0.0, 0.0, 1.0);
        assert_eq!(solve(&[d, d], 0).unwrap_err(), LpError::Degenerate);
    }

    #[test]
    fn shallow_cut_below_lowest_point_moves_the_basis() {
        // `cut` misses the bottom of `low` by 2e-5, but the lens vertex is
        // only about 2e-10 higher, inside the weight tolerance.
        let low = disk(0, 0.0, 5.0, 1.0);
        let cut = disk(1, 10.0 + 2e-5, 4.0, 10.0);
        for seed in 0..4 {
            let out = solve(&[low, cut], seed).unwrap();
            let p = out.helly_point().unwrap();
            assert!(low.contains(p, 1e-12) && cut.contains(p, 1e-12), "{p:?}");
            assert_eq!(out.basis.len(), 2);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let fam: Vec<Disk> = (0..40)
            .map(|i| {
                let a = i as f64 * 0.7;
                disk(i, libm::cos(a) * 3.0, libm::sin(a) * 3.0, 3.5 + 0.01 * i as f64)
            })
            .collect();
        let a = solve(&fam, 9).unwrap();
        let b = solve(&fam, 9).unwrap();
        assert_eq!(a, b);
    }
}
