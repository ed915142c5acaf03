//! Direct evaluation of the weight from its definition. Quadratic to cubic in
//! the family size; a test oracle for [`super::solve`].

use alloc::vec::Vec;

use super::basis::{covers, Basis};
use super::weight::{Destroyer, Weight};
use super::LpError;
use crate::geometry::{circle_intersection_points, disk_witness, Disk, Point};

/// Largest family [`weight_brute`] accepts.
pub const BRUTE_LIMIT: usize = 12;

/// Minimizer of the destroyer distance over the intersection of `disks`:
/// some disk's own closest point or a pairwise boundary intersection.
fn brute_extreme(disks: &[Disk], destroyer: &Destroyer, tol: f64) -> Result<Point, LpError> {
    let mut candidates = Vec::new();
    for d in disks {
        match destroyer {
            Destroyer::Infinity => candidates.push(Point::new(d.center.x, d.center.y - d.radius)),
            Destroyer::Disk(big) => {
                let dir = big.center - d.center;
                let len = dir.norm();
                if len > 0.0 {
                    candidates.push(d.center + dir * (d.radius / len));
                }
            }
        }
    }
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            candidates.extend(circle_intersection_points(a, b, tol).unwrap_or_default());
        }
    }
    candidates
        .into_iter()
        .filter(|p| disks.iter().all(|d| d.contains(*p, tol)))
        .map(|p| (destroyer.distance_to(p), p))
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, p)| p)
        .ok_or(LpError::NotHelly)
}

/// Destroyer and extreme point of a family sorted by `(radius, id)`: the
/// first prefix without a common point ends in the smallest destroyer.
fn brute_eval(sorted: &[Disk], tol: f64) -> Result<(Destroyer, Point), LpError> {
    let mut cut = None;
    for i in 0..sorted.len() {
        if disk_witness(&sorted[..=i], tol)?.is_none() {
            cut = Some(i);
            break;
        }
    }
    let (helly, destroyer) = match cut {
        Some(i) => (&sorted[..i], Destroyer::Disk(sorted[i])),
        None => (sorted, Destroyer::Infinity),
    };
    Ok((destroyer, brute_extreme(helly, &destroyer, tol)?))
}

/// Weight of a pairwise intersecting family of at most [`BRUTE_LIMIT`] disks,
/// and a smallest subset (of size at most three) with the same weight.
///
/// Distances to `D∞` are heights, so the family should lie above the x-axis
/// (see [`super::lift_above_axis`]).
pub fn weight_brute(family: &[Disk], tol: f64) -> Result<(Weight, Basis), LpError> {
    if family.is_empty() {
        return Err(LpError::EmptyFamily);
    }
    if family.len() > BRUTE_LIMIT {
        return Err(LpError::TooLarge);
    }
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            if !a.intersects_disk(b, tol) {
                return Err(LpError::InvalidInstance { first: a.id, second: b.id });
            }
        }
    }
    let mut sorted = family.to_vec();
    sorted.sort_by(Disk::order_cmp);
    let (destroyer, extreme) = brute_eval(&sorted, tol)?;
    let weight = destroyer.weight_at(extreme);

    let n = sorted.len();
    let mut fallback = None;
    let mut subset = Vec::with_capacity(3);
    for size in 1..=3usize.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            subset.clear();
            subset.extend(idx.iter().map(|&i| sorted[i]));
            let (d, v) = brute_eval(&subset, tol)?;
            if d.weight_at(v).approx_eq(&weight, tol) {
                let basis = Basis::from_parts(&subset, d, v);
                if covers(&basis, &sorted, tol) {
                    return Ok((weight, basis));
                }
                fallback.get_or_insert(basis);
            }
            // next combination in lexicographic order
            let mut k = size;
            while k > 0 && idx[k - 1] == n - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for j in k..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    fallback.map(|b| (weight, b)).ok_or(LpError::NoBasis)
}
