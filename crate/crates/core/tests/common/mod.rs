//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use diskstab_core::geometry::{disk_witness, Disk, Point};
use diskstab_core::harness::{random_instance, InstanceSpec};
use diskstab_core::lptype::{lift_above_axis, weight_brute, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;
pub const SQRT3: f64 = 1.7320508075688772;

pub fn disk(id: u32, x: f64, y: f64, r: f64) -> Disk {
    Disk::new(id, Point::new(x, y), r).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Boundary intersections of two circles, solved in the frame where `a` is
/// centered at the origin and `b` lies on the positive x-axis.
pub fn oracle_circle_points(a: &Disk, b: &Disk) -> Vec<Point> {
    let delta = b.center - a.center;
    let d = delta.norm();
    let x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    let y_sq = a.radius * a.radius - x * x;
    if y_sq < 0.0 {
        return Vec::new();
    }
    let y = y_sq.sqrt();
    let (c, s) = (delta.x / d, delta.y / d);
    let to_world = |px: f64, py: f64| Point::new(a.center.x + c * px - s * py, a.center.y + s * px + c * py);
    vec![to_world(x, y), to_world(x, -y)]
}

/// The angle at a lens vertex between the rays to the two centers.
pub fn oracle_lens_angle(a: &Disk, b: &Disk) -> f64 {
    let u = oracle_circle_points(a, b)[0];
    let (va, vb) = (a.center - u, b.center - u);
    va.cross(vb).abs().atan2(va.dot(vb))
}

/// Pairwise intersecting disks; `spread` controls the radius ratio.
pub fn family(seed: u64, n: usize, spread: f64) -> Vec<Disk> {
    random_instance(&InstanceSpec { n, seed, radius_spread: spread, slack: 0.05 }).unwrap()
}

/// Deterministic stream of pairwise intersecting non-Helly triples.
pub fn non_helly_triples(count: usize) -> Vec<[Disk; 3]> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0;
    while out.len() < count {
        let f = family(seed, 3, 1.0 + (seed % 4) as f64);
        seed += 1;
        if disk_witness(&f, TOL) == Ok(None) {
            out.push([f[0], f[1], f[2]]);
        }
    }
    out
}

/// A pair `d1 ⊇ d2` in radius order with lens angle at least `2π/3` and
/// `|c1 c2| <= √3 r1`, at a random position and orientation.
pub fn wide_pair(rng: &mut ChaCha8Rng) -> (Disk, Disk) {
    let r1: f64 = rng.gen_range(0.5..3.0);
    let r2: f64 = r1 * rng.gen_range(0.05..1.0);
    let lo = (r1 * r1 + r2 * r2 + r1 * r2).sqrt();
    let hi = (r1 + r2).min(SQRT3 * r1);
    let d = lo + (hi - lo) * rng.gen::<f64>();
    let c1 = Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
    let u = Point::from_angle(rng.gen_range(0.0..2.0 * PI));
    (Disk { id: 1, center: c1, radius: r1 }, Disk { id: 0, center: c1 + u * d, radius: r2 })
}

/// Exact weight of `set` in the frame shifted by `dy`.
pub fn brute_weight_in_frame(set: &[Disk], dy: f64) -> Weight {
    let shifted: Vec<Disk> = set.iter().map(|d| d.translated(Point::new(0.0, dy))).collect();
    weight_brute(&shifted, TOL).unwrap().0
}

/// The frame shift the solver would use for `family`.
pub fn frame_of(family: &[Disk]) -> f64 {
    lift_above_axis(family).1
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}
