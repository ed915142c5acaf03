//! Five points stabbing a family of pairwise intersecting disks.
//!
//! Sort the disks by `(radius, id)` and let `D*` be the first disk whose
//! prefix is non-Helly. The strictly smaller disks share a point `q`. A
//! non-Helly triple containing `D*` has two disks `D1 ⊇ D2` (by order) whose
//! lens angle is at least `2π/3`; every disk at least as large as `D1` that
//! meets both contains one of four points built from `D1` and its companion
//! disk `E`. Those four points and `q` stab the family.
//!
//! [`stab_five`] finds `D*` and the triple with one LP-type solve,
//! [`stab_five_sorted`] with binary searches over sorted prefixes.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;
use core::fmt;

use crate::geometry::{disk_witness, intersection_witness, lens_angle, Disk, GeneralizedDisk, GeometryError, Point, DEFAULT_TOL};
use crate::harness::{find_disjoint_pair, verify_stabbing};
use crate::lptype::{solve_with_tol, LpError, Verdict};

/// Id given to companion disks, which are not members of the family.
pub const COMPANION_ID: u32 = u32::MAX;

/// Two disks of a non-Helly triple with a wide lens; `first` is the larger in
/// `(radius, id)` order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidePair {
    pub first: Disk,
    pub second: Disk,
    pub lens_angle: f64,
}

/// How a certificate was derived. Everything is `None` on the Helly path
/// except `helly_point`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StabTrace {
    /// A common point of the disks smaller than the smallest destroyer, or of
    /// the whole family when it is Helly.
    pub helly_point: Option<Point>,
    pub triple: Option<[Disk; 3]>,
    pub wide_pair: Option<WidePair>,
    pub companion: Option<Disk>,
    /// `[c1, c, p, q]`: the two centers and the two points at distance `r1`
    /// above and below their midpoint.
    pub four_points: Option<[Point; 4]>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabCertificate {
    pub points: Vec<Point>,
    pub trace: StabTrace,
    /// Inflation applied to every object before stabbing.
    pub delta: f64,
    pub seed: u64,
    /// Vertical shift used by the first solver call.
    pub translation_dy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabOptions {
    pub tol: f64,
    /// Grow every object by this amount first; used for families with
    /// tangent pairs.
    pub delta: f64,
    /// Check all pairs up front (quadratic).
    pub validate: bool,
    /// Check the output against the family before returning it.
    pub verify: bool,
}

impl Default for StabOptions {
    fn default() -> Self {
        StabOptions { tol: DEFAULT_TOL, delta: 0.0, validate: false, verify: cfg!(debug_assertions) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StabError {
    EmptyFamily,
    HellyTriple,
    PreconditionViolated(&'static str),
    InvalidInstance { first: u32, second: u32 },
    /// The points miss this object; signals numeric breakdown.
    InternalVerificationFailed { id: u32 },
    /// Two oracle answers contradict each other, e.g. a prefix reported
    /// non-Helly whose triple search comes up empty.
    Inconsistent,
    /// The disks share a point but the halfplanes do not all meet it, a
    /// case the construction does not cover.
    UnsupportedHalfplanes,
    Solver(LpError),
    Geometry(GeometryError),
}

impl fmt::Display for StabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabError::EmptyFamily => f.write_str("empty family"),
            StabError::HellyTriple => f.write_str("triple has a common point"),
            StabError::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            StabError::InvalidInstance { first, second } => write!(f, "objects {first} and {second} do not intersect"),
            StabError::InternalVerificationFailed { id } => write!(f, "internal verification failed: object {id} is not stabbed"),
            StabError::Inconsistent => f.write_str("inconsistent Helly oracle answers"),
            StabError::UnsupportedHalfplanes => f.write_str("disks are Helly but the halfplanes miss their common points"),
            StabError::Solver(e) => write!(f, "solver: {e}"),
            StabError::Geometry(e) => write!(f, "geometry: {e}"),
        }
    }
}

impl core::error::Error for StabError {}

impl From<LpError> for StabError {
    fn from(e: LpError) -> Self {
        match e {
            LpError::InvalidInstance { first, second } => StabError::InvalidInstance { first, second },
            LpError::EmptyFamily => StabError::EmptyFamily,
            e => StabError::Solver(e),
        }
    }
}

impl From<GeometryError> for StabError {
    fn from(e: GeometryError) -> Self {
        StabError::Geometry(e)
    }
}

fn wide_threshold(tol: f64) -> f64 {
    2.0 * PI / 3.0 - tol
}

/// The pair of a non-Helly triple with the largest lens angle.
///
/// Ties within `tol` go to the pair with the lexicographically smallest
/// `(id, id)`, ids taken in increasing order.
pub fn widest_lens_pair(triple: &[Disk; 3], tol: f64) -> Result<WidePair, StabError> {
    if disk_witness(triple, tol)?.is_some() {
        return Err(StabError::HellyTriple);
    }
    let mut best: Option<(f64, (u32, u32), Disk, Disk)> = None;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (a, b) = (triple[i], triple[j]);
        let angle = lens_angle(&a, &b)?;
        let ids = (a.id.min(b.id), a.id.max(b.id));
        let better = match best {
            None => true,
            Some((best_angle, best_ids, ..)) => {
                angle > best_angle + tol || ((angle - best_angle).abs() <= tol && ids < best_ids)
            }
        };
        if better {
            best = Some((angle, ids, a, b));
        }
    }
    let (angle, _, a, b) = best.expect("three pairs");
    if angle < wide_threshold(tol) {
        return Err(StabError::PreconditionViolated("no lens angle reaches 2π/3"));
    }
    let (first, second) = if a.order_cmp(&b) == Ordering::Greater { (a, b) } else { (b, a) };
    Ok(WidePair { first, second, lens_angle: angle })
}

fn check_wide_pair(d1: &Disk, d2: &Disk, tol: f64) -> Result<(), StabError> {
    if d1.order_cmp(d2) != Ordering::Greater {
        return Err(StabError::PreconditionViolated("first disk must be the larger"));
    }
    let angle = lens_angle(d1, d2).map_err(|_| StabError::PreconditionViolated("disks do not intersect"))?;
    if angle < wide_threshold(tol) {
        return Err(StabError::PreconditionViolated("lens angle below 2π/3"));
    }
    Ok(())
}

/// The disk of radius `r1` centered at `c1 + √3 r1 û`, `û` pointing from `c1`
/// to `c2`. Its lens with `d1` has angle exactly `2π/3` and it contains `d2`.
pub fn companion_disk(d1: &Disk, d2: &Disk, tol: f64) -> Result<Disk, StabError> {
    check_wide_pair(d1, d2, tol)?;
    let u = (d2.center - d1.center)
        .normalized()
        .ok_or(StabError::PreconditionViolated("concentric disks"))?;
    let center = d1.center + u * (libm::sqrt(3.0) * d1.radius);
    Ok(Disk { id: COMPANION_ID, center, radius: d1.radius })
}

/// Four points such that every disk of radius at least `r1` meeting both
/// `d1` and `d2` contains one of them, together with the companion disk.
///
/// Returns `[c1, c, p, q]` where `c` is the companion center and `p`, `q` lie
/// at distance `r1` below and above the midpoint of `c1 c`, "above" meaning
/// to the left of the direction `c1 → c`.
pub fn four_point_set(d1: &Disk, d2: &Disk, tol: f64) -> Result<([Point; 4], Disk), StabError> {
    let e = companion_disk(d1, d2, tol)?;
    let (c1, c) = (d1.center, e.center);
    let mid = (c1 + c) * 0.5;
    let up = (c - c1).normalized().expect("companion center differs").perp() * d1.radius;
    Ok(([c1, c, mid - up, mid + up], e))
}

fn split_family(family: &[GeneralizedDisk]) -> (Vec<Disk>, bool) {
    let disks: Vec<Disk> = family.iter().filter_map(|g| g.as_disk().copied()).collect();
    let has_halfplanes = disks.len() < family.len();
    (disks, has_halfplanes)
}

fn prepare(family: &[GeneralizedDisk], opts: &StabOptions) -> Result<Vec<GeneralizedDisk>, StabError> {
    if family.is_empty() {
        return Err(StabError::EmptyFamily);
    }
    let family: Vec<GeneralizedDisk> = if opts.delta != 0.0 {
        family.iter().map(|g| g.inflated(opts.delta)).collect()
    } else {
        family.to_vec()
    };
    if opts.validate {
        if let Some((first, second)) = find_disjoint_pair(&family, opts.tol) {
            return Err(StabError::InvalidInstance { first, second });
        }
    }
    Ok(family)
}

/// Certificate for a family whose disks share `point`.
fn helly_certificate(
    family: &[GeneralizedDisk],
    point: Option<Point>,
    has_halfplanes: bool,
    opts: &StabOptions,
) -> Result<(Point, StabTrace), StabError> {
    let point = match point {
        Some(p) if !has_halfplanes || family.iter().all(|g| g.contains(p, opts.tol)) => p,
        _ => intersection_witness(family, opts.tol)?.ok_or(StabError::UnsupportedHalfplanes)?,
    };
    Ok((point, StabTrace { helly_point: Some(point), ..Default::default() }))
}

/// Builds the five points from the prefix point `q` and a non-Helly triple.
fn five_from_triple(q: Point, triple: [Disk; 3], tol: f64) -> Result<(Vec<Point>, StabTrace), StabError> {
    let pair = widest_lens_pair(&triple, tol)?;
    let (four, companion) = four_point_set(&pair.first, &pair.second, tol)?;
    let mut points = Vec::with_capacity(5);
    points.extend_from_slice(&four);
    points.push(q);
    let trace = StabTrace {
        helly_point: Some(q),
        triple: Some(triple),
        wide_pair: Some(pair),
        companion: Some(companion),
        four_points: Some(four),
    };
    Ok((points, trace))
}

fn finish(
    family: &[GeneralizedDisk],
    points: Vec<Point>,
    trace: StabTrace,
    seed: u64,
    translation_dy: f64,
    opts: &StabOptions,
) -> Result<StabCertificate, StabError> {
    if opts.verify {
        verify_stabbing(family, &points, opts.tol).map_err(|u| StabError::InternalVerificationFailed { id: u.id })?;
    }
    Ok(StabCertificate { points, trace, delta: opts.delta, seed, translation_dy })
}

/// [`stab_five_with`] with default options.
pub fn stab_five(family: &[GeneralizedDisk], seed: u64) -> Result<StabCertificate, StabError> {
    stab_five_with(family, seed, &StabOptions::default())
}

/// At most five points stabbing a pairwise intersecting family, in expected
/// linear time.
///
/// The solver runs on the disks. If they are Helly the result is one common
/// point. Otherwise the verdict names the smallest destroyer and a non-Helly
/// triple, and a second solve (seed `seed + 1`) on the strictly smaller
/// disks yields `q`. Halfplanes behave like disks larger than every disk, so
/// they are covered by the four points built from the triple.
pub fn stab_five_with(family: &[GeneralizedDisk], seed: u64, opts: &StabOptions) -> Result<StabCertificate, StabError> {
    let family = prepare(family, opts)?;
    let (disks, has_halfplanes) = split_family(&family);
    if disks.is_empty() {
        let (p, trace) = helly_certificate(&family, None, true, opts)?;
        return finish(&family, alloc::vec![p], trace, seed, 0.0, opts);
    }
    let outcome = solve_with_tol(&disks, seed, opts.tol)?;
    let (points, trace) = match outcome.verdict {
        Verdict::Helly { point } => {
            let (p, trace) = helly_certificate(&family, Some(point), has_halfplanes, opts)?;
            (alloc::vec![p], trace)
        }
        Verdict::NonHelly { triple, smallest_destroyer } => {
            let prefix: Vec<Disk> =
                disks.iter().copied().filter(|d| d.order_cmp(&smallest_destroyer) == Ordering::Less).collect();
            let q = solve_with_tol(&prefix, seed.wrapping_add(1), opts.tol)?
                .helly_point()
                .ok_or(StabError::Inconsistent)?;
            five_from_triple(q, triple, opts.tol)?
        }
    };
    finish(&family, points, trace, seed, outcome.translation_dy, opts)
}

/// [`stab_five_sorted_with`] with seed 0 and default options.
pub fn stab_five_sorted(family: &[GeneralizedDisk]) -> Result<StabCertificate, StabError> {
    stab_five_sorted_with(family, 0, &StabOptions::default())
}

/// The `O(n log n)` variant: sort by `(radius, id)`, binary-search the
/// shortest non-Helly prefix, then the shortest prefix that is non-Helly
/// together with its last disk `D*`, then scan for the third disk.
pub fn stab_five_sorted_with(
    family: &[GeneralizedDisk],
    seed: u64,
    opts: &StabOptions,
) -> Result<StabCertificate, StabError> {
    let family = prepare(family, opts)?;
    let (mut disks, has_halfplanes) = split_family(&family);
    if disks.is_empty() {
        let (p, trace) = helly_certificate(&family, None, true, opts)?;
        return finish(&family, alloc::vec![p], trace, seed, 0.0, opts);
    }
    disks.sort_unstable_by(Disk::order_cmp);
    let helly = |set: &[Disk]| -> Result<Option<Point>, StabError> {
        Ok(solve_with_tol(set, seed, opts.tol)?.helly_point())
    };

    if let Some(point) = helly(&disks)? {
        let (p, trace) = helly_certificate(&family, Some(point), has_halfplanes, opts)?;
        return finish(&family, alloc::vec![p], trace, seed, 0.0, opts);
    }

    // Smallest m with disks[..m] non-Helly; prefixes of length <= 2 are Helly.
    let (mut lo, mut hi) = (2, disks.len());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if helly(&disks[..mid])?.is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let star = disks[hi - 1];
    let smaller = &disks[..hi - 1];
    let q = helly(smaller)?.ok_or(StabError::Inconsistent)?;

    // Smallest k with {D*} ∪ smaller[..=k] non-Helly.
    let with_star = |k: usize| -> Result<bool, StabError> {
        let mut set: Vec<Disk> = smaller[..=k].to_vec();
        set.push(star);
        Ok(helly(&set)?.is_none())
    };
    let (mut lo, mut hi) = (0usize, smaller.len() - 1);
    if !with_star(hi)? {
        return Err(StabError::Inconsistent);
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if with_star(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let dk = smaller[hi];
    let mut triple = None;
    for dj in &smaller[..hi] {
        if disk_witness(&[*dj, dk, star], opts.tol)?.is_none() {
            triple = Some([*dj, dk, star]);
            break;
        }
    }
    let triple = triple.ok_or(StabError::Inconsistent)?;
    let (points, trace) = five_from_triple(q, triple, opts.tol)?;
    finish(&family, points, trace, seed, 0.0, opts)
}
