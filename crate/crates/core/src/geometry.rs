//! Points, disks, halfplanes and the tolerant predicates everything else is
//! built on.
//!
//! All predicates take an explicit absolute tolerance. [`DEFAULT_TOL`] assumes
//! coordinates of magnitude at most about `10^3`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use arrayvec::ArrayVec;

/// Absolute coordinate tolerance shared by all predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Distance by which the fallback candidate of a halfplane is pushed into it.
pub const HALFPLANE_DEPTH: f64 = 1e6;

/// Up to two boundary intersection points, sorted by `(x, y)`.
pub type BoundaryPoints = ArrayVec<Point, 2>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeometryError {
    /// Radius not strictly positive or a non-finite coordinate.
    InvalidDisk,
    /// Halfplane normal is not a unit vector.
    InvalidHalfplane,
    /// Two circles coincide, so their boundaries meet everywhere.
    IdenticalCircles,
    /// The two disks do not form a lens (disjoint or nested boundaries).
    NoLens,
    /// An operation that needs at least one object got none.
    EmptyFamily,
    /// The family's common intersection looks like a single touching point
    /// that no candidate reproduces within tolerance.
    DegenerateIntersection,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::InvalidDisk => f.write_str("disk needs finite center and positive radius"),
            GeometryError::InvalidHalfplane => f.write_str("halfplane normal must be a finite unit vector"),
            GeometryError::IdenticalCircles => f.write_str("circles coincide"),
            GeometryError::NoLens => f.write_str("disk boundaries do not intersect"),
            GeometryError::EmptyFamily => f.write_str("family is empty"),
            GeometryError::DegenerateIntersection => {
                f.write_str("common intersection degenerates to a point not matched by any candidate")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    /// Rotation about the origin by `angle` radians (counterclockwise).
    pub fn rotated(self, angle: f64) -> Point {
        let (s, c) = libm::sincos(angle);
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Unit vector at `angle` radians from the positive x-axis.
    pub fn from_angle(angle: f64) -> Point {
        let (s, c) = libm::sincos(angle);
        Point::new(c, s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic `(x, y)` order used to make outputs deterministic.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x.total_cmp(&other.x).then(self.y.total_cmp(&other.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A closed disk. `id` labels the disk inside its family and breaks radius
/// ties: disks are totally ordered by `(radius, id)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub id: u32,
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(id: u32, center: Point, radius: f64) -> Result<Self, GeometryError> {
        if !center.is_finite() || !radius.is_finite() || radius <= 0.0 {
            return Err(GeometryError::InvalidDisk);
        }
        Ok(Disk { id, center, radius })
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        p.distance(self.center) <= self.radius + tol
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        let d = p.distance(self.center) - self.radius;
        if d > 0.0 {
            d
        } else {
            0.0
        }
    }

    pub fn lowest_point(&self) -> Point {
        Point::new(self.center.x, self.center.y - self.radius)
    }

    /// The tie-break order `(radius, id)`.
    pub fn order_cmp(&self, other: &Disk) -> Ordering {
        self.radius.total_cmp(&other.radius).then(self.id.cmp(&other.id))
    }

    pub fn translated(&self, offset: Point) -> Disk {
        Disk { center: self.center + offset, ..*self }
    }

    pub fn intersects_disk(&self, other: &Disk, tol: f64) -> bool {
        self.center.distance(other.center) <= self.radius + other.radius + tol
    }
}

/// The closed halfplane `{p : normal · p <= offset}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Halfplane {
    pub id: u32,
    pub normal: Point,
    pub offset: f64,
}

impl Halfplane {
    pub fn new(id: u32, normal: Point, offset: f64) -> Result<Self, GeometryError> {
        if !normal.is_finite() || !offset.is_finite() || (normal.norm() - 1.0).abs() > 1e-12 {
            return Err(GeometryError::InvalidHalfplane);
        }
        Ok(Halfplane { id, normal, offset })
    }

    /// Builds a halfplane from an arbitrary nonzero normal, rescaling the
    /// offset along with it.
    pub fn from_raw(id: u32, normal: Point, offset: f64) -> Result<Self, GeometryError> {
        let len = normal.norm();
        if len <= 0.0 || !len.is_finite() || !offset.is_finite() {
            return Err(GeometryError::InvalidHalfplane);
        }
        Halfplane::new(id, normal * (1.0 / len), offset / len)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.normal.dot(p) <= self.offset + tol
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        let d = self.normal.dot(p) - self.offset;
        if d > 0.0 {
            d
        } else {
            0.0
        }
    }

    /// The point of the boundary line closest to the origin.
    pub fn foot(&self) -> Point {
        self.normal * self.offset
    }

    /// The foot pushed [`HALFPLANE_DEPTH`] units into the halfplane.
    pub fn deep_point(&self) -> Point {
        self.foot() - self.normal * HALFPLANE_DEPTH
    }
}

/// A disk or a halfplane, the objects of every piercing family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneralizedDisk {
    Disk(Disk),
    Halfplane(Halfplane),
}

impl GeneralizedDisk {
    pub fn id(&self) -> u32 {
        match self {
            GeneralizedDisk::Disk(d) => d.id,
            GeneralizedDisk::Halfplane(h) => h.id,
        }
    }

    pub fn as_disk(&self) -> Option<&Disk> {
        match self {
            GeneralizedDisk::Disk(d) => Some(d),
            GeneralizedDisk::Halfplane(_) => None,
        }
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        contains(self, p, tol)
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        distance_to(self, p)
    }

    /// Grows the object by `delta`: disks gain radius, halfplanes offset.
    pub fn inflated(&self, delta: f64) -> GeneralizedDisk {
        match *self {
            GeneralizedDisk::Disk(d) => GeneralizedDisk::Disk(Disk { radius: d.radius + delta, ..d }),
            GeneralizedDisk::Halfplane(h) => GeneralizedDisk::Halfplane(Halfplane { offset: h.offset + delta, ..h }),
        }
    }
}

impl From<Disk> for GeneralizedDisk {
    fn from(d: Disk) -> Self {
        GeneralizedDisk::Disk(d)
    }
}

impl From<Halfplane> for GeneralizedDisk {
    fn from(h: Halfplane) -> Self {
        GeneralizedDisk::Halfplane(h)
    }
}

/// The intersection of two disks together with its (up to two) vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Lens {
    pub a: Disk,
    pub b: Disk,
    pub vertices: BoundaryPoints,
}

impl Lens {
    pub fn new(a: Disk, b: Disk, tol: f64) -> Result<Self, GeometryError> {
        if !a.intersects_disk(&b, tol) {
            return Err(GeometryError::NoLens);
        }
        let vertices = circle_intersection_points(&a, &b, tol)?;
        Ok(Lens { a, b, vertices })
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.a.contains(p, tol) && self.b.contains(p, tol)
    }

    pub fn angle(&self) -> Result<f64, GeometryError> {
        lens_angle(&self.a, &self.b)
    }
}

fn sorted_pair(mut pts: BoundaryPoints) -> BoundaryPoints {
    pts.sort_unstable_by(Point::lex_cmp);
    pts
}

/// Intersection points of the two boundary circles.
///
/// Points closer than `tol` are merged (tangency); the result is sorted by
/// `(x, y)`.
pub fn circle_intersection_points(a: &Disk, b: &Disk, tol: f64) -> Result<BoundaryPoints, GeometryError> {
    let delta = b.center - a.center;
    let d = delta.norm();
    let (r1, r2) = (a.radius, b.radius);
    if d < tol && (r1 - r2).abs() < tol {
        return Err(GeometryError::IdenticalCircles);
    }
    let mut out = BoundaryPoints::new();
    if d > r1 + r2 + tol || d < (r1 - r2).abs() - tol || d == 0.0 {
        return Ok(out);
    }
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h_sq = r1 * r1 - along * along;
    let h = if h_sq > 0.0 { libm::sqrt(h_sq) } else { 0.0 };
    let u = delta * (1.0 / d);
    let base = a.center + u * along;
    if 2.0 * h < tol {
        out.push(base);
    } else {
        let off = u.perp() * h;
        out.push(base + off);
        out.push(base - off);
    }
    Ok(sorted_pair(out))
}

/// Intersection of a circle with the line `normal · p = offset`.
pub fn circle_line_points(disk: &Disk, line: &Halfplane, tol: f64) -> BoundaryPoints {
    let mut out = BoundaryPoints::new();
    let s = line.normal.dot(disk.center) - line.offset;
    if s.abs() > disk.radius + tol {
        return out;
    }
    let foot = disk.center - line.normal * s;
    let h_sq = disk.radius * disk.radius - s * s;
    let h = if h_sq > 0.0 { libm::sqrt(h_sq) } else { 0.0 };
    if 2.0 * h < tol {
        out.push(foot);
    } else {
        let off = line.normal.perp() * h;
        out.push(foot + off);
        out.push(foot - off);
    }
    sorted_pair(out)
}

/// Intersection of two boundary lines; `None` when (nearly) parallel.
pub fn line_line_point(a: &Halfplane, b: &Halfplane) -> Option<Point> {
    let det = a.normal.cross(b.normal);
    if det.abs() < 1e-12 {
        return None;
    }
    let x = (a.offset * b.normal.y - b.offset * a.normal.y) / det;
    let y = (a.normal.x * b.offset - b.normal.x * a.offset) / det;
    Some(Point::new(x, y))
}

/// Boundary intersection points of any two generalized disks.
pub fn boundary_points(a: &GeneralizedDisk, b: &GeneralizedDisk, tol: f64) -> BoundaryPoints {
    use GeneralizedDisk as G;
    match (a, b) {
        (G::Disk(p), G::Disk(q)) => circle_intersection_points(p, q, tol).unwrap_or_default(),
        (G::Disk(d), G::Halfplane(h)) | (G::Halfplane(h), G::Disk(d)) => circle_line_points(d, h, tol),
        (G::Halfplane(p), G::Halfplane(q)) => line_line_point(p, q).into_iter().collect(),
    }
}

/// The lens angle `∠ c_a u c_b` at a boundary intersection point `u`, via the
/// law of cosines. Lies in `[0, π]`; `π` at external tangency.
pub fn lens_angle(a: &Disk, b: &Disk) -> Result<f64, GeometryError> {
    let d = a.center.distance(b.center);
    let (r1, r2) = (a.radius, b.radius);
    if d > r1 + r2 + DEFAULT_TOL || d < (r1 - r2).abs() - DEFAULT_TOL {
        return Err(GeometryError::NoLens);
    }
    let cos = ((r1 * r1 + r2 * r2 - d * d) / (2.0 * r1 * r2)).clamp(-1.0, 1.0);
    Ok(libm::acos(cos))
}

pub fn contains(g: &GeneralizedDisk, p: Point, tol: f64) -> bool {
    match g {
        GeneralizedDisk::Disk(d) => d.contains(p, tol),
        GeneralizedDisk::Halfplane(h) => h.contains(p, tol),
    }
}

/// Euclidean distance from `p` to the closed set `g`; zero inside.
pub fn distance_to(g: &GeneralizedDisk, p: Point) -> f64 {
    match g {
        GeneralizedDisk::Disk(d) => d.distance_to(p),
        GeneralizedDisk::Halfplane(h) => h.distance_to(p),
    }
}

/// Whether two closed objects share a point, up to `tol`.
pub fn intersects(a: &GeneralizedDisk, b: &GeneralizedDisk, tol: f64) -> bool {
    use GeneralizedDisk as G;
    match (a, b) {
        (G::Disk(p), G::Disk(q)) => p.intersects_disk(q, tol),
        (G::Disk(d), G::Halfplane(h)) | (G::Halfplane(h), G::Disk(d)) => {
            h.normal.dot(d.center) - d.radius <= h.offset + tol
        }
        (G::Halfplane(p), G::Halfplane(q)) => {
            // only antiparallel halfplanes can miss each other
            if p.normal.dot(q.normal) > -1.0 + 1e-12 {
                true
            } else {
                p.offset + q.offset >= -tol
            }
        }
    }
}

/// Candidate points for witnessing a common intersection: every pairwise
/// boundary intersection, every disk center, and for every halfplane the foot
/// of the origin on its boundary plus a point [`HALFPLANE_DEPTH`] deep inside.
///
/// If a subfamily has a nonempty common intersection `K`, some candidate lies
/// in `K`. With a disk present `K` is compact: either its boundary has a vertex
/// (a pairwise boundary intersection, including tangency points), or the
/// boundary is a single circle, `K` equals that disk and its center
/// qualifies. Without disks, `K` is a single halfplane, a strip, or has a
/// line-line vertex; the foot point of a bounding line covers the first two.
pub fn candidate_points(family: &[GeneralizedDisk], tol: f64) -> Vec<Point> {
    let mut out = Vec::new();
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            out.extend(boundary_points(a, b, tol));
        }
    }
    for g in family {
        match g {
            GeneralizedDisk::Disk(d) => out.push(d.center),
            GeneralizedDisk::Halfplane(h) => {
                out.push(h.foot());
                out.push(h.deep_point());
            }
        }
    }
    out
}

/// Largest distance from `p` to a member of `family`.
pub fn max_excess(family: &[GeneralizedDisk], p: Point) -> f64 {
    family.iter().map(|g| g.distance_to(p)).fold(0.0, f64::max)
}

/// Midpoints of the gaps between disk/disk and disk/halfplane pairs that
/// miss each other by at most `slack`.
fn near_miss_points(family: &[GeneralizedDisk], slack: f64) -> Vec<Point> {
    use GeneralizedDisk as G;
    let mut out = Vec::new();
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            match (a, b) {
                (G::Disk(p), G::Disk(q)) => {
                    let delta = q.center - p.center;
                    let d = delta.norm();
                    let gap = d - p.radius - q.radius;
                    if gap > 0.0 && gap <= slack {
                        out.push(p.center + delta * ((p.radius + gap / 2.0) / d));
                    }
                }
                (G::Disk(d), G::Halfplane(h)) | (G::Halfplane(h), G::Disk(d)) => {
                    let gap = h.normal.dot(d.center) - d.radius - h.offset;
                    if gap > 0.0 && gap <= slack {
                        out.push(d.center - h.normal * (d.radius + gap / 2.0));
                    }
                }
                (G::Halfplane(_), G::Halfplane(_)) => {}
            }
        }
    }
    out
}

/// Brute-force Helly test: a point common to all members (within `tol`), or
/// `None` if the common intersection is empty. `O(n^3)`; meant for small
/// families and as a test oracle.
pub fn intersection_witness(family: &[GeneralizedDisk], tol: f64) -> Result<Option<Point>, GeometryError> {
    if family.is_empty() {
        return Err(GeometryError::EmptyFamily);
    }
    let candidates = candidate_points(family, tol);
    for c in &candidates {
        if max_excess(family, *c) <= tol {
            return Ok(Some(*c));
        }
    }
    let near = near_miss_points(family, 10.0 * tol);
    let best = candidates
        .iter()
        .chain(near.iter())
        .map(|c| max_excess(family, *c))
        .fold(f64::INFINITY, f64::min);
    if best <= 10.0 * tol {
        return Err(GeometryError::DegenerateIntersection);
    }
    Ok(None)
}

/// [`intersection_witness`] for plain disks.
pub fn disk_witness(disks: &[Disk], tol: f64) -> Result<Option<Point>, GeometryError> {
    let family: Vec<GeneralizedDisk> = disks.iter().copied().map(GeneralizedDisk::Disk).collect();
    intersection_witness(&family, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::PI;

    fn disk(x: f64, y: f64, r: f64) -> Disk {
        Disk::new(0, Point::new(x, y), r).unwrap()
    }

    fn lower_halfplane() -> GeneralizedDisk {
        Halfplane::new(9, Point::new(0.0, 1.0), 0.0).unwrap().into()
    }

    #[test]
    fn circle_intersections() {
        let a = disk(0.0, 0.0, 1.0);
        assert!(circle_intersection_points(&a, &disk(3.0, 0.0, 1.0), DEFAULT_TOL).unwrap().is_empty());

        let touch = circle_intersection_points(&a, &disk(2.0, 0.0, 1.0), DEFAULT_TOL).unwrap();
        assert_eq!(touch.len(), 1);
        assert!(touch[0].distance(Point::new(1.0, 0.0)) < 1e-12);

        let s3 = libm::sqrt(3.0);
        let two = circle_intersection_points(&a, &disk(s3, 0.0, 1.0), DEFAULT_TOL).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two[0].distance(Point::new(s3 / 2.0, -0.5)) < 1e-12);
        assert!(two[1].distance(Point::new(s3 / 2.0, 0.5)) < 1e-12);
    }

    #[test]
    fn identical_circles_rejected() {
        let a = disk(1.0, 2.0, 3.0);
        assert_eq!(circle_intersection_points(&a, &a, DEFAULT_TOL), Err(GeometryError::IdenticalCircles));
        // concentric but different radii: no boundary contact
        assert!(circle_intersection_points(&a, &disk(1.0, 2.0, 1.0), DEFAULT_TOL).unwrap().is_empty());
    }

    #[test]
    fn lens_angles() {
        let a = disk(0.0, 0.0, 1.0);
        assert!((lens_angle(&a, &disk(2.0, 0.0, 1.0)).unwrap() - PI).abs() < 1e-12);
        let s3 = libm::sqrt(3.0);
        assert!((lens_angle(&a, &disk(s3, 0.0, 1.0)).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        let b = disk(0.0, 0.0, 2.0);
        let c = disk(libm::sqrt(5.0), 0.0, 1.0);
        assert!((lens_angle(&b, &c).unwrap() - PI / 2.0).abs() < 1e-12);
        assert_eq!(lens_angle(&a, &disk(5.0, 0.0, 1.0)), Err(GeometryError::NoLens));
        assert_eq!(lens_angle(&disk(0.0, 0.0, 5.0), &disk(0.5, 0.0, 1.0)), Err(GeometryError::NoLens));
    }

    #[test]
    fn containment_and_distance() {
        let unit: GeneralizedDisk = disk(0.0, 0.0, 1.0).into();
        assert!(contains(&unit, Point::new(0.0, 1.0), 0.0));
        assert!(!contains(&lower_halfplane(), Point::new(5.0, 0.1), 1e-9));
        let far: GeneralizedDisk = disk(libm::sqrt(3.0), 0.0, 1.0).into();
        assert!(!contains(&far, Point::new(0.98, 0.78), DEFAULT_TOL));

        let high: GeneralizedDisk = disk(0.0, 5.0, 1.0).into();
        assert_eq!(distance_to(&high, Point::new(0.0, 0.0)), 4.0);
        assert_eq!(distance_to(&lower_halfplane(), Point::new(3.0, 2.0)), 2.0);
        assert!((distance_to(&high, Point::new(3.0, 1.0)) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn halfplane_validation() {
        assert_eq!(Halfplane::new(0, Point::new(1.0, 1.0), 0.0), Err(GeometryError::InvalidHalfplane));
        let h = Halfplane::from_raw(0, Point::new(0.0, 2.0), 4.0).unwrap();
        assert_eq!(h.normal, Point::new(0.0, 1.0));
        assert_eq!(h.offset, 2.0);
        assert_eq!(Disk::new(0, Point::new(0.0, 0.0), 0.0), Err(GeometryError::InvalidDisk));
    }

    #[test]
    fn witness_for_equilateral_triples() {
        let tri = |side: f64| -> Vec<GeneralizedDisk> {
            let h = side * libm::sqrt(3.0) / 2.0;
            vec![
                disk(0.0, 0.0, 1.0).into(),
                disk(side, 0.0, 1.0).into(),
                disk(side / 2.0, h, 1.0).into(),
            ]
        };
        let fam = tri(1.0);
        let w = intersection_witness(&fam, DEFAULT_TOL).unwrap().expect("helly");
        assert!(fam.iter().all(|g| g.contains(w, DEFAULT_TOL)));
        assert_eq!(intersection_witness(&tri(1.9), DEFAULT_TOL).unwrap(), None);

        let single = [GeneralizedDisk::Disk(disk(3.0, 4.0, 2.0))];
        assert_eq!(intersection_witness(&single, DEFAULT_TOL).unwrap(), Some(Point::new(3.0, 4.0)));
        assert_eq!(intersection_witness(&[], DEFAULT_TOL), Err(GeometryError::EmptyFamily));
    }

    #[test]
    fn witness_handles_halfplane_only_families() {
        let up = Halfplane::new(0, Point::new(0.0, 1.0), 1.0).unwrap();
        let down = Halfplane::new(1, Point::new(0.0, -1.0), 1.0).unwrap();
        let strip = [up.into(), down.into()];
        assert!(intersection_witness(&strip, DEFAULT_TOL).unwrap().is_some());
        let gap = [up.into(), Halfplane::new(1, Point::new(0.0, -1.0), -2.0).unwrap().into()];
        assert_eq!(intersection_witness(&gap, DEFAULT_TOL).unwrap(), None);
    }

    #[test]
    fn near_miss_is_reported_not_guessed() {
        // two disks that miss each other by 5e-9
        let fam = [disk(0.0, 0.0, 1.0).into(), disk(2.0 + 5e-9, 0.0, 1.0).into()];
        assert_eq!(intersection_witness(&fam, 1e-9), Err(GeometryError::DegenerateIntersection));
    }

    #[test]
    fn halfplane_intersections() {
        let a: GeneralizedDisk = Halfplane::new(0, Point::new(1.0, 0.0), 0.0).unwrap().into();
        let b: GeneralizedDisk = Halfplane::new(1, Point::new(-1.0, 0.0), -1.0).unwrap().into();
        assert!(!intersects(&a, &b, DEFAULT_TOL));
        let c: GeneralizedDisk = Halfplane::new(2, Point::new(0.0, 1.0), 0.0).unwrap().into();
        assert!(intersects(&a, &c, DEFAULT_TOL));
        let p = boundary_points(&a, &c, DEFAULT_TOL);
        assert_eq!(p.as_slice(), &[Point::new(0.0, 0.0)]);
        let d: GeneralizedDisk = disk(0.0, 2.0, 1.0).into();
        assert!(!intersects(&d, &lower_halfplane(), DEFAULT_TOL));
        assert_eq!(circle_line_points(&disk(0.0, 1.0, 1.0), &Halfplane::new(0, Point::new(0.0, 1.0), 0.0).unwrap(), 1e-9).len(), 1);
    }
}
