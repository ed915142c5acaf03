use core::cmp::Ordering;

use crate::geometry::{Disk, Point};

/// Radius of the smallest destroyer. Finite radii are compared in the
/// `(radius, id)` tie-break order, so two distinct disks never compare equal.
#[derive(Debug, Clone, Copy)]
pub enum Rad {
    Finite { radius: f64, id: u32 },
    Infinite,
}

impl Rad {
    pub fn of(disk: &Disk) -> Rad {
        Rad::Finite { radius: disk.radius, id: disk.id }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rad::Infinite)
    }
}

impl PartialEq for Rad {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rad {}

impl PartialOrd for Rad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rad {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rad::Infinite, Rad::Infinite) => Ordering::Equal,
            (Rad::Infinite, _) => Ordering::Greater,
            (_, Rad::Infinite) => Ordering::Less,
            (Rad::Finite { radius: a, id: i }, Rad::Finite { radius: b, id: j }) => {
                a.total_cmp(b).then(i.cmp(j))
            }
        }
    }
}

/// The weight `(rad, -dist)`, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weight {
    pub rad: Rad,
    pub neg_dist: f64,
}

impl Weight {
    /// Weight of the empty set: nothing destroys the whole plane except
    /// `D∞`, at distance zero.
    pub const EMPTY: Weight = Weight { rad: Rad::Infinite, neg_dist: 0.0 };

    /// Lexicographic comparison; `rad` exactly, `neg_dist` up to `tol`.
    pub fn compare(&self, other: &Weight, tol: f64) -> Ordering {
        self.rad.cmp(&other.rad).then_with(|| {
            let diff = self.neg_dist - other.neg_dist;
            if diff.abs() <= tol {
                Ordering::Equal
            } else if diff < 0.0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }

    pub fn approx_eq(&self, other: &Weight, tol: f64) -> bool {
        self.compare(other, tol) == Ordering::Equal
    }

    /// A family is Helly exactly when its smallest destroyer is `D∞`.
    pub fn is_helly(&self) -> bool {
        self.rad.is_infinite()
    }

    pub fn dist(&self) -> f64 {
        -self.neg_dist
    }
}

/// The smallest destroyer of a set: one of its disks, or the halfplane `D∞`
/// below the x-axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Destroyer {
    Disk(Disk),
    Infinity,
}

impl Destroyer {
    pub fn rad(&self) -> Rad {
        match self {
            Destroyer::Disk(d) => Rad::of(d),
            Destroyer::Infinity => Rad::Infinite,
        }
    }

    /// Distance from `p` to the destroyer; for `D∞` this is `max(y, 0)`.
    pub fn distance_to(&self, p: Point) -> f64 {
        match self {
            Destroyer::Disk(d) => d.distance_to(p),
            Destroyer::Infinity => {
                if p.y > 0.0 {
                    p.y
                } else {
                    0.0
                }
            }
        }
    }

    pub fn as_disk(&self) -> Option<&Disk> {
        match self {
            Destroyer::Disk(d) => Some(d),
            Destroyer::Infinity => None,
        }
    }

    pub fn weight_at(&self, extreme: Point) -> Weight {
        Weight { rad: self.rad(), neg_dist: -self.distance_to(extreme) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rad: Rad, neg_dist: f64) -> Weight {
        Weight { rad, neg_dist }
    }

    #[test]
    fn rad_order_breaks_ties_by_id() {
        let a = Rad::Finite { radius: 1.0, id: 3 };
        let b = Rad::Finite { radius: 1.0, id: 4 };
        let c = Rad::Finite { radius: 0.5, id: 9 };
        assert!(a < b);
        assert!(c < a);
        assert!(b < Rad::Infinite);
        assert_ne!(a, b);
    }

    #[test]
    fn weight_is_lexicographic() {
        let small = Rad::Finite { radius: 1.0, id: 0 };
        assert_eq!(w(small, 5.0).compare(&w(Rad::Infinite, -100.0), 1e-9), Ordering::Less);
        assert_eq!(w(Rad::Infinite, -2.0).compare(&w(Rad::Infinite, -1.0), 1e-9), Ordering::Less);
        assert_eq!(w(Rad::Infinite, -1.0).compare(&w(Rad::Infinite, -1.0 - 1e-10), 1e-9), Ordering::Equal);
    }

    #[test]
    fn infinity_distance_is_height() {
        assert_eq!(Destroyer::Infinity.distance_to(Point::new(3.0, 4.0)), 4.0);
        assert_eq!(Destroyer::Infinity.distance_to(Point::new(3.0, -4.0)), 0.0);
    }
}
