//! The LP-type problem on pairwise intersecting disks.
//!
//! For a set `C` of disks, the smallest destroyer is the first disk in
//! `(radius, id)` order whose addition makes the strictly smaller prefix
//! non-Helly, or the halfplane `D∞` below the x-axis when `C` is Helly. The
//! weight of `C` is `(rad, -dist)`: the destroyer's radius and minus the
//! distance from the prefix intersection to it. The unique closest point is
//! the extreme point.
//!
//! [`solve`] computes the weight and a basis of at most three disks in
//! expected linear time. [`weight_brute`] evaluates the same weight directly
//! from the definitions and serves as a test oracle.

use core::fmt;

use crate::geometry::GeometryError;

mod basis;
mod brute;
mod solver;
mod weight;

pub use basis::{extend_basis, extreme_point, violation_test, Basis, Violation};
pub use brute::{weight_brute, BRUTE_LIMIT};
pub use solver::{lift_above_axis, solve, solve_with_tol, SolveOutcome, SolveStats, Verdict};
pub use weight::{Destroyer, Rad, Weight};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LpError {
    EmptyFamily,
    /// Two disks of the family are disjoint beyond tolerance.
    InvalidInstance { first: u32, second: u32 },
    /// Non-finite input or duplicate ids, which leaves the tie-break order
    /// undefined.
    Degenerate,
    /// The disks handed to an extreme-point computation have no common point.
    NotHelly,
    /// The destroyer overlaps the set it is supposed to destroy.
    NotDestroyed,
    TooLarge,
    /// No subset of at most three disks reproduced the weight.
    NoBasis,
    /// The solver produced a candidate the violation test rejects.
    InvalidBasis,
    Geometry(GeometryError),
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::EmptyFamily => f.write_str("empty family"),
            LpError::InvalidInstance { first, second } => write!(f, "disks {first} and {second} do not intersect"),
            LpError::Degenerate => f.write_str("non-finite input or duplicate disk ids"),
            LpError::NotHelly => f.write_str("disks have no common point"),
            LpError::NotDestroyed => f.write_str("destroyer meets the intersection"),
            LpError::TooLarge => f.write_str("too many disks for this operation"),
            LpError::NoBasis => f.write_str("no basis of size at most three reproduces the weight"),
            LpError::InvalidBasis => f.write_str("solver reached a set that is not a basis"),
            LpError::Geometry(e) => write!(f, "geometry: {e}"),
        }
    }
}

impl core::error::Error for LpError {}

impl From<GeometryError> for LpError {
    fn from(e: GeometryError) -> Self {
        LpError::Geometry(e)
    }
}
