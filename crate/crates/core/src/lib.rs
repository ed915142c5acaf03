//! Five-point stabbing of pairwise intersecting disks.
//!
//! Given `n` pairwise intersecting disks, [`stabbing::stab_five`] returns at
//! most five points such that every disk contains one of them. The non-Helly
//! case is found with a randomized LP-type solver ([`lptype::solve`]) whose
//! weight is the pair (radius of the smallest destroyer, minus the distance
//! to it). [`lowerbound`] builds a 13-object family of disks and halfplanes
//! and decides exhaustively how many points pierce it.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod geometry;
pub mod harness;
pub mod lowerbound;
pub mod lptype;
pub mod stabbing;

pub use geometry::{Disk, GeneralizedDisk, GeometryError, Halfplane, Lens, Point, DEFAULT_TOL};
pub use harness::{random_instance, verify_stabbing, InstanceSpec};
pub use lowerbound::{build_lower_bound, min_pierce, verify_construction, LowerBoundConfig};
pub use lptype::{solve, SolveOutcome, Verdict, Weight};
pub use stabbing::{stab_five, stab_five_sorted, StabCertificate};

