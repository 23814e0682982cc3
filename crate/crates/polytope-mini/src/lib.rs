//! Minimal convex-polytope toolkit for small dimensions (d ≤ 6).
//!
//! Vertex enumeration is brute force over d-subsets of halfspaces; volumes
//! come from a recursive face triangulation (facets are identified by their
//! tight halfspaces, so no general convex-hull pass is ever needed). This
//! trades asymptotics for correctness, which is the right trade at ≤ 40
//! halfspaces.

mod congruence;
mod hrep;
mod io;
mod volume;
mod vrep;

pub use congruence::congruent;
pub use hrep::{cut, Halfspace, HPolytope};
pub use io::{polytope_from_json, polytope_to_json, write_off, PolytopeJson};
pub use volume::{volume_h, volume_v, VolumeEstimate, VolumeMode};
pub use vrep::{enumerate_vertices, supporting_halfspaces, Enumeration, VPolytope};

use thiserror::Error;

/// Dedup / feasibility tolerance used throughout the toolkit.
pub const VERTEX_TOL: f64 = 1e-9;
/// Pivot threshold below which a subset is treated as rank-deficient.
pub const PIVOT_TOL: f64 = 1e-11;

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("dimension {0} out of supported range 1..=6")]
    DimensionOutOfRange(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("polytope is empty")]
    Empty,
    #[error("operation requires dimension {required}, polytope has {actual}")]
    WrongAmbientDimension { required: usize, actual: usize },
    #[error("no vertices available")]
    NoVertices,
}
