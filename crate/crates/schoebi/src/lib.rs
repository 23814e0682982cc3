//! The generalized Schöbi dissection and the recursive brick bijection.
//!
//! Two layers live here. `prism` is the single-stage story: Q_n(w) cut along
//! coordinate-sum hyperplanes into n pieces that reassemble (by powers of the
//! shift map φ) into a prism over P_{n-1}. `brick_map` iterates that stage to
//! a bijection Θ between the orthoscheme O_n and an axis-aligned brick,
//! computable in O(n²) together with its inverse.

mod brick_map;
mod pieces;
mod prism;

pub use brick_map::{
    brick_dimensions, count_pieces_recursive, step_a, step_b, theta, theta_inverse, theta_trace,
    theta_with_ops, BrickMap, StepOutput,
};
pub use pieces::{stage_pieces, StagePiece};
pub use prism::{
    build_tiling_window, dissect_stage, prism_spec, prism_walls_contains, schoebi3d_prism,
    PrismSpec, TilingTrajectory,
};

use hill_simplex::SimplexError;
use linalg_core::LinAlgError;
use thiserror::Error;

/// Drift tolerance: inputs this far outside a domain are projected onto it,
/// anything farther is a hard error.
pub const CLAMP_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SchoebiError {
    #[error(transparent)]
    Simplex(#[from] SimplexError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("point outside {domain} by more than {tol}")]
    Domain { domain: &'static str, tol: f64 },
    #[error("dimension must be >= {0}")]
    InvalidDimension(usize),
    #[error("parameter out of range: {0}")]
    Range(&'static str),
    #[error("construction self-check failed: {0}")]
    Verification(String),
}
