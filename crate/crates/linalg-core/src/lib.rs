//! Dense small-matrix/vector kernel for the dissection crates.
//!
//! Everything here treats points as *row* vectors, matching the convention
//! `x ↦ x·M + t` used throughout the geometry layers. A [`Vector`] is stored
//! as an `nalgebra` column vector; right-multiplication by a matrix is spelled
//! `m.tr_mul(&x)`.
//!
//! The module provides the two structured orthogonal-basis families used by
//! the recursive brick dissection (`build_m`, `build_n`), general isometries
//! with reflections allowed, and the cyclic shift maps `phi` that generate the
//! simplex tilings.

mod error;
mod isometry;
mod matrices;
mod shift_map;

pub use error::LinAlgError;
pub use isometry::{apply_isometry, Isometry};
pub use matrices::{
    build_m, build_n, mul_row, reduce_with_n, expand_with_n_transpose, row_of, rows_to_points,
};
pub use shift_map::{phi, phi_single, shift_map_isometry, ShiftMapParams};

/// Default tolerance for pure linear-algebra identities.
pub const TOL_ALGEBRAIC: f64 = 1e-12;
/// Default tolerance for composed geometric predicates.
pub const TOL_GEOMETRIC: f64 = 1e-9;

/// Column-stored row vector (a point of ℝⁿ).
pub type Vector = nalgebra::DVector<f64>;
/// Dense rectangular matrix.
pub type Matrix = nalgebra::DMatrix<f64>;

/// Checks that every entry of `x` is finite.
pub fn all_finite(x: &Vector) -> bool {
    x.iter().all(|v| v.is_finite())
}
