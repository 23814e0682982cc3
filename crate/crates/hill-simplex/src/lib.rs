//! The Hill simplex family Q_n(w).
//!
//! Q_n(w) is the simplex spanned by points Σ λ_i v_i with
//! 1 ≥ λ_1 ≥ … ≥ λ_n ≥ 0, where the v_i are unit vectors with pairwise inner
//! product −w. Two members matter constantly downstream: the orthoscheme
//! O_n = Q_n(0) (sorted sequences in [0,1]) and P_n = Q_n(1/n), the invariant
//! prism cross-section of the recursive dissection.

mod chain;
mod pn;
mod sampling;
mod simplex;

pub use chain::LambdaChain;
pub use pn::{pn_variants, PnForm, PnVariant};
pub use sampling::sample;
pub use simplex::{
    ab_constants, make_simplex, simplex_volume, w_upper_bound, SimplexError, SimplexSpec,
};

pub use linalg_core::{Matrix, Vector};
