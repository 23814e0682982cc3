use crate::{make_simplex, SimplexError};
use linalg_core::{Matrix, Vector};

/// Which coordinate realization of P_n a vertex matrix uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PnForm {
    /// make_simplex(n, 1/n), the cumulative-sum realization.
    Standard,
    /// Upper-triangular form in the hyperplane basis (n columns).
    Projected,
    /// Coset-representative form in ℝ^{n+1}, rows summing to zero.
    Coset,
}

/// One realization of P_n; the simplex is the hull of the origin and the rows.
#[derive(Clone, Debug)]
pub struct PnVariant {
    pub tag: PnForm,
    pub vertex_matrix: Matrix,
}

impl PnVariant {
    /// All n+1 vertices including the origin of the ambient space.
    pub fn vertex_set(&self) -> Vec<Vector> {
        let mut out = vec![Vector::zeros(self.vertex_matrix.ncols())];
        out.extend(linalg_core::rows_to_points(&self.vertex_matrix));
        out
    }
}

/// The three mutually congruent coordinate versions of P_n = Q_n(1/n).
pub fn pn_variants(n: usize) -> Result<(PnVariant, PnVariant, PnVariant), SimplexError> {
    if n == 0 {
        return Err(SimplexError::InvalidDimension);
    }
    let nf = n as f64;
    let scale = ((nf + 1.0) / nf).sqrt();

    let standard = make_simplex(n, 1.0 / nf)?.vertex_matrix().clone();

    let projected = Matrix::from_fn(n, n, |i, j| {
        if j >= i {
            let col = j as f64 + 1.0;
            scale * (i as f64 + 1.0) / (col * (col + 1.0)).sqrt()
        } else {
            0.0
        }
    });

    let coset = Matrix::from_fn(n, n + 1, |i, j| {
        let row = i as f64 + 1.0;
        if j <= i {
            scale * (nf + 1.0 - row) / (nf + 1.0)
        } else {
            scale * (-row) / (nf + 1.0)
        }
    });

    Ok((
        PnVariant {
            tag: PnForm::Standard,
            vertex_matrix: standard,
        },
        PnVariant {
            tag: PnForm::Projected,
            vertex_matrix: projected,
        },
        PnVariant {
            tag: PnForm::Coset,
            vertex_matrix: coset,
        },
    ))
}
