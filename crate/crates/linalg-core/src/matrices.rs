use crate::{LinAlgError, Matrix, Vector};

/// Builds the n×n orthogonal matrix `M_n`.
///
/// Column `i` (1-based, `i < n`) holds `p_i = 1/√(i(i+1))` in its first `i`
/// rows, `-i·p_i` in row `i+1`, and zeros below; the last column is the
/// `(1,…,1)/√n` direction.
pub fn build_m(n: usize) -> Result<Matrix, LinAlgError> {
    if n == 0 {
        return Err(LinAlgError::InvalidDimension(n, 1));
    }
    let mut m = Matrix::zeros(n, n);
    for c in 1..n {
        let p = 1.0 / ((c * (c + 1)) as f64).sqrt();
        for r in 0..c {
            m[(r, c - 1)] = p;
        }
        m[(c, c - 1)] = -(c as f64) * p;
    }
    let last = 1.0 / (n as f64).sqrt();
    for r in 0..n {
        m[(r, n - 1)] = last;
    }
    Ok(m)
}

/// Builds the n×(n−1) reduction matrix `N_n` as the matrix product of
/// `M_n`-with-its-last-column-deleted and `M_{n-1}ᵀ`.
///
/// The product is the definition; the closed form sometimes quoted for the
/// entries does not reproduce it (see the tests), so it is never hard-coded.
pub fn build_n(n: usize) -> Result<Matrix, LinAlgError> {
    if n < 2 {
        return Err(LinAlgError::InvalidDimension(n, 2));
    }
    let m_n = build_m(n)?;
    let m_prev = build_m(n - 1)?;
    let truncated = m_n.columns(0, n - 1).into_owned();
    Ok(truncated * m_prev.transpose())
}

/// Row-vector times matrix: returns `x·M`.
pub fn mul_row(x: &Vector, m: &Matrix) -> Result<Vector, LinAlgError> {
    if x.len() != m.nrows() {
        return Err(LinAlgError::DimensionMismatch {
            expected: m.nrows(),
            got: x.len(),
        });
    }
    Ok(m.tr_mul(x))
}

/// Computes `x·N_n` in O(n) without materializing `N_n`.
///
/// `N_n` has the uniform structure `[I_{n-1} - q·J ; -1/√n · 1ᵀ]` with
/// `q = (1 - 1/√n)/(n-1)`; equality with the product definition is checked by
/// the `n_structure_matches_product` test.
pub fn reduce_with_n(x: &Vector, ops: &mut u64) -> Vector {
    let n = x.len();
    debug_assert!(n >= 2);
    let sqrt_n = (n as f64).sqrt();
    let q = (1.0 - 1.0 / sqrt_n) / (n as f64 - 1.0);
    let head_sum: f64 = x.rows(0, n - 1).iter().sum();
    let tail = x[n - 1] / sqrt_n;
    let mut out = Vector::zeros(n - 1);
    for j in 0..n - 1 {
        out[j] = x[j] - q * head_sum - tail;
    }
    *ops += 3 * n as u64;
    out
}

/// Computes `y·N_nᵀ` in O(n): the reconstruction step inverse to
/// [`reduce_with_n`] (up to the discarded axial component).
pub fn expand_with_n_transpose(y: &Vector, ops: &mut u64) -> Vector {
    let k = y.len() + 1;
    let sqrt_k = (k as f64).sqrt();
    let q = (1.0 - 1.0 / sqrt_k) / (k as f64 - 1.0);
    let total: f64 = y.iter().sum();
    let mut out = Vector::zeros(k);
    for i in 0..k - 1 {
        out[i] = y[i] - q * total;
    }
    out[k - 1] = -total / sqrt_k;
    *ops += 3 * k as u64;
    out
}

/// Extracts row `i` of a matrix as a point.
pub fn row_of(m: &Matrix, i: usize) -> Vector {
    m.row(i).transpose()
}

/// Collects the rows of a matrix as points.
pub fn rows_to_points(m: &Matrix) -> Vec<Vector> {
    (0..m.nrows()).map(|i| row_of(m, i)).collect()
}
