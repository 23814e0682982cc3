use linalg_core::{Matrix, Vector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimplexError {
    #[error("dimension must be >= 1")]
    InvalidDimension,
    #[error("w = {w} outside the open interval (-1, {upper}) for n = {n}")]
    ParameterRange { n: usize, w: f64, upper: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generator matrix is numerically singular")]
    SingularGenerator,
}

/// Upper end of the admissible w-range, `1/(n-1)` (unbounded for n = 1).
pub fn w_upper_bound(n: usize) -> f64 {
    if n <= 1 {
        f64::INFINITY
    } else {
        1.0 / (n as f64 - 1.0)
    }
}

/// The shift constants of the standard realization:
/// `b = (√(1 - w(n-1)) - √(1+w)) / n`, `a = b + √(1+w)`.
pub fn ab_constants(n: usize, w: f64) -> Result<(f64, f64), SimplexError> {
    if n == 0 {
        return Err(SimplexError::InvalidDimension);
    }
    if !w.is_finite() || w <= -1.0 || w >= w_upper_bound(n) {
        return Err(SimplexError::ParameterRange {
            n,
            w,
            upper: w_upper_bound(n),
        });
    }
    let root_sum = (1.0 - w * (n as f64 - 1.0)).sqrt();
    let root_width = (1.0 + w).sqrt();
    let b = (root_sum - root_width) / n as f64;
    Ok((b + root_width, b))
}

/// Volume of Q_n(w): `(1+w)^((n-1)/2) (1 - w(n-1))^(1/2) / n!`.
pub fn simplex_volume(n: usize, w: f64) -> Result<f64, SimplexError> {
    ab_constants(n, w)?;
    let mut factorial = 1.0;
    for k in 2..=n {
        factorial *= k as f64;
    }
    Ok((1.0 + w).powf((n as f64 - 1.0) / 2.0) * (1.0 - w * (n as f64 - 1.0)).sqrt() / factorial)
}

/// A realization of Q_n(w): generators v_i, cumulative-sum vertex matrix, and
/// the closed-form inverse used for λ-coordinates.
#[derive(Clone, Debug)]
pub struct SimplexSpec {
    n: usize,
    w: f64,
    a: f64,
    b: f64,
    generator_vectors: Matrix,
    vertex_matrix: Matrix,
    // G = (a-b)I + bJ, so G⁻¹ = inv_diag·I + inv_mix·J.
    inv_diag: f64,
    inv_mix: f64,
}

/// Builds the standard realization of Q_n(w).
pub fn make_simplex(n: usize, w: f64) -> Result<SimplexSpec, SimplexError> {
    let (a, b) = ab_constants(n, w)?;
    let generator_vectors = Matrix::from_fn(n, n, |i, j| if i == j { a } else { b });
    let vertex_matrix = Matrix::from_fn(n, n, |i, j| {
        if j <= i {
            a + i as f64 * b
        } else {
            (i as f64 + 1.0) * b
        }
    });
    let width = a - b; // = √(1+w) > 0
    let axial = a + (n as f64 - 1.0) * b; // = √(1 - w(n-1)) > 0
    if width.abs() < 1e-300 || axial.abs() < 1e-300 {
        return Err(SimplexError::SingularGenerator);
    }
    Ok(SimplexSpec {
        n,
        w,
        a,
        b,
        generator_vectors,
        vertex_matrix,
        inv_diag: 1.0 / width,
        inv_mix: -b / (width * axial),
    })
}

impl SimplexSpec {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Rows are the generators v_1 … v_n.
    pub fn generators(&self) -> &Matrix {
        &self.generator_vectors
    }

    /// Row i is v_1 + … + v_{i+1}.
    pub fn vertex_matrix(&self) -> &Matrix {
        &self.vertex_matrix
    }

    /// All n+1 vertices including the origin.
    pub fn vertex_set(&self) -> Vec<Vector> {
        let mut out = vec![Vector::zeros(self.n)];
        out.extend(linalg_core::rows_to_points(&self.vertex_matrix));
        out
    }

    pub fn volume(&self) -> f64 {
        simplex_volume(self.n, self.w).expect("validated at construction")
    }

    /// Barycentric-order coordinates: the λ with x = Σ λ_i v_i, via the
    /// closed-form inverse of the (a-b)I + bJ generator matrix.
    pub fn lambda(&self, x: &Vector) -> Result<Vector, SimplexError> {
        if x.len() != self.n {
            return Err(SimplexError::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let s: f64 = x.sum();
        Ok(Vector::from_fn(self.n, |i, _| {
            self.inv_diag * x[i] + self.inv_mix * s
        }))
    }

    /// Maps λ-coordinates back to a point: `λ·G`.
    pub fn point_from_lambda(&self, lambda: &Vector) -> Vector {
        let s: f64 = lambda.sum();
        Vector::from_fn(self.n, |i, _| (self.a - self.b) * lambda[i] + self.b * s)
    }

    /// Closed membership test: `1+tol ≥ λ_1 ≥ … ≥ λ_n ≥ -tol` with slack
    /// `tol` on each comparison. Negative `tol` gives an open-interior test.
    pub fn contains(&self, x: &Vector, tol: f64) -> Result<bool, SimplexError> {
        let l = self.lambda(x)?;
        if l[0] > 1.0 + tol || l[self.n - 1] < -tol {
            return Ok(false);
        }
        for i in 1..self.n {
            if l[i] > l[i - 1] + tol {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Projects a point with chain violations of at most `tol` back onto the
    /// simplex; returns `None` when the point is farther outside than that.
    pub fn clamp_into(&self, x: &Vector, tol: f64) -> Result<Option<Vector>, SimplexError> {
        let mut l = self.lambda(x)?;
        let mut worst = (l[0] - 1.0).max(-l[self.n - 1]).max(0.0);
        for i in 1..self.n {
            worst = worst.max(l[i] - l[i - 1]);
        }
        if worst > tol.max(0.0) {
            return Ok(None);
        }
        if worst <= 0.0 {
            return Ok(Some(x.clone()));
        }
        let mut prev = 0.0_f64;
        for i in (0..self.n).rev() {
            l[i] = l[i].max(prev);
            prev = l[i];
        }
        for i in 0..self.n {
            let cap = if i == 0 { 1.0 } else { l[i - 1] };
            l[i] = l[i].min(cap);
        }
        Ok(Some(self.point_from_lambda(&l)))
    }

    pub fn centroid(&self) -> Vector {
        let mut c = Vector::zeros(self.n);
        for v in self.vertex_set() {
            c += v;
        }
        c / (self.n as f64 + 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn orthoscheme_constants_and_staircase() {
        let spec = make_simplex(5, 0.0).unwrap();
        assert_abs_diff_eq!(spec.a(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(spec.b(), 0.0, epsilon = 1e-15);
        for i in 0..5 {
            for j in 0..5 {
                let want = if j <= i { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(spec.vertex_matrix()[(i, j)], want, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn pn_constants_match_formula() {
        // w = 1/n: a = n^{-3/2}(1 + (n-1)√(n+1)), b = n^{-3/2}(1 - √(n+1)).
        for n in [2usize, 3, 7] {
            let nf = n as f64;
            let spec = make_simplex(n, 1.0 / nf).unwrap();
            let scale = nf.powf(-1.5);
            assert_abs_diff_eq!(
                spec.a(),
                scale * (1.0 + (nf - 1.0) * (nf + 1.0).sqrt()),
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(spec.b(), scale * (1.0 - (nf + 1.0).sqrt()), epsilon = 1e-14);
        }
    }

    #[test]
    fn gram_matrix_oracle() {
        let spec = make_simplex(4, 0.2).unwrap();
        assert_abs_diff_eq!(spec.a() - spec.b(), 1.2_f64.sqrt(), epsilon = 1e-14);
        let g = spec.generators();
        let gram = g * g.transpose();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { -0.2 };
                assert_abs_diff_eq!(gram[(i, j)], want, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn rejects_boundary_w() {
        assert!(make_simplex(3, 0.5).is_err());
        assert!(make_simplex(3, -1.0).is_err());
        assert!(make_simplex(3, 0.4999).is_ok());
        // n = 1 admits any w > -1, including w = 1.
        assert!(make_simplex(1, 1.0).is_ok());
    }

    #[test]
    fn volume_formula_collapses_at_w0() {
        assert_abs_diff_eq!(simplex_volume(4, 0.0).unwrap(), 1.0 / 24.0, epsilon = 1e-15);
        assert_abs_diff_eq!(simplex_volume(1, 0.0).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn volume_matches_generator_determinant() {
        // |det G| / n! across the (n, w) grid, including the n=2, w=1/2 spot value.
        let v = simplex_volume(2, 0.5).unwrap();
        assert_abs_diff_eq!(v, (1.5_f64 * 0.5).sqrt() / 2.0, epsilon = 1e-15);
        for n in 1..=10usize {
            let upper = w_upper_bound(n);
            let mut ws = vec![-0.5, 0.0, 1.0 / (2.0 * n as f64)];
            if n > 1 {
                ws.push(1.0 / n as f64);
                ws.push(0.99 * upper);
            }
            for w in ws {
                let spec = make_simplex(n, w).unwrap();
                let mut factorial = 1.0;
                for k in 2..=n {
                    factorial *= k as f64;
                }
                let det = spec.generators().clone().determinant().abs();
                assert_abs_diff_eq!(
                    simplex_volume(n, w).unwrap(),
                    det / factorial,
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn membership_examples() {
        let o3 = make_simplex(3, 0.0).unwrap();
        assert!(o3
            .contains(&Vector::from_vec(vec![1.0, 1.0, 1.0]), 1e-9)
            .unwrap());
        assert!(!o3
            .contains(&Vector::from_vec(vec![0.5, 0.7, 0.0]), 1e-9)
            .unwrap());
        let q = make_simplex(3, 0.3).unwrap();
        assert!(q.contains(&q.centroid(), 1e-9).unwrap());
    }

    #[test]
    fn membership_boundary_behavior() {
        for (n, w) in [(2usize, 0.0), (3, 0.3), (5, -0.4), (4, 0.2)] {
            let spec = make_simplex(n, w).unwrap();
            let centroid = spec.centroid();
            for v in spec.vertex_set() {
                assert!(spec.contains(&v, 1e-9).unwrap(), "vertex in, n={n} w={w}");
                let dir = (&v - &centroid).normalize();
                let outside = &v + dir * 1e-3;
                assert!(
                    !spec.contains(&outside, 1e-9).unwrap(),
                    "pushed vertex out, n={n} w={w}"
                );
            }
        }
    }

    #[test]
    fn clamp_into_fixes_tiny_drift() {
        let spec = make_simplex(4, 0.1).unwrap();
        let x = spec.point_from_lambda(&Vector::from_vec(vec![0.9, 0.6, 0.6, 0.0]));
        let drifted = &x + Vector::from_element(4, 1e-11);
        let fixed = spec.clamp_into(&drifted, 1e-9).unwrap().unwrap();
        assert!(spec.contains(&fixed, 0.0).unwrap());
        assert!((fixed - &x).amax() < 1e-9);
        let far = &x + Vector::from_element(4, 0.1);
        assert!(spec.clamp_into(&far, 1e-9).unwrap().is_none());
    }

    #[test]
    fn lambda_round_trip() {
        let spec = make_simplex(6, -0.3).unwrap();
        let l = Vector::from_vec(vec![0.95, 0.8, 0.8, 0.5, 0.2, 0.05]);
        let x = spec.point_from_lambda(&l);
        let back = spec.lambda(&x).unwrap();
        assert!((back - l).amax() < 1e-12);
    }
}
