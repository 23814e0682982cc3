use crate::{LinAlgError, Matrix, Vector, TOL_ALGEBRAIC};

/// A rigid motion `x ↦ x·linear + shift` with orthogonal linear part.
///
/// Reflections (determinant −1) are allowed; dissections are free to use
/// orientation-reversing motions.
#[derive(Clone, Debug, PartialEq)]
pub struct Isometry {
    linear: Matrix,
    shift: Vector,
}

impl Isometry {
    /// Validates orthogonality and |det| = 1 before accepting the pair.
    pub fn new(linear: Matrix, shift: Vector) -> Result<Self, LinAlgError> {
        let n = linear.nrows();
        if n == 0 || linear.ncols() != n {
            return Err(LinAlgError::InvalidDimension(linear.ncols(), n.max(1)));
        }
        if shift.len() != n {
            return Err(LinAlgError::DimensionMismatch {
                expected: n,
                got: shift.len(),
            });
        }
        if linear.iter().any(|v| !v.is_finite()) || shift.iter().any(|v| !v.is_finite()) {
            return Err(LinAlgError::NonFinite);
        }
        let gram = linear.transpose() * &linear;
        let eye = Matrix::identity(n, n);
        let dev = (gram - eye).amax();
        if dev > TOL_ALGEBRAIC {
            return Err(LinAlgError::NotOrthogonal(dev));
        }
        let det = linear.clone().determinant();
        if (det.abs() - 1.0).abs() > TOL_ALGEBRAIC {
            return Err(LinAlgError::NotUnimodular(det));
        }
        Ok(Self { linear, shift })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            linear: Matrix::identity(n, n),
            shift: Vector::zeros(n),
        }
    }

    /// Pure translation.
    pub fn translation(shift: Vector) -> Self {
        Self {
            linear: Matrix::identity(shift.len(), shift.len()),
            shift,
        }
    }

    /// Point reflection through the origin (`x ↦ -x`).
    pub fn point_reflection(n: usize) -> Self {
        Self {
            linear: -Matrix::identity(n, n),
            shift: Vector::zeros(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn shift(&self) -> &Vector {
        &self.shift
    }

    pub fn det(&self) -> f64 {
        self.linear.clone().determinant()
    }

    /// Applies the motion: `x·linear + shift`.
    pub fn apply(&self, x: &Vector) -> Result<Vector, LinAlgError> {
        if x.len() != self.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        Ok(self.linear.tr_mul(x) + &self.shift)
    }

    /// The composite `x ↦ other(self(x))`.
    pub fn then(&self, other: &Isometry) -> Isometry {
        Isometry {
            linear: &self.linear * &other.linear,
            shift: other.linear.tr_mul(&self.shift) + &other.shift,
        }
    }

    /// Inverse motion; uses `linearᵀ = linear⁻¹`.
    pub fn inverse(&self) -> Isometry {
        let lt = self.linear.transpose();
        let shift = -(&self.linear * &self.shift);
        Isometry { linear: lt, shift }
    }
}

/// Convenience wrapper matching the operation contract.
pub fn apply_isometry(g: &Isometry, x: &Vector) -> Result<Vector, LinAlgError> {
    g.apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn identity_fixes_points() {
        let g = Isometry::identity(4);
        let x = Vector::from_vec(vec![0.1, -0.2, 0.3, 7.0]);
        assert_eq!(g.apply(&x).unwrap(), x);
    }

    /// The plane map (x, y) ↦ (1-x, 1-y): point reflection about (1/2, 1/2).
    #[test]
    fn half_turn_about_square_center() {
        let g = Isometry::new(
            -Matrix::identity(2, 2),
            Vector::from_vec(vec![1.0, 1.0]),
        )
        .unwrap();
        let x = Vector::from_vec(vec![0.3, 0.8]);
        let y = g.apply(&x).unwrap();
        assert!((y[0] - 0.7).abs() < 1e-15 && (y[1] - 0.2).abs() < 1e-15);
        assert!((g.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn preserves_distances() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        // Random reflection-containing isometry: permutation with a sign flip.
        let mut linear = Matrix::zeros(3, 3);
        linear[(0, 1)] = 1.0;
        linear[(1, 0)] = -1.0;
        linear[(2, 2)] = -1.0;
        let g = Isometry::new(linear, Vector::from_vec(vec![0.4, -1.0, 2.0])).unwrap();
        assert!((g.det().abs() - 1.0).abs() < 1e-12);
        for _ in 0..100 {
            let p = Vector::from_fn(3, |_, _| rng.gen_range(-5.0..5.0));
            let q = Vector::from_fn(3, |_, _| rng.gen_range(-5.0..5.0));
            let d0 = (&p - &q).norm();
            let d1 = (g.apply(&p).unwrap() - g.apply(&q).unwrap()).norm();
            assert!((d0 - d1).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_and_composition() {
        let mut linear = Matrix::zeros(2, 2);
        linear[(0, 1)] = 1.0;
        linear[(1, 0)] = 1.0;
        let g = Isometry::new(linear, Vector::from_vec(vec![1.0, 0.0])).unwrap();
        let x = Vector::from_vec(vec![0.25, -0.75]);
        let back = g.inverse().apply(&g.apply(&x).unwrap()).unwrap();
        assert!((back - &x).amax() < 1e-14);
        let gg = g.then(&g.inverse());
        assert!((gg.apply(&x).unwrap() - &x).amax() < 1e-14);
    }

    #[test]
    fn rejects_bad_inputs() {
        let skew = Matrix::from_row_slice(2, 2, &[1.0, 0.2, 0.0, 1.0]);
        assert!(matches!(
            Isometry::new(skew, Vector::zeros(2)),
            Err(LinAlgError::NotOrthogonal(_))
        ));
        let g = Isometry::identity(3);
        assert!(g.apply(&Vector::zeros(2)).is_err());
    }
}
