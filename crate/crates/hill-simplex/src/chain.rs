use crate::simplex::{ab_constants, SimplexError};
use linalg_core::Vector;

/// Matrix-free λ-coordinate geometry of Q_n(w).
///
/// The generator matrix is (a-b)I + bJ, so its inverse is again of that
/// shape; λ-coordinates, membership, and boundary clamping are all O(n)
/// passes. This is the form the recursive brick map uses per stage.
#[derive(Clone, Copy, Debug)]
pub struct LambdaChain {
    n: usize,
    a: f64,
    b: f64,
    inv_diag: f64,
    inv_mix: f64,
}

impl LambdaChain {
    pub fn new(n: usize, w: f64) -> Result<Self, SimplexError> {
        let (a, b) = ab_constants(n, w)?;
        let width = a - b;
        let axial = a + (n as f64 - 1.0) * b;
        Ok(Self {
            n,
            a,
            b,
            inv_diag: 1.0 / width,
            inv_mix: -b / (width * axial),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `a + (n-1)b = √(1 - w(n-1))`, the coordinate-sum step of the tiling.
    pub fn axial_step(&self) -> f64 {
        self.a + (self.n as f64 - 1.0) * self.b
    }

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

    pub fn point_from_lambda(&self, lambda: &Vector) -> Vector {
        let s: f64 = lambda.sum();
        Vector::from_fn(self.n, |i, _| (self.a - self.b) * lambda[i] + self.b * s)
    }

    /// Worst violation of the chain `1 ≥ λ_1 ≥ … ≥ λ_n ≥ 0` (0 when inside).
    pub fn violation(&self, x: &Vector) -> Result<f64, SimplexError> {
        let l = self.lambda(x)?;
        let mut worst = (l[0] - 1.0).max(-l[self.n - 1]).max(0.0);
        for i in 1..self.n {
            worst = worst.max(l[i] - l[i - 1]);
        }
        Ok(worst)
    }

    pub fn contains(&self, x: &Vector, tol: f64) -> Result<bool, SimplexError> {
        Ok(self.violation(x)? <= tol)
    }

    /// Projects points drifting at most `tol` outside back onto the simplex.
    pub fn clamp_into(&self, x: &Vector, tol: f64) -> Result<Option<Vector>, SimplexError> {
        let worst = self.violation(x)?;
        if worst > tol.max(0.0) {
            return Ok(None);
        }
        if worst <= 0.0 {
            return Ok(Some(x.clone()));
        }
        let mut l = self.lambda(x)?;
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
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::make_simplex;

    #[test]
    fn agrees_with_simplex_spec() {
        for (n, w) in [(3usize, 0.0), (5, 0.12), (2, -0.6)] {
            let chain = LambdaChain::new(n, w).unwrap();
            let spec = make_simplex(n, w).unwrap();
            for x in crate::sample(&spec, 50, 3) {
                let via_chain = chain.lambda(&x).unwrap();
                let via_spec = spec.lambda(&x).unwrap();
                assert!((via_chain - via_spec).amax() < 1e-14);
                assert!(chain.contains(&x, 1e-9).unwrap());
            }
        }
    }
}
