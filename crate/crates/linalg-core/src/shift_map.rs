use crate::{Isometry, LinAlgError, Matrix, Vector};

/// Parameters of the cyclic shift map
/// `φ: (x_1,…,x_n) ↦ (x_n + a, x_1 + b, …, x_{n-1} + b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShiftMapParams {
    n: usize,
    a: f64,
    b: f64,
}

impl ShiftMapParams {
    /// Requires `a - b > 0` (the wall thickness of the tiled prism).
    pub fn new(n: usize, a: f64, b: f64) -> Result<Self, LinAlgError> {
        if n == 0 {
            return Err(LinAlgError::InvalidDimension(n, 1));
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(LinAlgError::NonFinite);
        }
        if a - b <= 0.0 {
            return Err(LinAlgError::InvalidShiftParams { a, b });
        }
        Ok(Self { n, a, b })
    }

    /// The unit map `φ_1` (a = 1, b = 0): pure cyclic rotation with carry.
    pub fn unit(n: usize) -> Self {
        Self { n, a: 1.0, b: 0.0 }
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

    /// Wall thickness `a - b`.
    pub fn width(&self) -> f64 {
        self.a - self.b
    }

    /// Coordinate-sum increment of one forward application: `a + (n-1)b`.
    pub fn sum_step(&self) -> f64 {
        self.a + (self.n as f64 - 1.0) * self.b
    }

    /// Rescales both shift constants (the map for a scaled copy of the tile).
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            n: self.n,
            a: self.a * s,
            b: self.b * s,
        }
    }
}

/// One forward application of `φ`.
pub fn phi_single(params: &ShiftMapParams, x: &Vector) -> Result<Vector, LinAlgError> {
    phi(params, x, 1)
}

/// Applies `φ^power` (negative powers invert) in O(n) independent of |power|.
///
/// The closed form tracks, for each output slot, which source coordinate
/// lands there and how many times it passed through the first slot (each pass
/// adds `a`, every other hop adds `b`).
pub fn phi(params: &ShiftMapParams, x: &Vector, power: i64) -> Result<Vector, LinAlgError> {
    let mut ops = 0;
    phi_counted(params, x, power, &mut ops)
}

/// [`phi`] with an elementary-operation counter for complexity measurements.
pub fn phi_counted(
    params: &ShiftMapParams,
    x: &Vector,
    power: i64,
    ops: &mut u64,
) -> Result<Vector, LinAlgError> {
    let n = params.n;
    if x.len() != n {
        return Err(LinAlgError::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if power == 0 {
        return Ok(x.clone());
    }
    let p = power.unsigned_abs() as usize;
    let mut out = Vector::zeros(n);
    if power > 0 {
        for j in 0..n {
            let src = (j + n * p.div_ceil(n) - p) % n;
            let wraps = ((src + p) / n) as f64;
            out[j] = x[src] + wraps * params.a + (p as f64 - wraps) * params.b;
        }
    } else {
        for j in 0..n {
            let src = (j + p) % n;
            let wraps = ((j + p) / n) as f64;
            out[j] = x[src] - wraps * params.a - (p as f64 - wraps) * params.b;
        }
    }
    *ops += 4 * n as u64;
    Ok(out)
}

/// `φ` as an isometry: cyclic permutation linear part plus the `(a, b, …, b)`
/// translation.
pub fn shift_map_isometry(params: &ShiftMapParams) -> Isometry {
    let n = params.n;
    let mut linear = Matrix::zeros(n, n);
    for i in 0..n {
        linear[(i, (i + 1) % n)] = 1.0;
    }
    let mut shift = Vector::from_element(n, params.b);
    shift[0] = params.a;
    Isometry::new(linear, shift).expect("cyclic permutation is orthogonal")
}
