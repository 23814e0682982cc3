use crate::{SchoebiError, CLAMP_TOL};
use hill_simplex::{ab_constants, sample, make_simplex, LambdaChain};
use linalg_core::{expand_with_n_transpose, phi_counted, reduce_with_n, ShiftMapParams, Vector};
use std::collections::HashSet;

/// Per-point staged data of Θ: the piece index chosen at each stage and the
/// emitted brick coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct BrickMap {
    pub n: usize,
    /// r_n, r_{n-1}, …, r_2 (stage k keeps 0 ≤ r ≤ k-1).
    pub stage_indices: Vec<usize>,
    /// y_1, …, y_n in brick axis order.
    pub outputs: Vec<f64>,
}

/// Output of one dissection stage.
#[derive(Clone, Debug)]
pub struct StepOutput {
    /// The point passed to the next stage (one dimension lower).
    pub x_next: Vector,
    /// The brick coordinate emitted by this stage.
    pub y: f64,
    /// Which piece of the stage dissection the input was in.
    pub r: usize,
}

/// Side lengths of the brick Π, obtained by unrolling the prism recursion.
///
/// The accumulated cross-section scale starts at √((n-1)/n) and picks up a
/// factor √(k²-1)/k at each stage k; the product of the sides equals 1/n!.
pub fn brick_dimensions(n: usize) -> Result<Vec<f64>, SchoebiError> {
    if n < 2 {
        return Err(SchoebiError::InvalidDimension(2));
    }
    let mut sides = vec![0.0; n];
    sides[n - 1] = 1.0 / (n as f64).sqrt();
    let mut scale = ((n as f64 - 1.0) / n as f64).sqrt();
    for k in (2..n).rev() {
        sides[k - 1] = scale / k as f64;
        let kf = k as f64;
        scale *= (kf * kf - 1.0).sqrt() / kf;
    }
    sides[0] = scale;
    Ok(sides)
}

/// Verifies x ∈ O_n (within the clamp tolerance) and projects drift back in.
fn into_orthoscheme(n: usize, x: &Vector) -> Result<Vector, SchoebiError> {
    if x.len() != n {
        return Err(SchoebiError::Simplex(
            hill_simplex::SimplexError::DimensionMismatch {
                expected: n,
                got: x.len(),
            },
        ));
    }
    // For w = 0 the λ-chain is the coordinate chain itself.
    let mut worst = (x[0] - 1.0).max(-x[n - 1]).max(0.0);
    for i in 1..n {
        worst = worst.max(x[i] - x[i - 1]);
    }
    if worst > CLAMP_TOL {
        return Err(SchoebiError::Domain {
            domain: "O_n",
            tol: CLAMP_TOL,
        });
    }
    if worst <= 0.0 {
        return Ok(x.clone());
    }
    let mut fixed = x.clone();
    let mut prev = 0.0_f64;
    for i in (0..n).rev() {
        fixed[i] = fixed[i].max(prev);
        prev = fixed[i];
    }
    for i in 0..n {
        let cap = if i == 0 { 1.0 } else { fixed[i - 1] };
        fixed[i] = fixed[i].min(cap);
    }
    Ok(fixed)
}

fn stage_a_core(n: usize, x: &Vector, ops: &mut u64) -> Result<(Vector, f64, usize), SchoebiError> {
    let s: f64 = x.sum();
    *ops += n as u64;
    let r = (s.floor() as i64).clamp(0, n as i64 - 1) as usize;
    let params = ShiftMapParams::unit(n);
    let x_prime = phi_counted(&params, x, -(r as i64), ops)?;
    let y = ((s - r as f64) / (n as f64).sqrt()).clamp(0.0, 1.0 / (n as f64).sqrt());
    let x_next = reduce_with_n(&x_prime, ops);
    Ok((x_next, y, r))
}

/// Stage B_k at unit scale on x ∈ P_k: piece index r = ⌊√k·s⌋, reassembly by
/// φ₂^{-r}, emitted coordinate (√k·s - r)/k, and reduction by N_k.
fn stage_b_core(k: usize, x: &Vector, ops: &mut u64) -> Result<(Vector, f64, usize), SchoebiError> {
    let kf = k as f64;
    let (a, b) = ab_constants(k, 1.0 / kf)?;
    let s: f64 = x.sum();
    *ops += k as u64;
    let t = kf.sqrt() * s;
    let r = (t.floor() as i64).clamp(0, k as i64 - 1) as usize;
    let params = ShiftMapParams::new(k, a, b)?;
    let x_prime = phi_counted(&params, x, -(r as i64), ops)?;
    let y = ((t - r as f64) / kf).clamp(0.0, 1.0 / kf);
    let x_next = reduce_with_n(&x_prime, ops);
    Ok((x_next, y, r))
}

/// Stage A of the recursion: dissect O_n into the prism over P_{n-1}.
///
/// Returns x'·N_n (the next-stage point in the scaled standard coordinates of
/// P_{n-1}), the axial brick coordinate y_n = frac(Σx)/√n, and the piece
/// index r = ⌊Σx⌋.
pub fn step_a(n: usize, x: &Vector) -> Result<StepOutput, SchoebiError> {
    if n < 2 {
        return Err(SchoebiError::InvalidDimension(2));
    }
    let x = into_orthoscheme(n, x)?;
    let mut ops = 0;
    let (x_next, y, r) = stage_a_core(n, &x, &mut ops)?;
    Ok(StepOutput { x_next, y, r })
}

/// Stage B_k on a unit-scale point of P_k (scale bookkeeping is the caller's,
/// matching the convention of ignoring the accumulated constants).
pub fn step_b(k: usize, x: &Vector) -> Result<StepOutput, SchoebiError> {
    if k < 2 {
        return Err(SchoebiError::InvalidDimension(2));
    }
    let chain = LambdaChain::new(k, 1.0 / k as f64)?;
    let x = chain
        .clamp_into(x, CLAMP_TOL)?
        .ok_or(SchoebiError::Domain {
            domain: "P_k",
            tol: CLAMP_TOL,
        })?;
    let mut ops = 0;
    let (x_next, y, r) = stage_b_core(k, &x, &mut ops)?;
    Ok(StepOutput { x_next, y, r })
}

fn theta_core(n: usize, x: &Vector, ops: &mut u64) -> Result<BrickMap, SchoebiError> {
    if n < 2 {
        return Err(SchoebiError::InvalidDimension(2));
    }
    let x = into_orthoscheme(n, x)?;
    let mut outputs = vec![0.0; n];
    let mut indices = Vec::with_capacity(n - 1);

    let (mut z, y_n, r_n) = stage_a_core(n, &x, ops)?;
    outputs[n - 1] = y_n;
    indices.push(r_n);
    let mut scale = ((n as f64 - 1.0) / n as f64).sqrt();

    for k in (2..n).rev() {
        // Unit-scale copy for the literal stage map.
        let unit = &z / scale;
        *ops += k as u64;
        let chain = LambdaChain::new(k, 1.0 / k as f64)?;
        let unit = chain
            .clamp_into(&unit, CLAMP_TOL)?
            .ok_or(SchoebiError::Domain {
                domain: "P_k",
                tol: CLAMP_TOL,
            })?;
        *ops += 4 * k as u64;
        let (z_unit, y_unit, r) = stage_b_core(k, &unit, ops)?;
        outputs[k - 1] = scale * y_unit;
        indices.push(r);
        z = z_unit * scale;
        *ops += k as u64;
        let kf = k as f64;
        scale *= (kf * kf - 1.0).sqrt() / kf;
    }

    outputs[0] = z[0].clamp(0.0, scale);
    Ok(BrickMap {
        n,
        stage_indices: indices,
        outputs,
    })
}

/// The bijection Θ: O_n → Π, with the staged indices retained.
pub fn theta_trace(n: usize, x: &Vector) -> Result<BrickMap, SchoebiError> {
    let mut ops = 0;
    theta_core(n, x, &mut ops)
}

/// Θ(x) as a plain brick point.
pub fn theta(n: usize, x: &Vector) -> Result<Vector, SchoebiError> {
    Ok(Vector::from_vec(theta_trace(n, x)?.outputs))
}

/// Θ(x) together with the measured elementary-operation count (loop trips of
/// the linear passes), for the quadratic-complexity check.
pub fn theta_with_ops(n: usize, x: &Vector) -> Result<(Vector, u64), SchoebiError> {
    let mut ops = 0;
    let map = theta_core(n, x, &mut ops)?;
    Ok((Vector::from_vec(map.outputs), ops))
}

/// Θ⁻¹: reconstructs the orthoscheme point from brick coordinates, recovering
/// each stage's piece index by the counting rules rather than stored state.
pub fn theta_inverse(n: usize, y: &Vector) -> Result<Vector, SchoebiError> {
    if n < 2 {
        return Err(SchoebiError::InvalidDimension(2));
    }
    if y.len() != n {
        return Err(SchoebiError::Simplex(
            hill_simplex::SimplexError::DimensionMismatch {
                expected: n,
                got: y.len(),
            },
        ));
    }
    let sides = brick_dimensions(n)?;
    let mut clamped = y.clone();
    for i in 0..n {
        if clamped[i] < -CLAMP_TOL || clamped[i] > sides[i] + CLAMP_TOL {
            return Err(SchoebiError::Domain {
                domain: "brick",
                tol: CLAMP_TOL,
            });
        }
        clamped[i] = clamped[i].clamp(0.0, sides[i]);
    }

    // Scales λ_k of the unit stage copies: sides[k-1] = λ_k / k for the B
    // stages, and λ_1 = sides[0].
    let mut ops = 0;
    let mut z = Vector::from_vec(vec![clamped[0]]);
    for k in 2..n {
        let kf = k as f64;
        let lambda_k = kf * sides[k - 1];
        let (a, b) = ab_constants(k, 1.0 / kf)?;
        let mut x_prime = expand_with_n_transpose(&z, &mut ops);
        let shift = clamped[k - 1] / kf.sqrt();
        for i in 0..k {
            x_prime[i] += shift;
        }
        ops += k as u64;
        // r is the number of components below b·√k·Σ (scale-free rule).
        let total: f64 = x_prime.sum();
        let threshold = b * kf.sqrt() * total;
        let r = x_prime.iter().filter(|v| **v < threshold).count().min(k - 1);
        let params = ShiftMapParams::new(k, a, b)?.scaled(lambda_k);
        z = phi_counted(&params, &x_prime, r as i64, &mut ops)?;
    }

    // Stage A inverse: r is the number of strictly negative components.
    let mut x_prime = expand_with_n_transpose(&z, &mut ops);
    let shift = clamped[n - 1] / (n as f64).sqrt();
    for i in 0..n {
        x_prime[i] += shift;
    }
    let r = x_prime.iter().filter(|v| **v < 0.0).count().min(n - 1);
    let params = ShiftMapParams::unit(n);
    let x = phi_counted(&params, &x_prime, r as i64, &mut ops)?;
    into_orthoscheme(n, &x)
}

/// Empirical census of distinct stage-index vectors over uniform samples of
/// O_n: the number of pieces of the recursive dissection actually observed.
/// The exact count is open; the result never exceeds n!.
pub fn count_pieces_recursive(
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<usize, SchoebiError> {
    let spec = make_simplex(n, 0.0)?;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for x in sample(&spec, samples, seed) {
        seen.insert(theta_trace(n, &x)?.stage_indices);
    }
    Ok(seen.len())
}
