use crate::SimplexSpec;
use linalg_core::Vector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Draws `count` i.i.d. uniform points of the simplex.
///
/// Uniform λ-chains come from sorting n uniforms descending (order
/// statistics); mapping through the generator matrix preserves uniformity up
/// to the constant Jacobian. Deterministic for a given seed.
pub fn sample(spec: &SimplexSpec, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    sample_with(spec, count, &mut rng)
}

/// Sampling from a caller-provided stream, for composing with other draws.
pub fn sample_with<R: Rng>(spec: &SimplexSpec, count: usize, rng: &mut R) -> Vec<Vector> {
    let n = spec.n();
    let mut out = Vec::with_capacity(count);
    let mut lambda = vec![0.0_f64; n];
    for _ in 0..count {
        for l in lambda.iter_mut() {
            *l = rng.gen_range(0.0..1.0);
        }
        lambda.sort_by(|x, y| y.partial_cmp(x).expect("finite uniforms"));
        out.push(spec.point_from_lambda(&Vector::from_vec(lambda.clone())));
    }
    out
}
