use crate::{SchoebiError, CLAMP_TOL};
use hill_simplex::{ab_constants, make_simplex, simplex_volume, w_upper_bound, SimplexSpec};
use linalg_core::{phi, phi_single, Matrix, ShiftMapParams, Vector};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// The prism c·P_{n-1} × I_ℓ that Q_n(w) dissects into.
#[derive(Clone, Debug)]
pub struct PrismSpec {
    pub n: usize,
    pub w: f64,
    /// Cross-section scale c = √((n-1)(w+1)/n).
    pub cross_scale: f64,
    /// Axial length ℓ = √((1-w(n-1))/n).
    pub length: f64,
    /// Unit axis direction (1,…,1)/√n.
    pub axis: Vector,
    /// Rows: the n vertices of the base cross-section (a copy of c·P_{n-1})
    /// in the hyperplane Σx = 0; row 0 is the origin.
    pub base_vertices: Matrix,
}

/// Theorem-2 prism for general (n, w).
pub fn prism_spec(n: usize, w: f64) -> Result<PrismSpec, SchoebiError> {
    if n < 2 {
        return Err(SchoebiError::InvalidDimension(2));
    }
    ab_constants(n, w)?;
    let nf = n as f64;
    let cross_scale = ((nf - 1.0) * (w + 1.0) / nf).sqrt();
    let length = ((1.0 - w * (nf - 1.0)) / nf).sqrt();
    let root_width = (1.0 + w).sqrt();
    // Cross-section vertices: 0 and √(w+1)·(j of (n-j)/n, then n-j of -j/n).
    let base_vertices = Matrix::from_fn(n, n, |i, j| {
        if i == 0 {
            0.0
        } else {
            let row = i as f64;
            if (j as f64) < row {
                root_width * (nf - row) / nf
            } else {
                root_width * (-row) / nf
            }
        }
    });
    let axis = Vector::from_element(n, 1.0 / nf.sqrt());
    let spec = PrismSpec {
        n,
        w,
        cross_scale,
        length,
        axis,
        base_vertices,
    };
    debug_assert!(spec.base_vertices.row_iter().all(|r| r.sum().abs() < 1e-9));
    Ok(spec)
}

impl PrismSpec {
    /// (n-1)-volume of the base cross-section, via the Gram determinant of
    /// its edge vectors.
    pub fn base_volume(&self) -> f64 {
        let n = self.n;
        let edges = DMatrix::from_fn(n - 1, n, |i, j| self.base_vertices[(i + 1, j)]);
        let gram = &edges * edges.transpose();
        let mut factorial = 1.0;
        for k in 2..n {
            factorial *= k as f64;
        }
        gram.determinant().abs().sqrt() / factorial
    }

    /// Full prism volume c^{n-1}·vol(P_{n-1})·ℓ (equals vol(Q_n(w))).
    pub fn volume(&self) -> f64 {
        self.base_volume() * self.length
    }
}

/// The n = 3 prism with the directly quoted constants
/// c = √(2(w+1)/3), ℓ = √((1-2w)/3).
pub fn schoebi3d_prism(w: f64) -> Result<PrismSpec, SchoebiError> {
    if !w.is_finite() || w <= -1.0 || w >= 0.5 {
        return Err(SchoebiError::Range("w must lie in (-1, 1/2) for n = 3"));
    }
    let spec = prism_spec(3, w)?;
    let c = (2.0 * (w + 1.0) / 3.0).sqrt();
    let ell = ((1.0 - 2.0 * w) / 3.0).sqrt();
    if (spec.cross_scale - c).abs() > 1e-12 || (spec.length - ell).abs() > 1e-12 {
        return Err(SchoebiError::Verification(format!(
            "three-dimensional constants disagree: ({}, {}) vs ({c}, {ell})",
            spec.cross_scale, spec.length
        )));
    }
    Ok(spec)
}

/// Wall inequalities of the infinite prism:
/// `x_1 ≥ x_2 ≥ … ≥ x_n ≥ x_1 - (a-b)` within `tol`.
pub fn prism_walls_contains(params: &ShiftMapParams, x: &Vector, tol: f64) -> bool {
    let n = params.n();
    if x.len() != n {
        return false;
    }
    for i in 1..n {
        if x[i] > x[i - 1] + tol {
            return false;
        }
    }
    x[n - 1] >= x[0] - params.width() - tol
}

/// One stage of the Theorem-2 dissection: picks the slab index
/// r = ⌊Σx / √(1-w(n-1))⌋ and reassembles by φ^{-r} into the prism.
pub fn dissect_stage(n: usize, w: f64, x: &Vector) -> Result<(usize, Vector), SchoebiError> {
    let spec = make_simplex(n, w)?;
    let x = spec
        .clamp_into(x, CLAMP_TOL)?
        .ok_or(SchoebiError::Domain {
            domain: "Q_n(w)",
            tol: CLAMP_TOL,
        })?;
    let step = spec.a() + (n as f64 - 1.0) * spec.b();
    let r = ((x.sum() / step).floor() as i64).clamp(0, n as i64 - 1) as usize;
    let params = ShiftMapParams::new(n, spec.a(), spec.b())?;
    let reassembled = phi(&params, &x, -(r as i64))?;
    Ok((r, reassembled))
}

/// A window of the φ-orbit of the origin: the points u_i whose consecutive
/// (n+1)-subsets span the copies of Q_n(w) tiling the infinite prism.
#[derive(Clone, Debug)]
pub struct TilingTrajectory {
    pub params: ShiftMapParams,
    pub i_min: i64,
    pub points: Vec<Vector>,
}

impl TilingTrajectory {
    pub fn point(&self, i: i64) -> Option<&Vector> {
        usize::try_from(i - self.i_min).ok().and_then(|k| self.points.get(k))
    }

    /// Vertex set of Q^{(i)} = hull(u_i, …, u_{i+n}).
    pub fn simplex_vertices(&self, i: i64) -> Option<&[Vector]> {
        let start = usize::try_from(i - self.i_min).ok()?;
        let n = self.params.n();
        if start + n >= self.points.len() {
            return None;
        }
        Some(&self.points[start..=start + n])
    }
}

/// Builds u_i for i in [i_min, i_max] and self-checks the tiling claims:
/// consecutive simplices are congruent copies of Q_n(w) sharing a face, and
/// sampled interiors of distinct copies are disjoint.
pub fn build_tiling_window(
    n: usize,
    w: f64,
    i_min: i64,
    i_max: i64,
) -> Result<TilingTrajectory, SchoebiError> {
    if i_min >= i_max {
        return Err(SchoebiError::Range("window requires i_min < i_max"));
    }
    let (a, b) = ab_constants(n, w)?;
    let params = ShiftMapParams::new(n, a, b)?;
    let mut points = Vec::with_capacity((i_max - i_min + 1) as usize);
    for i in i_min..=i_max {
        points.push(phi(&params, &Vector::zeros(n), i)?);
    }
    let trajectory = TilingTrajectory {
        params,
        i_min,
        points,
    };
    verify_trajectory(&trajectory, n, w, 10_000, 0)?;
    Ok(trajectory)
}

fn verify_trajectory(
    t: &TilingTrajectory,
    n: usize,
    w: f64,
    mc_samples: usize,
    seed: u64,
) -> Result<(), SchoebiError> {
    let spec = make_simplex(n, w)?;
    let reference = spec.vertex_set();

    // Successive orbit points are single φ-steps.
    for k in 1..t.points.len() {
        let stepped = phi_single(&t.params, &t.points[k - 1])?;
        if (&stepped - &t.points[k]).amax() > 1e-12 {
            return Err(SchoebiError::Verification("orbit step mismatch".into()));
        }
    }

    let i_last = t.i_min + t.points.len() as i64 - 1 - n as i64;
    if i_last < t.i_min {
        return Ok(()); // window too small to hold a full simplex
    }

    // Congruence of every window simplex with the standard Q_n(w).
    for i in t.i_min..=i_last {
        let verts = t.simplex_vertices(i).expect("window bounds checked");
        if !congruent_point_sets(verts, &reference, 1e-9) {
            return Err(SchoebiError::Verification(format!(
                "window simplex {i} not congruent to Q_n(w)"
            )));
        }
    }

    // Shared faces: Q^{(i)} ∩ Q^{(i+1)} ⊇ hull(u_{i+1}, …, u_{i+n}).
    for i in t.i_min..i_last {
        let cur = t.simplex_vertices(i).expect("bounds");
        let next = t.simplex_vertices(i + 1).expect("bounds");
        for shared in &cur[1..] {
            if !next.iter().any(|v| (v - shared).amax() < 1e-12) {
                return Err(SchoebiError::Verification("shared face mismatch".into()));
            }
        }
    }

    // Monte Carlo interior disjointness over sampled pairs.
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let count = (i_last - t.i_min + 1) as usize;
    if count >= 2 && mc_samples > 0 {
        let per_pair = (mc_samples / (count * 2)).max(64);
        for i in t.i_min..=i_last {
            for j in [i + 1, i_min_or(i + 2, i_last)] {
                if j > i_last || j == i {
                    continue;
                }
                let verts_i = t.simplex_vertices(i).expect("bounds").to_vec();
                for _ in 0..per_pair {
                    let p = sample_simplex_hull(&verts_i, &mut rng);
                    if barycentric_interior(t, j, &p, 1e-9)? {
                        return Err(SchoebiError::Verification(format!(
                            "interiors of copies {i} and {j} overlap"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

fn i_min_or(candidate: i64, cap: i64) -> i64 {
    candidate.min(cap)
}

/// Uniform point of the hull of n+1 affinely independent points
/// (normalized exponential weights).
fn sample_simplex_hull<R: Rng>(verts: &[Vector], rng: &mut R) -> Vector {
    let weights: Vec<f64> = verts
        .iter()
        .map(|_| -rng.gen_range(1e-12..1.0_f64).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    let mut p = Vector::zeros(verts[0].len());
    for (wgt, v) in weights.iter().zip(verts) {
        p += v * (*wgt / total);
    }
    p
}

/// Is p strictly interior to the window simplex j?
fn barycentric_interior(
    t: &TilingTrajectory,
    j: i64,
    p: &Vector,
    tol: f64,
) -> Result<bool, SchoebiError> {
    let verts = match t.simplex_vertices(j) {
        Some(v) => v,
        None => return Ok(false),
    };
    let n = p.len();
    let base = &verts[0];
    let edges = Matrix::from_fn(n, n, |r, c| verts[r + 1][c] - base[c]);
    let rhs = p - base;
    // Row convention: p - base = μ·E, so solve Eᵀ μ = rhs.
    let solved = edges.transpose().lu().solve(&rhs);
    let mu = match solved {
        Some(m) => m,
        None => return Ok(false),
    };
    let sum: f64 = mu.sum();
    Ok(mu.iter().all(|m| *m > tol) && sum < 1.0 - tol)
}

fn congruent_point_sets(a: &[Vector], b: &[Vector], tol: f64) -> bool {
    use polytope_mini::{congruent, VPolytope};
    congruent(
        &VPolytope::new(a.to_vec()),
        &VPolytope::new(b.to_vec()),
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use hill_simplex::sample;

    fn vecf(v: &[f64]) -> Vector {
        Vector::from_vec(v.to_vec())
    }

    #[test]
    fn theorem_constants() {
        for (n, w) in [(2usize, 0.0), (3, -0.5), (4, 0.2), (5, 0.1)] {
            let p = prism_spec(n, w).unwrap();
            let nf = n as f64;
            assert_abs_diff_eq!(
                p.cross_scale,
                ((nf - 1.0) * (w + 1.0) / nf).sqrt(),
                epsilon = 1e-15
            );
            assert_abs_diff_eq!(
                p.length,
                ((1.0 - w * (nf - 1.0)) / nf).sqrt(),
                epsilon = 1e-15
            );
            // Volume matches Q_n(w): the defining property of ℓ.
            assert_abs_diff_eq!(
                p.volume(),
                simplex_volume(n, w).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn base_is_scaled_p_cross_section() {
        // The base edge lengths match c·P_{n-1}: unit edges of P_{n-1} times c.
        let p = prism_spec(4, 0.3).unwrap();
        let rows: Vec<Vector> = linalg_core::rows_to_points(&p.base_vertices);
        let (standard, _, _) = hill_simplex::pn_variants(3).unwrap();
        let expect: Vec<Vector> = standard
            .vertex_set()
            .iter()
            .map(|v| v * p.cross_scale)
            .collect();
        assert!(congruent_point_sets(&rows, &expect, 1e-9));
    }

    #[test]
    fn schoebi3d_matches_generic() {
        let p = schoebi3d_prism(0.0).unwrap();
        assert_abs_diff_eq!(p.cross_scale, (2.0_f64 / 3.0).sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(p.length, 1.0 / 3.0_f64.sqrt(), epsilon = 1e-15);
        // ℓ → 0 as w → 1/2.
        let thin = schoebi3d_prism(0.499_999).unwrap();
        assert!(thin.length < 1e-3);
        assert!(schoebi3d_prism(0.5).is_err());
        for i in 0..10 {
            let w = -0.9 + 0.13 * i as f64;
            let a = schoebi3d_prism(w).unwrap();
            let b = prism_spec(3, w).unwrap();
            assert_abs_diff_eq!(a.cross_scale, b.cross_scale, epsilon = 1e-12);
            assert_abs_diff_eq!(a.length, b.length, epsilon = 1e-12);
        }
    }

    #[test]
    fn walls_examples() {
        let (a, b) = ab_constants(4, 0.0).unwrap();
        let params = ShiftMapParams::new(4, a, b).unwrap();
        for t in [-2.0, 0.0, 0.7] {
            assert!(prism_walls_contains(
                &params,
                &Vector::from_element(4, t),
                1e-12
            ));
        }
        assert!(prism_walls_contains(
            &params,
            &vecf(&[1.0, 0.0, 0.0, 0.0]),
            1e-12
        ));
        assert!(!prism_walls_contains(
            &params,
            &vecf(&[1.0, 0.0, 0.0, -0.1]),
            1e-12
        ));
    }

    #[test]
    fn vertices_satisfy_walls() {
        for (n, w) in [(3usize, 0.0), (4, 0.2), (5, -0.5)] {
            let spec = make_simplex(n, w).unwrap();
            let params = ShiftMapParams::new(n, spec.a(), spec.b()).unwrap();
            for v in spec.vertex_set() {
                assert!(prism_walls_contains(&params, &v, 1e-9), "n={n} w={w}");
            }
        }
    }

    #[test]
    fn dissect_stage_examples() {
        let (r, y) = dissect_stage(3, 0.0, &Vector::zeros(3)).unwrap();
        assert_eq!(r, 0);
        assert!(y.amax() < 1e-15);

        let (r, y) = dissect_stage(3, 0.0, &vecf(&[0.9, 0.5, 0.1])).unwrap();
        assert_eq!(r, 1);
        assert!((y - vecf(&[0.5, 0.1, -0.1])).amax() < 1e-14);

        // Apex clamps to the last piece.
        let spec = make_simplex(4, 0.25).unwrap();
        let apex = linalg_core::row_of(spec.vertex_matrix(), 3);
        let (r, y) = dissect_stage(4, 0.25, &apex).unwrap();
        assert_eq!(r, 3);
        let step = spec.a() + 3.0 * spec.b();
        assert_abs_diff_eq!(y.sum(), step, epsilon = 1e-12);

        assert!(dissect_stage(3, 0.0, &vecf(&[0.1, 0.9, 0.2])).is_err());
    }

    #[test]
    fn dissect_stage_lands_in_prism_segment() {
        for (n, w) in [(3usize, 0.0), (4, 0.1), (5, -0.5)] {
            let spec = make_simplex(n, w).unwrap();
            let params = ShiftMapParams::new(n, spec.a(), spec.b()).unwrap();
            let step = spec.a() + (n as f64 - 1.0) * spec.b();
            for x in sample(&spec, 300, 4) {
                let (r, y) = dissect_stage(n, w, &x).unwrap();
                assert!(r < n);
                assert!(prism_walls_contains(&params, &y, 1e-9));
                assert!(y.sum() > -1e-9 && y.sum() < step + 1e-9);
                // Exact reassembly: φ^r undoes the move.
                let back = phi(&params, &y, r as i64).unwrap();
                assert!((back - &x).amax() < 1e-12);
            }
        }
    }

    #[test]
    fn tiling_window_checks_pass() {
        for (n, w) in [(2usize, 0.0), (3, 0.2), (4, -0.4)] {
            let t = build_tiling_window(n, w, -2, 6).unwrap();
            let (a, b) = ab_constants(n, w).unwrap();
            // Table rows: u_{-1} = (-b, …, -b, -a), u_n = (a+(n-1)b)·1.
            let u_minus = t.point(-1).unwrap();
            for j in 0..n - 1 {
                assert_abs_diff_eq!(u_minus[j], -b, epsilon = 1e-12);
            }
            assert_abs_diff_eq!(u_minus[n - 1], -a, epsilon = 1e-12);
            let u_n = t.point(n as i64).unwrap();
            let diag = a + (n as f64 - 1.0) * b;
            for j in 0..n {
                assert_abs_diff_eq!(u_n[j], diag, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn window_simplex_volume_matches_formula() {
        let n = 4;
        let w = 0.15;
        let t = build_tiling_window(n, w, 0, 6).unwrap();
        let verts = t.simplex_vertices(1).unwrap();
        let base = &verts[0];
        let edges = Matrix::from_fn(n, n, |r, c| verts[r + 1][c] - base[c]);
        let vol = edges.determinant().abs() / 24.0;
        assert_abs_diff_eq!(vol, simplex_volume(n, w).unwrap(), epsilon = 1e-9);
    }
}
