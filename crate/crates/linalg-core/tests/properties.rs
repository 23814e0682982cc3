use linalg_core::{build_m, build_n, mul_row, phi, ShiftMapParams, Vector};
use proptest::prelude::*;

fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0_f64, n)
}

proptest! {
    /// φ^p ∘ φ^q = φ^(p+q) for mixed signs.
    #[test]
    fn phi_composition_law(
        n in 1usize..8,
        p in -6i64..6,
        q in -6i64..6,
        raw in coords(8),
        a in 0.2..1.5_f64,
        b in -0.5..0.1_f64,
    ) {
        let params = ShiftMapParams::new(n, a, b).unwrap();
        let x = Vector::from_vec(raw[..n].to_vec());
        let two_step = phi(&params, &phi(&params, &x, q).unwrap(), p).unwrap();
        let one_step = phi(&params, &x, p + q).unwrap();
        prop_assert!((two_step - one_step).amax() < 1e-12);
    }

    /// φ preserves pairwise distances (its linear part is a permutation).
    #[test]
    fn phi_is_isometric(
        n in 2usize..8,
        power in -5i64..5,
        raw_p in coords(8),
        raw_q in coords(8),
    ) {
        let params = ShiftMapParams::new(n, 1.0, -0.2).unwrap();
        let p = Vector::from_vec(raw_p[..n].to_vec());
        let q = Vector::from_vec(raw_q[..n].to_vec());
        let d0 = (&p - &q).norm();
        let d1 = (phi(&params, &p, power).unwrap() - phi(&params, &q, power).unwrap()).norm();
        prop_assert!((d0 - d1).abs() < 1e-12);
    }

    /// Dropping the axial coordinate of x·M_n and re-expressing in the
    /// (n-1)-dimensional standard basis is exactly multiplication by N_n.
    #[test]
    fn n_matrix_definitional_identity(n in 2usize..10, raw in coords(10)) {
        let x = Vector::from_vec(raw[..n].to_vec());
        let m_n = build_m(n).unwrap();
        let m_prev = build_m(n - 1).unwrap();
        let full = mul_row(&x, &m_n).unwrap();
        let dropped = full.rows(0, n - 1).into_owned();
        let via_m = mul_row(&dropped, &m_prev.transpose()).unwrap();
        let via_n = mul_row(&x, &build_n(n).unwrap()).unwrap();
        prop_assert!((via_m - via_n).amax() < 1e-12);
    }
}
