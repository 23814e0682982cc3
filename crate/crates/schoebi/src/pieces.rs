use crate::SchoebiError;
use hill_simplex::{make_simplex, LambdaChain};
use linalg_core::{shift_map_isometry, Isometry, ShiftMapParams, Vector};
use polytope_mini::{HPolytope, Halfspace};

/// One slab piece of the Theorem-2 dissection with its reassembled image.
#[derive(Clone, Debug)]
pub struct StagePiece {
    pub index: usize,
    /// Q_n(w) ∩ {k·L ≤ Σx ≤ (k+1)·L} in the original position.
    pub piece: HPolytope,
    /// The same piece moved by φ^{-k} into the prism.
    pub reassembled: HPolytope,
}

/// H-representation of Q_n(w) from the λ-chain constraints.
pub fn simplex_hrep(n: usize, w: f64) -> Result<HPolytope, SchoebiError> {
    let spec = make_simplex(n, w)?;
    let chain = LambdaChain::new(n, w)?;
    let _ = spec; // constructed for the range validation side effect
    let lambda_row = |i: usize| -> Vector {
        // λ_i as a linear functional of x: probe with basis vectors.
        let mut row = Vector::zeros(n);
        for j in 0..n {
            let mut e = Vector::zeros(n);
            e[j] = 1.0;
            row[j] = chain.lambda(&e).expect("dimension fixed")[i];
        }
        row
    };
    let mut hs = Vec::with_capacity(n + 1);
    hs.push(Halfspace::new(lambda_row(0), 1.0));
    for i in 0..n - 1 {
        hs.push(Halfspace::new(lambda_row(i + 1) - lambda_row(i), 0.0));
    }
    hs.push(Halfspace::new(-lambda_row(n - 1), 0.0));
    Ok(HPolytope::new(hs))
}

/// The n slab pieces of Q_n(w) together with their φ^{-k} images.
pub fn stage_pieces(n: usize, w: f64) -> Result<Vec<StagePiece>, SchoebiError> {
    let spec = make_simplex(n, w)?;
    let hull = simplex_hrep(n, w)?;
    let step = spec.a() + (n as f64 - 1.0) * spec.b();
    let params = ShiftMapParams::new(n, spec.a(), spec.b())?;
    let ones = Vector::from_element(n, 1.0);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut hs = hull.halfspaces.clone();
        hs.push(Halfspace::new(ones.clone(), (k as f64 + 1.0) * step));
        hs.push(Halfspace::new(-ones.clone(), -(k as f64) * step));
        let piece = HPolytope::new(hs);
        let reassembled = piece.transform(&phi_isometry_power(&params, -(k as i64)));
        out.push(StagePiece {
            index: k,
            piece,
            reassembled,
        });
    }
    Ok(out)
}

/// φ^k as a single isometry.
pub fn phi_isometry_power(params: &ShiftMapParams, k: i64) -> Isometry {
    let base = if k >= 0 {
        shift_map_isometry(params)
    } else {
        shift_map_isometry(params).inverse()
    };
    let mut acc = Isometry::identity(params.n());
    for _ in 0..k.unsigned_abs() {
        acc = acc.then(&base);
    }
    acc
}
