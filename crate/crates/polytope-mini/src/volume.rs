use crate::vrep::affine_rank;
use crate::{enumerate_vertices, supporting_halfspaces, Enumeration, HPolytope, PolytopeError, VPolytope, VERTEX_TOL};
use linalg_core::{Matrix, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug)]
pub enum VolumeMode {
    /// Fan triangulation over the face lattice; exact up to float rounding.
    Exact,
    /// Bounding-box rejection sampling with a reported standard error.
    MonteCarlo { samples: u64 },
}

#[derive(Clone, Copy, Debug)]
pub struct VolumeEstimate {
    pub value: f64,
    /// Standard error when estimated by Monte Carlo.
    pub std_err: Option<f64>,
    /// Set when the feasible set is dimension-deficient (volume 0).
    pub degenerate: bool,
}

/// Volume of an H-polytope.
pub fn volume_h(p: &HPolytope, mode: VolumeMode, seed: u64) -> Result<VolumeEstimate, PolytopeError> {
    match enumerate_vertices(p)? {
        Enumeration::Empty => Ok(VolumeEstimate {
            value: 0.0,
            std_err: None,
            degenerate: false,
        }),
        Enumeration::Unbounded => Err(PolytopeError::Unbounded),
        Enumeration::Bounded(v) => volume_of(p, &v, mode, seed),
    }
}

/// Volume of a V-polytope; supporting halfspaces are derived by brute force.
pub fn volume_v(v: &VPolytope, mode: VolumeMode, seed: u64) -> Result<VolumeEstimate, PolytopeError> {
    let d = v.dim();
    if d == 0 || d > 6 {
        return Err(PolytopeError::DimensionOutOfRange(d));
    }
    if v.affine_rank(VERTEX_TOL) < d {
        return Ok(VolumeEstimate {
            value: 0.0,
            std_err: None,
            degenerate: true,
        });
    }
    let h = supporting_halfspaces(v)?;
    volume_of(&h, v, mode, seed)
}

fn volume_of(
    h: &HPolytope,
    v: &VPolytope,
    mode: VolumeMode,
    seed: u64,
) -> Result<VolumeEstimate, PolytopeError> {
    let d = v.dim();
    if v.vertices.len() < d + 1 || v.affine_rank(VERTEX_TOL) < d {
        return Ok(VolumeEstimate {
            value: 0.0,
            std_err: None,
            degenerate: true,
        });
    }
    match mode {
        VolumeMode::Exact => {
            let mut total = 0.0;
            let mut factorial = 1.0;
            for k in 2..=d {
                factorial *= k as f64;
            }
            for simplex in triangulate(h, v) {
                let base = &v.vertices[simplex[0]];
                let edges = Matrix::from_fn(d, d, |r, c| v.vertices[simplex[r + 1]][c] - base[c]);
                total += edges.determinant().abs();
            }
            Ok(VolumeEstimate {
                value: total / factorial,
                std_err: None,
                degenerate: false,
            })
        }
        VolumeMode::MonteCarlo { samples } => {
            let (lo, hi) = v.bounding_box().ok_or(PolytopeError::NoVertices)?;
            let mut box_vol = 1.0;
            for i in 0..d {
                box_vol *= hi[i] - lo[i];
            }
            if box_vol <= 0.0 {
                return Ok(VolumeEstimate {
                    value: 0.0,
                    std_err: Some(0.0),
                    degenerate: true,
                });
            }
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut hits = 0u64;
            let mut x = Vector::zeros(d);
            for _ in 0..samples {
                for i in 0..d {
                    x[i] = rng.gen_range(lo[i]..hi[i]);
                }
                if h.contains(&x, 0.0) {
                    hits += 1;
                }
            }
            let p_hat = hits as f64 / samples as f64;
            let se = box_vol * (p_hat * (1.0 - p_hat) / samples as f64).sqrt();
            Ok(VolumeEstimate {
                value: box_vol * p_hat,
                std_err: Some(se),
                degenerate: false,
            })
        }
    }
}

/// Vertex index sets of the facets, grouped by their tight halfspace.
///
/// Returns (halfspace index, vertex indices) for every halfspace whose tight
/// set spans dimension d-1. Duplicated geometric facets (repeated constraint
/// rows) are collapsed.
pub fn facet_vertex_sets(h: &HPolytope, v: &VPolytope) -> Vec<(usize, Vec<usize>)> {
    let d = v.dim();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for (hi, hs) in h.halfspaces.iter().enumerate() {
        let tight: Vec<usize> = (0..v.vertices.len())
            .filter(|&i| hs.slack(&v.vertices[i]).abs() <= VERTEX_TOL)
            .collect();
        if tight.len() < d {
            continue;
        }
        let pts: Vec<Vector> = tight.iter().map(|&i| v.vertices[i].clone()).collect();
        if affine_rank(&pts, VERTEX_TOL) != d - 1 {
            continue;
        }
        if seen.insert(tight.clone()) {
            out.push((hi, tight));
        }
    }
    out
}

/// Fan triangulation over the face lattice: each face is fanned from its
/// first vertex over the sub-faces avoiding that vertex.
fn triangulate(h: &HPolytope, v: &VPolytope) -> Vec<Vec<usize>> {
    let d = v.dim();
    let tight_sets: Vec<Vec<usize>> = h
        .halfspaces
        .iter()
        .map(|hs| {
            (0..v.vertices.len())
                .filter(|&i| hs.slack(&v.vertices[i]).abs() <= VERTEX_TOL)
                .collect()
        })
        .collect();
    let all: Vec<usize> = (0..v.vertices.len()).collect();
    face_simplices(&all, d, &tight_sets, v)
}

fn face_simplices(
    face: &[usize],
    k: usize,
    tight_sets: &[Vec<usize>],
    v: &VPolytope,
) -> Vec<Vec<usize>> {
    if face.len() == k + 1 {
        return vec![face.to_vec()];
    }
    if k == 0 {
        return vec![vec![face[0]]];
    }
    if k == 1 {
        // An edge's vertex set is its two endpoints.
        return vec![vec![face[0], *face.last().expect("nonempty face")]];
    }
    let apex = face[0];
    let mut sub_faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for tight in tight_sets {
        let t: Vec<usize> = intersect_sorted(face, tight);
        if t.len() < k || t.contains(&apex) {
            continue;
        }
        let pts: Vec<Vector> = t.iter().map(|&i| v.vertices[i].clone()).collect();
        if affine_rank(&pts, VERTEX_TOL) == k - 1 {
            sub_faces.insert(t);
        }
    }
    let mut out = Vec::new();
    for sub in sub_faces {
        for mut s in face_simplices(&sub, k - 1, tight_sets, v) {
            let mut simplex = Vec::with_capacity(k + 1);
            simplex.push(apex);
            simplex.append(&mut s);
            out.push(simplex);
        }
    }
    out
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let bset: BTreeSet<usize> = b.iter().copied().collect();
    a.iter().copied().filter(|i| bset.contains(i)).collect()
}
