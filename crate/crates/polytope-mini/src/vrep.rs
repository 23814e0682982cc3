use crate::{HPolytope, Halfspace, PolytopeError, PIVOT_TOL, VERTEX_TOL};
use linalg_core::{Matrix, Vector};

/// Vertex representation: the minimal vertex list after dedup.
#[derive(Clone, Debug, Default)]
pub struct VPolytope {
    pub vertices: Vec<Vector>,
}

impl VPolytope {
    pub fn new(vertices: Vec<Vector>) -> Self {
        Self { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices.first().map_or(0, |v| v.len())
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Rank of the affine hull of the vertices at tolerance `eps`.
    pub fn affine_rank(&self, eps: f64) -> usize {
        affine_rank(&self.vertices, eps)
    }

    pub fn centroid(&self) -> Option<Vector> {
        if self.vertices.is_empty() {
            return None;
        }
        let d = self.dim();
        Some(
            self.vertices.iter().fold(Vector::zeros(d), |a, v| a + v)
                / self.vertices.len() as f64,
        )
    }

    /// Componentwise bounding box.
    pub fn bounding_box(&self) -> Option<(Vector, Vector)> {
        let first = self.vertices.first()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for v in &self.vertices {
            for i in 0..v.len() {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        Some((lo, hi))
    }
}

pub(crate) fn affine_rank(points: &[Vector], eps: f64) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let d = points[0].len();
    let base = &points[0];
    let diffs = Matrix::from_fn(points.len() - 1, d, |i, j| points[i + 1][j] - base[j]);
    diffs.rank(eps)
}

/// Outcome of brute-force vertex enumeration.
#[derive(Clone, Debug)]
pub enum Enumeration {
    Bounded(VPolytope),
    /// Feasible but with a recession direction.
    Unbounded,
    /// No feasible point found.
    Empty,
}

impl Enumeration {
    pub fn bounded(self) -> Result<VPolytope, PolytopeError> {
        match self {
            Enumeration::Bounded(v) => Ok(v),
            Enumeration::Unbounded => Err(PolytopeError::Unbounded),
            Enumeration::Empty => Err(PolytopeError::Empty),
        }
    }
}

/// Enumerates the vertices of an H-polytope by solving every d-subset of
/// bounding hyperplanes and keeping the feasible, deduplicated solutions.
pub fn enumerate_vertices(p: &HPolytope) -> Result<Enumeration, PolytopeError> {
    let d = p.dim();
    if d == 0 || d > 6 {
        return Err(PolytopeError::DimensionOutOfRange(d));
    }
    let m = p.halfspaces.len();
    let mut vertices: Vec<Vector> = Vec::new();
    if m >= d {
        let mut index = (0..d).collect::<Vec<usize>>();
        loop {
            if let Some(x) = solve_subset(p, &index) {
                if p.contains(&x, VERTEX_TOL)
                    && !vertices.iter().any(|v| (v - &x).amax() < VERTEX_TOL)
                {
                    vertices.push(x);
                }
            }
            if !advance(&mut index, m) {
                break;
            }
        }
    }
    if !vertices.is_empty() {
        if has_recession_ray(p) {
            return Ok(Enumeration::Unbounded);
        }
        return Ok(Enumeration::Bounded(VPolytope::new(vertices)));
    }
    // No vertices: distinguish empty from vertex-free (hence unbounded).
    if probe_feasible(p) {
        Ok(Enumeration::Unbounded)
    } else {
        Ok(Enumeration::Empty)
    }
}

fn advance(index: &mut [usize], m: usize) -> bool {
    let k = index.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if index[i] < m - (k - i) {
            index[i] += 1;
            for j in i + 1..k {
                index[j] = index[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn solve_subset(p: &HPolytope, index: &[usize]) -> Option<Vector> {
    let d = index.len();
    let a = Matrix::from_fn(d, d, |r, c| p.halfspaces[index[r]].normal[c]);
    let b = Vector::from_fn(d, |r, _| p.halfspaces[index[r]].offset);
    let lu = a.clone().full_piv_lu();
    let u_min = (0..d)
        .map(|i| lu.u()[(i, i)].abs())
        .fold(f64::INFINITY, f64::min);
    if u_min < PIVOT_TOL {
        return None;
    }
    let x = lu.solve(&b)?;
    // Residual guard against ill-conditioned subsets.
    if (a * &x - b).amax() > VERTEX_TOL {
        return None;
    }
    Some(x)
}

/// Nonzero vector orthogonal to d-1 rows of length d: the generalized cross
/// product (cofactor expansion). Returns `None` when the rows are dependent.
pub(crate) fn kernel_direction(rows: &[Vector]) -> Option<Vector> {
    let d = rows.len() + 1;
    let mut u = Vector::zeros(d);
    for j in 0..d {
        let minor = Matrix::from_fn(d - 1, d - 1, |r, c| {
            let col = if c < j { c } else { c + 1 };
            rows[r][col]
        });
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        u[j] = sign * minor.determinant();
    }
    let scale = rows
        .iter()
        .map(|r| r.norm().max(1e-30))
        .product::<f64>()
        .max(1e-30);
    let norm = u.norm();
    if norm < 1e-9 * scale {
        None
    } else {
        Some(u / norm)
    }
}

/// Looks for a nonzero direction u with normal·u ≤ 0 for every halfspace.
/// Candidate rays lie in the kernels of (d-1)-subsets of normals.
fn has_recession_ray(p: &HPolytope) -> bool {
    let d = p.dim();
    let m = p.halfspaces.len();
    let feasible_dir = |u: &Vector| {
        p.halfspaces
            .iter()
            .all(|h| h.normal.dot(u) <= VERTEX_TOL * h.normal.norm().max(1.0))
    };
    if d == 1 {
        for sign in [1.0, -1.0] {
            if feasible_dir(&Vector::from_vec(vec![sign])) {
                return true;
            }
        }
        return false;
    }
    if m < d {
        return true;
    }
    let mut index = (0..d - 1).collect::<Vec<usize>>();
    loop {
        let rows: Vec<Vector> = index
            .iter()
            .map(|&i| p.halfspaces[i].normal.clone())
            .collect();
        if let Some(u) = kernel_direction(&rows) {
            if feasible_dir(&u) || feasible_dir(&(-&u)) {
                return true;
            }
        }
        if !advance(&mut index, m) {
            break;
        }
    }
    false
}

fn probe_feasible(p: &HPolytope) -> bool {
    let d = p.dim();
    let mut probes = vec![Vector::zeros(d)];
    for h in &p.halfspaces {
        let nn = h.normal.norm_squared();
        if nn > 0.0 {
            probes.push(&h.normal * (h.offset / nn));
        }
    }
    if probes.len() > 1 {
        let mean = probes.iter().fold(Vector::zeros(d), |a, v| a + v) / probes.len() as f64;
        probes.push(mean);
    }
    probes.iter().any(|x| p.contains(x, VERTEX_TOL))
}

/// Derives the supporting halfspaces of a vertex set by brute force over
/// d-subsets of vertices (used when only a V-representation is available).
pub fn supporting_halfspaces(v: &VPolytope) -> Result<HPolytope, PolytopeError> {
    let d = v.dim();
    if d == 0 || d > 6 {
        return Err(PolytopeError::DimensionOutOfRange(d));
    }
    let pts = &v.vertices;
    if pts.len() < d + 1 {
        return Err(PolytopeError::NoVertices);
    }
    let mut halfspaces: Vec<Halfspace> = Vec::new();
    let mut index = (0..d).collect::<Vec<usize>>();
    loop {
        if let Some((normal, offset)) = hyperplane_through(pts, &index) {
            for (n, c) in [(normal.clone(), offset), (-normal, -offset)] {
                let supports = pts.iter().all(|p| n.dot(p) <= c + VERTEX_TOL);
                if supports
                    && !halfspaces.iter().any(|h| {
                        (&h.normal - &n).amax() < 1e-7 && (h.offset - c).abs() < 1e-7
                    })
                {
                    halfspaces.push(Halfspace::new(n, c));
                }
            }
        }
        if !advance(&mut index, pts.len()) {
            break;
        }
    }
    if halfspaces.is_empty() {
        return Err(PolytopeError::NoVertices);
    }
    Ok(HPolytope::new(halfspaces))
}

/// Unit-normal hyperplane through d points, if they are affinely independent.
fn hyperplane_through(pts: &[Vector], index: &[usize]) -> Option<(Vector, f64)> {
    let d = pts[0].len();
    let base = &pts[index[0]];
    if d == 1 {
        return Some((Vector::from_vec(vec![1.0]), base[0]));
    }
    let rows: Vec<Vector> = index[1..].iter().map(|&i| &pts[i] - base).collect();
    let normal = kernel_direction(&rows)?;
    let offset = normal.dot(base);
    Some((normal, offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecf(v: &[f64]) -> Vector {
        Vector::from_vec(v.to_vec())
    }

    #[test]
    fn unit_cube_has_eight_vertices() {
        let cube = HPolytope::cuboid(&Vector::zeros(3), &Vector::from_element(3, 1.0));
        let v = enumerate_vertices(&cube).unwrap().bounded().unwrap();
        assert_eq!(v.vertices.len(), 8);
        for vert in &v.vertices {
            for c in vert.iter() {
                assert!((c.abs() < 1e-12) || ((c - 1.0).abs() < 1e-12));
            }
        }
    }

    #[test]
    fn orthoscheme_staircase_vertices() {
        // O_3 as x1 <= 1, x2 <= x1, x3 <= x2, x3 >= 0: the four staircase
        // vertices plus the origin... the origin is x=(0,0,0).
        let hs = vec![
            Halfspace::new(vecf(&[1.0, 0.0, 0.0]), 1.0),
            Halfspace::new(vecf(&[-1.0, 1.0, 0.0]), 0.0),
            Halfspace::new(vecf(&[0.0, -1.0, 1.0]), 0.0),
            Halfspace::new(vecf(&[0.0, 0.0, -1.0]), 0.0),
        ];
        let v = enumerate_vertices(&HPolytope::new(hs))
            .unwrap()
            .bounded()
            .unwrap();
        assert_eq!(v.vertices.len(), 4);
        let expect = [
            vecf(&[0.0, 0.0, 0.0]),
            vecf(&[1.0, 0.0, 0.0]),
            vecf(&[1.0, 1.0, 0.0]),
            vecf(&[1.0, 1.0, 1.0]),
        ];
        for e in &expect {
            assert!(v.vertices.iter().any(|u| (u - e).amax() < 1e-9));
        }
    }

    #[test]
    fn wedge_is_unbounded_and_contradiction_is_empty() {
        let wedge = HPolytope::new(vec![
            Halfspace::new(vecf(&[-1.0, 0.0]), 0.0),
            Halfspace::new(vecf(&[0.0, -1.0]), 0.0),
        ]);
        assert!(matches!(
            enumerate_vertices(&wedge).unwrap(),
            Enumeration::Unbounded
        ));
        let empty = HPolytope::new(vec![
            Halfspace::new(vecf(&[1.0, 0.0]), 0.0),
            Halfspace::new(vecf(&[-1.0, 0.0]), -1.0),
            Halfspace::new(vecf(&[0.0, 1.0]), 1.0),
            Halfspace::new(vecf(&[0.0, -1.0]), 1.0),
        ]);
        assert!(matches!(
            enumerate_vertices(&empty).unwrap(),
            Enumeration::Empty
        ));
    }

    #[test]
    fn supporting_halfspaces_round_trip() {
        let cube = HPolytope::cuboid(&Vector::zeros(3), &Vector::from_element(3, 1.0));
        let v = enumerate_vertices(&cube).unwrap().bounded().unwrap();
        let h2 = supporting_halfspaces(&v).unwrap();
        // Membership predicates agree on probes.
        let probes = [
            vecf(&[0.5, 0.5, 0.5]),
            vecf(&[1.2, 0.5, 0.5]),
            vecf(&[0.0, 1.0, 1.0]),
            vecf(&[-0.1, 0.2, 0.9]),
        ];
        for x in &probes {
            assert_eq!(cube.contains(x, 1e-9), h2.contains(x, 1e-9));
        }
    }
}
