use crate::{PolytopeError, VERTEX_TOL};
use linalg_core::{Isometry, Matrix, Vector};

/// Closed halfspace `normal·x ≤ offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct Halfspace {
    pub normal: Vector,
    pub offset: f64,
}

impl Halfspace {
    pub fn new(normal: Vector, offset: f64) -> Self {
        Self { normal, offset }
    }

    pub fn satisfies(&self, x: &Vector, tol: f64) -> bool {
        self.normal.dot(x) <= self.offset + tol
    }

    /// Signed slack `offset - normal·x` (nonnegative inside).
    pub fn slack(&self, x: &Vector) -> f64 {
        self.offset - self.normal.dot(x)
    }
}

/// Intersection of finitely many halfspaces.
#[derive(Clone, Debug, Default)]
pub struct HPolytope {
    pub halfspaces: Vec<Halfspace>,
}

impl HPolytope {
    pub fn new(halfspaces: Vec<Halfspace>) -> Self {
        Self { halfspaces }
    }

    pub fn dim(&self) -> usize {
        self.halfspaces.first().map_or(0, |h| h.normal.len())
    }

    /// Axis-aligned box `lo ≤ x ≤ hi`.
    pub fn cuboid(lo: &Vector, hi: &Vector) -> Self {
        let d = lo.len();
        let mut hs = Vec::with_capacity(2 * d);
        for i in 0..d {
            let mut n = Vector::zeros(d);
            n[i] = 1.0;
            hs.push(Halfspace::new(n.clone(), hi[i]));
            hs.push(Halfspace::new(-n, -lo[i]));
        }
        Self::new(hs)
    }

    /// Convex polygon in the plane from its (unordered) vertex list.
    pub fn from_polygon(points: &[Vector]) -> Result<Self, PolytopeError> {
        if points.is_empty() || points[0].len() != 2 {
            return Err(PolytopeError::DimensionOutOfRange(
                points.first().map_or(0, |p| p.len()),
            ));
        }
        let n = points.len();
        let centroid = points.iter().fold(Vector::zeros(2), |a, p| a + p) / n as f64;
        let mut ordered: Vec<&Vector> = points.iter().collect();
        ordered.sort_by(|p, q| {
            let ap = (p[1] - centroid[1]).atan2(p[0] - centroid[0]);
            let aq = (q[1] - centroid[1]).atan2(q[0] - centroid[0]);
            ap.partial_cmp(&aq).expect("finite angles")
        });
        let mut hs = Vec::with_capacity(n);
        for i in 0..n {
            let p = ordered[i];
            let q = ordered[(i + 1) % n];
            let edge = q - p;
            let normal = Vector::from_vec(vec![edge[1], -edge[0]]);
            let offset = normal.dot(p);
            if normal.dot(&centroid) > offset {
                hs.push(Halfspace::new(-normal, -offset));
            } else {
                hs.push(Halfspace::new(normal, offset));
            }
        }
        Ok(Self::new(hs))
    }

    pub fn contains(&self, x: &Vector, tol: f64) -> bool {
        self.halfspaces.iter().all(|h| h.satisfies(x, tol))
    }

    /// True when the point is inside but within `tol` of some bounding plane.
    pub fn near_boundary(&self, x: &Vector, tol: f64) -> bool {
        self.contains(x, tol) && self.halfspaces.iter().any(|h| h.slack(x).abs() <= tol)
    }

    /// Appends the constraints of `other` (set intersection).
    pub fn intersect(&self, other: &HPolytope) -> HPolytope {
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        HPolytope::new(hs)
    }

    /// Image under an isometry: `x ∈ P^g ⇔ g⁻¹(x) ∈ P`.
    pub fn transform(&self, g: &Isometry) -> HPolytope {
        let linear: &Matrix = g.linear();
        let hs = self
            .halfspaces
            .iter()
            .map(|h| {
                // n·((x - t)·Lᵀ) ≤ c  ⇔  (Lᵀn)·x ≤ c + (Lᵀn)·t
                let normal = linear.tr_mul(&h.normal);
                let offset = h.offset + normal.dot(g.shift());
                Halfspace::new(normal, offset)
            })
            .collect();
        HPolytope::new(hs)
    }
}

/// Splits a polytope along `plane.normal·x = plane.offset` into the two closed
/// halves (either may be empty).
pub fn cut(p: &HPolytope, plane: &Halfspace) -> (HPolytope, HPolytope) {
    let mut below = p.halfspaces.clone();
    below.push(plane.clone());
    let mut above = p.halfspaces.clone();
    above.push(Halfspace::new(-plane.normal.clone(), -plane.offset));
    (HPolytope::new(below), HPolytope::new(above))
}

/// Shared tolerance helper: absolute tightness of a halfspace at a point.
pub(crate) fn is_tight(h: &Halfspace, x: &Vector) -> bool {
    h.slack(x).abs() <= VERTEX_TOL
}
