use crate::volume::facet_vertex_sets;
use crate::{HPolytope, Halfspace, PolytopeError, VPolytope};
use linalg_core::Vector;
use serde::{Deserialize, Serialize};

/// Interchange schema: `{vertices: [[...]], halfspaces: [{normal, offset}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeJson {
    #[serde(default)]
    pub vertices: Vec<Vec<f64>>,
    #[serde(default)]
    pub halfspaces: Vec<HalfspaceJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HalfspaceJson {
    pub normal: Vec<f64>,
    pub offset: f64,
}

/// Serializes a polytope (either or both representations) to the schema.
pub fn polytope_to_json(h: Option<&HPolytope>, v: Option<&VPolytope>) -> PolytopeJson {
    PolytopeJson {
        vertices: v
            .map(|v| v.vertices.iter().map(|p| p.iter().copied().collect()).collect())
            .unwrap_or_default(),
        halfspaces: h
            .map(|h| {
                h.halfspaces
                    .iter()
                    .map(|hs| HalfspaceJson {
                        normal: hs.normal.iter().copied().collect(),
                        offset: hs.offset,
                    })
                    .collect()
            })
            .unwrap_or_default(),
    }
}

/// Rebuilds the in-memory types from the schema.
pub fn polytope_from_json(json: &PolytopeJson) -> (Option<HPolytope>, Option<VPolytope>) {
    let h = if json.halfspaces.is_empty() {
        None
    } else {
        Some(HPolytope::new(
            json.halfspaces
                .iter()
                .map(|hs| Halfspace::new(Vector::from_vec(hs.normal.clone()), hs.offset))
                .collect(),
        ))
    };
    let v = if json.vertices.is_empty() {
        None
    } else {
        Some(VPolytope::new(
            json.vertices
                .iter()
                .map(|p| Vector::from_vec(p.clone()))
                .collect(),
        ))
    };
    (h, v)
}

/// Emits a 3-dimensional polytope in OFF format with facet polygons ordered
/// counterclockwise as seen from outside.
pub fn write_off(h: &HPolytope, v: &VPolytope) -> Result<String, PolytopeError> {
    if v.dim() != 3 {
        return Err(PolytopeError::WrongAmbientDimension {
            required: 3,
            actual: v.dim(),
        });
    }
    let facets = facet_vertex_sets(h, v);
    let mut edge_count = 0usize;
    let mut lines = Vec::new();
    lines.push("OFF".to_string());
    lines.push(String::new()); // placeholder for counts
    for p in &v.vertices {
        lines.push(format!("{} {} {}", p[0], p[1], p[2]));
    }
    let mut face_lines = Vec::new();
    for (hi, tight) in &facets {
        let ordered = order_facet_cycle(h, v, *hi, tight);
        edge_count += ordered.len();
        let indices: Vec<String> = ordered.iter().map(|i| i.to_string()).collect();
        face_lines.push(format!("{} {}", ordered.len(), indices.join(" ")));
    }
    lines[1] = format!("{} {} {}", v.vertices.len(), face_lines.len(), edge_count / 2);
    lines.extend(face_lines);
    lines.push(String::new());
    Ok(lines.join("\n"))
}

/// Orders the vertices of a 2-dimensional facet by angle about its centroid,
/// oriented so the facet normal points outward.
fn order_facet_cycle(h: &HPolytope, v: &VPolytope, hi: usize, tight: &[usize]) -> Vec<usize> {
    let normal = &h.halfspaces[hi].normal;
    let d = 3;
    let centroid =
        tight.iter().fold(Vector::zeros(d), |a, &i| a + &v.vertices[i]) / tight.len() as f64;
    // Build an in-plane orthonormal basis (e1, e2) with e1×e2 = normal.
    let unit_n = normal / normal.norm();
    let mut seed = Vector::zeros(d);
    let min_axis = (0..d)
        .min_by(|&a, &b| {
            unit_n[a]
                .abs()
                .partial_cmp(&unit_n[b].abs())
                .expect("finite")
        })
        .expect("3 axes");
    seed[min_axis] = 1.0;
    let e1 = (&seed - &unit_n * unit_n.dot(&seed)).normalize();
    let e2 = Vector::from_vec(vec![
        unit_n[1] * e1[2] - unit_n[2] * e1[1],
        unit_n[2] * e1[0] - unit_n[0] * e1[2],
        unit_n[0] * e1[1] - unit_n[1] * e1[0],
    ]);
    let mut ordered: Vec<usize> = tight.to_vec();
    ordered.sort_by(|&a, &b| {
        let pa = &v.vertices[a] - &centroid;
        let pb = &v.vertices[b] - &centroid;
        let ta = pa.dot(&e2).atan2(pa.dot(&e1));
        let tb = pb.dot(&e2).atan2(pb.dot(&e1));
        ta.partial_cmp(&tb).expect("finite angles")
    });
    ordered
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate_vertices;

    #[test]
    fn cube_off_counts() {
        let cube = HPolytope::cuboid(&Vector::zeros(3), &Vector::from_element(3, 1.0));
        let v = enumerate_vertices(&cube).unwrap().bounded().unwrap();
        let off = write_off(&cube, &v).unwrap();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("8 6 12"));
    }

    #[test]
    fn json_round_trip_preserves_membership() {
        let cube = HPolytope::cuboid(&Vector::zeros(2), &Vector::from_element(2, 1.0));
        let v = enumerate_vertices(&cube).unwrap().bounded().unwrap();
        let json = polytope_to_json(Some(&cube), Some(&v));
        let text = serde_json::to_string(&json).unwrap();
        let parsed: PolytopeJson = serde_json::from_str(&text).unwrap();
        let (h2, v2) = polytope_from_json(&parsed);
        let h2 = h2.unwrap();
        let v2 = v2.unwrap();
        assert_eq!(v2.vertices.len(), 4);
        let probe = Vector::from_vec(vec![0.5, 0.25]);
        assert_eq!(cube.contains(&probe, 0.0), h2.contains(&probe, 0.0));
    }
}
