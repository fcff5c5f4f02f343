//! JSON serialization of periodic graphs.
//!
//! ```text
//! {
//!   "vertices": [{"id": 0, "rotation": [edge ids, counterclockwise]}, ...],
//!   "edges": [{"id": 0, "endpoints": [u, v], "dual_crossings": {"x": 1, "y": 0}}, ...],
//!   "faces": [[signed edge ids, counterclockwise], ...],
//!   "gamma_x": [edge ids with nonzero x crossing],
//!   "gamma_y": [edge ids with nonzero y crossing],
//!   "fundamental_domain": {"nx": 1, "ny": 1}
//! }
//! ```
//!
//! `dual_crossings` records the voltage of the edge traversed from
//! `endpoints[0]` to `endpoints[1]`. In a face, `+k` is edge `k-1` traversed
//! that way and `-k` the reverse. A loop edge appears twice in its vertex's
//! rotation; the first occurrence is the forward traversal. `faces` is
//! optional on input and validated against the rotation system when present.

use serde::{Deserialize, Serialize};

use super::graph::{edge_of, DartId, PeriodicGraph};
use super::LatticeError;

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    rotation: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CrossingsJson {
    x: i64,
    y: i64,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    id: usize,
    endpoints: [usize; 2],
    dual_crossings: CrossingsJson,
}

#[derive(Serialize, Deserialize)]
struct DomainJson {
    nx: u32,
    ny: u32,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<Vec<i64>>>,
    gamma_x: Vec<usize>,
    gamma_y: Vec<usize>,
    fundamental_domain: DomainJson,
}

/// Serialize a graph. Loop edges whose reverse dart comes first in the
/// rotation are exported with both darts swapped, so that re-importing
/// reproduces the same embedding.
pub fn to_json(g: &PeriodicGraph) -> String {
    // swap[e]: export dart 2e+1 as the forward traversal of edge e.
    let mut swap = vec![false; g.n_edges()];
    for (e, sw) in swap.iter_mut().enumerate() {
        let (d, t) = (2 * e, 2 * e + 1);
        if g.tail(d) == g.head(d) {
            let rot = g.rotation(g.tail(d));
            let pd = rot.iter().position(|&x| x == d).unwrap();
            let pt = rot.iter().position(|&x| x == t).unwrap();
            *sw = pt < pd;
        }
    }
    let fwd = |d: DartId| -> bool { d.is_multiple_of(2) != swap[edge_of(d)] };

    let vertices: Vec<VertexJson> = (0..g.n_vertices())
        .map(|v| VertexJson {
            id: v,
            rotation: g.rotation(v).iter().map(|&d| edge_of(d)).collect(),
        })
        .collect();
    let edges: Vec<EdgeJson> = (0..g.n_edges())
        .map(|e| {
            let d = if swap[e] { 2 * e + 1 } else { 2 * e };
            EdgeJson {
                id: e,
                endpoints: [g.tail(d), g.head(d)],
                dual_crossings: CrossingsJson {
                    x: g.shift(d)[0],
                    y: g.shift(d)[1],
                },
            }
        })
        .collect();
    // Canonical cycle forms in sorted order: face ids are not part of the
    // format, so the export is deterministic under dart relabelings.
    let mut faces: Vec<Vec<i64>> = g
        .faces()
        .iter()
        .map(|orbit| {
            let cycle: Vec<i64> = orbit
                .iter()
                .map(|&d| {
                    let e = edge_of(d) as i64 + 1;
                    if fwd(d) {
                        e
                    } else {
                        -e
                    }
                })
                .collect();
            canonical_cycle(&cycle)
        })
        .collect();
    faces.sort();
    let (nx, ny) = g.domain();
    let doc = GraphJson {
        gamma_x: edges
            .iter()
            .filter(|e| e.dual_crossings.x != 0)
            .map(|e| e.id)
            .collect(),
        gamma_y: edges
            .iter()
            .filter(|e| e.dual_crossings.y != 0)
            .map(|e| e.id)
            .collect(),
        vertices,
        edges,
        faces: Some(faces),
        fundamental_domain: DomainJson { nx, ny },
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

/// Parse and validate a graph serialized by [`to_json`] (or written by hand
/// in the same format).
pub fn from_json(s: &str) -> Result<PeriodicGraph, LatticeError> {
    let doc: GraphJson =
        serde_json::from_str(s).map_err(|e| LatticeError::InvalidInput(e.to_string()))?;

    let nv = doc.vertices.len();
    let ne = doc.edges.len();
    for (i, v) in doc.vertices.iter().enumerate() {
        if v.id != i {
            return Err(LatticeError::InvalidInput(format!(
                "vertex ids must be 0..{nv} in order, found {} at position {i}",
                v.id
            )));
        }
    }
    let mut edges = Vec::with_capacity(ne);
    for (i, e) in doc.edges.iter().enumerate() {
        if e.id != i {
            return Err(LatticeError::InvalidInput(format!(
                "edge ids must be 0..{ne} in order, found {} at position {i}",
                e.id
            )));
        }
        if e.endpoints[0] >= nv || e.endpoints[1] >= nv {
            return Err(LatticeError::InvalidInput(format!(
                "edge {i} endpoints out of range"
            )));
        }
        edges.push((
            e.endpoints[0],
            e.endpoints[1],
            [e.dual_crossings.x, e.dual_crossings.y],
        ));
    }

    // Rebuild dart-level rotations from edge ids.
    let mut loop_seen = vec![0usize; ne];
    let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(nv);
    for v in doc.vertices.iter() {
        let mut rot = Vec::with_capacity(v.rotation.len());
        for &e in &v.rotation {
            if e >= ne {
                return Err(LatticeError::InvalidInput(format!(
                    "vertex {} rotation names edge {e} out of range",
                    v.id
                )));
            }
            let (a, b) = (edges[e].0, edges[e].1);
            let d = if a == b {
                if a != v.id {
                    return Err(LatticeError::InvalidInput(format!(
                        "vertex {} rotation names loop edge {e} of vertex {a}",
                        v.id
                    )));
                }
                loop_seen[e] += 1;
                match loop_seen[e] {
                    1 => 2 * e,
                    2 => 2 * e + 1,
                    _ => {
                        return Err(LatticeError::InvalidInput(format!(
                            "loop edge {e} appears more than twice in rotations"
                        )))
                    }
                }
            } else if a == v.id {
                2 * e
            } else if b == v.id {
                2 * e + 1
            } else {
                return Err(LatticeError::InvalidInput(format!(
                    "vertex {} rotation names edge {e} not incident to it",
                    v.id
                )));
            };
            rot.push(d);
        }
        rotations.push(rot);
    }

    let mut g = PeriodicGraph::new(nv, &edges, rotations)?;
    g.set_domain(doc.fundamental_domain.nx, doc.fundamental_domain.ny);

    // Cross-validate the redundant fields.
    for (e, edge) in edges.iter().enumerate() {
        let in_x = doc.gamma_x.contains(&e);
        if in_x != (edge.2[0] != 0) {
            return Err(LatticeError::InvalidInput(format!(
                "gamma_x disagrees with dual_crossings at edge {e}"
            )));
        }
        let in_y = doc.gamma_y.contains(&e);
        if in_y != (edge.2[1] != 0) {
            return Err(LatticeError::InvalidInput(format!(
                "gamma_y disagrees with dual_crossings at edge {e}"
            )));
        }
    }
    if let Some(faces) = &doc.faces {
        validate_faces(&g, faces)?;
    }
    Ok(g)
}

/// Compare declared faces with the rotation system's orbits, as unordered
/// collections of cyclic sequences.
fn validate_faces(g: &PeriodicGraph, declared: &[Vec<i64>]) -> Result<(), LatticeError> {
    if declared.len() != g.n_faces() {
        return Err(LatticeError::MalformedEmbedding(format!(
            "{} faces declared, rotation system yields {}",
            declared.len(),
            g.n_faces()
        )));
    }
    let encode = |d: DartId| -> i64 {
        let e = edge_of(d) as i64 + 1;
        if d.is_multiple_of(2) {
            e
        } else {
            -e
        }
    };
    let mut computed: Vec<Vec<i64>> = g
        .faces()
        .iter()
        .map(|orbit| canonical_cycle(&orbit.iter().map(|&d| encode(d)).collect::<Vec<_>>()))
        .collect();
    let mut given: Vec<Vec<i64>> = declared.iter().map(|f| canonical_cycle(f)).collect();
    computed.sort();
    given.sort();
    if computed != given {
        return Err(LatticeError::MalformedEmbedding(
            "declared faces do not match the rotation system".into(),
        ));
    }
    Ok(())
}

/// Lexicographically smallest rotation of a cyclic sequence.
fn canonical_cycle(cycle: &[i64]) -> Vec<i64> {
    if cycle.is_empty() {
        return Vec::new();
    }
    let n = cycle.len();
    (0..n)
        .map(|s| {
            let mut rot = Vec::with_capacity(n);
            rot.extend_from_slice(&cycle[s..]);
            rot.extend_from_slice(&cycle[..s]);
            rot
        })
        .min()
        .unwrap()
}
