//! Dual graph construction.
//!
//! The dual dart of primal dart `d` crosses edge `e(d)` from the right face
//! of `d` to its left face, and keeps the same id. Dual rotations follow
//! face orbits, which makes the double dual canonically isomorphic to the
//! original graph (dart for dart, up to a voltage gauge).

use super::graph::{twin, Cell, DartId, PeriodicGraph, VertexId};

/// Build the dual torus graph. Edge ids are preserved; the dual vertex `f`
/// is face `f` of the input.
pub fn build_dual(g: &PeriodicGraph) -> PeriodicGraph {
    // Offset of each dart's tail cell relative to an anchor of its left
    // face: walk the orbit accumulating voltages.
    let mut offset: Vec<Cell> = vec![[0, 0]; g.n_darts()];
    for orbit in g.faces() {
        let mut acc = [0i64, 0];
        for &d in orbit {
            offset[d] = acc;
            acc[0] += g.shift(d)[0];
            acc[1] += g.shift(d)[1];
        }
    }

    let mut edges = Vec::with_capacity(g.n_edges());
    for e in 0..g.n_edges() {
        let d = 2 * e;
        // Anchor each dual vertex at its face anchor; crossing e(d) from the
        // right face copy to the left face copy adjacent to this crossing.
        let s = g.shift(d);
        let off_l = offset[d];
        let off_r = offset[twin(d)];
        edges.push((
            g.face_right(d),
            g.face_left(d),
            [off_r[0] - off_l[0] - s[0], off_r[1] - off_l[1] - s[1]],
        ));
    }

    let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(g.n_faces());
    for orbit in g.faces() {
        rotations.push(orbit.iter().map(|&d| twin(d)).collect());
    }

    let mut dual = PeriodicGraph::new(g.n_faces(), &edges, rotations)
        .expect("dual of a valid torus graph is valid");
    let (nx, ny) = g.domain();
    dual.set_domain(nx, ny);
    dual
}

/// Check that two graphs with identical combinatorics (`dart_map[d]` in `b`
/// playing the role of `d` in `a`) have gauge-equivalent voltages: some
/// vertex potential `p` satisfies
/// `shift_b(dart_map[d]) = shift_a(d) + p(head(d)) - p(tail(d))` for all darts.
pub fn voltages_gauge_equivalent(
    a: &PeriodicGraph,
    b: &PeriodicGraph,
    dart_map: &[DartId],
) -> bool {
    let n = a.n_vertices();
    let mut p: Vec<Option<Cell>> = vec![None; n];
    p[0] = Some([0, 0]);
    let mut stack: Vec<VertexId> = vec![0];
    while let Some(v) = stack.pop() {
        let pv = p[v].unwrap();
        for &d in a.rotation(v) {
            let w = a.head(d);
            let sa = a.shift(d);
            let sb = b.shift(dart_map[d]);
            let need = [pv[0] + sb[0] - sa[0], pv[1] + sb[1] - sa[1]];
            match p[w] {
                None => {
                    p[w] = Some(need);
                    stack.push(w);
                }
                Some(pw) => {
                    if pw != need {
                        return false;
                    }
                }
            }
        }
    }
    p.iter().all(|x| x.is_some())
}
