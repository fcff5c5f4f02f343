//! Per-edge angle labels and the discrete Abel map of a quad decoration.
//!
//! Crossing a strand changes an accumulated label: walking across an
//! oriented strand that passes from the walker's left to their right adds
//! the strand's angle, the opposite crossing subtracts it. Accumulating from
//! a fixed anchor over the quad-graph of the decoration yields a value at
//! every vertex and every face; the result is path-independent.

use num_complex::Complex64 as C;

use super::angles::AngleMap;
use super::decorate::{DecoratedGraph, DecorationKind, FaceOrigin};
use super::graph::twin;
use super::tracks::{Phase, TrackState};
use super::{Color, LatticeError};

/// Angle labels `(alpha, beta)` of each edge of a quad decoration, attached
/// to its white-to-black dart `d`: `alpha` belongs to the strand turning
/// around the white end inside the right face of `d` (equivalently around
/// the black end inside the left face), `beta` to the strand turning around
/// the white end inside the left face.
pub fn fock_labels(dg: &DecoratedGraph, am: &AngleMap) -> Result<Vec<(C, C)>, LatticeError> {
    if dg.kind != DecorationKind::Quad {
        return Err(LatticeError::InvalidInput(
            "angle labels require the quad decoration".into(),
        ));
    }
    let ts = dg
        .tracks
        .as_ref()
        .expect("quad decoration carries track data");
    let colors = dg
        .color
        .as_ref()
        .expect("quad decoration carries vertex colors");
    let track_angle = am.quad_track_angles(dg)?;
    let g = &dg.graph;

    let mut labels = Vec::with_capacity(g.n_edges());
    for e in 0..g.n_edges() {
        let d = if colors[g.tail(2 * e)] == Color::White {
            2 * e
        } else {
            2 * e + 1
        };
        // The strand entering the rhombus of `e` in phase B through the wall
        // at the white end turns around the white vertex inside the right
        // face; the phase-A strand entering at the black end turns around
        // the white vertex inside the left face. Both these states lie on
        // forward strands, so the track angle applies directly.
        let sa = TrackState {
            dart: d,
            phase: Phase::B,
        };
        let sb = TrackState {
            dart: twin(d),
            phase: Phase::A,
        };
        debug_assert!(ts.is_forward(ts.strand_of(sa)));
        debug_assert!(ts.is_forward(ts.strand_of(sb)));
        labels.push((track_angle[ts.track_of(sa)], track_angle[ts.track_of(sb)]));
    }
    Ok(labels)
}

/// The discrete Abel map: a label for every vertex and every face of the
/// quad decoration, anchored to zero at the face surrounding base vertex 0.
#[derive(Debug, Clone)]
pub struct AbelMap {
    pub vertex: Vec<C>,
    pub face: Vec<C>,
}

/// Accumulate the Abel map over the decorated graph. Every edge relates its
/// two endpoints and two sides:
/// with `(alpha, beta)` the edge's labels and `d` its white-to-black dart,
/// stepping from the right face of `d` to the white end adds `alpha`, from
/// the left face to the white end adds `beta`, from the right face to the
/// black end subtracts `beta`, and from the left face to the black end
/// subtracts `alpha`. Inconsistent accumulation around any cycle is an
/// error.
pub fn discrete_abel(dg: &DecoratedGraph, am: &AngleMap) -> Result<AbelMap, LatticeError> {
    let labels = fock_labels(dg, am)?;
    let colors = dg.color.as_ref().expect("quad decoration is colored");
    let g = &dg.graph;
    let nv = g.n_vertices();
    let nf = g.n_faces();

    // Node ids: vertices then faces.
    let mut adj: Vec<Vec<(usize, C)>> = vec![Vec::new(); nv + nf];
    let mut relate = |from: usize, to: usize, inc: C| {
        adj[from].push((to, inc));
        adj[to].push((from, -inc));
    };
    for e in 0..g.n_edges() {
        let d = if colors[g.tail(2 * e)] == Color::White {
            2 * e
        } else {
            2 * e + 1
        };
        let (alpha, beta) = labels[e];
        let white = g.tail(d);
        let black = g.head(d);
        let left = nv + g.face_left(d);
        let right = nv + g.face_right(d);
        relate(right, white, alpha);
        relate(left, white, beta);
        relate(right, black, -beta);
        relate(left, black, -alpha);
    }

    let anchor = dg
        .face_origin
        .iter()
        .position(|o| matches!(o, FaceOrigin::Primal(0)))
        .ok_or_else(|| {
            LatticeError::InvalidInput("decoration has no face around base vertex 0".into())
        })?;

    let mut value: Vec<Option<C>> = vec![None; nv + nf];
    value[nv + anchor] = Some(C::new(0.0, 0.0));
    let mut queue = std::collections::VecDeque::from([nv + anchor]);
    while let Some(n) = queue.pop_front() {
        let vn = value[n].unwrap();
        for &(m, inc) in &adj[n] {
            let want = vn + inc;
            match value[m] {
                None => {
                    value[m] = Some(want);
                    queue.push_back(m);
                }
                Some(have) => {
                    if (have - want).norm() > 1e-9 * (1.0 + have.norm()) {
                        return Err(LatticeError::InconsistentLift(format!(
                            "node {m} accumulates both {have} and {want}"
                        )));
                    }
                }
            }
        }
    }
    if value.iter().any(|v| v.is_none()) {
        return Err(LatticeError::InconsistentLift(
            "decoration quad-graph is not connected".into(),
        ));
    }

    let mut it = value.into_iter().map(|v| v.unwrap());
    let vertex: Vec<C> = (&mut it).take(nv).collect();
    let face: Vec<C> = it.collect();
    Ok(AbelMap { vertex, face })
}
