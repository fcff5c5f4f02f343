//! The Fisher decoration: each vertex of degree `d` becomes a necklace of
//! `d` triangles, one per incident dart, joined corner to corner; each base
//! edge survives as a "long" edge between the triangles of its two darts.
//!
//! Dart `x` owns the triangle `o(x), u(x), u'(x)` with ids `3x, 3x+1, 3x+2`:
//! `o(x)` sits on the base edge, `u(x)` on the clockwise side, `u'(x)` on the
//! counterclockwise side. Junction edges `u'(x) -- u(sigma(x))` close the
//! necklace inside corner `x`.

use super::decorate::{DecoratedGraph, DecorationKind, EdgeRole, FaceOrigin};
use super::graph::{DartId, PeriodicGraph};
use super::LatticeError;

/// Build the Fisher decoration of a torus graph. Long edges keep their base
/// edge's id; every vertex of the result has degree three.
pub fn build_fisher(g: &PeriodicGraph) -> Result<DecoratedGraph, LatticeError> {
    let ne = g.n_edges();
    let nd = g.n_darts();
    let o = |x: DartId| 3 * x;
    let u = |x: DartId| 3 * x + 1;
    let up = |x: DartId| 3 * x + 2;
    // Edge ids: long edges 0..ne, triangle edges of dart x at
    // ne+3x (o-u), ne+3x+1 (u-u'), ne+3x+2 (u'-o), junctions at 7*ne+x.
    let tri = |x: DartId, k: usize| ne + 3 * x + k;
    let junction = |x: DartId| 7 * ne + x;

    let mut edges = Vec::with_capacity(9 * ne);
    let mut roles = Vec::with_capacity(9 * ne);
    for e in 0..ne {
        edges.push((o(2 * e), o(2 * e + 1), g.shift(2 * e)));
        roles.push(EdgeRole::Long);
    }
    for x in 0..nd {
        edges.push((o(x), u(x), [0, 0]));
        edges.push((u(x), up(x), [0, 0]));
        edges.push((up(x), o(x), [0, 0]));
        roles.extend([EdgeRole::Short, EdgeRole::Short, EdgeRole::Short]);
    }
    for x in 0..nd {
        edges.push((up(x), u(g.sigma(x)), [0, 0]));
        roles.push(EdgeRole::Short);
    }

    let mut rotations: Vec<Vec<DartId>> = vec![Vec::new(); 3 * nd];
    for x in 0..nd {
        // Long darts keep the base dart id: dart x of long edge e(x) leaves o(x).
        let long_dart = x;
        rotations[o(x)] = vec![long_dart, 2 * tri(x, 2) + 1, 2 * tri(x, 0)];
        rotations[u(x)] = vec![
            2 * junction(g.sigma_inv(x)) + 1,
            2 * tri(x, 0) + 1,
            2 * tri(x, 1),
        ];
        rotations[up(x)] = vec![2 * tri(x, 1) + 1, 2 * tri(x, 2), 2 * junction(x)];
    }

    let mut gf = PeriodicGraph::new(3 * nd, &edges, rotations)?;
    let (dx, dy) = g.domain();
    gf.set_domain(dx, dy);

    let mut face_origin = vec![None; gf.n_faces()];
    for x in 0..nd {
        let f = gf.face_left(2 * tri(x, 2) + 1); // dart o(x) -> u'(x)
        set(&mut face_origin, f, FaceOrigin::Triangle(x))?;
    }
    for v in 0..g.n_vertices() {
        let x = g.rotation(v)[0];
        let f = gf.face_left(2 * tri(x, 1)); // dart u(x) -> u'(x)
        set(&mut face_origin, f, FaceOrigin::Inner(v))?;
    }
    for bf in 0..g.n_faces() {
        let x = g.face(bf)[0];
        let f = gf.face_left(x); // long dart of x
        set(&mut face_origin, f, FaceOrigin::Outer(bf))?;
    }
    let face_origin: Vec<FaceOrigin> = face_origin
        .into_iter()
        .enumerate()
        .map(|(f, o)| {
            o.ok_or_else(|| {
                LatticeError::MalformedEmbedding(format!(
                    "face {f} of Fisher decoration unclassified"
                ))
            })
        })
        .collect::<Result<_, _>>()?;

    Ok(DecoratedGraph {
        graph: gf,
        base: g.clone(),
        kind: DecorationKind::Fisher,
        color: None,
        roles,
        face_origin,
        square_of_edge: None,
        external_of_dart: None,
        base_tracks: None,
        tracks: None,
        pairs: None,
        not_isoradial: false,
    })
}

fn set(
    face_origin: &mut [Option<FaceOrigin>],
    f: usize,
    origin: FaceOrigin,
) -> Result<(), LatticeError> {
    if face_origin[f].is_some() {
        return Err(LatticeError::MalformedEmbedding(format!(
            "face {f} of Fisher decoration classified twice"
        )));
    }
    face_origin[f] = Some(origin);
    Ok(())
}

/// Triangle vertices of a base dart in a Fisher decoration: the long-edge
/// corner, the clockwise corner, the counterclockwise corner.
pub fn triangle_vertices(x: DartId) -> [usize; 3] {
    [3 * x, 3 * x + 1, 3 * x + 2]
}
