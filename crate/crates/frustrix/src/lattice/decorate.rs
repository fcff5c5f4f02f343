//! The bipartite quad decoration.
//!
//! Each edge of the base graph is blown up into a four-cycle ("square") with
//! two white and two black vertices; consecutive squares around a vertex are
//! joined by external edges, one per corner of the base graph. Squares carry
//! two edges parallel to the base edge and two parallel to its dual edge.
//!
//! Vertices: dart `x` contributes `m(x, R)` (white, id `2x`) near its tail on
//! the clockwise side and `m(x, L)` (black, id `2x+1`) on the
//! counterclockwise side. The square of edge `e` is the cycle
//! `m(2e,R), m(2e+1,L), m(2e+1,R), m(2e,L)`, counterclockwise. The external
//! edge of dart `x` joins `m(x,L)` to `m(sigma(x),R)` inside corner `x`.

use super::graph::{edge_of, twin, DartId, EdgeId, FaceId, PeriodicGraph, VertexId};
use super::tracks::{extract_train_tracks, is_isoradial, is_minimal_tracks, TrackSet};
use super::{Color, LatticeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecorationKind {
    Quad,
    Fisher,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRole {
    /// Square side parallel to the base edge.
    PrimalParallel,
    /// Square side parallel to the dual of the base edge.
    DualParallel,
    /// Corner edge joining consecutive squares around a base vertex.
    External,
    /// Fisher decoration: the edge inheriting a base edge.
    Long,
    /// Fisher decoration: triangle and junction edges.
    Short,
}

/// What each face of a decorated graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceOrigin {
    /// Square replacing a base edge.
    Square(EdgeId),
    /// Face around a base vertex.
    Primal(VertexId),
    /// Face inside a base face.
    Dual(FaceId),
    /// Fisher triangle of a base dart.
    Triangle(DartId),
    /// Fisher face around a base vertex.
    Inner(VertexId),
    /// Fisher face inside a base face.
    Outer(FaceId),
}

/// The two strands of the decorated graph shadowing one base track.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrandPair {
    /// Base track id.
    pub track: usize,
    /// Strand travelling the base track's forward orientation.
    pub fwd: usize,
    /// Strand travelling it backwards.
    pub bwd: usize,
}

#[derive(Debug, Clone)]
pub struct DecoratedGraph {
    pub graph: PeriodicGraph,
    pub base: PeriodicGraph,
    pub kind: DecorationKind,
    /// Vertex classes; present for the bipartite quad decoration.
    pub color: Option<Vec<Color>>,
    pub roles: Vec<EdgeRole>,
    pub face_origin: Vec<FaceOrigin>,
    /// Square face replacing each base edge.
    pub square_of_edge: Option<Vec<FaceId>>,
    /// External edge inside each base corner.
    pub external_of_dart: Option<Vec<EdgeId>>,
    /// Oriented train-tracks of the base graph.
    pub base_tracks: Option<TrackSet>,
    /// Oriented train-tracks of the decorated graph.
    pub tracks: Option<TrackSet>,
    /// Strand pair shadowing each base track.
    pub pairs: Option<Vec<StrandPair>>,
    /// The base graph failed the isoradiality criterion (advisory, not fatal).
    pub not_isoradial: bool,
}

/// Primal-parallel square side leaving `m(x, R)`, as an edge id.
#[inline]
fn along_of(x: DartId) -> EdgeId {
    4 * edge_of(x) + if x.is_multiple_of(2) { 0 } else { 2 }
}

/// Dual-parallel square side joining `m(x, L)` to `m(x, R)`, as an edge id.
#[inline]
fn across_of(x: DartId) -> EdgeId {
    4 * edge_of(x) + if x.is_multiple_of(2) { 3 } else { 1 }
}

/// Build the quad decoration of a torus graph, together with its strand
/// pairing and the base graph's track data.
#[allow(non_snake_case)]
pub fn build_GQ(g: &PeriodicGraph) -> Result<DecoratedGraph, LatticeError> {
    let ne = g.n_edges();
    let nd = g.n_darts();
    let ext_id = |x: DartId| -> EdgeId { 4 * ne + x };

    let mut edges = Vec::with_capacity(6 * ne);
    let mut roles = Vec::with_capacity(6 * ne);
    for e in 0..ne {
        let (x, y) = (2 * e, 2 * e + 1);
        let s = g.shift(x);
        // Square of e, counterclockwise: m(x,R), m(y,L), m(y,R), m(x,L).
        edges.push((2 * x, 2 * y + 1, s)); // bottom, along x
        edges.push((2 * y + 1, 2 * y, [0, 0])); // right
        edges.push((2 * y, 2 * x + 1, [-s[0], -s[1]])); // top, along y
        edges.push((2 * x + 1, 2 * x, [0, 0])); // left
        roles.extend([
            EdgeRole::PrimalParallel,
            EdgeRole::DualParallel,
            EdgeRole::PrimalParallel,
            EdgeRole::DualParallel,
        ]);
    }
    for x in 0..nd {
        edges.push((2 * x + 1, 2 * g.sigma(x), [0, 0]));
        roles.push(EdgeRole::External);
    }

    let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(2 * nd);
    for x in 0..nd {
        // White m(x, R): along, across, external of the previous corner.
        rotations.push(vec![
            2 * along_of(x),
            2 * across_of(x) + 1,
            2 * ext_id(g.sigma_inv(x)) + 1,
        ]);
        // Black m(x, L): along, external of this corner, across.
        rotations.push(vec![
            2 * along_of(twin(x)) + 1,
            2 * ext_id(x),
            2 * across_of(x),
        ]);
    }
    // Interleave so vertex `v` owns rotation `v`: vertices 2x, 2x+1 per dart.
    let mut interleaved = Vec::with_capacity(2 * nd);
    for x in 0..nd {
        interleaved.push(rotations[2 * x].clone());
        interleaved.push(rotations[2 * x + 1].clone());
    }
    let mut gq = PeriodicGraph::new(2 * nd, &edges, interleaved)?;
    let (dx, dy) = g.domain();
    gq.set_domain(dx, dy);

    let color: Vec<Color> = (0..2 * nd)
        .map(|v| if v % 2 == 0 { Color::White } else { Color::Black })
        .collect();
    debug_assert_eq!(
        gq.bipartite_coloring(),
        Some(color.clone()),
        "quad decoration coloring must match vertex parity"
    );

    // Classify faces.
    let mut face_origin = vec![None; gq.n_faces()];
    let mut square_of_edge = Vec::with_capacity(ne);
    for e in 0..ne {
        let f = gq.face_left(2 * (4 * e));
        square_of_edge.push(f);
        set_origin(&mut face_origin, f, FaceOrigin::Square(e))?;
    }
    for v in 0..g.n_vertices() {
        let x = g.rotation(v)[0];
        let f = gq.face_left(2 * across_of(x) + 1);
        set_origin(&mut face_origin, f, FaceOrigin::Primal(v))?;
    }
    for bf in 0..g.n_faces() {
        let y = g.face(bf)[0];
        let f = gq.face_left(2 * along_of(twin(y)) + 1);
        set_origin(&mut face_origin, f, FaceOrigin::Dual(bf))?;
    }
    let face_origin: Vec<FaceOrigin> = face_origin
        .into_iter()
        .enumerate()
        .map(|(f, o)| {
            o.ok_or_else(|| {
                LatticeError::MalformedEmbedding(format!("face {f} of quad decoration unclassified"))
            })
        })
        .collect::<Result<_, _>>()?;

    let external_of_dart: Vec<EdgeId> = (0..nd).map(ext_id).collect();

    let base_tracks = extract_train_tracks(g)?;
    let not_isoradial = !is_isoradial(g, &base_tracks).isoradial;
    let gq_tracks = extract_train_tracks(&gq)?;

    let pairs = pair_strands(&base_tracks, &gq_tracks, ne)?;

    Ok(DecoratedGraph {
        graph: gq,
        base: g.clone(),
        kind: DecorationKind::Quad,
        color: Some(color),
        roles,
        face_origin,
        square_of_edge: Some(square_of_edge),
        external_of_dart: Some(external_of_dart),
        base_tracks: Some(base_tracks),
        tracks: Some(gq_tracks),
        pairs: Some(pairs),
        not_isoradial,
    })
}

fn set_origin(
    face_origin: &mut [Option<FaceOrigin>],
    f: FaceId,
    origin: FaceOrigin,
) -> Result<(), LatticeError> {
    if face_origin[f].is_some() {
        return Err(LatticeError::MalformedEmbedding(format!(
            "face {f} of decoration classified twice"
        )));
    }
    face_origin[f] = Some(origin);
    Ok(())
}

/// Match each strand of the decoration to the base track it shadows, using
/// the external edges it crosses, then split the two strands per base track
/// by homology.
fn pair_strands(
    base_tracks: &TrackSet,
    gq_tracks: &TrackSet,
    ne: usize,
) -> Result<Vec<StrandPair>, LatticeError> {
    let mut fwd: Vec<Option<usize>> = vec![None; base_tracks.tracks.len()];
    let mut bwd: Vec<Option<usize>> = vec![None; base_tracks.tracks.len()];

    for t in &gq_tracks.tracks {
        let strand = &gq_tracks.strands[t.fwd];
        let mut shadow: Option<usize> = None;
        for s in &strand.states {
            let eid = edge_of(s.dart);
            if eid >= 4 * ne {
                let corner = eid - 4 * ne;
                let bt = base_tracks.wall_track[corner];
                match shadow {
                    None => shadow = Some(bt),
                    Some(prev) if prev != bt => {
                        return Err(LatticeError::MalformedEmbedding(format!(
                            "strand {} shadows base tracks {prev} and {bt}",
                            t.fwd
                        )))
                    }
                    _ => {}
                }
            }
        }
        let bt = shadow.ok_or_else(|| {
            LatticeError::MalformedEmbedding(format!(
                "strand {} crosses no external edge",
                t.fwd
            ))
        })?;
        let h = strand.homology;
        let hb = base_tracks.tracks[bt].homology;
        let slot = if hb == [0, 0] {
            // Degenerate base track: no orientation to match, fill in order.
            if fwd[bt].is_none() {
                &mut fwd[bt]
            } else {
                &mut bwd[bt]
            }
        } else if h == hb {
            &mut fwd[bt]
        } else if h == [-hb[0], -hb[1]] {
            &mut bwd[bt]
        } else {
            return Err(LatticeError::MalformedEmbedding(format!(
                "strand {} has homology ({}, {}) but shadows a track with ({}, {})",
                t.fwd, h[0], h[1], hb[0], hb[1]
            )));
        };
        if slot.is_some() {
            return Err(LatticeError::MalformedEmbedding(format!(
                "base track {bt} shadowed twice in the same orientation"
            )));
        }
        *slot = Some(t.fwd);
    }

    (0..base_tracks.tracks.len())
        .map(|bt| match (fwd[bt], bwd[bt]) {
            (Some(f), Some(b)) => Ok(StrandPair {
                track: bt,
                fwd: f,
                bwd: b,
            }),
            _ => Err(LatticeError::MalformedEmbedding(format!(
                "base track {bt} is not shadowed by two strands"
            ))),
        })
        .collect()
}

/// Minimality of the decorated graph as a bipartite dimer graph: its strands
/// neither self-cross nor cross any partner twice in the same direction.
pub fn is_minimal(dg: &DecoratedGraph) -> bool {
    match &dg.tracks {
        Some(ts) => is_minimal_tracks(&dg.graph, ts),
        None => false,
    }
}
