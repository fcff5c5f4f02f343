//! Train-tracks of a periodic torus graph.
//!
//! A train-track is a closed corridor of quad-graph rhombi, each entered and
//! left through opposite corner walls. A corner is identified with the dart
//! it follows counterclockwise: corner `d` spans `(tail(d), face_left(d))`.
//!
//! The corridor walk is driven by a two-phase machine on oriented states.
//! State `(d, A)` crosses edge `e(d)` entering wall `d` and exiting wall
//! `twin(d)`; state `(d, B)` enters wall `sigma_inv(d)` and exits
//! `sigma_inv(twin(d))`. Transitions alternate phases:
//! `(d, A) -> (sigma(twin(d)), B)` and `(d, B) -> (sigma_inv(twin(d)), A)`.
//! Orbits of this map are the oriented tracks; reversing every dart of an
//! orbit yields the same track travelled backwards. During an `A` crossing
//! the head and left face of `d` sit on the track's left, the tail and right
//! face on its right; during a `B` crossing the tail and left face sit on
//! the left.

use super::graph::{twin, DartId, EdgeId, PeriodicGraph};
use super::{Color, LatticeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    A,
    B,
}

/// One oriented crossing of an edge by a track.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrackState {
    pub dart: DartId,
    pub phase: Phase,
}

impl TrackState {
    #[inline]
    pub fn id(self) -> usize {
        2 * self.dart
            + match self.phase {
                Phase::A => 0,
                Phase::B => 1,
            }
    }

    #[inline]
    pub fn from_id(id: usize) -> TrackState {
        TrackState {
            dart: id >> 1,
            phase: if id & 1 == 0 { Phase::A } else { Phase::B },
        }
    }

    /// The same crossing travelled the other way.
    #[inline]
    pub fn reversed(self) -> TrackState {
        TrackState {
            dart: twin(self.dart),
            phase: self.phase,
        }
    }
}

fn next_state(g: &PeriodicGraph, s: TrackState) -> TrackState {
    match s.phase {
        Phase::A => TrackState {
            dart: g.sigma(twin(s.dart)),
            phase: Phase::B,
        },
        Phase::B => TrackState {
            dart: g.sigma_inv(twin(s.dart)),
            phase: Phase::A,
        },
    }
}

/// Corner wall through which the state enters its rhombus.
fn wall_of(g: &PeriodicGraph, s: TrackState) -> DartId {
    match s.phase {
        Phase::A => s.dart,
        Phase::B => g.sigma_inv(s.dart),
    }
}

/// An oriented track: one orbit of the crossing machine.
#[derive(Debug, Clone)]
pub struct Strand {
    /// Crossings in travel order.
    pub states: Vec<TrackState>,
    /// Net cell displacement per period.
    pub homology: [i64; 2],
    /// Strand travelling the same corridor backwards.
    pub reverse: usize,
    /// Unoriented track this strand belongs to.
    pub track: usize,
}

/// How forward orientations of tracks were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationRule {
    /// Faces are two-colored; forward keeps white faces on the left.
    DualBipartite,
    /// Vertices are two-colored; forward keeps white vertices on the left.
    PrimalBipartite,
    /// Forward enters the track's lowest corner wall in phase `A`.
    LowestEdge,
}

/// An unoriented track together with its chosen forward orientation.
#[derive(Debug, Clone)]
pub struct TrainTrack {
    pub id: usize,
    /// Strand travelling the forward orientation.
    pub fwd: usize,
    /// Strand travelling the backward orientation.
    pub bwd: usize,
    /// Corner walls in forward travel order.
    pub walls: Vec<DartId>,
    /// Homology of the forward orientation.
    pub homology: [i64; 2],
    pub orientation: OrientationRule,
}

#[derive(Debug, Clone)]
pub struct TrackSet {
    pub strands: Vec<Strand>,
    pub tracks: Vec<TrainTrack>,
    /// Strand containing each state, indexed by `TrackState::id`.
    pub state_strand: Vec<usize>,
    /// Track whose corridor crosses each corner wall, indexed by corner dart.
    pub wall_track: Vec<usize>,
    pub rule: OrientationRule,
}

impl TrackSet {
    pub fn strand_of(&self, s: TrackState) -> usize {
        self.state_strand[s.id()]
    }

    pub fn track_of(&self, s: TrackState) -> usize {
        self.strands[self.state_strand[s.id()]].track
    }

    /// Track crossed by the phase-`A` chord of an edge.
    pub fn track_a(&self, e: EdgeId) -> usize {
        self.track_of(TrackState {
            dart: 2 * e,
            phase: Phase::A,
        })
    }

    /// Track crossed by the phase-`B` chord of an edge.
    pub fn track_b(&self, e: EdgeId) -> usize {
        self.track_of(TrackState {
            dart: 2 * e,
            phase: Phase::B,
        })
    }

    /// Is this strand its track's forward orientation?
    pub fn is_forward(&self, strand: usize) -> bool {
        self.tracks[self.strands[strand].track].fwd == strand
    }
}

/// Decompose the graph into train-tracks and orient them, preferring the
/// dual coloring rule, then the primal one, then the lowest-wall fallback.
pub fn extract_train_tracks(g: &PeriodicGraph) -> Result<TrackSet, LatticeError> {
    let mut ts = raw_track_set(g);
    let rule = if g.dual_bipartite_coloring().is_some() {
        OrientationRule::DualBipartite
    } else if g.bipartite_coloring().is_some() {
        OrientationRule::PrimalBipartite
    } else {
        OrientationRule::LowestEdge
    };
    orient_tracks(g, &mut ts, rule)?;
    Ok(ts)
}

fn raw_track_set(g: &PeriodicGraph) -> TrackSet {
    let n_states = 2 * g.n_darts();
    let mut state_strand = vec![usize::MAX; n_states];
    let mut strands: Vec<Strand> = Vec::new();

    for start in 0..n_states {
        if state_strand[start] != usize::MAX {
            continue;
        }
        let sid = strands.len();
        let mut states = Vec::new();
        let mut homology = [0i64, 0];
        let mut s = TrackState::from_id(start);
        loop {
            state_strand[s.id()] = sid;
            let sh = g.shift(s.dart);
            homology[0] += sh[0];
            homology[1] += sh[1];
            states.push(s);
            s = next_state(g, s);
            if s.id() == start {
                break;
            }
        }
        strands.push(Strand {
            states,
            homology,
            reverse: usize::MAX,
            track: usize::MAX,
        });
    }

    for sid in 0..strands.len() {
        let rev = state_strand[strands[sid].states[0].reversed().id()];
        strands[sid].reverse = rev;
    }

    let mut tracks: Vec<TrainTrack> = Vec::new();
    for sid in 0..strands.len() {
        if strands[sid].track != usize::MAX {
            continue;
        }
        let tid = tracks.len();
        let rev = strands[sid].reverse;
        strands[sid].track = tid;
        strands[rev].track = tid;
        tracks.push(TrainTrack {
            id: tid,
            fwd: sid,
            bwd: rev,
            walls: Vec::new(),
            homology: strands[sid].homology,
            orientation: OrientationRule::LowestEdge,
        });
    }

    let mut wall_track = vec![usize::MAX; g.n_darts()];
    for (sid, strand) in strands.iter().enumerate() {
        let tid = strand.track;
        if tracks[tid].fwd != sid {
            continue;
        }
        for &s in &strand.states {
            wall_track[wall_of(g, s)] = tid;
        }
    }
    // Walls of the reverse strands coincide as a set, so every corner is
    // covered exactly once.
    debug_assert!(wall_track.iter().all(|&t| t != usize::MAX));

    TrackSet {
        strands,
        tracks,
        state_strand,
        wall_track,
        rule: OrientationRule::LowestEdge,
    }
}

/// Choose each track's forward orientation according to `rule`.
pub fn orient_tracks(
    g: &PeriodicGraph,
    ts: &mut TrackSet,
    rule: OrientationRule,
) -> Result<(), LatticeError> {
    enum Side {
        Faces(Vec<Color>),
        Vertices(Vec<Color>),
        None,
    }
    let side = match rule {
        OrientationRule::DualBipartite => Side::Faces(g.dual_bipartite_coloring().ok_or_else(
            || LatticeError::NotBipartite("face two-coloring required and absent".into()),
        )?),
        OrientationRule::PrimalBipartite => Side::Vertices(g.bipartite_coloring().ok_or_else(
            || LatticeError::NotBipartite("vertex two-coloring required and absent".into()),
        )?),
        OrientationRule::LowestEdge => Side::None,
    };

    for tid in 0..ts.tracks.len() {
        let (a, b) = (ts.tracks[tid].fwd, ts.tracks[tid].bwd);
        let fwd = match &side {
            Side::Faces(colors) => {
                // The left side of a strand carries the faces
                // face_left(dart) of its states; their color is constant
                // along a strand when the coloring exists.
                let class = |sid: usize| -> Result<Color, LatticeError> {
                    let states = &ts.strands[sid].states;
                    let c = colors[g.face_left(states[0].dart)];
                    for &s in states {
                        if colors[g.face_left(s.dart)] != c {
                            return Err(LatticeError::MalformedEmbedding(format!(
                                "track {tid} sees both face colors on its left"
                            )));
                        }
                    }
                    Ok(c)
                };
                match (class(a)?, class(b)?) {
                    (Color::White, Color::Black) => a,
                    (Color::Black, Color::White) => b,
                    _ => {
                        return Err(LatticeError::MalformedEmbedding(format!(
                            "track {tid} has equal left-face colors in both directions"
                        )))
                    }
                }
            }
            Side::Vertices(colors) => {
                // The left side carries head(dart) in phase A and tail(dart)
                // in phase B.
                let class = |sid: usize| -> Result<Color, LatticeError> {
                    let states = &ts.strands[sid].states;
                    let left = |s: TrackState| match s.phase {
                        Phase::A => g.head(s.dart),
                        Phase::B => g.tail(s.dart),
                    };
                    let c = colors[left(states[0])];
                    for &s in states {
                        if colors[left(s)] != c {
                            return Err(LatticeError::MalformedEmbedding(format!(
                                "track {tid} sees both vertex colors on its left"
                            )));
                        }
                    }
                    Ok(c)
                };
                match (class(a)?, class(b)?) {
                    (Color::White, Color::Black) => a,
                    (Color::Black, Color::White) => b,
                    _ => {
                        return Err(LatticeError::MalformedEmbedding(format!(
                            "track {tid} has equal left-vertex colors in both directions"
                        )))
                    }
                }
            }
            Side::None => {
                let min_wall = ts.strands[a]
                    .states
                    .iter()
                    .map(|&s| wall_of(g, s))
                    .min()
                    .expect("strand has at least one state");
                ts.state_strand[TrackState {
                    dart: min_wall,
                    phase: Phase::A,
                }
                .id()]
            }
        };
        let bwd = if fwd == a { b } else { a };
        let walls = ts.strands[fwd]
            .states
            .iter()
            .map(|&s| wall_of(g, s))
            .collect();
        let t = &mut ts.tracks[tid];
        t.fwd = fwd;
        t.bwd = bwd;
        t.walls = walls;
        t.homology = ts.strands[fwd].homology;
        t.orientation = rule;
    }
    ts.rule = rule;
    Ok(())
}

#[derive(Debug, Clone)]
pub struct IsoradialReport {
    pub isoradial: bool,
    pub violations: Vec<String>,
}

/// Test the track-theoretic criterion for the graph to admit an isoradial
/// immersion: no track crosses itself, no track is null-homologous, and any
/// two distinct tracks cross exactly `|det(h1, h2)|` times per period.
pub fn is_isoradial(g: &PeriodicGraph, ts: &TrackSet) -> IsoradialReport {
    let mut violations = Vec::new();

    for (tid, t) in ts.tracks.iter().enumerate() {
        if t.homology == [0, 0] {
            violations.push(format!("track {tid} is null-homologous"));
        }
    }

    let nt = ts.tracks.len();
    let mut counts = vec![0usize; nt * nt];
    for e in 0..g.n_edges() {
        let ta = ts.track_a(e);
        let tb = ts.track_b(e);
        if ta == tb {
            violations.push(format!("track {ta} crosses itself at edge {e}"));
        } else {
            let (i, j) = (ta.min(tb), ta.max(tb));
            counts[i * nt + j] += 1;
        }
    }

    for i in 0..nt {
        for j in (i + 1)..nt {
            let hi = ts.tracks[i].homology;
            let hj = ts.tracks[j].homology;
            let det = (hi[0] * hj[1] - hi[1] * hj[0]).unsigned_abs() as usize;
            let n = counts[i * nt + j];
            if n != det {
                violations.push(format!(
                    "tracks {i} and {j} cross {n} times per period, expected {det}"
                ));
            }
        }
    }

    IsoradialReport {
        isoradial: violations.is_empty(),
        violations,
    }
}

/// Signed crossings between the forward orientations of two tracks at the
/// edges where they cross, each tagged with its position along both tracks.
struct Crossing {
    sign: i64,
    pos_i: usize,
    pos_j: usize,
}

fn crossings_between(g: &PeriodicGraph, ts: &TrackSet, i: usize, j: usize) -> Vec<Crossing> {
    let fwd_i = ts.tracks[i].fwd;
    let fwd_j = ts.tracks[j].fwd;
    let pos = |sid: usize, s: TrackState| -> Option<usize> {
        if ts.state_strand[s.id()] != sid {
            return None;
        }
        ts.strands[sid].states.iter().position(|&t| t == s)
    };
    let mut out = Vec::new();
    for e in 0..g.n_edges() {
        let (ta, tb) = (ts.track_a(e), ts.track_b(e));
        if (ta, tb) != (i, j) && (ta, tb) != (j, i) {
            continue;
        }
        // Forward states crossing this edge: exactly one orientation of each
        // chord belongs to each forward strand.
        let a_state = [TrackState { dart: 2 * e, phase: Phase::A }, TrackState { dart: 2 * e + 1, phase: Phase::A }]
            .into_iter()
            .find(|&s| ts.state_strand[s.id()] == if ta == i { fwd_i } else { fwd_j });
        let b_state = [TrackState { dart: 2 * e, phase: Phase::B }, TrackState { dart: 2 * e + 1, phase: Phase::B }]
            .into_iter()
            .find(|&s| ts.state_strand[s.id()] == if tb == i { fwd_i } else { fwd_j });
        let (Some(sa), Some(sb)) = (a_state, b_state) else {
            continue;
        };
        // With both chords crossing the same dart, the A direction points
        // into the right face and the B direction into the left face of the
        // shared dart; that crossing is positive as (A, B).
        let sign_ab = if sa.dart == sb.dart { 1 } else { -1 };
        let (sign, si, sj) = if ta == i {
            (sign_ab, sa, sb)
        } else {
            (-sign_ab, sb, sa)
        };
        let pos_i = pos(fwd_i, si).expect("state located on track i's forward strand");
        let pos_j = pos(fwd_j, sj).expect("state located on track j's forward strand");
        out.push(Crossing { sign, pos_i, pos_j });
    }
    out
}

/// Minimality of a track system: no track crosses itself, and no two tracks
/// cross twice in the same direction. For track pairs with independent
/// homology this forces exactly `|det|` crossings, all of one sign; for
/// parallel pairs the crossing signs must alternate along both corridors.
pub fn is_minimal_tracks(g: &PeriodicGraph, ts: &TrackSet) -> bool {
    for e in 0..g.n_edges() {
        if ts.track_a(e) == ts.track_b(e) {
            return false;
        }
    }
    let nt = ts.tracks.len();
    for i in 0..nt {
        for j in (i + 1)..nt {
            let hi = ts.tracks[i].homology;
            let hj = ts.tracks[j].homology;
            let det = hi[0] * hj[1] - hi[1] * hj[0];
            let mut cs = crossings_between(g, ts, i, j);
            if det != 0 {
                if cs.len() != det.unsigned_abs() as usize {
                    return false;
                }
                if cs.iter().any(|c| c.sign != det.signum()) {
                    return false;
                }
            } else {
                // Parallel tracks: consecutive crossings along either
                // corridor must alternate in sign.
                if cs.is_empty() {
                    continue;
                }
                if !cs.len().is_multiple_of(2) {
                    return false;
                }
                cs.sort_by_key(|c| c.pos_i);
                if !alternating(&cs) {
                    return false;
                }
                cs.sort_by_key(|c| c.pos_j);
                if !alternating(&cs) {
                    return false;
                }
            }
        }
    }
    true
}

fn alternating(cs: &[Crossing]) -> bool {
    cs.windows(2).all(|w| w[0].sign != w[1].sign) && cs[cs.len() - 1].sign != cs[0].sign
}
