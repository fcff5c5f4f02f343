//! Periodic torus graphs, their train-tracks, and decorated graphs.
//!
//! Everything is built on one plumbing layer: [`graph::PeriodicGraph`]
//! stores a rotation system with `Z^2` voltages. Duality, train-track
//! extraction, the quad and Fisher decorations, angle maps and the discrete
//! Abel map are all derived from dart arithmetic on that structure.

pub mod abel;
pub mod angles;
pub mod decorate;
pub mod dual;
pub mod fisher;
pub mod generators;
pub mod graph;
pub mod io;
pub mod tracks;

use thiserror::Error;

/// Errors produced while building or transforming periodic graphs.
#[derive(Debug, Clone, Error)]
pub enum LatticeError {
    /// Rotation system, voltages and faces do not describe a torus cellulation.
    #[error("malformed embedding: {0}")]
    MalformedEmbedding(String),
    /// An operation requiring a bipartite structure was given a graph without one.
    #[error("not bipartite: {0}")]
    NotBipartite(String),
    /// Incremental accumulation of angle data contradicts itself around a cycle.
    #[error("inconsistent lift: {0}")]
    InconsistentLift(String),
    /// Input data is syntactically or referentially invalid.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Vertex class of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

pub use abel::{discrete_abel, fock_labels, AbelMap};
pub use angles::{reduce_mod_lattice, AngleMap};
pub use decorate::{
    build_GQ, is_minimal, DecoratedGraph, DecorationKind, EdgeRole, FaceOrigin, StrandPair,
};
pub use dual::build_dual;
pub use fisher::build_fisher;
pub use generators::{hexagonal, square, triangular};
pub use graph::{edge_of, twin, Cell, DartId, EdgeId, FaceId, PeriodicGraph, VertexId};
pub use io::{from_json, to_json};
pub use tracks::{
    extract_train_tracks, is_isoradial, orient_tracks, IsoradialReport, OrientationRule, Phase,
    Strand, TrackSet, TrackState, TrainTrack,
};
