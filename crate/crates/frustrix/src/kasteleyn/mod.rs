//! Kasteleyn machinery on torus graphs: sign and phase assignments,
//! Laurent-polynomial Kasteleyn matrices, sparse determinants, and the
//! structural checks used on characteristic polynomials (central symmetry,
//! proportionality up to constants and coordinate scalings).

pub mod det;
pub mod matrix;
pub mod poly;
pub mod signs;

use thiserror::Error;

/// Errors from sign assignment, matrix assembly and polynomial comparison.
#[derive(Debug, Clone, Error)]
pub enum KasteleynError {
    /// No sign assignment satisfies the face parity conditions.
    #[error("no sign assignment: {0}")]
    NoAssignment(String),
    /// A bipartite-mode operation was given a graph without a 2-coloring.
    #[error("not bipartite: {0}")]
    NotBipartite(String),
    /// Edge weights are absent or unusable.
    #[error("missing weight: {0}")]
    MissingWeight(String),
    /// Determinant of a rectangular matrix.
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    /// Matrix dimension or interpolation grid outside supported bounds.
    #[error("degree bound exceeded: {0}")]
    DegreeBoundExceeded(String),
    /// Two polynomials cannot be proportional because their supports differ.
    #[error("support mismatch: {0}")]
    SupportMismatch(String),
}

pub use det::{det_laurent, det_laurent_via_cofactors, det_laurent_via_grid};
pub use matrix::{assemble_kmatrix, KMatrix};
pub use poly::{
    check_central_symmetry, proportionality, proportionality_scaled, LaurentPoly2, ScaledFit,
};
pub use signs::{all_valid_sign_assignments, find_kasteleyn_signs, kasteleyn_violations};
