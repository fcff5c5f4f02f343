//! Kasteleyn matrices with Laurent-polynomial entries.
//!
//! A dart with voltage `(sx, sy)` contributes the monomial `z^sx w^sy`: the
//! exponents count signed crossings of the two cut loops of the torus. In the
//! non-bipartite case rows and columns both run over all vertices and the
//! dart direction carries the sign, so `K(z,w)^T = -K(1/z, 1/w)` holds by
//! construction. In the bipartite case rows are white vertices, columns are
//! black, entries are built from the white-to-black dart, and the sign is the
//! real phase of the edge.

use num_complex::Complex64;

use crate::lattice::{edge_of, Color, PeriodicGraph, VertexId};

use super::poly::LaurentPoly2;
use super::KasteleynError;

/// A matrix of sparse Laurent polynomials indexed by graph vertices.
#[derive(Debug, Clone)]
pub struct KMatrix {
    /// Vertex behind each row (all vertices, or the white ones).
    pub rows: Vec<VertexId>,
    /// Vertex behind each column (all vertices, or the black ones).
    pub cols: Vec<VertexId>,
    /// `entries[r][c]` accumulates every dart from `rows[r]` to `cols[c]`.
    pub entries: Vec<Vec<LaurentPoly2>>,
}

impl KMatrix {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    /// Max coefficient gap between `K(z,w)^T` and `-K(1/z,1/w)`.
    pub fn skew_symmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.n_rows() {
            for c in 0..self.n_cols() {
                let mirrored = -&self.entries[c][r].reciprocal_args();
                worst = worst.max(self.entries[r][c].max_coeff_distance(&mirrored));
            }
        }
        worst
    }
}

/// Builds the Kasteleyn matrix of a torus graph from per-edge weights and a
/// sign (phase) assignment.
pub fn assemble_kmatrix(
    g: &PeriodicGraph,
    weights: &[Complex64],
    signs: &[i8],
    bipartite: bool,
) -> Result<KMatrix, KasteleynError> {
    let ne = g.n_edges();
    if weights.len() != ne {
        return Err(KasteleynError::MissingWeight(format!(
            "expected {} edge weights, got {}",
            ne,
            weights.len()
        )));
    }
    for (e, w) in weights.iter().enumerate() {
        if !w.re.is_finite() || !w.im.is_finite() {
            return Err(KasteleynError::MissingWeight(format!(
                "weight of edge {e} is not finite"
            )));
        }
    }
    assert_eq!(signs.len(), ne, "one sign per edge");

    if bipartite {
        let colors = g.bipartite_coloring().ok_or_else(|| {
            KasteleynError::NotBipartite("phase matrix requires a bipartite coloring".into())
        })?;
        let rows: Vec<VertexId> = (0..g.n_vertices())
            .filter(|&v| colors[v] == Color::White)
            .collect();
        let cols: Vec<VertexId> = (0..g.n_vertices())
            .filter(|&v| colors[v] == Color::Black)
            .collect();
        let mut row_of = vec![usize::MAX; g.n_vertices()];
        let mut col_of = vec![usize::MAX; g.n_vertices()];
        for (i, &v) in rows.iter().enumerate() {
            row_of[v] = i;
        }
        for (i, &v) in cols.iter().enumerate() {
            col_of[v] = i;
        }
        let mut entries = vec![vec![LaurentPoly2::zero(); cols.len()]; rows.len()];
        for d in 0..g.n_darts() {
            if colors[g.tail(d)] != Color::White {
                continue;
            }
            let e = edge_of(d);
            let s = g.shift(d);
            let coeff = weights[e] * signs[e] as f64;
            let term = LaurentPoly2::monomial(s[0], s[1], coeff);
            let cell = &mut entries[row_of[g.tail(d)]][col_of[g.head(d)]];
            *cell = &*cell + &term;
        }
        Ok(KMatrix { rows, cols, entries })
    } else {
        let n = g.n_vertices();
        let mut entries = vec![vec![LaurentPoly2::zero(); n]; n];
        for d in 0..g.n_darts() {
            let e = edge_of(d);
            let s = g.shift(d);
            let eta = signs[e] as f64 * if d % 2 == 0 { 1.0 } else { -1.0 };
            let term = LaurentPoly2::monomial(s[0], s[1], weights[e] * eta);
            let cell = &mut entries[g.tail(d)][g.head(d)];
            *cell = &*cell + &term;
        }
        Ok(KMatrix {
            rows: (0..n).collect(),
            cols: (0..n).collect(),
            entries,
        })
    }
}
