//! Standard periodic graphs with configurable fundamental domains.

use super::dual::build_dual;
use super::graph::PeriodicGraph;

/// Triangular lattice on an `nx` by `ny` torus. The 1x1 domain has one
/// vertex, three edges with voltages (1,0), (0,1), (1,1) and two triangular
/// faces.
pub fn triangular(nx: u32, ny: u32) -> PeriodicGraph {
    // Darts: a = 0/1, b = 2/3, c = 4/5; ccw order a+, c+, b+, a-, c-, b-.
    let base = PeriodicGraph::new(
        1,
        &[(0, 0, [1, 0]), (0, 0, [0, 1]), (0, 0, [1, 1])],
        vec![vec![0, 4, 2, 1, 5, 3]],
    )
    .expect("triangular base is a valid torus graph");
    base.cover(nx, ny)
}

/// Square lattice on an `nx` by `ny` torus. The 1x1 domain has one vertex,
/// two edges with voltages (1,0), (0,1) and one quadrilateral face.
pub fn square(nx: u32, ny: u32) -> PeriodicGraph {
    let base = PeriodicGraph::new(
        1,
        &[(0, 0, [1, 0]), (0, 0, [0, 1])],
        vec![vec![0, 2, 1, 3]],
    )
    .expect("square base is a valid torus graph");
    base.cover(nx, ny)
}

/// Hexagonal lattice on an `nx` by `ny` torus: the dual of the triangular
/// lattice. The 1x1 domain has two vertices, three edges and one face.
pub fn hexagonal(nx: u32, ny: u32) -> PeriodicGraph {
    build_dual(&triangular(1, 1)).cover(nx, ny)
}
