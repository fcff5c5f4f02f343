use frustrix::lattice::PeriodicGraph;

/// Two vertices joined by a pair of parallel contractible edges (a bigon),
/// plus one edge winding in each torus direction. Valid rotation system,
/// but its tracks self-cross, so no isoradial immersion exists.
pub fn bigon() -> PeriodicGraph {
    PeriodicGraph::new(
        2,
        &[
            (0, 1, [0, 0]),
            (0, 1, [0, 0]),
            (1, 0, [1, 0]),
            (1, 0, [0, 1]),
        ],
        vec![vec![0, 2, 5, 7], vec![3, 1, 4, 6]],
    )
    .expect("bigon graph is a valid torus embedding")
}
