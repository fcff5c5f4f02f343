//! Rotation systems with `Z^2` voltages: periodic graphs embedded in the torus.
//!
//! A graph is stored through its darts (half-edges). Edge `e` owns darts
//! `2e` and `2e+1`, exchanged by [`twin`]; dart `2e` runs from the first
//! endpoint to the second. Every dart knows its tail vertex and the cell
//! offset of its head relative to its tail (its voltage). Faces are the
//! orbits of `d -> sigma^{-1}(twin(d))`; traversed in orbit order they keep
//! the face on the left of each dart, so orbits run counterclockwise.

use super::{Color, LatticeError};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type DartId = usize;
pub type FaceId = usize;

/// Cell offset of a dart's head relative to its tail.
pub type Cell = [i64; 2];

/// The other dart of the same edge.
#[inline]
pub const fn twin(d: DartId) -> DartId {
    d ^ 1
}

/// The edge owning a dart.
#[inline]
pub const fn edge_of(d: DartId) -> EdgeId {
    d >> 1
}

#[derive(Debug, Clone)]
pub struct PeriodicGraph {
    tails: Vec<VertexId>,
    shifts: Vec<Cell>,
    sigma: Vec<DartId>,
    sigma_inv: Vec<DartId>,
    rotations: Vec<Vec<DartId>>,
    faces: Vec<Vec<DartId>>,
    face_of: Vec<FaceId>,
    nx: u32,
    ny: u32,
}

impl PeriodicGraph {
    /// Build a torus graph from edge endpoints with voltages and per-vertex
    /// counterclockwise rotations given as dart lists.
    pub fn new(
        n_vertices: usize,
        edges: &[(VertexId, VertexId, Cell)],
        rotations: Vec<Vec<DartId>>,
    ) -> Result<Self, LatticeError> {
        let n_darts = 2 * edges.len();
        if rotations.len() != n_vertices {
            return Err(LatticeError::InvalidInput(format!(
                "expected {} rotation lists, got {}",
                n_vertices,
                rotations.len()
            )));
        }
        let mut tails = vec![usize::MAX; n_darts];
        let mut shifts = Vec::with_capacity(n_darts);
        for (e, &(u, v, s)) in edges.iter().enumerate() {
            if u >= n_vertices || v >= n_vertices {
                return Err(LatticeError::InvalidInput(format!(
                    "edge {e} endpoint out of range"
                )));
            }
            tails[2 * e] = u;
            tails[2 * e + 1] = v;
            shifts.push(s);
            shifts.push([-s[0], -s[1]]);
        }

        let mut seen = vec![false; n_darts];
        for (v, rot) in rotations.iter().enumerate() {
            for &d in rot {
                if d >= n_darts {
                    return Err(LatticeError::InvalidInput(format!(
                        "rotation at vertex {v} names dart {d} out of range"
                    )));
                }
                if seen[d] {
                    return Err(LatticeError::InvalidInput(format!(
                        "dart {d} appears twice across rotations"
                    )));
                }
                seen[d] = true;
                if tails[d] != v {
                    return Err(LatticeError::InvalidInput(format!(
                        "dart {d} listed at vertex {v} but its tail is {}",
                        tails[d]
                    )));
                }
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(LatticeError::InvalidInput(format!(
                "dart {d} missing from rotations"
            )));
        }

        let mut sigma = vec![0; n_darts];
        let mut sigma_inv = vec![0; n_darts];
        for rot in &rotations {
            let k = rot.len();
            for i in 0..k {
                let d = rot[i];
                let nd = rot[(i + 1) % k];
                sigma[d] = nd;
                sigma_inv[nd] = d;
            }
        }

        let mut g = PeriodicGraph {
            tails,
            shifts,
            sigma,
            sigma_inv,
            rotations,
            faces: Vec::new(),
            face_of: Vec::new(),
            nx: 1,
            ny: 1,
        };
        g.rebuild_faces();
        g.validate()?;
        Ok(g)
    }

    fn rebuild_faces(&mut self) {
        let n = self.n_darts();
        self.faces.clear();
        self.face_of = vec![usize::MAX; n];
        for start in 0..n {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let fid = self.faces.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = fid;
                orbit.push(d);
                d = self.sigma_inv[twin(d)];
                if d == start {
                    break;
                }
            }
            self.faces.push(orbit);
        }
    }

    fn validate(&self) -> Result<(), LatticeError> {
        // Each face must close up in the plane: boundary voltages sum to zero.
        for (f, orbit) in self.faces.iter().enumerate() {
            let mut total = [0i64, 0];
            for &d in orbit {
                total[0] += self.shifts[d][0];
                total[1] += self.shifts[d][1];
            }
            if total != [0, 0] {
                return Err(LatticeError::MalformedEmbedding(format!(
                    "face {f} does not close: boundary voltage ({}, {})",
                    total[0], total[1]
                )));
            }
        }

        let euler =
            self.n_vertices() as i64 - self.n_edges() as i64 + self.faces.len() as i64;
        if euler != 0 {
            return Err(LatticeError::MalformedEmbedding(format!(
                "Euler characteristic {euler}, expected 0 for a torus"
            )));
        }

        if self.n_vertices() > 0 {
            let mut reached = vec![false; self.n_vertices()];
            let mut stack = vec![0];
            reached[0] = true;
            while let Some(v) = stack.pop() {
                for &d in &self.rotations[v] {
                    let w = self.head(d);
                    if !reached[w] {
                        reached[w] = true;
                        stack.push(w);
                    }
                }
            }
            if reached.iter().any(|r| !r) {
                return Err(LatticeError::MalformedEmbedding(
                    "graph is not connected".into(),
                ));
            }
        }

        // Cycle voltages must span all of Z^2, otherwise the embedding does
        // not wind around both torus directions.
        let cycles = self.cycle_voltages();
        let mut index = 0i64;
        for i in 0..cycles.len() {
            for j in (i + 1)..cycles.len() {
                let det = cycles[i][0] * cycles[j][1] - cycles[i][1] * cycles[j][0];
                index = gcd(index, det);
            }
        }
        if index.abs() != 1 {
            return Err(LatticeError::MalformedEmbedding(format!(
                "cycle voltages span a sublattice of index {} instead of Z^2",
                index.abs()
            )));
        }
        Ok(())
    }

    /// Voltages of the fundamental cycles induced by a spanning tree.
    fn cycle_voltages(&self) -> Vec<Cell> {
        let n = self.n_vertices();
        let mut potential: Vec<Option<Cell>> = vec![None; n];
        let mut in_tree = vec![false; self.n_darts()];
        potential[0] = Some([0, 0]);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let pv = potential[v].unwrap();
            for &d in &self.rotations[v] {
                let w = self.head(d);
                if potential[w].is_none() {
                    potential[w] =
                        Some([pv[0] + self.shifts[d][0], pv[1] + self.shifts[d][1]]);
                    in_tree[d] = true;
                    in_tree[twin(d)] = true;
                    stack.push(w);
                }
            }
        }
        let mut cycles = Vec::new();
        for e in 0..self.n_edges() {
            let d = 2 * e;
            if in_tree[d] {
                continue;
            }
            let pu = potential[self.tail(d)].unwrap();
            let pw = potential[self.head(d)].unwrap();
            cycles.push([
                pu[0] + self.shifts[d][0] - pw[0],
                pu[1] + self.shifts[d][1] - pw[1],
            ]);
        }
        cycles
    }

    pub fn n_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn n_edges(&self) -> usize {
        self.shifts.len() / 2
    }

    pub fn n_darts(&self) -> usize {
        self.shifts.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn tail(&self, d: DartId) -> VertexId {
        self.tails[d]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.tails[twin(d)]
    }

    pub fn shift(&self, d: DartId) -> Cell {
        self.shifts[d]
    }

    /// Next dart counterclockwise around the tail of `d`.
    pub fn sigma(&self, d: DartId) -> DartId {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: DartId) -> DartId {
        self.sigma_inv[d]
    }

    /// Counterclockwise rotation at a vertex.
    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    /// Boundary darts of a face, counterclockwise, face on the left.
    pub fn face(&self, f: FaceId) -> &[DartId] {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Vec<DartId>] {
        &self.faces
    }

    /// Face on the left of `d`.
    pub fn face_left(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    /// Face on the right of `d`.
    pub fn face_right(&self, d: DartId) -> FaceId {
        self.face_of[twin(d)]
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    /// Fundamental-domain extent recorded for this graph.
    pub fn domain(&self) -> (u32, u32) {
        (self.nx, self.ny)
    }

    pub(crate) fn set_domain(&mut self, nx: u32, ny: u32) {
        self.nx = nx;
        self.ny = ny;
    }

    /// Two-color the vertices, vertex 0 white. `None` if not bipartite.
    pub fn bipartite_coloring(&self) -> Option<Vec<Color>> {
        let n = self.n_vertices();
        let mut color: Vec<Option<Color>> = vec![None; n];
        color[0] = Some(Color::White);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let cv = color[v].unwrap();
            for &d in &self.rotations[v] {
                let w = self.head(d);
                match color[w] {
                    None => {
                        color[w] = Some(cv.other());
                        stack.push(w);
                    }
                    Some(cw) => {
                        if cw == cv {
                            return None;
                        }
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Two-color the faces so the two sides of every edge differ, face 0
    /// white. `None` if the dual is not bipartite.
    pub fn dual_bipartite_coloring(&self) -> Option<Vec<Color>> {
        let n = self.n_faces();
        let mut color: Vec<Option<Color>> = vec![None; n];
        color[0] = Some(Color::White);
        let mut stack = vec![0usize];
        while let Some(f) = stack.pop() {
            let cf = color[f].unwrap();
            for &d in &self.faces[f] {
                let g = self.face_right(d);
                match color[g] {
                    None => {
                        color[g] = Some(cf.other());
                        stack.push(g);
                    }
                    Some(cg) => {
                        if cg == cf {
                            return None;
                        }
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// The `nx` by `ny` periodic cover: each vertex, edge and dart is copied
    /// once per cell, and voltages record fundamental-domain crossings of the
    /// enlarged torus.
    pub fn cover(&self, nx: u32, ny: u32) -> PeriodicGraph {
        assert!(nx >= 1 && ny >= 1, "cover requires nx, ny >= 1");
        let (nx, ny) = (nx as i64, ny as i64);
        let nc = (nx * ny) as usize;
        let cell_index = |i: i64, j: i64| -> usize { (j * nx + i) as usize };

        let mut edges = Vec::with_capacity(self.n_edges() * nc);
        for e in 0..self.n_edges() {
            let d = 2 * e;
            let u = self.tail(d);
            let v = self.head(d);
            let s = self.shift(d);
            for j in 0..ny {
                for i in 0..nx {
                    let hx = i + s[0];
                    let hy = j + s[1];
                    let (ci, sx) = (hx.rem_euclid(nx), hx.div_euclid(nx));
                    let (cj, sy) = (hy.rem_euclid(ny), hy.div_euclid(ny));
                    edges.push((
                        u * nc + cell_index(i, j),
                        v * nc + cell_index(ci, cj),
                        [sx, sy],
                    ));
                }
            }
        }

        // Copy of dart d whose tail sits in cell (i, j). Edge copies are
        // anchored at the tail cell of their even dart.
        let dart_copy = |d: DartId, i: i64, j: i64| -> DartId {
            let e = edge_of(d);
            if d.is_multiple_of(2) {
                2 * (e * nc + cell_index(i, j))
            } else {
                let s = self.shift(2 * e);
                let ai = (i - s[0]).rem_euclid(nx);
                let aj = (j - s[1]).rem_euclid(ny);
                2 * (e * nc + cell_index(ai, aj)) + 1
            }
        };

        let mut rotations = Vec::with_capacity(self.n_vertices() * nc);
        for v in 0..self.n_vertices() {
            for j in 0..ny {
                for i in 0..nx {
                    let rot = self.rotations[v]
                        .iter()
                        .map(|&d| dart_copy(d, i, j))
                        .collect();
                    rotations.push(rot);
                }
            }
        }

        let mut g = PeriodicGraph::new(self.n_vertices() * nc, &edges, rotations)
            .expect("cover of a valid torus graph is valid");
        g.set_domain(self.nx * nx as u32, self.ny * ny as u32);
        g
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
