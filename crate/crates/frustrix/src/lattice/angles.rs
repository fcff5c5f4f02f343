//! Angle maps on oriented train-tracks.
//!
//! An angle map assigns each base track's forward orientation an explicit
//! complex lift; the backward orientation implicitly carries the forward
//! angle plus a fixed half-period `rho`. Lifts are only reduced modulo the
//! lattice `Z + tau Z` at comparison points, never while accumulating.

use num_complex::Complex64 as C;

use super::decorate::DecoratedGraph;
use super::LatticeError;

/// Reduce modulo `Z + tau Z` to the cell centered at the origin.
pub fn reduce_mod_lattice(z: C, tau: C) -> C {
    let n = (z.im / tau.im).round();
    let w = z - tau * n;
    w - w.re.round()
}

#[derive(Debug, Clone)]
pub struct AngleMap {
    /// Lifted angle of each base track's forward orientation.
    pub alphas: Vec<C>,
    /// Half-period separating the two orientations of a track.
    pub rho: C,
}

impl AngleMap {
    pub fn new(alphas: Vec<C>, rho: C) -> AngleMap {
        AngleMap { alphas, rho }
    }

    /// Angle of a base track's forward orientation.
    pub fn forward(&self, track: usize) -> C {
        self.alphas[track]
    }

    /// Angle of a base track's backward orientation.
    pub fn backward(&self, track: usize) -> C {
        self.alphas[track] + self.rho
    }

    /// Angles of the strands of a quad decoration, indexed by the
    /// decoration's own track ids: the strand shadowing a base track forward
    /// inherits its angle, the backward shadow gets it shifted by `rho`.
    pub fn quad_track_angles(&self, dg: &DecoratedGraph) -> Result<Vec<C>, LatticeError> {
        let ts = dg.tracks.as_ref().ok_or_else(|| {
            LatticeError::InvalidInput("decoration carries no track data".into())
        })?;
        let pairs = dg.pairs.as_ref().ok_or_else(|| {
            LatticeError::InvalidInput("decoration carries no strand pairing".into())
        })?;
        if pairs.len() != self.alphas.len() {
            return Err(LatticeError::InvalidInput(format!(
                "angle map covers {} tracks, decoration has {}",
                self.alphas.len(),
                pairs.len()
            )));
        }
        let mut angles = vec![None; ts.tracks.len()];
        for pair in pairs {
            let tf = ts.strands[pair.fwd].track;
            let tb = ts.strands[pair.bwd].track;
            angles[tf] = Some(self.forward(pair.track));
            angles[tb] = Some(self.backward(pair.track));
        }
        angles
            .into_iter()
            .enumerate()
            .map(|(t, a)| {
                a.ok_or_else(|| {
                    LatticeError::InvalidInput(format!("strand track {t} missing from pairing"))
                })
            })
            .collect()
    }

    /// Do all forward angles lie in `R + c*tau` modulo the lattice?
    pub fn in_class(&self, tau: C, c: f64, tol: f64) -> bool {
        self.alphas.iter().all(|a| {
            let k = (a.im - c * tau.im) / tau.im;
            (k - k.round()).abs() <= tol
        })
    }
}
