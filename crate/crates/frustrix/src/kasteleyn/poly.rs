//! Sparse Laurent polynomials in two variables.
//!
//! Coefficients live on exponent pairs `(i, j)` meaning `z^i w^j`. All
//! arithmetic runs a relative cleanup pass afterwards so that noise from
//! floating-point cancellation never accumulates in the support.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::KasteleynError;

/// Relative magnitude below which a coefficient is treated as numerical noise.
pub const COEFF_CLEANUP_REL: f64 = 1e-13;

/// `c^k` for integer `k` of either sign.
pub(crate) fn cpow(c: Complex64, k: i64) -> Complex64 {
    debug_assert!(k.unsigned_abs() <= i32::MAX as u64);
    c.powi(k as i32)
}

/// A Laurent polynomial `sum c_{ij} z^i w^j` with finite support.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), Complex64>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    i: i64,
    j: i64,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: i64, j: i64, c: Complex64) -> Self {
        let mut terms = BTreeMap::new();
        if c != Complex64::new(0.0, 0.0) {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// Accumulates duplicate exponents, then cleans up.
    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), Complex64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in iter {
            *p.terms.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        p.cleanup();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `z^i w^j`, zero when absent.
    pub fn coeff(&self, i: i64, j: i64) -> Complex64 {
        self.terms
            .get(&(i, j))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Terms in (i, j)-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), Complex64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn support(&self) -> Vec<(i64, i64)> {
        self.terms.keys().copied().collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute exponent per variable, `(max |i|, max |j|)`.
    pub fn support_radius(&self) -> (i64, i64) {
        let mut ri = 0;
        let mut rj = 0;
        for &(i, j) in self.terms.keys() {
            ri = ri.max(i.abs());
            rj = rj.max(j.abs());
        }
        (ri, rj)
    }

    /// Drops coefficients below `COEFF_CLEANUP_REL` times the largest one.
    pub fn cleanup(&mut self) {
        let cut = COEFF_CLEANUP_REL * self.max_abs();
        self.terms.retain(|_, c| c.norm() > cut && c.norm() > 0.0);
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out.cleanup();
        out
    }

    /// `p(1/z, 1/w)`: negates every exponent.
    pub fn reciprocal_args(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((-i, -j), c)).collect(),
        }
    }

    /// `p(±z, ±w)`: flips coefficient signs by exponent parity.
    pub fn negate_args(&self, neg_z: bool, neg_w: bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| {
                    let mut s = 1.0;
                    if neg_z && i.rem_euclid(2) == 1 {
                        s = -s;
                    }
                    if neg_w && j.rem_euclid(2) == 1 {
                        s = -s;
                    }
                    ((i, j), c * s)
                })
                .collect(),
        }
    }

    /// `p(λz, μw)`: multiplies each coefficient by `λ^i μ^j`.
    pub fn scale_args(&self, lambda: Complex64, mu: Complex64) -> Self {
        let mut p = Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| ((i, j), c * cpow(lambda, i) * cpow(mu, j)))
                .collect(),
        };
        p.cleanup();
        p
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c * cpow(z, i) * cpow(w, j))
            .sum()
    }

    /// Largest coefficient gap against `other` over the union of supports.
    pub fn max_coeff_distance(&self, other: &Self) -> f64 {
        let mut d = 0.0f64;
        for (&k, &c) in &self.terms {
            d = d.max((c - other.coeff(k.0, k.1)).norm());
        }
        for (&k, &c) in &other.terms {
            d = d.max((self.coeff(k.0, k.1) - c).norm());
        }
        d
    }

    /// Vertices of the Newton polygon in counterclockwise order, starting at
    /// the lexicographically smallest vertex. Degenerate hulls return the one
    /// or two extreme points.
    pub fn newton_polygon(&self) -> Vec<(i64, i64)> {
        convex_hull(self.support())
    }

    pub fn to_json(&self) -> String {
        let doc = PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| TermJson { i, j, re: c.re, im: c.im })
                .collect(),
        };
        serde_json::to_string(&doc).expect("laurent polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        let doc: PolyJson = serde_json::from_str(s)?;
        Ok(Self::from_terms(
            doc.terms
                .into_iter()
                .map(|t| ((t.i, t.j), Complex64::new(t.re, t.im))),
        ))
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: Self) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&k, &c) in &rhs.terms {
            *out.terms.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        out.cleanup();
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: Self) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&k, &c) in &rhs.terms {
            *out.terms.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= c;
        }
        out.cleanup();
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: Self) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(x, y), &d) in &rhs.terms {
                *out.terms
                    .entry((a + x, b + y))
                    .or_insert(Complex64::new(0.0, 0.0)) += c * d;
            }
        }
        out.cleanup();
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Deviation of `p` from `p(1/z, 1/w)`: `max |c_{ij} - c_{-i,-j}| / max |c|`.
///
/// Zero polynomials report 0.
pub fn check_central_symmetry(p: &LaurentPoly2) -> f64 {
    let m = p.max_abs();
    if m == 0.0 {
        return 0.0;
    }
    let mut worst = 0.0f64;
    for ((i, j), c) in p.terms() {
        worst = worst.max((c - p.coeff(-i, -j)).norm());
    }
    worst / m
}

/// Reference exponent and per-monomial ratios shared by the two fits.
struct SharedRatios {
    anchor: (i64, i64),
    ratios: Vec<((i64, i64), Complex64)>,
}

/// Significant supports must agree; ratios are taken on the shared support,
/// anchored at the exponent with the largest paired magnitude.
fn shared_ratios(p: &LaurentPoly2, q: &LaurentPoly2) -> Result<SharedRatios, KasteleynError> {
    if p.is_zero() || q.is_zero() {
        return Err(KasteleynError::SupportMismatch(
            "zero polynomial has no proportionality class".into(),
        ));
    }
    let cut_p = 1e-9 * p.max_abs();
    let cut_q = 1e-9 * q.max_abs();
    for ((i, j), c) in p.terms() {
        if c.norm() > cut_p && q.coeff(i, j).norm() <= cut_q {
            return Err(KasteleynError::SupportMismatch(format!(
                "monomial z^{i} w^{j} is significant on one side only"
            )));
        }
    }
    for ((i, j), c) in q.terms() {
        if c.norm() > cut_q && p.coeff(i, j).norm() <= cut_p {
            return Err(KasteleynError::SupportMismatch(format!(
                "monomial z^{i} w^{j} is significant on one side only"
            )));
        }
    }
    let mut ratios = Vec::new();
    let mut anchor = None;
    let mut best = -1.0f64;
    for ((i, j), c) in p.terms() {
        let d = q.coeff(i, j);
        if c.norm() > cut_p && d.norm() > cut_q {
            ratios.push(((i, j), c / d));
            let score = c.norm().min(d.norm());
            if score > best {
                best = score;
                anchor = Some((i, j));
            }
        }
    }
    let anchor = anchor.ok_or_else(|| {
        KasteleynError::SupportMismatch("no shared significant monomial".into())
    })?;
    Ok(SharedRatios { anchor, ratios })
}

/// Best constant `c` with `p ≈ c·q` and the relative residual of the fit.
///
/// `c` is the coefficient ratio at the largest-magnitude shared monomial;
/// the residual is `max |p - c·q| / max |p|` over the union of supports.
pub fn proportionality(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
) -> Result<(Complex64, f64), KasteleynError> {
    let shared = shared_ratios(p, q)?;
    let (i0, j0) = shared.anchor;
    let c = p.coeff(i0, j0) / q.coeff(i0, j0);
    let residual = p.max_coeff_distance(&q.scale(c)) / p.max_abs();
    Ok((c, residual))
}

/// Result of fitting `p ≈ c · q(λz, μw)`.
#[derive(Debug, Clone, Copy)]
pub struct ScaledFit {
    pub c: Complex64,
    pub lambda: Complex64,
    pub mu: Complex64,
    pub residual: f64,
}

/// Fits `p ≈ c·q(λz, μw)` from log-coefficient ratios.
///
/// The exponents of `λ, μ` are read off two monomial offsets from the anchor
/// that span the plane; offsets are tried closest-first so that principal
/// logarithms stay on the right branch for mild scalings. Degenerate supports
/// (a single point, or all points collinear) fall back to the minimum-norm
/// solution along the available direction.
pub fn proportionality_scaled(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
) -> Result<ScaledFit, KasteleynError> {
    let shared = shared_ratios(p, q)?;
    let (i0, j0) = shared.anchor;
    let r0 = p.coeff(i0, j0) / q.coeff(i0, j0);

    let mut offsets: Vec<((i64, i64), Complex64)> = shared
        .ratios
        .iter()
        .filter(|&&((i, j), _)| (i, j) != (i0, j0))
        .map(|&((i, j), r)| ((i - i0, j - j0), (r / r0).ln()))
        .collect();
    offsets.sort_by_key(|&((di, dj), _)| (di.abs() + dj.abs(), di, dj));

    let zero = Complex64::new(0.0, 0.0);
    let (ln_lambda, ln_mu) = match offsets.first().copied() {
        None => (zero, zero),
        Some(((di1, dj1), l1)) => {
            match offsets
                .iter()
                .find(|&&((di, dj), _)| di1 * dj - dj1 * di != 0)
                .copied()
            {
                Some(((di2, dj2), l2)) => {
                    let det = (di1 * dj2 - dj1 * di2) as f64;
                    (
                        (l1 * dj2 as f64 - l2 * dj1 as f64) / det,
                        (l2 * di1 as f64 - l1 * di2 as f64) / det,
                    )
                }
                None => {
                    // Collinear support: spread the single log equation
                    // minimum-norm along the offset direction.
                    let n2 = (di1 * di1 + dj1 * dj1) as f64;
                    (l1 * di1 as f64 / n2, l1 * dj1 as f64 / n2)
                }
            }
        }
    };
    let lambda = ln_lambda.exp();
    let mu = ln_mu.exp();
    let c = p.coeff(i0, j0) / (q.coeff(i0, j0) * cpow(lambda, i0) * cpow(mu, j0));
    let residual = p.max_coeff_distance(&q.scale_args(lambda, mu).scale(c)) / p.max_abs();
    Ok(ScaledFit { c, lambda, mu, residual })
}
