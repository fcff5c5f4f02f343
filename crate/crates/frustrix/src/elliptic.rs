//! Jacobi theta functions with half-integer characteristics, elliptic moduli,
//! Jacobi elliptic functions, and a battery of identity checks.
//!
//! Conventions: `theta(m, n, z, tau)` follows the characteristic notation
//! with `theta_11(z) = -theta1(pi z, q)`, `theta_10 = theta2`,
//! `theta_00 = theta3`, `theta_01 = theta4`, where `q = exp(i pi tau)`.
//! The complete integral is `K = (pi/2) theta_00(0)^2`; Jacobi functions take
//! the "hatted" argument, i.e. `sn(2K a)` corresponds to torus coordinate `a`.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

pub type C = Complex64;

/// Largest exponent allowed in the analytic prefactor when reducing a theta
/// argument to the fundamental cell; beyond this `exp` would overflow f64.
const EXP_CAP: f64 = 700.0;

/// Series truncation: stop once the term bound drops below this relative level.
const SERIES_EPS: f64 = 1e-16;
const SERIES_CAP: usize = 200;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EllipticError {
    #[error("theta series requires Im(tau) > 0, got tau = {0}")]
    NonConvergent(C),
    #[error("argument reduction prefactor overflows: exponent {0:.1}")]
    Overflow(f64),
    #[error("theta series did not converge within {SERIES_CAP} terms")]
    SeriesCap,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole hit: |denominator| = {0:.3e}")]
    PoleHit(f64),
    #[error("value {value} is outside the attainable range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },
    #[error("theta and AGM routes for K disagree: |dK| = {0:.3e}")]
    Inconsistent(f64),
}

pub type EResult<T> = Result<T, EllipticError>;

/// Theta characteristic (m, n), both taken mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaChar {
    pub m: u8,
    pub n: u8,
}

pub const TH00: ThetaChar = ThetaChar { m: 0, n: 0 };
pub const TH01: ThetaChar = ThetaChar { m: 0, n: 1 };
pub const TH10: ThetaChar = ThetaChar { m: 1, n: 0 };
pub const TH11: ThetaChar = ThetaChar { m: 1, n: 1 };

impl ThetaChar {
    pub const fn new(m: u8, n: u8) -> Self {
        Self { m: m & 1, n: n & 1 }
    }

    /// Characteristic shifted by (dm, dn) mod 2.
    pub const fn shifted(self, dm: u8, dn: u8) -> Self {
        Self::new(self.m ^ (dm & 1), self.n ^ (dn & 1))
    }
}

/// Half-period rho = j/2 + (l/2) tau of the lattice Z + tau Z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPeriod {
    pub j: u8,
    pub l: u8,
    pub value: C,
}

impl HalfPeriod {
    pub fn new(j: u8, l: u8, tau: C) -> Self {
        let (j, l) = (j & 1, l & 1);
        Self { j, l, value: 0.5 * C::new(j as f64, 0.0) + 0.5 * (l as f64) * tau }
    }
}

/// Modular parameter with the derived elliptic data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusParams {
    pub tau: C,
    pub q: C,
    pub k: C,
    pub kprime: C,
    /// Complete elliptic integral K(k).
    pub big_k: C,
    /// Complementary integral K(k').
    pub big_k_prime: C,
}

impl TorusParams {
    pub fn new(tau: C) -> EResult<Self> {
        modulus_suite(tau)
    }

    /// Torus with a real elliptic modulus k in (0, 1): tau = i K'/K.
    pub fn from_modulus_k(k: f64) -> EResult<Self> {
        if !(0.0 < k && k < 1.0) {
            return Err(EllipticError::Domain(format!(
                "modulus must lie in (0,1), got {k}"
            )));
        }
        let kp = (1.0 - k * k).sqrt();
        let big_k = complete_elliptic_k(k);
        let big_kp = complete_elliptic_k(kp);
        let tau = C::new(0.0, big_kp / big_k);
        let tp = modulus_suite(tau)?;
        let dk = (tp.k - C::new(k, 0.0)).norm();
        if dk > 1e-10 * (1.0 + k) {
            return Err(EllipticError::Inconsistent(dk));
        }
        Ok(tp)
    }

    /// Half period rho(j, l) on this torus.
    pub fn rho(&self, j: u8, l: u8) -> HalfPeriod {
        HalfPeriod::new(j, l, self.tau)
    }
}

/// Complete elliptic integral of the first kind for real k in [0, 1),
/// by the arithmetic-geometric mean: K = pi / (2 agm(1, k')).
pub fn complete_elliptic_k(k: f64) -> f64 {
    assert!((0.0..1.0).contains(&k), "modulus out of range: {k}");
    let kp = (1.0 - k * k).sqrt();
    PI / (2.0 * agm(1.0, kp))
}

fn agm(a0: f64, b0: f64) -> f64 {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..64 {
        if (a - b).abs() <= 1e-17 * a.abs() {
            break;
        }
        let (a1, b1) = (0.5 * (a + b), (a * b).sqrt());
        a = a1;
        b = b1;
    }
    0.5 * (a + b)
}

/// theta_{m,n}(z, tau). Reduces z modulo the lattice to the fundamental cell,
/// applies the analytic translation prefactor, and sums the classical series.
pub fn theta(ch: ThetaChar, z: C, tau: C) -> EResult<C> {
    // NaN must fail this gate too, hence no plain `<=`.
    if tau.im.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(EllipticError::NonConvergent(tau));
    }
    // z = z0 + j + l*tau with |Im z0| <= Im(tau)/2 and |Re z0| <= 1/2.
    let l = (z.im / tau.im).round();
    let j = (z.re - l * tau.re).round();
    let z0 = z - C::new(j + l * tau.re, l * tau.im);
    let base = theta_reduced(ch, z0, tau)?;
    if j == 0.0 && l == 0.0 {
        return Ok(base);
    }
    // theta(z0 + j + l tau) = (-1)^{j m + l n} q^{-l^2} e^{-2 i pi l z0} theta(z0)
    let expo = -C::i() * PI * tau * l * l - C::i() * 2.0 * PI * l * z0;
    if expo.re > EXP_CAP {
        return Err(EllipticError::Overflow(expo.re));
    }
    let parity = (j as i64) * (ch.m as i64) + (l as i64) * (ch.n as i64);
    let sign = if parity.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    Ok(sign * expo.exp() * base)
}

/// Classical theta series at an argument already inside the fundamental cell.
fn theta_reduced(ch: ThetaChar, z0: C, tau: C) -> EResult<C> {
    let x = PI * z0;
    let iptau = C::i() * PI * tau;
    let decay = -PI * tau.im; // log|q|
    let growth = 2.0 * x.im.abs();
    match ch.m {
        0 => {
            // theta3 / theta4: 1 + 2 sum (+-1)^n q^{n^2} cos(2 n x)
            let alt = ch.n == 1;
            let mut sum = C::new(1.0, 0.0);
            for n in 1..=SERIES_CAP {
                let nf = n as f64;
                let mut term = 2.0 * (iptau * nf * nf).exp() * (2.0 * nf * x).cos();
                if alt && n % 2 == 1 {
                    term = -term;
                }
                sum += term;
                let bound = 2.0 * (decay * nf * nf + nf * growth).exp();
                if bound < SERIES_EPS * (1.0 + sum.norm()) {
                    return Ok(sum);
                }
            }
            Err(EllipticError::SeriesCap)
        }
        _ => {
            // theta2: 2 sum q^{(n+1/2)^2} cos((2n+1)x)
            // theta1: 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1)x); theta_{1,1} = -theta1
            let odd = ch.n == 1;
            let mut sum = C::new(0.0, 0.0);
            for n in 0..=SERIES_CAP {
                let h = n as f64 + 0.5;
                let osc = if odd { ((2.0 * n as f64 + 1.0) * x).sin() } else { ((2.0 * n as f64 + 1.0) * x).cos() };
                let mut term = 2.0 * (iptau * h * h).exp() * osc;
                if odd && n % 2 == 1 {
                    term = -term;
                }
                sum += term;
                let bound = 2.0 * (decay * h * h + (2.0 * h) * (growth / 2.0) + growth / 2.0).exp();
                if bound < SERIES_EPS * (1.0 + sum.norm()) {
                    return Ok(if odd { -sum } else { sum });
                }
            }
            Err(EllipticError::SeriesCap)
        }
    }
}

/// All four theta values at z, in characteristic order (00, 01, 10, 11).
pub fn theta_all(z: C, tau: C) -> EResult<[C; 4]> {
    Ok([
        theta(TH00, z, tau)?,
        theta(TH01, z, tau)?,
        theta(TH10, z, tau)?,
        theta(TH11, z, tau)?,
    ])
}

/// Derived elliptic data for a modular parameter: nome, moduli and the
/// quarter periods. K is computed from theta constants and, when the modulus
/// is real, cross-checked against the AGM quadrature of the defining integral.
pub fn modulus_suite(tau: C) -> EResult<TorusParams> {
    // NaN must fail this gate too, hence no plain `<=`.
    if tau.im.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(EllipticError::Domain(format!(
            "modular parameter needs Im > 0, got {tau}"
        )));
    }
    let q = (C::i() * PI * tau).exp();
    let t00 = theta(TH00, C::new(0.0, 0.0), tau)?;
    let t01 = theta(TH01, C::new(0.0, 0.0), tau)?;
    let t10 = theta(TH10, C::new(0.0, 0.0), tau)?;
    let k = (t10 * t10) / (t00 * t00);
    let kprime = (t01 * t01) / (t00 * t00);
    let big_k = 0.5 * PI * t00 * t00;
    let tau1 = -1.0 / tau;
    let s00 = theta(TH00, C::new(0.0, 0.0), tau1)?;
    let big_k_prime = 0.5 * PI * s00 * s00;
    if k.im.abs() < 1e-9 && (0.0..1.0).contains(&k.re) {
        let agm_k = complete_elliptic_k(k.re);
        let dk = (big_k - C::new(agm_k, 0.0)).norm();
        if dk > 1e-11 * agm_k.max(1.0) {
            return Err(EllipticError::Inconsistent(dk));
        }
    }
    Ok(TorusParams { tau, q, k, kprime, big_k, big_k_prime })
}

/// The twelve Jacobi elliptic functions in Glaisher's notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Jacobi {
    Sn, Cn, Dn, Ns, Nc, Nd, Sc, Cs, Sd, Ds, Cd, Dc,
}

impl Jacobi {
    pub const ALL: [Jacobi; 12] = [
        Jacobi::Sn, Jacobi::Cn, Jacobi::Dn, Jacobi::Ns, Jacobi::Nc, Jacobi::Nd,
        Jacobi::Sc, Jacobi::Cs, Jacobi::Sd, Jacobi::Ds, Jacobi::Cd, Jacobi::Dc,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "sn" => Jacobi::Sn, "cn" => Jacobi::Cn, "dn" => Jacobi::Dn,
            "ns" => Jacobi::Ns, "nc" => Jacobi::Nc, "nd" => Jacobi::Nd,
            "sc" => Jacobi::Sc, "cs" => Jacobi::Cs, "sd" => Jacobi::Sd,
            "ds" => Jacobi::Ds, "cd" => Jacobi::Cd, "dc" => Jacobi::Dc,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Jacobi::Sn => "sn", Jacobi::Cn => "cn", Jacobi::Dn => "dn",
            Jacobi::Ns => "ns", Jacobi::Nc => "nc", Jacobi::Nd => "nd",
            Jacobi::Sc => "sc", Jacobi::Cs => "cs", Jacobi::Sd => "sd",
            Jacobi::Ds => "ds", Jacobi::Cd => "cd", Jacobi::Dc => "dc",
        }
    }
}

/// Pole threshold: denominators smaller than this raise PoleHit.
const POLE_EPS: f64 = 1e-250;

fn checked_div(num: C, den: C) -> EResult<C> {
    if den.norm() < POLE_EPS {
        return Err(EllipticError::PoleHit(den.norm()));
    }
    Ok(num / den)
}

/// Jacobi elliptic function at the hatted argument u (i.e. u = 2K a for torus
/// coordinate a), built from theta quotients.
pub fn jacobi(f: Jacobi, u: C, tp: &TorusParams) -> EResult<C> {
    let zero = C::new(0.0, 0.0);
    let tau = tp.tau;
    let a = u / (2.0 * tp.big_k);
    let z00 = theta(TH00, zero, tau)?;
    let z01 = theta(TH01, zero, tau)?;
    let z10 = theta(TH10, zero, tau)?;
    let a00 = theta(TH00, a, tau)?;
    let a01 = theta(TH01, a, tau)?;
    let a10 = theta(TH10, a, tau)?;
    let a11 = theta(TH11, a, tau)?;
    let sn = -checked_div(z00 * a11, z10 * a01)?;
    let cn = checked_div(z01 * a10, z10 * a01)?;
    let dn = checked_div(z01 * a00, z00 * a01)?;
    let one = C::new(1.0, 0.0);
    match f {
        Jacobi::Sn => Ok(sn),
        Jacobi::Cn => Ok(cn),
        Jacobi::Dn => Ok(dn),
        Jacobi::Ns => checked_div(one, sn),
        Jacobi::Nc => checked_div(one, cn),
        Jacobi::Nd => checked_div(one, dn),
        Jacobi::Sc => checked_div(sn, cn),
        Jacobi::Cs => checked_div(cn, sn),
        Jacobi::Sd => checked_div(sn, dn),
        Jacobi::Ds => checked_div(dn, sn),
        Jacobi::Cd => checked_div(cn, dn),
        Jacobi::Dc => checked_div(dn, cn),
    }
}

/// Inverse of sc or ds on the principal interval (0, K], for a real modulus.
/// sc increases from 0 to +inf on (0, K); ds decreases from +inf to k' on (0, K].
pub fn inverse_jacobi(f: Jacobi, v: f64, tp: &TorusParams) -> EResult<f64> {
    if tp.k.im.abs() > 1e-9 || !(0.0..1.0).contains(&tp.k.re) {
        return Err(EllipticError::Domain(
            "inverse_jacobi needs a real modulus in [0,1)".into(),
        ));
    }
    let big_k = tp.big_k.re;
    let eval = |u: f64| -> EResult<f64> { Ok(jacobi(f, C::new(u, 0.0), tp)?.re) };
    let (mut lo, mut hi, increasing) = match f {
        Jacobi::Sc => {
            if v <= 0.0 {
                return Err(EllipticError::OutOfRange { value: v, lo: 0.0, hi: f64::INFINITY });
            }
            (1e-15 * big_k, big_k * (1.0 - 1e-14), true)
        }
        Jacobi::Ds => {
            let kp = tp.kprime.re;
            if v < kp {
                return Err(EllipticError::OutOfRange { value: v, lo: kp, hi: f64::INFINITY });
            }
            (1e-15 * big_k, big_k, false)
        }
        _ => {
            return Err(EllipticError::Domain(format!(
                "inverse not provided for {}",
                f.name()
            )))
        }
    };
    // Guard the bracket, then bisect; monotonicity makes this safe.
    let flo = eval(lo)?;
    let fhi = eval(hi)?;
    let (vlo, vhi) = if increasing { (flo, fhi) } else { (fhi, flo) };
    if v < vlo || v > vhi {
        return Err(EllipticError::OutOfRange { value: v, lo: vlo, hi: vhi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = eval(mid)?;
        let go_right = if increasing { fm < v } else { fm > v };
        if go_right {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 * big_k.max(1.0) {
            break;
        }
    }
    let u = 0.5 * (lo + hi);
    let res = (eval(u)? - v).abs();
    if res > 1e-10 * (1.0 + v.abs()) {
        return Err(EllipticError::Inconsistent(res));
    }
    Ok(u)
}

/// Result of one identity check over a sample set.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub max_residual: f64,
    pub samples_used: usize,
    pub skipped: usize,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub entries: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

const IDENTITY_TOL: f64 = 1e-11;

/// Relative residual of a two-sided identity; None flags a degenerate sample.
/// Both sides below double-precision resolution (given O(1) inputs) count as
/// an exact match: a relative comparison there would only measure roundoff.
fn rel_res(lhs: C, rhs: C) -> Option<f64> {
    let scale = lhs.norm().max(rhs.norm());
    if !lhs.is_finite() || !rhs.is_finite() {
        return None;
    }
    if scale < 1e-14 {
        return Some(0.0);
    }
    Some((lhs - rhs).norm() / scale)
}

struct Battery {
    entries: Vec<IdentityCheck>,
}

impl Battery {
    fn run<F>(&mut self, name: &'static str, samples: &[C], mut f: F)
    where
        F: FnMut(C) -> EResult<Option<f64>>,
    {
        let mut max_res: f64 = 0.0;
        let mut used = 0;
        let mut skipped = 0;
        for &z in samples {
            match f(z) {
                Ok(Some(r)) => {
                    used += 1;
                    max_res = max_res.max(r);
                }
                Ok(None) | Err(_) => skipped += 1,
            }
        }
        self.entries.push(IdentityCheck {
            name,
            max_residual: max_res,
            samples_used: used,
            skipped,
            pass: used > 0 && max_res < IDENTITY_TOL,
        });
    }
}

const CHARS: [ThetaChar; 4] = [TH00, TH01, TH10, TH11];

/// Runs the full identity battery at the given torus parameters over the
/// provided sample arguments: parity, conjugation, (half-)period translations,
/// the addition formula, the meromorphy criterion, the two modular generators
/// and the ascending Landen relations.
pub fn identity_suite(tp: &TorusParams, samples: &[C]) -> IdentityReport {
    let tau = tp.tau;
    let q = tp.q;
    let mut b = Battery { entries: Vec::new() };

    b.run("parity", samples, |z| {
        let mut worst: f64 = 0.0;
        for ch in CHARS {
            let lhs = theta(ch, -z, tau)?;
            let sgn = if ch.m * ch.n == 1 { -1.0 } else { 1.0 };
            let rhs = sgn * theta(ch, z, tau)?;
            match rel_res(lhs, rhs) {
                Some(r) => worst = worst.max(r),
                None => return Ok(None),
            }
        }
        Ok(Some(worst))
    });

    b.run("conjugation", samples, |z| {
        let mut worst: f64 = 0.0;
        let tau_c = -tau.conj();
        for ch in CHARS {
            let lhs = theta(ch, z, tau)?.conj();
            let rhs = theta(ch, z.conj(), tau_c)?;
            match rel_res(lhs, rhs) {
                Some(r) => worst = worst.max(r),
                None => return Ok(None),
            }
        }
        Ok(Some(worst))
    });

    // Full-period translations z +- 2 rho, rho = j/2 + l tau / 2.
    b.run("translation-full-period", samples, |z| {
        let mut worst: f64 = 0.0;
        for (j, l) in [(0u8, 1u8), (1, 0), (1, 1)] {
            let rho = HalfPeriod::new(j, l, tau).value;
            for ch in CHARS {
                let sgn = sign_pm((j * ch.m + l * ch.n) as i64);
                let fwd = theta(ch, z + 2.0 * rho, tau)?;
                let mut factor = C::new(sgn, 0.0);
                if l == 1 {
                    factor *= (q * (C::i() * 2.0 * PI * z).exp()).powi(-1);
                }
                match rel_res(fwd, factor * theta(ch, z, tau)?) {
                    Some(r) => worst = worst.max(r),
                    None => return Ok(None),
                }
                let bwd = theta(ch, z - 2.0 * rho, tau)?;
                let mut factor = C::new(sgn, 0.0);
                if l == 1 {
                    factor *= (q.inv()) * (C::i() * 2.0 * PI * z).exp();
                }
                match rel_res(bwd, factor * theta(ch, z, tau)?) {
                    Some(r) => worst = worst.max(r),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(worst))
    });

    // Half-period translations z +- rho, with the characteristic shift
    // (m, n) -> (m + l, n + j).
    b.run("translation-half-period", samples, |z| {
        let mut worst: f64 = 0.0;
        for (j, l) in [(0u8, 1u8), (1, 0), (1, 1)] {
            let rho = HalfPeriod::new(j, l, tau).value;
            let q4 = (C::i() * PI * tau * 0.25).exp(); // q^{1/4}
            for ch in CHARS {
                let (m, n) = (ch.m as i64, ch.n as i64);
                let (jj, ll) = (j as i64, l as i64);
                let target = ch.shifted(l, j);
                let ipow = C::i().powi((ll * (n + jj)).rem_euclid(4) as i32);

                let lhs = theta(ch, z + rho, tau)?;
                let mut factor = ipow * sign_pm(ll * (n + jj) + jj * ll * n + jj * m * n);
                if l == 1 {
                    factor *= q4.inv() * (-C::i() * PI * z).exp();
                }
                match rel_res(lhs, factor * theta(target, z, tau)?) {
                    Some(r) => worst = worst.max(r),
                    None => return Ok(None),
                }

                let lhs = theta(ch, z - rho, tau)?;
                let mut factor = ipow * sign_pm(jj * m + jj * ll * n + jj * m * n);
                if l == 1 {
                    factor *= q4.inv() * (C::i() * PI * z).exp();
                }
                match rel_res(lhs, factor * theta(target, z, tau)?) {
                    Some(r) => worst = worst.max(r),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(worst))
    });

    // Addition formula; samples are consumed in (z, w) pairs via z and z/2+0.3.
    // The left side is a difference of two products, so the residual is
    // measured against the size of those terms, not of the cancelled result.
    b.run("addition-formula", samples, |z| {
        let w = 0.5 * z + C::new(0.3, 0.1);
        let mut worst: f64 = 0.0;
        let t11z = theta(TH11, z, tau)?;
        let t00w = theta(TH00, w, tau)?;
        for ch in CHARS {
            let (m, n) = (ch.m as i64, ch.n as i64);
            let opp = ch.shifted(1, 1);
            let term1 = t11z * t11z * t00w * t00w;
            let term2 = sign_pm(1 + m + m * n)
                * theta(ch, z, tau)?.powi(2)
                * theta(opp, w, tau)?.powi(2);
            let rhs = sign_pm(n + m * n)
                * theta(opp, z + w, tau)?
                * theta(opp, z - w, tau)?
                * theta(ch, C::new(0.0, 0.0), tau)?.powi(2);
            let lhs = term1 + term2;
            if !lhs.is_finite() || !rhs.is_finite() {
                return Ok(None);
            }
            let scale = term1.norm().max(term2.norm()).max(rhs.norm());
            if scale >= 1e-14 {
                worst = worst.max((lhs - rhs).norm() / scale);
            }
        }
        Ok(Some(worst))
    });

    // Meromorphy: with sum(a_i - b_i) = l tau + integer the twisted theta
    // quotient descends to the torus; check both periods.
    b.run("meromorphy", samples, |u| {
        let a = [C::new(0.15, 0.0) + 0.6 * tau, C::new(-0.2, 0.0) + 0.5 * tau];
        let bq = [C::new(0.05, 0.0) + 0.1 * tau, C::new(-0.1, 0.0)];
        let f = |u: C| -> EResult<C> {
            let mut val = (-C::i() * 2.0 * PI * u).exp();
            for i in 0..2 {
                val *= theta(TH11, u - a[i], tau)?;
                let den = theta(TH11, u - bq[i], tau)?;
                val = checked_div(val, den)?;
            }
            Ok(val)
        };
        let f0 = f(u)?;
        let f1 = f(u + C::new(1.0, 0.0))?;
        let f2 = f(u + tau)?;
        let r1 = rel_res(f1, f0);
        let r2 = rel_res(f2, f0);
        match (r1, r2) {
            (Some(a), Some(b)) => Ok(Some(a.max(b))),
            _ => Ok(None),
        }
    });

    // Modular generator tau -> -1/tau.
    b.run("modular-inversion", samples, |z| {
        let tau1 = -tau.inv();
        let root = (-C::i() * tau).sqrt();
        let gauss = (C::i() * PI * tau1 * z * z).exp();
        let pairs: [(ThetaChar, ThetaChar, C); 4] = [
            (TH11, TH11, -C::i()),
            (TH00, TH00, C::new(1.0, 0.0)),
            (TH10, TH01, C::new(1.0, 0.0)),
            (TH01, TH10, C::new(1.0, 0.0)),
        ];
        let mut worst: f64 = 0.0;
        for (src, dst, phase) in pairs {
            let lhs = root * theta(src, z, tau)?;
            let rhs = phase * gauss * theta(dst, tau1 * z, tau1)?;
            match rel_res(lhs, rhs) {
                Some(r) => worst = worst.max(r),
                None => return Ok(None),
            }
        }
        Ok(Some(worst))
    });

    // Modular generator tau -> tau + 1.
    b.run("modular-shift", samples, |z| {
        let tau2 = tau + C::new(1.0, 0.0);
        let phase = (-C::i() * PI / 4.0).exp();
        let lhs1 = theta(TH11, z, tau)?;
        let rhs1 = phase * theta(TH11, z, tau2)?;
        let lhs2 = theta(TH00, z, tau)?;
        let rhs2 = theta(TH01, z, tau2)?;
        match (rel_res(lhs1, rhs1), rel_res(lhs2, rhs2)) {
            (Some(a), Some(b)) => Ok(Some(a.max(b))),
            _ => Ok(None),
        }
    });

    // Ascending Landen, theta form: the sc quotient at tau equals the
    // sc*dn quotient at 2 tau - 1.
    b.run("landen-theta", samples, |z| {
        let alpha = 0.31 * z + C::new(0.11, 0.02);
        let beta = -0.17 * z + C::new(0.23, -0.04);
        let tau2 = 2.0 * tau - C::new(1.0, 0.0);
        let lhs = checked_div(
            theta(TH11, alpha, tau)? * theta(TH10, beta, tau)?,
            theta(TH10, alpha, tau)? * theta(TH11, beta, tau)?,
        )?;
        let num = theta(TH11, alpha, tau2)?
            * theta(TH00, alpha, tau2)?
            * theta(TH10, beta, tau2)?
            * theta(TH01, beta, tau2)?;
        let den = theta(TH10, alpha, tau2)?
            * theta(TH01, alpha, tau2)?
            * theta(TH11, beta, tau2)?
            * theta(TH00, beta, tau2)?;
        let rhs = checked_div(num, den)?;
        Ok(rel_res(lhs, rhs))
    });

    // Ascending Landen, Jacobi form: sc at the doubled parameter.
    b.run("landen-jacobi", samples, |z| {
        let g = 0.23 * z;
        let tp1 = modulus_suite(2.0 * tau)?;
        let tp2 = modulus_suite(2.0 * tau - C::new(1.0, 0.0))?;
        let lhs = jacobi(Jacobi::Sc, 2.0 * tp.big_k * g, tp)?;
        let sc2 = jacobi(Jacobi::Sc, 2.0 * tp2.big_k * g, &tp2)?;
        let dn2 = jacobi(Jacobi::Dn, 2.0 * tp2.big_k * g, &tp2)?;
        let rhs = (1.0 + tp1.k) * tp2.kprime * sc2 * dn2;
        Ok(rel_res(lhs, rhs))
    });

    IdentityReport { entries: b.entries }
}

fn sign_pm(e: i64) -> f64 {
    if e.rem_euclid(2) == 1 {
        -1.0
    } else {
        1.0
    }
}
