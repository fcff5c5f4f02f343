//! Determinants of Laurent-polynomial matrices.
//!
//! Two routes produce the same sparse polynomial: memoized cofactor expansion
//! for small matrices, and evaluation on a grid of scaled roots of unity
//! followed by an inverse discrete Fourier transform for larger ones. The
//! grid side length per variable is `2d+1` where `d` bounds the exponent
//! reach of the determinant (sum over rows of the largest absolute exponent
//! in the row), so no aliasing is possible.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

use super::matrix::KMatrix;
use super::poly::LaurentPoly2;
use super::KasteleynError;

const MAX_DIM: usize = 64;
const MAX_COFACTOR_DIM: usize = 16;
const MAX_GRID_POINTS: usize = 4_000_000;

/// Sparse determinant; cofactors up to 10×10, grid interpolation above.
pub fn det_laurent(m: &KMatrix) -> Result<LaurentPoly2, KasteleynError> {
    let n = square_dim(m)?;
    if n <= 10 {
        det_laurent_via_cofactors(m)
    } else {
        det_laurent_via_grid(m)
    }
}

fn square_dim(m: &KMatrix) -> Result<usize, KasteleynError> {
    if m.n_rows() != m.n_cols() {
        return Err(KasteleynError::NotSquare {
            rows: m.n_rows(),
            cols: m.n_cols(),
        });
    }
    if m.n_rows() > MAX_DIM {
        return Err(KasteleynError::DegreeBoundExceeded(format!(
            "matrix dimension {} exceeds the supported bound {}",
            m.n_rows(),
            MAX_DIM
        )));
    }
    Ok(m.n_rows())
}

/// Cofactor expansion over remaining-column masks, minors memoized.
pub fn det_laurent_via_cofactors(m: &KMatrix) -> Result<LaurentPoly2, KasteleynError> {
    let n = square_dim(m)?;
    if n > MAX_COFACTOR_DIM {
        return Err(KasteleynError::DegreeBoundExceeded(format!(
            "cofactor route supports up to {MAX_COFACTOR_DIM} rows, got {n}"
        )));
    }
    if n == 0 {
        return Ok(LaurentPoly2::one());
    }
    let mut memo: HashMap<u32, LaurentPoly2> = HashMap::new();
    Ok(minor(&m.entries, n, (1u32 << n) - 1, &mut memo))
}

fn minor(
    a: &[Vec<LaurentPoly2>],
    n: usize,
    mask: u32,
    memo: &mut HashMap<u32, LaurentPoly2>,
) -> LaurentPoly2 {
    if mask == 0 {
        return LaurentPoly2::one();
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let row = n - mask.count_ones() as usize;
    let mut acc = LaurentPoly2::zero();
    let mut pos_sign = 1.0;
    for c in 0..n {
        if mask >> c & 1 == 0 {
            continue;
        }
        if !a[row][c].is_zero() {
            let sub = minor(a, n, mask & !(1u32 << c), memo);
            let term = (&a[row][c] * &sub).scale(Complex64::new(pos_sign, 0.0));
            acc = &acc + &term;
        }
        pos_sign = -pos_sign;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Evaluation on a `(2dz+1)×(2dw+1)` grid of scaled roots of unity, then a
/// two-stage inverse DFT back to coefficients.
pub fn det_laurent_via_grid(m: &KMatrix) -> Result<LaurentPoly2, KasteleynError> {
    let n = square_dim(m)?;
    if n == 0 {
        return Ok(LaurentPoly2::one());
    }
    let mut dz = 0i64;
    let mut dw = 0i64;
    for row in &m.entries {
        let mut rz = 0i64;
        let mut rw = 0i64;
        let mut empty = true;
        for p in row {
            if !p.is_zero() {
                empty = false;
            }
            let (a, b) = p.support_radius();
            rz = rz.max(a);
            rw = rw.max(b);
        }
        if empty {
            return Ok(LaurentPoly2::zero());
        }
        dz += rz;
        dw += rw;
    }
    let nz = (2 * dz + 1) as usize;
    let nw = (2 * dw + 1) as usize;
    if nz.saturating_mul(nw) > MAX_GRID_POINTS {
        return Err(KasteleynError::DegreeBoundExceeded(format!(
            "interpolation grid {nz}×{nw} exceeds {MAX_GRID_POINTS} points"
        )));
    }

    let (rz, rw) = (1.0f64, 1.0f64); // grid radii; unit circles suffice here
    let zs: Vec<Complex64> = (0..nz)
        .map(|k| Complex64::from_polar(rz, TAU * k as f64 / nz as f64))
        .collect();
    let ws: Vec<Complex64> = (0..nw)
        .map(|l| Complex64::from_polar(rw, TAU * l as f64 / nw as f64))
        .collect();

    let mut vals = vec![vec![Complex64::new(0.0, 0.0); nw]; nz];
    let mut scratch = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (k, &z) in zs.iter().enumerate() {
        for (l, &w) in ws.iter().enumerate() {
            for (srow, mrow) in scratch.iter_mut().zip(&m.entries) {
                for (cell, entry) in srow.iter_mut().zip(mrow) {
                    *cell = entry.eval(z, w);
                }
            }
            vals[k][l] = det_complex(&mut scratch);
        }
    }

    // First stage: invert over k for each fixed l.
    let mut half = vec![vec![Complex64::new(0.0, 0.0); nw]; 2 * dz as usize + 1];
    for (ii, row) in half.iter_mut().enumerate() {
        let i = ii as i64 - dz;
        for (l, cell) in row.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, v) in vals.iter().enumerate() {
                let phase = Complex64::from_polar(1.0, -TAU * (i * k as i64) as f64 / nz as f64);
                acc += v[l] * phase;
            }
            *cell = acc / nz as f64;
        }
    }
    // Second stage: invert over l, undo the radii, collect terms.
    let mut terms = Vec::new();
    for (ii, row) in half.iter().enumerate() {
        let i = ii as i64 - dz;
        for jj in 0..(2 * dw as usize + 1) {
            let j = jj as i64 - dw;
            let mut acc = Complex64::new(0.0, 0.0);
            for (l, v) in row.iter().enumerate() {
                let phase = Complex64::from_polar(1.0, -TAU * (j * l as i64) as f64 / nw as f64);
                acc += v * phase;
            }
            let coeff = acc / (nw as f64 * rz.powi(i as i32) * rw.powi(j as i32));
            terms.push(((i, j), coeff));
        }
    }
    Ok(LaurentPoly2::from_terms(terms))
}

/// In-place LU with partial pivoting; consumes the scratch matrix.
fn det_complex(m: &mut [Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                m[a][col]
                    .norm_sqr()
                    .partial_cmp(&m[b][col].norm_sqr())
                    .expect("finite entries")
            })
            .expect("nonempty range");
        if m[pivot_row][col] == Complex64::new(0.0, 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_row = &upper[col][col..];
        for row in lower.iter_mut() {
            let factor = row[col] / pivot;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (cell, &pv) in row[col..].iter_mut().zip(pivot_row) {
                *cell -= factor * pv;
            }
        }
    }
    det
}
