//! Jacobson radical via the trace form of the regular representation.
//!
//! In characteristic zero the radical is the kernel of `(a, b) -> tr(R_{ab})`.
//! In characteristic `p` that kernel can be too large, so the candidate is
//! accepted only after checking it is a nilpotent two-sided ideal (every
//! nilpotent ideal lies in the radical, and the radical always lies in the
//! kernel). If the check fails, small algebras fall back to an exhaustive
//! search; otherwise the radical is reported as uncertain.

use super::structure::Structure;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar};

const EXHAUSTIVE_MAX_DIM: usize = 8;
const EXHAUSTIVE_MAX_ELEMENTS: u64 = 1 << 20;

pub(crate) fn radical(s: &Structure) -> Result<Mat> {
    let d = s.dim;
    let field = s.field;
    if d == 0 {
        return Ok(Mat::zeros(field, 0, 0));
    }
    // traces of right multiplication by each basis element
    let traces: Vec<Scalar> = (0..d)
        .map(|l| {
            let mut t = field.zero();
            for i in 0..d {
                for (k, c) in &s.table[i][l] {
                    if *k == i {
                        t = &t + c;
                    }
                }
            }
            t
        })
        .collect();
    let mut gram = Mat::zeros(field, d, d);
    for i in 0..d {
        for j in 0..d {
            let mut g = field.zero();
            for (l, c) in &s.table[i][j] {
                g = &g + &(c * &traces[*l]);
            }
            gram[(i, j)] = g;
        }
    }
    let candidate = gram.kernel_basis();
    if is_nilpotent_ideal(s, &candidate) {
        return Ok(candidate);
    }
    if field.is_rational() {
        return Err(Error::RadicalUncertain(
            "trace-form kernel is not a nilpotent ideal".into(),
        ));
    }
    exhaustive(s, &candidate)
}

/// Whether the column span of `ideal` is a two-sided ideal with `ideal^n = 0`.
pub(crate) fn is_nilpotent_ideal(s: &Structure, ideal: &Mat) -> bool {
    if ideal.cols() == 0 {
        return true;
    }
    let basis = Mat::identity(s.field, s.dim);
    let left = s.product_space(&basis, ideal);
    let right = s.product_space(ideal, &basis);
    if !ideal.spans(&left) || !ideal.spans(&right) {
        return false;
    }
    nilpotency_index(s, ideal).is_some()
}

/// Smallest `n` with `ideal^n = 0`, if any.
pub(crate) fn nilpotency_index(s: &Structure, ideal: &Mat) -> Option<usize> {
    let mut power = ideal.column_basis();
    let mut n = 1;
    while power.cols() > 0 {
        let next = s.product_space(&power, ideal);
        if next.cols() == power.cols() {
            return None;
        }
        power = next;
        n += 1;
    }
    Some(n)
}

/// rad = { a in candidate : the right ideal aA is nilpotent }, by enumeration.
fn exhaustive(s: &Structure, candidate: &Mat) -> Result<Mat> {
    let p = s.field.characteristic() as u64;
    let k = candidate.cols();
    let count = p.checked_pow(k as u32).unwrap_or(u64::MAX);
    if s.dim > EXHAUSTIVE_MAX_DIM || count > EXHAUSTIVE_MAX_ELEMENTS {
        return Err(Error::RadicalUncertain(format!(
            "trace-form kernel of dimension {k} is not nilpotent over {}, and the algebra is too large to search",
            s.field
        )));
    }
    let basis = Mat::identity(s.field, s.dim);
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    let mut digits = vec![0u64; k];
    for _ in 0..count {
        let coeffs: Vec<Scalar> = digits.iter().map(|&d| s.field.from_i64(d as i64)).collect();
        let a = candidate.mul_vec(&coeffs);
        if a.iter().any(|x| !x.is_zero()) {
            let col = Mat::column_vector(s.field, a.clone());
            let right_ideal = s.product_space(&col, &basis);
            if nilpotency_index(s, &right_ideal).is_some() {
                found.push(a);
            }
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    let rad = Mat::from_columns(s.field, s.dim, &found).column_basis();
    if is_nilpotent_ideal(s, &rad) {
        Ok(rad)
    } else {
        Err(Error::RadicalUncertain(
            "exhaustive search produced no nilpotent ideal".into(),
        ))
    }
}
