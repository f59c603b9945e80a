//! Row reduction kernels behind [`Mat::rref`](super::Mat::rref).
//!
//! Over `Q` rows are scaled to primitive integer vectors and eliminated
//! fraction-free (`row <- (p/g) row - (a/g) pivot_row`, then divided by its
//! content). Work starts in `i128` and restarts in `BigInt` on overflow.
//! Over `F_p` this is plain Gauss-Jordan on machine words.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

use super::field::{denominator_lcm, pow_mod, Field, Scalar};

/// Result of elimination: nonzero rows and their pivot columns.
pub(crate) struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

/// Eliminates `rows` (each of length `cols`). With `reduce` the result is the
/// reduced row echelon form with unit pivots; otherwise only the pivot
/// structure is meaningful (rows may be unnormalized).
pub(crate) fn eliminate(field: Field, rows: &[&[Scalar]], cols: usize, reduce: bool) -> Echelon {
    if field.is_rational() {
        eliminate_rational(rows, cols, reduce)
    } else {
        eliminate_modular(field, rows, cols, reduce)
    }
}

fn eliminate_modular(field: Field, rows: &[&[Scalar]], cols: usize, reduce: bool) -> Echelon {
    let p = field.characteristic() as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|s| s.residue().unwrap() as u64).collect())
        .filter(|r: &Vec<u64>| r.iter().any(|&x| x != 0))
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == m.len() {
            break;
        }
        let Some(found) = (top..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(top, found);
        let inv = pow_mod(m[top][col], p - 2, p);
        for x in m[top][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = m.split_at_mut(top);
        let (pivot_row, below) = tail.split_first_mut().unwrap();
        let upper: &mut [Vec<_>] = if reduce { head } else { &mut [] };
        let targets = below.iter_mut().chain(upper.iter_mut());
        for row in targets {
            let a = row[col];
            if a == 0 {
                continue;
            }
            let na = p - a;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if *y != 0 {
                    *x = (*x + na * y) % p;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    let p32 = p as u32;
    let rows = m
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|value| Scalar::Fp {
                    value: value as u32,
                    p: p32,
                })
                .collect()
        })
        .collect();
    Echelon { rows, pivots }
}

trait Int: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> Int for T {}

fn eliminate_rational(rows: &[&[Scalar]], cols: usize, reduce: bool) -> Echelon {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let qs: Vec<&BigRational> = r.iter().map(|s| s.as_rational().unwrap()).collect();
            let l = denominator_lcm(qs.iter().copied());
            qs.iter().map(|q| q.numer() * (&l / q.denom())).collect::<Vec<BigInt>>()
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();

    let small: Option<Vec<Vec<i128>>> = ints.iter().map(|r| r.iter().map(|x| x.to_i128()).collect()).collect();
    if let Some(mut small) = small {
        if let Some(pivots) = fraction_free(&mut small, cols, reduce) {
            let rows = small
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            return finish(rows, pivots, reduce);
        }
    }
    let mut big = ints;
    let pivots = fraction_free(&mut big, cols, reduce).expect("BigInt arithmetic cannot overflow");
    finish(big, pivots, reduce)
}

fn finish(rows: Vec<Vec<BigInt>>, pivots: Vec<usize>, reduce: bool) -> Echelon {
    let rows = rows
        .into_iter()
        .zip(&pivots)
        .map(|(r, &pc)| {
            let piv = r[pc].clone();
            r.into_iter()
                .map(|x| {
                    if reduce {
                        Scalar::Q(BigRational::new(x, piv.clone()))
                    } else {
                        Scalar::Q(BigRational::from_integer(x))
                    }
                })
                .collect()
        })
        .collect();
    Echelon { rows, pivots }
}

/// Fraction-free Gauss(-Jordan) elimination on integer rows with content
/// normalization. Returns `None` if an intermediate overflows `T`.
fn fraction_free<T: Int>(m: &mut Vec<Vec<T>>, cols: usize, reduce: bool) -> Option<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == m.len() {
            break;
        }
        // smallest nonzero pivot keeps multipliers small
        let found = (top..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(found) = found else { continue };
        m.swap(top, found);
        if m[top][col].is_negative() {
            for x in m[top].iter_mut() {
                *x = -x.clone();
            }
        }
        let (head, tail) = m.split_at_mut(top);
        let (pivot_row, below) = tail.split_first_mut().unwrap();
        let p = pivot_row[col].clone();
        let upper: &mut [Vec<_>] = if reduce { head } else { &mut [] };
        let targets = below.iter_mut().chain(upper.iter_mut());
        for row in targets {
            let a = row[col].clone();
            if a.is_zero() {
                continue;
            }
            let g = a.gcd(&p);
            let (mr, mp) = (p.clone() / g.clone(), a / g);
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                let scaled = x.checked_mul(&mr)?;
                *x = if y.is_zero() {
                    scaled
                } else {
                    scaled.checked_sub(&y.checked_mul(&mp)?)?
                };
            }
            normalize_content(row);
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    Some(pivots)
}

fn normalize_content<T: Int>(row: &mut [T]) {
    let mut g = T::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
}
