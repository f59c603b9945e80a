//! Isomorphism of small algebras.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar};

const MAX_DIM: usize = 6;
const SEARCH_LIMIT: u64 = 200_000;
const RATIONAL_BOUND: i64 = 2;

fn invariants(a: &Algebra) -> (usize, usize, usize, Vec<usize>, usize, bool) {
    let mut blocks: Vec<usize> = a.cartan_matrix().iter().map(|row| row.iter().sum()).collect();
    blocks.sort_unstable();
    (
        a.dim(),
        a.radical_power_dim(1),
        a.radical_power_dim(2),
        blocks,
        a.center_dim(),
        a.is_commutative(),
    )
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// `e x f` for each basis vector `x` of `space`, as a column basis.
fn sandwich(b: &Algebra, e: &[Scalar], f: &[Scalar], space: &Mat) -> Mat {
    let cols: Vec<Vec<Scalar>> = space.columns().map(|x| b.mul(&b.mul(e, &x), f)).collect();
    Mat::from_columns(b.field(), b.dim(), &cols).column_basis()
}

fn coefficient_range(b: &Algebra) -> Vec<Scalar> {
    let field = b.field();
    match field.elements() {
        Some(all) => all.collect(),
        None => (-RATIONAL_BOUND..=RATIONAL_BOUND).map(|c| field.from_i64(c)).collect(),
    }
}

/// Generators of `a` split into corner pieces `e_i x e_k`, with their corners
/// and whether they lie in the radical.
fn corner_generators(a: &Algebra) -> Vec<(usize, usize, Vec<Scalar>, bool)> {
    let es = a.idempotents();
    let radical = a.radical();
    let mut out = Vec::new();
    for g in a.generators() {
        if es.contains(g) {
            continue;
        }
        for (i, ei) in es.iter().enumerate() {
            for (k, ek) in es.iter().enumerate() {
                let x = a.mul(&a.mul(ei, g), ek);
                if x.iter().all(Scalar::is_zero) {
                    continue;
                }
                let in_radical = radical.spans(&Mat::column_vector(a.field(), x.clone()));
                out.push((i, k, x, in_radical));
            }
        }
    }
    out
}

/// Extends `images` of idempotents and generators to a linear map by closing
/// under right multiplication by generators; `None` if inconsistent or singular.
fn extend(
    a: &Algebra,
    b: &Algebra,
    start: &[(Vec<Scalar>, Vec<Scalar>)],
    gens: &[(Vec<Scalar>, Vec<Scalar>)],
) -> Option<Mat> {
    let field = a.field();
    let d = a.dim();
    let mut src: Vec<Vec<Scalar>> = Vec::new();
    let mut dst: Vec<Vec<Scalar>> = Vec::new();
    let mut queue: Vec<(Vec<Scalar>, Vec<Scalar>)> = start.to_vec();
    queue.extend(gens.iter().cloned());
    while let Some((x, y)) = queue.pop() {
        let current = Mat::from_columns(field, d, &src);
        let target = Mat::column_vector(field, x.clone());
        match current.solve(&target).ok()? {
            Some(c) => {
                let coeffs = c.column(0);
                let mut expected = field.zeros(b.dim());
                for (w, k) in dst.iter().zip(&coeffs) {
                    for (e, v) in expected.iter_mut().zip(w) {
                        *e = &*e + &(k * v);
                    }
                }
                if expected != y {
                    return None;
                }
            }
            None => {
                for (g, h) in start.iter().chain(gens) {
                    queue.push((a.mul(&x, g), b.mul(&y, h)));
                }
                src.push(x);
                dst.push(y);
            }
        }
    }
    if src.len() != d {
        return None;
    }
    let x = Mat::from_columns(field, d, &src);
    let y = Mat::from_columns(field, b.dim(), &dst);
    let phi = &y * &x.inverse()?;
    phi.is_invertible().then_some(phi)
}

/// Whether `a` and `b` are isomorphic as algebras. Invariants are compared
/// first; then every algebra map sending idempotents to idempotents and each
/// generator into the matching corner is tried. Over a finite field the search
/// is exhaustive; over the rationals coordinates range over `-2..=2`.
pub fn algebra_isomorphic_small(a: &Algebra, b: &Algebra) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// The matrix of an algebra isomorphism `a -> b`, if one is found.
pub fn find_isomorphism(a: &Algebra, b: &Algebra) -> Result<Option<Mat>> {
    if a.field() != b.field() {
        return Err(Error::AlgebraMismatch);
    }
    for d in [a.dim(), b.dim()] {
        if d > MAX_DIM {
            return Err(Error::DimensionTooLarge(d));
        }
    }
    if invariants(a) != invariants(b) {
        return Ok(None);
    }
    if a.dim() == 0 {
        return Ok(Some(Mat::zeros(a.field(), 0, 0)));
    }
    let gens = corner_generators(a);
    let coeffs = coefficient_range(b);
    let (ea, eb) = (a.idempotents(), b.idempotents());
    let ca = a.cartan_matrix();
    let cb = b.cartan_matrix();
    let full = Mat::identity(b.field(), b.dim());
    for sigma in permutations(ea.len()) {
        let matches = (0..ea.len()).all(|i| (0..ea.len()).all(|k| ca[i][k] == cb[sigma[i]][sigma[k]]));
        if !matches {
            continue;
        }
        let spaces: Vec<Mat> = gens
            .iter()
            .map(|(i, k, _, in_rad)| {
                let space = if *in_rad { b.radical() } else { &full };
                sandwich(b, &eb[sigma[*i]], &eb[sigma[*k]], space)
            })
            .collect();
        let mut total: u64 = 1;
        for s in &spaces {
            let count = (coeffs.len() as u64).checked_pow(s.cols() as u32).unwrap_or(u64::MAX);
            total = total.saturating_mul(count);
        }
        if total > SEARCH_LIMIT {
            return Err(Error::DimensionTooLarge(a.dim()));
        }
        let start: Vec<(Vec<Scalar>, Vec<Scalar>)> = ea
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), eb[sigma[i]].clone()))
            .collect();
        let mut counters = vec![0usize; spaces.iter().map(Mat::cols).sum()];
        loop {
            let mut images = Vec::with_capacity(gens.len());
            let mut at = 0;
            for s in &spaces {
                let c: Vec<Scalar> = counters[at..at + s.cols()].iter().map(|&k| coeffs[k].clone()).collect();
                at += s.cols();
                images.push(s.mul_vec(&c));
            }
            let pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = gens
                .iter()
                .zip(images)
                .map(|((_, _, x, _), y)| (x.clone(), y))
                .collect();
            if let Some(phi) = extend(a, b, &start, &pairs) {
                return Ok(Some(phi));
            }
            // advance the odometer
            let mut pos = 0;
            loop {
                if pos == counters.len() {
                    break;
                }
                counters[pos] += 1;
                if counters[pos] < coeffs.len() {
                    break;
                }
                counters[pos] = 0;
                pos += 1;
            }
            if pos == counters.len() {
                break;
            }
        }
    }
    Ok(None)
}
