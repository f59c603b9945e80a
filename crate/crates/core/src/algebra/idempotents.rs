//! Complete sets of primitive orthogonal idempotents.
//!
//! The semisimple quotient is split one corner at a time using the minimal
//! polynomial of a corner element; the pieces are then lifted back through
//! the radical through the minimal polynomial of a preimage.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::structure::Structure;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Poly, Scalar};

const RANDOM_TRIES: usize = 64;
const SEED: u64 = 0x1de4_907e;

/// Primitive orthogonal idempotents summing to the unit, sorted descending.
pub(crate) fn primitive_idempotents(s: &Structure, radical: &Mat) -> Result<Vec<Vec<Scalar>>> {
    if s.dim == 0 {
        return Ok(Vec::new());
    }
    let (quot, _proj, section) = s.quotient(radical);
    let split = split_semisimple(&quot)?;
    let mut out = lift(s, &split, &section)?;
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Checks that `es` are nonzero, idempotent, pairwise orthogonal, sum to the
/// unit and are primitive (local corners).
pub(crate) fn validate(s: &Structure, radical: &Mat, es: &[Vec<Scalar>]) -> Result<()> {
    let mut sum = s.zeros();
    for (i, e) in es.iter().enumerate() {
        if e.len() != s.dim {
            return Err(Error::Idempotents(format!("idempotent {i} has wrong length")));
        }
        if e.iter().all(Scalar::is_zero) {
            return Err(Error::Idempotents(format!("idempotent {i} is zero")));
        }
        if !s.is_idempotent(e) {
            return Err(Error::Idempotents(format!("element {i} is not idempotent")));
        }
        for (j, f) in es.iter().enumerate() {
            if i != j && s.mul(e, f).iter().any(|x| !x.is_zero()) {
                return Err(Error::Idempotents(format!(
                    "idempotents {i} and {j} are not orthogonal"
                )));
            }
        }
        let corner = corner_basis(s, e);
        let corner_rad = sandwich(s, e, radical);
        if corner.cols() != corner_rad.cols() + 1 {
            return Err(Error::Idempotents(format!("idempotent {i} is not primitive")));
        }
        for k in 0..s.dim {
            sum[k] = &sum[k] + &e[k];
        }
    }
    if sum != s.unit {
        return Err(Error::Idempotents("idempotents do not sum to the unit".into()));
    }
    Ok(())
}

/// Basis of `e A e`.
pub(crate) fn corner_basis(s: &Structure, e: &[Scalar]) -> Mat {
    sandwich(s, e, &Mat::identity(s.field, s.dim))
}

/// Basis of the span of `e x e` over the columns `x` of `space`.
pub(crate) fn sandwich(s: &Structure, e: &[Scalar], space: &Mat) -> Mat {
    let cols: Vec<Vec<Scalar>> = space.columns().map(|x| s.mul(&s.mul(e, &x), e)).collect();
    Mat::from_columns(s.field, s.dim, &cols).column_basis()
}

fn split_semisimple(q: &Structure) -> Result<Vec<Vec<Scalar>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut todo = vec![q.unit.clone()];
    let mut done = Vec::new();
    while let Some(e) = todo.pop() {
        let corner = corner_basis(q, &e);
        if corner.cols() <= 1 {
            done.push(e);
            continue;
        }
        match split_corner(q, &e, &corner, &mut rng) {
            Some(e1) => {
                let e2: Vec<Scalar> = e.iter().zip(&e1).map(|(a, b)| a - b).collect();
                todo.push(e1);
                todo.push(e2);
            }
            None => {
                return Err(Error::Idempotents(format!(
                    "no idempotent splits a semisimple corner of dimension {}",
                    corner.cols()
                )))
            }
        }
    }
    Ok(done)
}

fn split_corner(q: &Structure, e: &[Scalar], corner: &Mat, rng: &mut ChaCha8Rng) -> Option<Vec<Scalar>> {
    let field = q.field;
    let n = corner.cols();
    let mut candidates: Vec<Vec<Scalar>> = corner.columns().collect();
    for i in 0..n {
        for j in i + 1..n {
            candidates.push(
                corner
                    .column(i)
                    .iter()
                    .zip(corner.column(j))
                    .map(|(a, b)| a + &b)
                    .collect(),
            );
        }
    }
    let mut tried = 0;
    let mut idx = 0;
    loop {
        let x = if idx < candidates.len() {
            idx += 1;
            candidates[idx - 1].clone()
        } else if tried < RANDOM_TRIES {
            tried += 1;
            let coeffs: Vec<Scalar> = (0..n)
                .map(|_| match field.characteristic() {
                    0 => field.from_i64(rng.gen_range(-3..=3)),
                    p => field.from_i64(rng.gen_range(0..p as i64)),
                })
                .collect();
            corner.mul_vec(&coeffs)
        } else {
            return None;
        };
        if let Some(e1) = split_by(q, e, &x) {
            return Some(e1);
        }
    }
}

/// An idempotent `0 != e1 != e` in `k[x] e`, if the minimal polynomial of `x`
/// has a root whose primary part is a proper factor.
fn split_by(q: &Structure, e: &[Scalar], x: &[Scalar]) -> Option<Vec<Scalar>> {
    let m = minimal_polynomial(q, e, x);
    let field = q.field;
    for root in m.roots() {
        let mu = m.root_multiplicity(&root);
        let primary = Poly::linear(field, &root).pow(mu);
        let (h, _) = m.div_rem(&primary);
        if h.is_constant() {
            continue;
        }
        let (_, _, v) = primary.ext_gcd(&h);
        let idem = v.mul(&h).rem(&m);
        return Some(evaluate(q, e, x, &idem));
    }
    None
}

/// Minimal polynomial of `x` inside the corner algebra with identity `e`.
pub(crate) fn minimal_polynomial(q: &Structure, e: &[Scalar], x: &[Scalar]) -> Poly {
    let field = q.field;
    let mut powers: Vec<Vec<Scalar>> = vec![e.to_vec()];
    loop {
        let next = q.mul(powers.last().expect("nonempty"), x);
        let basis = Mat::from_columns(field, q.dim, &powers);
        let rhs = Mat::column_vector(field, next.clone());
        if let Ok(Some(sol)) = basis.solve(&rhs) {
            let mut coeffs: Vec<Scalar> = sol.column(0).iter().map(|c| -c).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(next);
    }
}

fn evaluate(q: &Structure, e: &[Scalar], x: &[Scalar], p: &Poly) -> Vec<Scalar> {
    let mut acc = q.zeros();
    let mut power = e.to_vec();
    for c in p.coeffs() {
        for k in 0..q.dim {
            acc[k] = &acc[k] + &(c * &power[k]);
        }
        power = q.mul(&power, x);
    }
    acc
}

/// Lifts sequentially inside `f A f`, where `f` is the unit minus the
/// idempotents already lifted. Each lift is the idempotent of `k[a]` belonging
/// to the eigenvalue 1 of a preimage `a`, which avoids any division by 2 or 3.
fn lift(s: &Structure, split: &[Vec<Scalar>], section: &Mat) -> Result<Vec<Vec<Scalar>>> {
    let field = s.field;
    let mut rest = s.unit.clone();
    let mut out = Vec::with_capacity(split.len());
    for (i, bar) in split.iter().enumerate() {
        if i + 1 == split.len() {
            out.push(rest.clone());
            break;
        }
        let a = s.mul(&s.mul(&rest, &section.mul_vec(bar)), &rest);
        let m = minimal_polynomial(s, &rest, &a);
        let zero = field.zero();
        let one = field.one();
        let at_zero = Poly::linear(field, &zero).pow(m.root_multiplicity(&zero));
        let at_one = Poly::linear(field, &one).pow(m.root_multiplicity(&one));
        if at_zero.mul(&at_one) != m || at_one.is_constant() {
            return Err(Error::Idempotents(
                "preimage of an idempotent is not idempotent modulo the radical".into(),
            ));
        }
        let (_, _, v) = at_one.ext_gcd(&at_zero);
        let e = evaluate(s, &rest, &a, &v.mul(&at_zero).rem(&m));
        debug_assert!(s.is_idempotent(&e));
        rest = rest.iter().zip(&e).map(|(u, w)| u - w).collect();
        out.push(e);
    }
    Ok(out)
}
