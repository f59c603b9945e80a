//! Krull-Schmidt decomposition and isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{hom_space, FdModule};
use super::projective::is_projective;
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar};

const SEED: u64 = 0x150_3a1c;
const RANDOM_TRIES: usize = 4;

/// An indecomposable direct summand with its inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: FdModule,
    pub inclusion: Mat,
    pub projection: Mat,
}

/// `End(m)` as an algebra, with the basis of endomorphism matrices.
fn endomorphism_algebra(m: &FdModule) -> Result<(Algebra, Vec<Mat>)> {
    let field = m.field();
    let basis = hom_space(m, m)?;
    let h = basis.len();
    let len = m.dim() * m.dim();
    let vecs: Vec<Vec<Scalar>> = basis.iter().map(Mat::vectorize).collect();
    let coords = Mat::from_columns(field, len, &vecs).left_inverse();
    let mult: Vec<Vec<Vec<Scalar>>> = (0..h)
        .map(|i| {
            (0..h)
                .map(|j| coords.mul_vec(&(&basis[i] * &basis[j]).vectorize()))
                .collect()
        })
        .collect();
    let unit = coords.mul_vec(&Mat::identity(field, m.dim()).vectorize());
    let end = Algebra::from_structure_constants(field, None, &mult, unit, None).map_err(|e| match e {
        Error::Idempotents(msg) | Error::RadicalUncertain(msg) => {
            Error::IdempotentSplitFailure(format!("endomorphism ring of a module of dimension {}: {msg}", m.dim()))
        }
        other => other,
    })?;
    Ok((end, basis))
}

fn combine(basis: &[Mat], coeffs: &[Scalar], rows: usize, cols: usize) -> Mat {
    let field = coeffs.first().map(Scalar::field).unwrap_or_else(|| basis[0].field());
    let mut out = Mat::zeros(field, rows, cols);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

/// Splits `m` into indecomposable summands, one per primitive idempotent of `End(m)`.
pub fn split(m: &FdModule) -> Result<Vec<Summand>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let (end, basis) = endomorphism_algebra(m)?;
    let mut out = Vec::new();
    for e in end.idempotents() {
        let proj_mat = combine(&basis, e, m.dim(), m.dim());
        let image = proj_mat.column_basis();
        let coords = image.left_inverse();
        let module = m.submodule(&image);
        let projection = &coords * &proj_mat;
        out.push(Summand {
            module,
            inclusion: image,
            projection,
        });
    }
    for (k, s) in out.iter().enumerate() {
        if !is_local(&s.module)? {
            return Err(Error::IdempotentSplitFailure(format!(
                "summand {k} of dimension {} has a non-local endomorphism ring",
                s.module.dim()
            )));
        }
    }
    Ok(out)
}

/// Whether `End(m)` modulo its radical is one-dimensional.
fn is_local(m: &FdModule) -> Result<bool> {
    let h = hom_space(m, m)?.len();
    if h == 1 {
        return Ok(true);
    }
    let (end, _) = endomorphism_algebra(m)?;
    Ok(end.radical().cols() + 1 == end.dim())
}

/// Isomorphism between indecomposables: some `g f` with `f: x -> y`, `g: y -> x`
/// lies outside the radical of the local ring `End(x)`, hence is invertible.
fn indecomposable_isomorphism(x: &FdModule, y: &FdModule) -> Result<Option<Mat>> {
    if x.dim() != y.dim() || x.dim_vector() != y.dim_vector() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(Mat::zeros(x.field(), 0, 0)));
    }
    let xy = hom_space(x, y)?;
    let yx = hom_space(y, x)?;
    for f in &xy {
        if !f.is_invertible() {
            continue;
        }
        return Ok(Some(f.clone()));
    }
    for f in &xy {
        for g in &yx {
            if (g * f).is_invertible() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Indecomposable summands grouped up to isomorphism, with multiplicities, in
/// order of dimension, then dimension vector, then first appearance.
pub fn decompose(m: &FdModule) -> Result<Vec<(FdModule, usize)>> {
    Ok(grouped(m)?.into_iter().map(|(s, k)| (s.module, k.len())).collect())
}

/// Like [`decompose`], keeping every summand of each class.
fn grouped(m: &FdModule) -> Result<Vec<(Summand, Vec<Summand>)>> {
    let pieces = split(m)?;
    let mut classes: Vec<(Summand, Vec<Summand>)> = Vec::new();
    'outer: for p in pieces {
        for (rep, members) in classes.iter_mut() {
            if indecomposable_isomorphism(&rep.module, &p.module)?.is_some() {
                members.push(p);
                continue 'outer;
            }
        }
        classes.push((p.clone(), vec![p]));
    }
    classes.sort_by_key(|(rep, _)| (rep.module.dim(), rep.module.dim_vector()));
    Ok(classes)
}

/// The non-projective indecomposable summands with multiplicities.
pub fn strip_projectives(m: &FdModule) -> Result<Vec<(FdModule, usize)>> {
    Ok(decompose(m)?.into_iter().filter(|(s, _)| !is_projective(s)).collect())
}

/// An isomorphism `m -> n`, if one exists.
pub fn isomorphism(m: &FdModule, n: &FdModule) -> Result<Option<Mat>> {
    if !m.algebra().same_as(n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() || m.dim_vector() != n.dim_vector() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Mat::zeros(m.field(), 0, 0)));
    }
    let mn = hom_space(m, n)?;
    let nm = hom_space(n, m)?;
    if mn.len() != nm.len() || mn.is_empty() {
        return Ok(None);
    }
    if hom_space(m, m)?.len() != mn.len() {
        return Ok(None);
    }
    for f in &mn {
        if f.is_invertible() {
            return Ok(Some(f.clone()));
        }
    }
    let field = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..mn.len())
            .map(|_| match field.characteristic() {
                0 => field.from_i64(rng.gen_range(-50..=50)),
                p => field.from_i64(rng.gen_range(0..p as i64)),
            })
            .collect();
        let f = combine(&mn, &coeffs, n.dim(), m.dim());
        if f.is_invertible() {
            return Ok(Some(f));
        }
    }
    // exact path: match indecomposable summands
    let gm = grouped(m)?;
    let gn = grouped(n)?;
    if gm.len() != gn.len() {
        return Ok(None);
    }
    let mut used = vec![false; gn.len()];
    let mut total = Mat::zeros(field, n.dim(), m.dim());
    for (rep_m, members_m) in &gm {
        let mut matched = false;
        for (idx, (rep_n, members_n)) in gn.iter().enumerate() {
            if used[idx] || members_n.len() != members_m.len() {
                continue;
            }
            if indecomposable_isomorphism(&rep_m.module, &rep_n.module)?.is_none() {
                continue;
            }
            for (sm, sn) in members_m.iter().zip(members_n) {
                let phi = indecomposable_isomorphism(&sm.module, &sn.module)?
                    .expect("members of isomorphic classes are isomorphic");
                total = &total + &(&(&sn.inclusion * &phi) * &sm.projection);
            }
            used[idx] = true;
            matched = true;
            break;
        }
        if !matched {
            return Ok(None);
        }
    }
    debug_assert!(m.is_hom_to(n, &total) && total.is_invertible());
    Ok(Some(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn regular_module_of_product_splits_into_two_simples() {
        let a = Algebra::product_of_fields(Field::rationals(), 2);
        let d = decompose(&FdModule::regular(&a)).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|(s, k)| s.dim() == 1 && *k == 1));
    }

    #[test]
    fn local_regular_module_is_indecomposable() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let d = decompose(&FdModule::regular(&a)).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0.dim(), 2);
    }

    #[test]
    fn repeated_summand_has_multiplicity_two() {
        let a = Algebra::truncated_polynomial(Field::prime(7).unwrap(), 3);
        let k = FdModule::simple(&a, 0);
        let kk = FdModule::direct_sum(&[&k, &k]).unwrap();
        let d = decompose(&kk).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
    }

    #[test]
    fn isomorphism_after_change_of_basis() {
        let f = Field::rationals();
        let a = Algebra::truncated_polynomial(f, 3);
        let k = FdModule::simple(&a, 0);
        let reg = FdModule::regular(&a);
        let m = FdModule::direct_sum(&[&reg, &k]).unwrap();
        let p = Mat::from_i64(f, 4, 4, &[1, 2, 0, 1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0, 2]);
        let n = m.rebase(&p).unwrap();
        let iso = isomorphism(&m, &n).unwrap().expect("isomorphic");
        assert!(m.is_hom_to(&n, &iso) && iso.is_invertible());
        let other = FdModule::direct_sum(&[&k, &k, &k, &k]).unwrap();
        assert!(isomorphism(&m, &other).unwrap().is_none());
    }
}
