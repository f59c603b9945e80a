//! Indecomposables of Nakayama algebras: the quotients `e_i A / e_i A J^l`.

use crate::algebra::{Algebra, FdModule};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Bases of `M J^k` for `k = 0, 1, ...` until the chain reaches zero.
pub fn radical_filtration(m: &FdModule) -> Vec<Mat> {
    let f = m.field();
    let radical = m.algebra().radical();
    let mut layers = vec![Mat::identity(f, m.dim())];
    loop {
        let last = layers.last().expect("nonempty");
        if last.cols() == 0 {
            return layers;
        }
        let parts: Vec<Mat> = radical.columns().map(|r| &m.action_of(&r) * last).collect();
        let refs: Vec<&Mat> = parts.iter().collect();
        let next = Mat::hstack(f, m.dim(), &refs).column_basis();
        layers.push(next);
    }
}

fn uniserial(m: &FdModule) -> bool {
    radical_filtration(m).windows(2).all(|w| w[0].cols() - w[1].cols() <= 1)
}

/// Whether every indecomposable projective on both sides is uniserial.
pub fn is_nakayama(a: &Algebra) -> bool {
    let op = a.opposite();
    (0..a.idempotents().len()).all(|i| uniserial(&FdModule::indecomposable_projective(a, i)))
        && (0..op.idempotents().len()).all(|i| uniserial(&FdModule::indecomposable_projective(&op, i)))
}

/// All indecomposables `e_i A / e_i A J^l`, ordered by length and then vertex.
pub fn nakayama_indecomposables(a: &Algebra) -> Result<Vec<FdModule>> {
    if !is_nakayama(a) {
        return Err(Error::NotNakayama(
            "an indecomposable projective has a radical layer of dimension above one".into(),
        ));
    }
    let mut found: Vec<(usize, usize, FdModule)> = Vec::new();
    for i in 0..a.idempotents().len() {
        let p = FdModule::indecomposable_projective(a, i);
        let layers = radical_filtration(&p);
        for (l, sub) in layers.iter().enumerate().skip(1) {
            found.push((l, i, p.quotient(sub).0));
        }
    }
    found.sort_by_key(|(l, i, _)| (*l, *i));
    Ok(found.into_iter().map(|(_, _, m)| m).collect())
}
