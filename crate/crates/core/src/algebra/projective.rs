//! Projective covers, syzygies and stable homomorphisms.

use super::module::{hom_space, FdModule};
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar};

/// A direct sum of indecomposable projectives `e_{s_0} A + e_{s_1} A + ...`.
#[derive(Clone, Debug)]
pub struct Projective {
    pub module: FdModule,
    /// Idempotent index of each summand.
    pub summands: Vec<usize>,
    /// Starting coordinate of each summand.
    pub offsets: Vec<usize>,
}

impl Projective {
    pub fn new(algebra: &Algebra, summands: Vec<usize>) -> Projective {
        let pieces: Vec<FdModule> = summands
            .iter()
            .map(|&i| FdModule::indecomposable_projective(algebra, i))
            .collect();
        let mut offsets = Vec::with_capacity(pieces.len());
        let mut at = 0;
        for p in &pieces {
            offsets.push(at);
            at += p.dim();
        }
        let module = if pieces.is_empty() {
            FdModule::zero(algebra)
        } else {
            let refs: Vec<&FdModule> = pieces.iter().collect();
            FdModule::direct_sum(&refs).expect("same algebra")
        };
        Projective {
            module,
            summands,
            offsets,
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// The module map `self -> target` sending the generator `e_s` of summand
    /// `s` to `values[s]`, which must lie in `target e_s`.
    pub fn map_from_generators(&self, target: &FdModule, values: &[Vec<Scalar>]) -> Mat {
        let algebra = target.algebra();
        let bases = algebra.projective_bases();
        let mut out = Mat::zeros(target.field(), target.dim(), self.dim());
        for (s, &i) in self.summands.iter().enumerate() {
            let pb = &bases[i];
            for (c, w) in pb.basis.columns().enumerate() {
                let col = target.act(&values[s], &w);
                for (r, x) in col.into_iter().enumerate() {
                    out[(r, self.offsets[s] + c)] = x;
                }
            }
        }
        out
    }

    /// Lifts `g: self -> c` through a surjection `p: b -> c`.
    pub fn lift(&self, g: &Mat, b: &FdModule, p: &Mat) -> Result<Mat> {
        let algebra = b.algebra();
        let f = b.field();
        let mut values = Vec::with_capacity(self.summands.len());
        for (s, &i) in self.summands.iter().enumerate() {
            let target = Mat::column_vector(f, g.column(self.offsets[s]));
            let x = p
                .solve(&target)?
                .ok_or_else(|| Error::InvalidShortExact("map to lift along is not surjective".into()))?;
            values.push(b.act(&x.column(0), &algebra.idempotents()[i]));
        }
        Ok(self.map_from_generators(b, &values))
    }
}

/// A projective cover `projective -> module` with its generator images.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Projective,
    pub surjection: Mat,
    /// Image of the generator of each summand.
    pub generators: Vec<Vec<Scalar>>,
}

/// Minimal projective cover: one summand `e_i A` per basis vector of the top in degree `i`.
pub fn projective_cover(m: &FdModule) -> Cover {
    let algebra = m.algebra();
    let f = m.field();
    let mut span = m.radical_submodule();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for (i, e) in algebra.idempotents().iter().enumerate() {
        let piece = m.idempotent_image(e);
        for v in piece.columns() {
            let col = Mat::column_vector(f, v.clone());
            if span.spans(&col) {
                continue;
            }
            let image: Vec<Vec<Scalar>> = algebra.projective_bases()[i]
                .basis
                .columns()
                .map(|w| m.act(&v, &w))
                .collect();
            let image = Mat::from_columns(f, m.dim(), &image);
            span = Mat::hstack(f, m.dim(), &[&span, &image]).column_basis();
            summands.push(i);
            generators.push(v);
        }
    }
    let projective = Projective::new(algebra, summands);
    let surjection = projective.map_from_generators(m, &generators);
    debug_assert_eq!(surjection.rank(), m.dim());
    Cover {
        projective,
        surjection,
        generators,
    }
}

/// Kernel of the projective cover, with its inclusion into the cover.
pub fn syzygy_with_inclusion(m: &FdModule) -> (FdModule, Mat, Cover) {
    let cover = projective_cover(m);
    let k = cover.surjection.kernel_basis();
    let omega = cover.projective.module.submodule(&k);
    (omega, k, cover)
}

/// First syzygy: the kernel of the minimal projective cover.
pub fn syzygy(m: &FdModule) -> FdModule {
    syzygy_with_inclusion(m).0
}

/// A module is projective iff its projective cover is an isomorphism.
pub fn is_projective(m: &FdModule) -> bool {
    projective_cover(m).projective.dim() == m.dim()
}

/// `Hom(m, n)` modulo maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub dim: usize,
    pub hom: Vec<Mat>,
    /// Basis of the maps that factor through a projective.
    pub projective_part: Vec<Mat>,
    /// Elements of `hom` whose classes form a basis of the quotient.
    pub representatives: Vec<Mat>,
    rows: usize,
    cols: usize,
}

impl StableHom {
    /// Coordinates of the class of `f` in the representatives.
    pub fn class_of(&self, f: &Mat) -> Result<Vec<Scalar>> {
        let field = f.field();
        let mut cols: Vec<Vec<Scalar>> = self.representatives.iter().map(Mat::vectorize).collect();
        cols.extend(self.projective_part.iter().map(Mat::vectorize));
        let n = self.rows * self.cols;
        let basis = Mat::from_columns(field, n, &cols);
        let target = Mat::column_vector(field, f.vectorize());
        let x = basis
            .solve(&target)?
            .ok_or_else(|| Error::InvalidModule("map is not a module homomorphism".into()))?;
        Ok(x.column(0)[..self.dim].to_vec())
    }

    pub fn is_stably_zero(&self, f: &Mat) -> Result<bool> {
        Ok(self.class_of(f)?.iter().all(Scalar::is_zero))
    }
}

pub fn stable_hom(m: &FdModule, n: &FdModule) -> Result<StableHom> {
    let field = m.field();
    let hom = hom_space(m, n)?;
    let cover = projective_cover(n);
    let through = hom_space(m, &cover.projective.module)?;
    let rows = n.dim();
    let cols = m.dim();
    let len = rows * cols;
    let composites: Vec<Vec<Scalar>> = through.iter().map(|g| (&cover.surjection * g).vectorize()).collect();
    let pbasis = Mat::from_columns(field, len, &composites).column_basis();
    let k = pbasis.cols();
    let mut all: Vec<Vec<Scalar>> = pbasis.columns().collect();
    all.extend(hom.iter().map(Mat::vectorize));
    let stacked = Mat::from_columns(field, len, &all);
    let chosen: Vec<usize> = stacked
        .independent_columns()
        .into_iter()
        .filter(|&c| c >= k)
        .map(|c| c - k)
        .collect();
    let projective_part = pbasis.columns().map(|v| Mat::from_vec(field, rows, cols, v)).collect();
    let representatives: Vec<Mat> = chosen.iter().map(|&i| hom[i].clone()).collect();
    Ok(StableHom {
        dim: representatives.len(),
        hom,
        projective_part,
        representatives,
        rows,
        cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn cover_of_simple_over_dual_numbers_is_regular() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let k = FdModule::simple(&a, 0);
        let c = projective_cover(&k);
        assert_eq!(c.projective.dim(), 2);
        assert_eq!(c.surjection.rank(), 1);
        let omega = syzygy(&k);
        assert_eq!(omega.dim(), 1);
        assert!(!is_projective(&k));
        assert!(is_projective(&FdModule::regular(&a)));
    }

    #[test]
    fn stable_endomorphisms() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let k = FdModule::simple(&a, 0);
        assert_eq!(stable_hom(&k, &k).unwrap().dim, 1);
        let reg = FdModule::regular(&a);
        assert_eq!(stable_hom(&reg, &k).unwrap().dim, 0);
        assert_eq!(stable_hom(&reg, &reg).unwrap().dim, 0);
    }

    #[test]
    fn simples_of_semisimple_are_projective() {
        let a = Algebra::product_of_fields(Field::prime(5).unwrap(), 2);
        for s in FdModule::simples(&a) {
            let c = projective_cover(&s);
            assert_eq!(c.projective.dim(), 1);
            assert!(is_projective(&s));
        }
    }
}
