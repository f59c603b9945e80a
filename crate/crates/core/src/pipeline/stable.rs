//! The stable category of maximal Cohen-Macaulay modules over `k[x]/(f)` and
//! the stable endomorphism algebra of its additive generator.

use crate::algebra::{stable_hom, Algebra, FdModule, StableHom};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Poly};
use crate::mf::{mf_cokernel_over, mf_indecomposables, ring_algebra, McmModule};

#[derive(Clone, Debug)]
pub enum BaseRing {
    Polynomial(Poly),
    Catalog(String),
}

#[derive(Clone, Debug)]
pub struct StableCatPresentation {
    pub base: BaseRing,
    pub indecomposables: Vec<McmModule>,
    /// `hom_table[a][b] = dim` of stable maps from indecomposable `a` to `b`.
    pub hom_table: Vec<Vec<usize>>,
    /// Direct sum of the indecomposables; the zero module when there are none.
    pub generator: FdModule,
    /// Stable endomorphisms of the generator under composition. Idempotent `i`
    /// is the identity of indecomposable `i`.
    pub lambda: Algebra,
}

impl StableCatPresentation {
    /// A presentation carrying only an algebra, for instances given directly.
    pub fn from_algebra(name: &str, lambda: Algebra) -> StableCatPresentation {
        StableCatPresentation {
            base: BaseRing::Catalog(name.to_string()),
            indecomposables: Vec::new(),
            hom_table: Vec::new(),
            generator: FdModule::zero(&lambda),
            lambda,
        }
    }
}

/// One basis vector of the stable endomorphism algebra: representative `rep`
/// of the stable maps from indecomposable `from` to `to`.
struct BasisMap {
    from: usize,
    to: usize,
    rep: usize,
}

pub fn build_stable_category(f: &Poly) -> Result<StableCatPresentation> {
    let field = f.field();
    let seeds = mf_indecomposables(f)?;
    let base = BaseRing::Polynomial(f.clone());
    if seeds.is_empty() {
        let lambda = Algebra::zero(field);
        let ring = ring_algebra(f)?;
        return Ok(StableCatPresentation {
            base,
            indecomposables: Vec::new(),
            hom_table: Vec::new(),
            generator: FdModule::zero(&ring),
            lambda,
        });
    }
    let ring = ring_algebra(f)?;
    let indecomposables = seeds
        .iter()
        .map(|s| mf_cokernel_over(s, &ring))
        .collect::<Result<Vec<_>>>()?;
    let modules: Vec<&FdModule> = indecomposables.iter().map(|m| &m.module).collect();
    let n = modules.len();
    // homs[a][b]: stable maps a -> b
    let homs: Vec<Vec<StableHom>> = modules
        .iter()
        .map(|a| modules.iter().map(|b| stable_hom(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let hom_table: Vec<Vec<usize>> = homs.iter().map(|row| row.iter().map(|h| h.dim).collect()).collect();
    let lambda = stable_endomorphisms(field, &modules, &homs)?;
    let generator = FdModule::direct_sum(&modules)?;
    let presentation = StableCatPresentation {
        base,
        indecomposables,
        hom_table,
        generator,
        lambda,
    };
    let total: usize = presentation.hom_table.iter().flatten().sum();
    if total != presentation.lambda.dim() || presentation.lambda.idempotents().len() != n {
        return Err(Error::Inconsistent(
            "stable endomorphism algebra does not match the hom table".into(),
        ));
    }
    Ok(presentation)
}

fn stable_endomorphisms(field: Field, modules: &[&FdModule], homs: &[Vec<StableHom>]) -> Result<Algebra> {
    let n = modules.len();
    let mut basis = Vec::new();
    let mut offset = vec![vec![0; n]; n];
    for from in 0..n {
        for to in 0..n {
            offset[from][to] = basis.len();
            for rep in 0..homs[from][to].dim {
                basis.push(BasisMap { from, to, rep });
            }
        }
    }
    let dim = basis.len();
    let map = |b: &BasisMap| &homs[b.from][b.to].representatives[b.rep];
    // a * b = a ∘ b, so that contravariant functors evaluated at the generator
    // are right modules
    let mut mult = vec![vec![field.zeros(dim); dim]; dim];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if a.from != b.to {
                continue;
            }
            let composite = map(a) * map(b);
            let h = &homs[b.from][a.to];
            let coords = h.class_of(&composite)?;
            for (r, c) in coords.into_iter().enumerate() {
                mult[i][j][offset[b.from][a.to] + r] = c;
            }
        }
    }
    let mut idempotents = Vec::with_capacity(n);
    let mut unit = field.zeros(dim);
    for (i, m) in modules.iter().enumerate() {
        let id = Mat::identity(field, m.dim());
        let coords = homs[i][i].class_of(&id)?;
        let mut e = field.zeros(dim);
        for (r, c) in coords.into_iter().enumerate() {
            e[offset[i][i] + r] = c.clone();
            unit[offset[i][i] + r] = c;
        }
        idempotents.push(e);
    }
    let labels = basis
        .iter()
        .map(|b| format!("h{}{}_{}", b.from + 1, b.to + 1, b.rep))
        .collect();
    Algebra::from_structure_constants(field, Some(labels), &mult, unit, Some(idempotents))
}
