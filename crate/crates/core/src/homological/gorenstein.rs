//! Gorenstein projective modules, Gorenstein dimensions and the singularity
//! category test.

use super::dimension::{global_dimension, iwanaga_gorenstein, GDimReport, PeriodicityWitness};
use super::resolution::{ext_dim_from, precomposition, resolve};
use crate::algebra::{
    decompose, is_projective, isomorphism, left_proj_approximation, proj_cosyzygy, strip_projectives, Algebra,
    FdModule, Projective,
};
use crate::error::{Error, Result};
use crate::linalg::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GpMethod {
    /// Decided by `Ext^i(m, A) = 0` for `1 <= i <= n` over an algebra with
    /// certified Gorenstein dimension `n`.
    IgCriterion(usize),
    /// Only `Ext^i(m, A)` and `Ext^i(Hom(m, A), A)` up to the cap were checked.
    BoundedExtOnly(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpReport {
    pub is_gp: bool,
    pub method: GpMethod,
}

fn vanishing_ext(m: &FdModule, upto: usize) -> Result<bool> {
    if upto == 0 || m.is_zero() {
        return Ok(true);
    }
    let reg = FdModule::regular(m.algebra());
    let res = resolve(m, upto + 1);
    for i in 1..=upto {
        if ext_dim_from(&res, &reg, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_gorenstein_projective(m: &FdModule, cap: usize) -> Result<GpReport> {
    let a = m.algebra();
    if let Some(n) = iwanaga_gorenstein(a, cap) {
        return Ok(GpReport {
            is_gp: vanishing_ext(m, n)?,
            method: GpMethod::IgCriterion(n),
        });
    }
    let star = crate::algebra::lambda_dual(m)?.module;
    let is_gp = vanishing_ext(m, cap)? && vanishing_ext(&star, cap)?;
    Ok(GpReport {
        is_gp,
        method: GpMethod::BoundedExtOnly(cap),
    })
}

/// A finite window `P_depth -> ... -> P_0 -> Q_0 -> ... -> Q_depth` of a
/// complete resolution through `m`.
#[derive(Clone, Debug)]
pub struct CompleteResolution {
    /// Terms from left to right.
    pub terms: Vec<Projective>,
    /// `maps[k]: terms[k] -> terms[k + 1]`.
    pub maps: Vec<Mat>,
    /// Index of `P_0` in `terms`.
    pub center: usize,
}

impl CompleteResolution {
    /// Exactness at every interior term, both of the complex and after
    /// applying `Hom(-, A)`.
    pub fn verify(&self) -> bool {
        let Some(first) = self.terms.first() else {
            return true;
        };
        let a = first.module.algebra();
        let reg = FdModule::regular(a);
        let hom: Vec<Mat> = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, d)| precomposition(d, &self.terms[k], &self.terms[k + 1], &reg))
            .collect();
        for k in 1..self.terms.len() - 1 {
            let (f, g) = (&self.maps[k - 1], &self.maps[k]);
            let mid = self.terms[k].dim();
            if !(g * f).is_zero() || f.rank() + g.rank() != mid {
                return false;
            }
            let (hf, hg) = (&hom[k - 1], &hom[k]);
            let hmid = hf.cols();
            if !(hf * hg).is_zero() || hf.rank() + hg.rank() != hmid {
                return false;
            }
        }
        true
    }
}

/// Glues a minimal resolution of `m` to iterated left projective approximations.
pub fn complete_resolution(m: &FdModule, depth: usize) -> Result<CompleteResolution> {
    let res = resolve(m, depth);
    let mut terms: Vec<Projective> = res.projectives.iter().take(depth + 1).rev().cloned().collect();
    let mut maps: Vec<Mat> = (0..terms.len().saturating_sub(1))
        .rev()
        .map(|i| res.differentials[i].clone())
        .collect();
    let center = terms.len() - 1;
    let mut current = m.clone();
    let mut into_current = res.augmentation.clone();
    for _ in 0..=depth {
        let (q, approx) = left_proj_approximation(&current)?;
        maps.push(&approx * &into_current);
        terms.push(q.clone());
        let (next, proj) = FdModule::cokernel_of(&q.module, &approx);
        current = next;
        into_current = proj;
    }
    Ok(CompleteResolution { terms, maps, center })
}

/// `sup { i : Ext^i(m, A) != 0 }`, which is the Gorenstein projective
/// dimension over an Iwanaga-Gorenstein algebra.
pub fn gp_dimension(m: &FdModule, cap: usize) -> Result<usize> {
    let n = iwanaga_gorenstein(m.algebra(), cap).ok_or(Error::IgNotCertified(cap))?;
    if n == 0 || m.is_zero() {
        return Ok(0);
    }
    let reg = FdModule::regular(m.algebra());
    let res = resolve(m, n + 1);
    for i in (1..=n).rev() {
        if ext_dim_from(&res, &reg, i)? != 0 {
            return Ok(i);
        }
    }
    Ok(0)
}

/// Largest Gorenstein projective dimension among the simples.
pub fn gorenstein_dimension_category(a: &Algebra, cap: usize) -> Result<usize> {
    let mut best = 0;
    for s in FdModule::simples(a) {
        best = best.max(gp_dimension(&s, cap)?);
    }
    Ok(best)
}

fn in_add(m: &FdModule, classes: &[FdModule]) -> Result<bool> {
    for (s, _) in decompose(m)? {
        let mut found = false;
        for c in classes {
            if isomorphism(&s, c)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

fn indecomposables_of(ms: &[FdModule]) -> Result<Vec<FdModule>> {
    let mut out: Vec<FdModule> = Vec::new();
    for m in ms {
        for (s, _) in decompose(m)? {
            if !in_add(&s, &out)? {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Checks that `add(x)` contains the projectives, is closed under syzygies,
/// and that the indecomposables of `Ω^n x` are Gorenstein projective with
/// cosyzygies back in `add(Ω^n x)`.
pub fn check_g_n(x: &[FdModule], n: usize, cap: usize) -> Result<bool> {
    let Some(first) = x.first() else {
        return Err(Error::NotQuasiResolving("empty class".into()));
    };
    let a = first.algebra().clone();
    let classes = indecomposables_of(x)?;
    for i in 0..a.idempotents().len() {
        if !in_add(&FdModule::indecomposable_projective(&a, i), &classes)? {
            return Err(Error::NotQuasiResolving(format!("projective {i} is missing")));
        }
    }
    for c in &classes {
        if !in_add(&crate::algebra::syzygy(c), &classes)? {
            return Ok(false);
        }
    }
    let shifted: Vec<FdModule> = classes
        .iter()
        .map(|c| {
            resolve(c, n)
                .syzygies
                .get(n)
                .cloned()
                .unwrap_or_else(|| FdModule::zero(&a))
        })
        .collect();
    let omega_n = indecomposables_of(&shifted)?;
    for m in &omega_n {
        if !is_gorenstein_projective(m, cap)?.is_gp {
            return Ok(false);
        }
        if !is_projective(m) && !in_add(&proj_cosyzygy(m)?, &omega_n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The nonprojective Gorenstein projective indecomposables of a Nakayama algebra.
pub fn gp_census(a: &Algebra, cap: usize) -> Result<Vec<FdModule>> {
    let mut out = Vec::new();
    for m in super::nakayama::nakayama_indecomposables(a)? {
        if !is_projective(&m) && is_gorenstein_projective(&m, cap)?.is_gp {
            out.push(m);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum SingularityWitness {
    /// A simple with a periodic minimal resolution.
    Periodic(PeriodicityWitness),
    /// A nonprojective Gorenstein projective module, found as a summand of a
    /// high syzygy of a simple.
    GorensteinProjective(FdModule),
}

#[derive(Clone, Debug)]
pub enum Singularity {
    Trivial,
    Nontrivial(SingularityWitness),
    UnknownAtCap,
}

/// The singularity category vanishes exactly when the global dimension is finite.
pub fn singularity_trivial(a: &Algebra, cap: usize) -> Result<Singularity> {
    match global_dimension(a, cap) {
        GDimReport::Finite(_) => Ok(Singularity::Trivial),
        GDimReport::InfiniteCertified(w) => Ok(Singularity::Nontrivial(SingularityWitness::Periodic(w))),
        GDimReport::AtLeastCap(_) => {
            let Some(n) = iwanaga_gorenstein(a, cap) else {
                return Ok(Singularity::UnknownAtCap);
            };
            for s in FdModule::simples(a) {
                let res = resolve(&s, n);
                let Some(top) = res.syzygies.get(n) else { continue };
                if let Some((m, _)) = strip_projectives(top)?.into_iter().next() {
                    return Ok(Singularity::Nontrivial(SingularityWitness::GorensteinProjective(m)));
                }
            }
            Ok(Singularity::UnknownAtCap)
        }
    }
}
