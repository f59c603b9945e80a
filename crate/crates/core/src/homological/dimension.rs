//! Projective, global and injective dimensions with certificates.

use super::resolution::{min_resolution, Periodicity, Resolution};
use crate::algebra::{dual, is_projective, isomorphism, Algebra, FdModule};
use crate::error::Result;

/// Which module a periodicity certificate is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityWitness {
    /// Index of the simple module (or 0 for a single module).
    pub simple: usize,
    pub periodicity: Periodicity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GDimReport {
    Finite(usize),
    AtLeastCap(usize),
    InfiniteCertified(PeriodicityWitness),
}

impl GDimReport {
    pub fn finite(&self) -> Option<usize> {
        match self {
            GDimReport::Finite(d) => Some(*d),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, GDimReport::InfiniteCertified(_))
    }
}

/// Projective dimension read off a resolution.
pub fn dimension_of(res: &Resolution, index: usize) -> GDimReport {
    if let Some(len) = res.length() {
        return GDimReport::Finite(len);
    }
    match &res.periodicity {
        Some(p) => GDimReport::InfiniteCertified(PeriodicityWitness {
            simple: index,
            periodicity: p.clone(),
        }),
        None => GDimReport::AtLeastCap(res.cap),
    }
}

pub fn projective_dimension(m: &FdModule, cap: usize) -> GDimReport {
    dimension_of(&min_resolution(m, cap), 0)
}

/// Supremum of projective dimensions of the simples. Infinite only with a
/// periodicity certificate.
pub fn global_dimension(a: &Algebra, cap: usize) -> GDimReport {
    let mut best = 0;
    let mut open = false;
    for (i, s) in FdModule::simples(a).iter().enumerate() {
        match dimension_of(&min_resolution(s, cap), i) {
            GDimReport::Finite(d) => best = best.max(d),
            GDimReport::AtLeastCap(_) => open = true,
            infinite => return infinite,
        }
    }
    if open {
        GDimReport::AtLeastCap(cap)
    } else {
        GDimReport::Finite(best)
    }
}

/// Replays a certificate: recomputes the simple's resolution and checks the
/// stored matrix is an isomorphism between the two syzygies.
pub fn verify_periodicity(a: &Algebra, w: &PeriodicityWitness, cap: usize) -> Result<bool> {
    let simples = FdModule::simples(a);
    let Some(s) = simples.get(w.simple) else {
        return Ok(false);
    };
    let res = min_resolution(s, cap.max(w.periodicity.to));
    let (from, to) = (w.periodicity.from, w.periodicity.to);
    let (Some(x), Some(y)) = (res.syzygies.get(from), res.syzygies.get(to)) else {
        return Ok(false);
    };
    let iso = &w.periodicity.isomorphism;
    Ok(from < to
        && !x.is_zero()
        && !is_projective(x)
        && x.is_hom_to(y, iso)
        && iso.is_invertible()
        && isomorphism(x, y)?.is_some())
}

/// Injective dimensions of the regular module on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveDimensions {
    pub left: GDimReport,
    pub right: GDimReport,
}

/// Right: `inj.dim A_A = pd D(A_A)` over the opposite algebra. Left:
/// `inj.dim _A A = pd D(_A A)` over the algebra itself.
pub fn injective_dimension_regular(a: &Algebra, cap: usize) -> InjectiveDimensions {
    let right_dual = dual(&FdModule::regular(a));
    let op = a.opposite();
    let left_dual = dual(&FdModule::regular(&op));
    InjectiveDimensions {
        left: dimension_of(&min_resolution(&left_dual, cap), 0),
        right: dimension_of(&min_resolution(&right_dual, cap), 0),
    }
}

/// `Some(n)` when both injective dimensions are certified finite and equal.
pub fn iwanaga_gorenstein(a: &Algebra, cap: usize) -> Option<usize> {
    let d = injective_dimension_regular(a, cap);
    match (d.left.finite(), d.right.finite()) {
        (Some(l), Some(r)) if l == r => Some(l),
        _ => None,
    }
}

/// `D(_A A)` is projective as a right module.
pub fn is_selfinjective(a: &Algebra) -> bool {
    let op = a.opposite();
    is_projective(&dual(&FdModule::regular(&op)))
}
