//! Minimal projective resolutions and Ext.

use crate::algebra::{isomorphism, projective_cover, FdModule, Projective};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar};

/// `Ω^from M ≅ Ω^to M` through `isomorphism: Ω^from -> Ω^to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub from: usize,
    pub to: usize,
    pub isomorphism: Mat,
}

/// `... -> P_1 -> P_0 -> M`, with `syzygies[i] = Ω^i M` sitting inside `P_{i-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: FdModule,
    pub projectives: Vec<Projective>,
    /// `differentials[i]: P_{i+1} -> P_i`.
    pub differentials: Vec<Mat>,
    pub augmentation: Mat,
    pub syzygies: Vec<FdModule>,
    /// Some `P_i` is zero: the resolution is complete.
    pub terminated: bool,
    pub periodicity: Option<Periodicity>,
    pub cap: usize,
}

impl Resolution {
    /// Projective dimension when the resolution terminated.
    pub fn length(&self) -> Option<usize> {
        if !self.terminated {
            return None;
        }
        Some(
            self.projectives
                .iter()
                .take_while(|p| p.dim() > 0)
                .count()
                .saturating_sub(1),
        )
    }

    /// Whether `P_degree` has been computed (it may be zero after termination).
    pub fn reaches(&self, degree: usize) -> bool {
        self.terminated || degree < self.projectives.len()
    }

    pub fn projective(&self, degree: usize) -> Option<&Projective> {
        self.projectives.get(degree)
    }
}

fn build(m: &FdModule, cap: usize, detect_period: bool) -> Resolution {
    let mut projectives = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut inclusions: Vec<Mat> = Vec::new();
    let mut augmentation = None;
    let mut terminated = false;
    let mut periodicity = None;
    for i in 0..=cap {
        let current = syzygies[i].clone();
        if current.is_zero() {
            terminated = true;
            projectives.push(Projective::new(m.algebra(), Vec::new()));
            break;
        }
        if detect_period && periodicity.is_none() && i > 0 {
            for (j, earlier) in syzygies.iter().enumerate().take(i) {
                if earlier.is_zero() {
                    continue;
                }
                if let Ok(Some(iso)) = isomorphism(earlier, &current) {
                    periodicity = Some(Periodicity {
                        from: j,
                        to: i,
                        isomorphism: iso,
                    });
                    break;
                }
            }
        }
        let cover = projective_cover(&current);
        let kernel = cover.surjection.kernel_basis();
        let next = cover.projective.module.submodule(&kernel);
        if i == 0 {
            augmentation = Some(cover.surjection.clone());
        } else {
            differentials.push(&inclusions[i - 1] * &cover.surjection);
        }
        inclusions.push(kernel);
        projectives.push(cover.projective);
        syzygies.push(next);
    }
    let augmentation = augmentation.unwrap_or_else(|| Mat::zeros(m.field(), 0, 0));
    Resolution {
        module: m.clone(),
        projectives,
        differentials,
        augmentation,
        syzygies,
        terminated,
        periodicity,
        cap,
    }
}

/// Minimal resolution through `P_cap`, stopping early when a syzygy vanishes.
/// Each new syzygy is tested for isomorphism against the earlier ones.
pub fn min_resolution(m: &FdModule, cap: usize) -> Resolution {
    build(m, cap, true)
}

/// Minimal resolution through `P_length` without periodicity detection.
pub fn resolve(m: &FdModule, length: usize) -> Resolution {
    build(m, length, false)
}

/// Matrix of `f -> f ∘ d` from `Hom(target, n)` to `Hom(source, n)` for a map
/// `d: source -> target` of projectives. `Hom(⊕ e_s A, n)` is identified with
/// `⊕ n e_s` by evaluation at the generators; the columns index a basis of
/// `Hom(target, n)` and the rows the concatenated generator values in `source`.
pub fn precomposition(d: &Mat, source: &Projective, target: &Projective, n: &FdModule) -> Mat {
    let algebra = n.algebra();
    let field = n.field();
    let bases = algebra.projective_bases();
    let rows = source.summands.len() * n.dim();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for (t, &j) in target.summands.iter().enumerate() {
        let ne = n.idempotent_image(&algebra.idempotents()[j]);
        for y in ne.columns() {
            let mut col = field.zeros(rows);
            for (s, _) in source.summands.iter().enumerate() {
                // component of d(gen_s) in summand t, as an algebra element
                let off = target.offsets[t];
                let len = bases[j].basis.cols();
                let coords: Vec<Scalar> = (0..len).map(|r| d[(off + r, source.offsets[s])].clone()).collect();
                if coords.iter().all(Scalar::is_zero) {
                    continue;
                }
                let x = bases[j].basis.mul_vec(&coords);
                let v = n.act(&y, &x);
                for (k, c) in v.into_iter().enumerate() {
                    col[s * n.dim() + k] = c;
                }
            }
            cols.push(col);
        }
    }
    Mat::from_columns(field, rows, &cols)
}

/// `dim Hom(P, n) = Σ dim n e_s`.
pub fn hom_from_projective_dim(p: &Projective, n: &FdModule) -> usize {
    let idem = n.algebra().idempotents();
    p.summands.iter().map(|&s| n.action_of(&idem[s]).rank()).sum()
}

/// `dim Ext^i(m, n)` from a resolution reaching `P_{i+1}`.
pub fn ext_dim_from(res: &Resolution, n: &FdModule, i: usize) -> Result<usize> {
    if !res.module.algebra().same_as(n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if !res.reaches(i + 1) {
        return Err(Error::CapExceeded {
            cap: res.cap,
            degree: i,
        });
    }
    let Some(pi) = res.projective(i) else {
        return Ok(0);
    };
    if pi.dim() == 0 {
        return Ok(0);
    }
    let total = hom_from_projective_dim(pi, n);
    let out_rank = match (res.projective(i + 1), res.differentials.get(i)) {
        (Some(next), Some(d)) if next.dim() > 0 => precomposition(d, next, pi, n).rank(),
        _ => 0,
    };
    let in_rank = if i == 0 {
        0
    } else {
        precomposition(&res.differentials[i - 1], pi, &res.projectives[i - 1], n).rank()
    };
    Ok(total - out_rank - in_rank)
}

/// `dim Ext^i(m, n)`; `i = 0` gives `dim Hom(m, n)`.
pub fn ext_dim(m: &FdModule, n: &FdModule, i: usize) -> Result<usize> {
    ext_dim_from(&resolve(m, i + 1), n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hom_space, Algebra};
    use crate::linalg::Field;

    #[test]
    fn simple_over_dual_numbers_is_periodic() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let k = FdModule::simple(&a, 0);
        let r = min_resolution(&k, 5);
        assert!(!r.terminated);
        let p = r.periodicity.expect("periodic");
        assert_eq!((p.from, p.to), (0, 1));
        for i in 0..4 {
            assert_eq!(ext_dim(&k, &k, i).unwrap(), 1);
        }
    }

    #[test]
    fn ext_zero_is_hom() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 3);
        let reg = FdModule::regular(&a);
        let k = FdModule::simple(&a, 0);
        assert_eq!(ext_dim(&k, &reg, 0).unwrap(), hom_space(&k, &reg).unwrap().len());
        assert_eq!(ext_dim(&reg, &k, 1).unwrap(), 0);
        assert_eq!(ext_dim(&k, &reg, 1).unwrap(), 0);
    }

    #[test]
    fn projective_resolution_terminates_immediately() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let r = min_resolution(&FdModule::regular(&a), 5);
        assert!(r.terminated);
        assert_eq!(r.length(), Some(0));
    }
}
