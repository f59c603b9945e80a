//! Vector-space duality, the algebra dual `Hom(-, A)`, transposes and cosyzygies.

use super::module::{hom_space, FdModule};
use super::projective::{projective_cover, syzygy_with_inclusion, Projective};
use crate::error::Result;
use crate::linalg::{Mat, Scalar};

/// `D(m) = Hom_k(m, k)` as a right module over the opposite algebra.
pub fn dual(m: &FdModule) -> FdModule {
    let op = m.algebra().opposite();
    let action = m.action().iter().map(Mat::transpose).collect();
    FdModule::new_unchecked(&op, m.dim(), action)
}

/// `Hom_A(m, A)` as a right module over the opposite algebra, where `a` acts by
/// left multiplication after the map.
#[derive(Clone, Debug)]
pub struct LambdaDual {
    pub module: FdModule,
    /// The maps `m -> A` forming the basis, each `dim A x dim m`.
    pub basis: Vec<Mat>,
    coords: Mat,
}

impl LambdaDual {
    /// Coordinates of a map `m -> A` in the basis.
    pub fn coordinates(&self, f: &Mat) -> Vec<Scalar> {
        self.coords.mul_vec(&f.vectorize())
    }
}

pub fn lambda_dual(m: &FdModule) -> Result<LambdaDual> {
    let algebra = m.algebra();
    let field = m.field();
    let reg = FdModule::regular(algebra);
    let basis = hom_space(m, &reg)?;
    let op = algebra.opposite();
    if basis.is_empty() {
        return Ok(LambdaDual {
            module: FdModule::zero(&op),
            basis,
            coords: Mat::zeros(field, 0, algebra.dim() * m.dim()),
        });
    }
    let len = algebra.dim() * m.dim();
    let vecs: Vec<Vec<Scalar>> = basis.iter().map(Mat::vectorize).collect();
    let coords = Mat::from_columns(field, len, &vecs).left_inverse();
    let action = (0..algebra.dim())
        .map(|j| {
            let left = algebra.left_mult(&algebra.basis_element(j));
            let cols: Vec<Vec<Scalar>> = basis.iter().map(|f| coords.mul_vec(&(&left * f).vectorize())).collect();
            Mat::from_columns(field, basis.len(), &cols)
        })
        .collect();
    Ok(LambdaDual {
        module: FdModule::new_unchecked(&op, basis.len(), action),
        basis,
        coords,
    })
}

/// The matrix of `g -> g . phi` from `Hom(target, A)` to `Hom(source, A)`.
fn dual_map(phi: &Mat, source: &LambdaDual, target: &LambdaDual) -> Mat {
    let field = phi.field();
    let cols: Vec<Vec<Scalar>> = target.basis.iter().map(|g| source.coordinates(&(g * phi))).collect();
    Mat::from_columns(field, source.basis.len(), &cols)
}

/// Auslander-Bridger transpose: the cokernel of `Hom(P0, A) -> Hom(P1, A)` for a
/// minimal presentation `P1 -> P0 -> m`, a module over the opposite algebra.
pub fn transpose(m: &FdModule) -> Result<FdModule> {
    let (omega, incl, cover0) = syzygy_with_inclusion(m);
    let cover1 = projective_cover(&omega);
    let phi = &incl * &cover1.surjection;
    let d0 = lambda_dual(&cover0.projective.module)?;
    let d1 = lambda_dual(&cover1.projective.module)?;
    let phi_star = dual_map(&phi, &d1, &d0);
    Ok(FdModule::cokernel_of(&d1.module, &phi_star).0)
}

/// Minimal left approximation `m -> Q` by a projective `Q`: the generators of
/// a projective cover of `Hom(m, A)` over the opposite algebra, each landing in
/// an indecomposable projective `e_j A`.
pub fn left_proj_approximation(m: &FdModule) -> Result<(Projective, Mat)> {
    let algebra = m.algebra();
    let field = m.field();
    let star = lambda_dual(m)?;
    let cover = projective_cover(&star.module);
    let target = Projective::new(algebra, cover.projective.summands.clone());
    let bases = algebra.projective_bases();
    let mut blocks = Vec::with_capacity(cover.generators.len());
    for (k, &j) in cover.projective.summands.iter().enumerate() {
        let mut map = Mat::zeros(field, algebra.dim(), m.dim());
        for (c, f) in cover.generators[k].iter().zip(&star.basis) {
            if !c.is_zero() {
                map = &map + &f.scale(c);
            }
        }
        blocks.push(&bases[j].coords * &map);
    }
    let refs: Vec<&Mat> = blocks.iter().collect();
    let approx = Mat::vstack(field, m.dim(), &refs);
    Ok((target, approx))
}

/// Cokernel of the minimal left projective approximation.
pub fn proj_cosyzygy(m: &FdModule) -> Result<FdModule> {
    let (q, approx) = left_proj_approximation(m)?;
    Ok(FdModule::cokernel_of(&q.module, &approx).0)
}

/// Cosyzygy through duality: the cokernel of `m -> D(P)` where `P -> D(m)` is
/// a projective cover over the opposite algebra. Over a self-injective algebra
/// this agrees with [`proj_cosyzygy`].
pub fn cosyzygy(m: &FdModule) -> FdModule {
    let dm = dual(m);
    let cover = projective_cover(&dm);
    let envelope = dual(&cover.projective.module);
    let embedding = cover.surjection.transpose();
    FdModule::cokernel_of(&envelope, &embedding).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_projective, Algebra};
    use crate::linalg::Field;

    #[test]
    fn double_dual_returns_to_the_algebra() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let m = FdModule::regular(&a);
        let dd = dual(&dual(&m));
        assert!(dd.algebra().same_as(&a));
        assert_eq!(dd.action(), m.action());
    }

    #[test]
    fn transpose_of_simple_over_dual_numbers() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let k = FdModule::simple(&a, 0);
        let tr = transpose(&k).unwrap();
        assert_eq!(tr.dim(), 1);
        assert_eq!(transpose(&FdModule::regular(&a)).unwrap().dim(), 0);
    }

    #[test]
    fn cosyzygy_of_simple_over_dual_numbers() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let k = FdModule::simple(&a, 0);
        assert_eq!(cosyzygy(&k).dim(), 1);
        assert_eq!(proj_cosyzygy(&k).unwrap().dim(), 1);
        let reg = FdModule::regular(&a);
        assert_eq!(cosyzygy(&reg).dim(), 0);
        assert!(is_projective(&reg));
    }
}
