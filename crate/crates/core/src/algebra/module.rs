//! Finite-dimensional right modules given by action matrices.

use std::fmt;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};

/// A right module over an [`Algebra`]. `action[j]` is the matrix of
/// `v -> v b_j` acting on column vectors, so `action[j] * action[i]` is the
/// action of `b_i b_j`.
#[derive(Clone)]
pub struct FdModule {
    algebra: Algebra,
    dim: usize,
    action: Vec<Mat>,
}

impl FdModule {
    /// Validates the unit and the multiplication table against the matrices.
    pub fn new(algebra: &Algebra, dim: usize, action: Vec<Mat>) -> Result<FdModule> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        for (j, a) in action.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::InvalidModule(format!(
                    "action of basis element {j} is {}x{}, expected {dim}x{dim}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        let m = FdModule::new_unchecked(algebra, dim, action);
        if algebra.dim() == 0 {
            if dim != 0 {
                return Err(Error::InvalidModule("nonzero module over the zero algebra".into()));
            }
            return Ok(m);
        }
        if m.action_of(algebra.unit()) != Mat::identity(algebra.field(), dim) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let lhs = &m.action[j] * &m.action[i];
                if lhs != m.action_of(&algebra.basis_product(i, j)) {
                    return Err(Error::InvalidModule(format!(
                        "action is not compatible with the product of basis elements {i} and {j}"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: &Algebra, dim: usize, action: Vec<Mat>) -> FdModule {
        FdModule {
            algebra: algebra.clone(),
            dim,
            action,
        }
    }

    pub fn zero(algebra: &Algebra) -> FdModule {
        let f = algebra.field();
        FdModule::new_unchecked(algebra, 0, vec![Mat::zeros(f, 0, 0); algebra.dim()])
    }

    /// The algebra as a right module over itself.
    pub fn regular(algebra: &Algebra) -> FdModule {
        FdModule::new_unchecked(algebra, algebra.dim(), algebra.regular_action().to_vec())
    }

    /// The indecomposable projective `e_i A`.
    pub fn indecomposable_projective(algebra: &Algebra, i: usize) -> FdModule {
        let pb = &algebra.projective_bases()[i];
        FdModule::new_unchecked(algebra, pb.basis.cols(), pb.action.clone())
    }

    /// The simple top of `e_i A`.
    pub fn simple(algebra: &Algebra, i: usize) -> FdModule {
        let p = FdModule::indecomposable_projective(algebra, i);
        let rad = p.radical_submodule();
        p.quotient(&rad).0
    }

    /// One simple module per idempotent.
    pub fn simples(algebra: &Algebra) -> Vec<FdModule> {
        (0..algebra.idempotents().len())
            .map(|i| FdModule::simple(algebra, i))
            .collect()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    /// Matrix of `v -> v a`.
    pub fn action_of(&self, a: &[Scalar]) -> Mat {
        let mut out = Mat::zeros(self.field(), self.dim, self.dim);
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.action[k].scale(c);
            }
        }
        out
    }

    pub fn act(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action_of(a).mul_vec(v)
    }

    /// `dim M e_i` for each idempotent.
    pub fn dim_vector(&self) -> Vec<usize> {
        self.algebra
            .idempotents()
            .iter()
            .map(|e| self.action_of(e).rank())
            .collect()
    }

    /// Basis (columns) of `M e`.
    pub fn idempotent_image(&self, e: &[Scalar]) -> Mat {
        self.action_of(e).column_basis()
    }

    /// Basis (columns) of `M J`.
    pub fn radical_submodule(&self) -> Mat {
        let f = self.field();
        let parts: Vec<Mat> = self.algebra.radical().columns().map(|r| self.action_of(&r)).collect();
        let refs: Vec<&Mat> = parts.iter().collect();
        Mat::hstack(f, self.dim, &refs).column_basis()
    }

    /// Smallest submodule containing the columns of `vectors`.
    pub fn generated_submodule(&self, vectors: &Mat) -> Mat {
        let f = self.field();
        let mut span = vectors.column_basis();
        loop {
            let mut parts = vec![span.clone()];
            for a in &self.action {
                parts.push(a * &span);
            }
            let refs: Vec<&Mat> = parts.iter().collect();
            let next = Mat::hstack(f, self.dim, &refs).column_basis();
            if next.cols() == span.cols() {
                return span;
            }
            span = next;
        }
    }

    /// The submodule spanned by the columns of `basis`, which must be independent
    /// and closed under the action. Returns the module; the inclusion is `basis`.
    pub fn submodule(&self, basis: &Mat) -> FdModule {
        let k = basis.cols();
        if k == 0 {
            return FdModule::zero(&self.algebra);
        }
        let coords = basis.left_inverse();
        let action = self.action.iter().map(|a| &(&coords * a) * basis).collect();
        FdModule::new_unchecked(&self.algebra, k, action)
    }

    /// `M / U` for a submodule `U` spanned by the columns of `sub`. Returns the
    /// quotient and the projection matrix.
    pub fn quotient(&self, sub: &Mat) -> (FdModule, Mat) {
        let f = self.field();
        let sub = sub.column_basis();
        let comp = sub.complement_indices();
        let section = Mat::identity(f, self.dim).select_columns(&comp);
        let full = Mat::hstack(f, self.dim, &[&sub, &section]);
        let inv = full.inverse().expect("submodule basis plus complement is a basis");
        let proj = inv.block(sub.cols(), self.dim, 0, self.dim);
        let action = self.action.iter().map(|a| &(&proj * a) * &section).collect();
        (FdModule::new_unchecked(&self.algebra, comp.len(), action), proj)
    }

    /// The image of a module map `f: self -> target` as a submodule of `target`,
    /// and the cokernel with its projection.
    pub fn cokernel_of(target: &FdModule, f: &Mat) -> (FdModule, Mat) {
        target.quotient(&f.column_basis())
    }

    pub fn direct_sum(parts: &[&FdModule]) -> Result<FdModule> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
        let algebra = first.algebra.clone();
        for p in parts {
            if !p.algebra.same_as(&algebra) {
                return Err(Error::AlgebraMismatch);
            }
        }
        let f = algebra.field();
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..algebra.dim())
            .map(|j| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.action[j]).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        Ok(FdModule::new_unchecked(&algebra, dim, action))
    }

    /// Whether `f: self -> target` commutes with the action.
    pub fn is_hom_to(&self, target: &FdModule, f: &Mat) -> bool {
        f.rows() == target.dim
            && f.cols() == self.dim
            && self.action.iter().zip(&target.action).all(|(a, b)| f * a == b * f)
    }

    /// Transport of structure along an invertible change of basis `p`
    /// (new coordinates = `p` * old coordinates).
    pub fn rebase(&self, p: &Mat) -> Result<FdModule> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidModule("change of basis is not invertible".into()))?;
        let action = self.action.iter().map(|a| &(p * a) * &inv).collect();
        Ok(FdModule::new_unchecked(&self.algebra, self.dim, action))
    }

    /// Moves the module to an algebra with identical structure constants.
    pub fn with_algebra(&self, algebra: &Algebra) -> Result<FdModule> {
        if !self.algebra.same_as(algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(FdModule::new_unchecked(algebra, self.dim, self.action.clone()))
    }
}

impl fmt::Debug for FdModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FdModule(dim {}, dim vector {:?})", self.dim, self.dim_vector())
    }
}

/// Basis of `Hom_A(m, n)` as `dim n x dim m` matrices.
pub fn hom_space(m: &FdModule, n: &FdModule) -> Result<Vec<Mat>> {
    if !m.algebra.same_as(&n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    let (p, q) = (n.dim, m.dim);
    if p == 0 || q == 0 {
        return Ok(Vec::new());
    }
    // unknown F (p x q) flattened row-major: index r*q + c
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in m.algebra.generators() {
        let am = m.action_of(g);
        let an = n.action_of(g);
        // (F am - an F)[r][c] = sum_k F[r][k] am[k][c] - sum_k an[r][k] F[k][c]
        for r in 0..p {
            for c in 0..q {
                let mut row = field.zeros(p * q);
                for k in 0..q {
                    let x = &am[(k, c)];
                    if !x.is_zero() {
                        row[r * q + k] = &row[r * q + k] + x;
                    }
                }
                for k in 0..p {
                    let y = &an[(r, k)];
                    if !y.is_zero() {
                        row[k * q + c] = &row[k * q + c] - y;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Mat::from_rows(field, p * q, &rows);
    let kernel = system.kernel_basis();
    Ok(kernel.columns().map(|v| Mat::from_vec(field, p, q, v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_from_regular_has_module_dimension() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 3);
        let m = FdModule::simple(&a, 0);
        let reg = FdModule::regular(&a);
        assert_eq!(hom_space(&reg, &m).unwrap().len(), m.dim());
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 3);
    }

    #[test]
    fn simples_of_product_are_orthogonal() {
        let a = Algebra::product_of_fields(Field::rationals(), 2);
        let s = FdModule::simples(&a);
        assert_eq!(s.len(), 2);
        assert!(hom_space(&s[0], &s[1]).unwrap().is_empty());
        assert_eq!(hom_space(&s[0], &s[0]).unwrap().len(), 1);
    }

    #[test]
    fn socle_inclusion_is_the_only_map_into_regular() {
        let a = Algebra::truncated_polynomial(Field::rationals(), 2);
        let k = FdModule::simple(&a, 0);
        let reg = FdModule::regular(&a);
        let homs = hom_space(&k, &reg).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(k.is_hom_to(&reg, &homs[0]));
    }

    #[test]
    fn rejects_incompatible_action() {
        let f = Field::rationals();
        let a = Algebra::truncated_polynomial(f, 2);
        // t acting as the identity violates t^2 = 0
        let bad = FdModule::new(&a, 1, vec![Mat::identity(f, 1), Mat::identity(f, 1)]);
        assert!(matches!(bad, Err(Error::InvalidModule(_))));
        let good = FdModule::new(&a, 1, vec![Mat::identity(f, 1), Mat::zeros(f, 1, 1)]);
        assert!(good.is_ok());
    }
}
