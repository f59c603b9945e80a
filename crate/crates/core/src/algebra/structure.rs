//! Raw structure constants of a finite-dimensional algebra.

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};

/// Multiplication table `b_i * b_j = sum_k table[i][j][k] b_k`, kept sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Structure {
    pub field: Field,
    pub dim: usize,
    pub table: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub unit: Vec<Scalar>,
}

impl Structure {
    /// `dense[i][j]` holds the coordinates of `b_i b_j`.
    pub fn from_dense(field: Field, dense: &[Vec<Vec<Scalar>>], unit: Vec<Scalar>) -> Result<Self> {
        let dim = dense.len();
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit has {} coordinates, algebra dimension {dim}",
                unit.len()
            )));
        }
        let mut table = Vec::with_capacity(dim);
        for (i, row) in dense.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "multiplication row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            let mut trow = Vec::with_capacity(dim);
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "product ({i},{j}) has {} coordinates, expected {dim}",
                        v.len()
                    )));
                }
                trow.push(sparse(v));
            }
            table.push(trow);
        }
        Ok(Structure {
            field,
            dim,
            table,
            unit,
        })
    }

    pub fn zeros(&self) -> Vec<Scalar> {
        self.field.zeros(self.dim)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = self.zeros();
        for (k, c) in &self.table[i][j] {
            out[*k] = c.clone();
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zeros();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.table[i][j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `x -> x a` in the basis (column convention).
    pub fn right_mult(&self, a: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.mul(&self.field.unit_vector(self.dim, i), a))
            .collect();
        Mat::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.mul(a, &self.field.unit_vector(self.dim, i)))
            .collect();
        Mat::from_columns(self.field, self.dim, &cols)
    }

    pub fn opposite(&self) -> Structure {
        let table = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.table[j][i].clone()).collect())
            .collect();
        Structure {
            field: self.field,
            dim: self.dim,
            table,
            unit: self.unit.clone(),
        }
    }

    pub fn check_associative(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut left = self.zeros();
                    for (l, c) in &self.table[i][j] {
                        for (m, e) in &self.table[*l][k] {
                            left[*m] = &left[*m] + &(c * e);
                        }
                    }
                    let mut right = self.zeros();
                    for (l, c) in &self.table[j][k] {
                        for (m, e) in &self.table[i][*l] {
                            right[*m] = &right[*m] + &(c * e);
                        }
                    }
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.field.unit_vector(self.dim, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::BadUnit(i));
            }
        }
        Ok(())
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    /// Span of all products `x y` with `x` a column of `a`, `y` a column of `b`,
    /// as an independent set of columns.
    pub fn product_space(&self, a: &Mat, b: &Mat) -> Mat {
        let mut cols = Vec::new();
        for x in a.columns() {
            for y in b.columns() {
                cols.push(self.mul(&x, &y));
            }
        }
        Mat::from_columns(self.field, self.dim, &cols).column_basis()
    }

    /// Quotient by a two-sided ideal spanned by the columns of `ideal`.
    /// Returns the quotient structure, the projection (q x dim) and a
    /// section (dim x q) sending quotient basis vectors to standard basis vectors.
    pub fn quotient(&self, ideal: &Mat) -> (Structure, Mat, Mat) {
        let comp = ideal.complement_indices();
        let q = comp.len();
        let section = Mat::identity(self.field, self.dim).select_columns(&comp);
        let full = Mat::hstack(self.field, self.dim, &[ideal, &section]);
        let inv = full.inverse().expect("ideal basis plus complement is a basis");
        let proj = inv.block(ideal.cols(), self.dim, 0, self.dim);
        let dense: Vec<Vec<Vec<Scalar>>> = (0..q)
            .map(|i| {
                (0..q)
                    .map(|j| proj.mul_vec(&self.basis_product(comp[i], comp[j])))
                    .collect()
            })
            .collect();
        let unit = proj.mul_vec(&self.unit);
        let s = Structure::from_dense(self.field, &dense, unit).expect("consistent shapes");
        (s, proj, section)
    }
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}
