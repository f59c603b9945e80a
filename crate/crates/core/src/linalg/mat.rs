use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::echelon::eliminate;
use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// A dense matrix over an exact [`Field`], stored row-major with canonical
/// entries so that `==` is exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Mat {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn column_vector(field: Field, v: Vec<Scalar>) -> Self {
        let n = v.len();
        Self::from_vec(field, n, 1, v)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        (0..self.cols).map(|c| self.column(c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self * v` for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, idx.len());
        for (j, &c) in idx.iter().enumerate() {
            for r in 0..self.rows {
                m[(r, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Mat::from_vec(self.field, idx.len(), self.cols, data)
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        let mut m = Mat::zeros(self.field, r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                m[(r - r0, c - c0)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    /// Horizontal concatenation. All parts must have `rows` rows.
    pub fn hstack(field: Field, rows: usize, parts: &[&Mat]) -> Mat {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Mat::zeros(field, rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            m.set_block(0, c0, p);
            c0 += p.cols;
        }
        m
    }

    /// Vertical concatenation. All parts must have `cols` columns.
    pub fn vstack(field: Field, cols: usize, parts: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Mat::from_vec(field, rows, cols, data)
    }

    pub fn block_diag(field: Field, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.set_block(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        m
    }

    fn row_slices(&self) -> Vec<&[Scalar]> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    /// Reduced row echelon form together with the strictly increasing pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let e = eliminate(self.field, &self.row_slices(), self.cols, true);
        let mut m = Mat::zeros(self.field, self.rows, self.cols);
        for (i, r) in e.rows.iter().enumerate() {
            for (c, x) in r.iter().enumerate() {
                m[(i, c)] = x.clone();
            }
        }
        (m, e.pivots)
    }

    pub fn rank(&self) -> usize {
        eliminate(self.field, &self.row_slices(), self.cols, false).pivots.len()
    }

    /// Columns form a basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Mat {
        let e = eliminate(self.field, &self.row_slices(), self.cols, true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = self.field.one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                k[(p, j)] = -&row[f];
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when a column of `b` leaves the
    /// column space of `self`.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {}x{} system with {} right-hand rows",
                self.rows, self.cols, b.rows
            )));
        }
        let aug = Mat::hstack(self.field, self.rows, &[self, b]);
        let e = eliminate(self.field, &aug.row_slices(), aug.cols, true);
        if e.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            for j in 0..b.cols {
                x[(p, j)] = row[self.cols + j].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let id = Mat::identity(self.field, self.rows);
        self.solve(&id).ok().flatten()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A maximal linearly independent subset of the columns, in order.
    pub fn column_basis(&self) -> Mat {
        self.select_columns(&self.independent_columns())
    }

    /// Indices of the columns chosen greedily from the left that are
    /// independent of all earlier ones.
    pub fn independent_columns(&self) -> Vec<usize> {
        eliminate(self.field, &self.row_slices(), self.cols, false).pivots
    }

    /// For a full-column-rank `self` (n x k), a k x n matrix `L` with `L * self = I`.
    pub fn left_inverse(&self) -> Mat {
        let k = self.cols;
        let t = self.transpose();
        let e = eliminate(self.field, &t.row_slices(), t.cols, false);
        assert_eq!(e.pivots.len(), k, "left_inverse needs full column rank");
        let square = self.select_rows(&e.pivots);
        let inv = square.inverse().expect("selected rows are independent");
        let mut l = Mat::zeros(self.field, k, self.rows);
        for (j, &r) in e.pivots.iter().enumerate() {
            for i in 0..k {
                l[(i, r)] = inv[(i, j)].clone();
            }
        }
        l
    }

    /// Standard basis vectors completing the columns of `self` (assumed
    /// independent) to a basis of the ambient space, as column indices.
    pub fn complement_indices(&self) -> Vec<usize> {
        let id = Mat::identity(self.field, self.rows);
        let aug = Mat::hstack(self.field, self.rows, &[self, &id]);
        let e = eliminate(self.field, &aug.row_slices(), aug.cols, false);
        e.pivots
            .into_iter()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect()
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Mat) -> bool {
        if other.cols == 0 {
            return true;
        }
        let both = Mat::hstack(self.field, self.rows, &[self, other]);
        both.rank() == self.rank()
    }

    /// Flattens row-major into a single column.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &'a Mat) -> Mat {
        assert_eq!(
            self.cols, rhs.rows,
            "product of {}x{} and {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let t = &out[(r, c)] + &(a * b);
                        out[(r, c)] = t;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &'a Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &'a Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "\n  [")?;
            for (i, x) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(q(), 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));
        let z = Mat::zeros(q(), 2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn rref_by_hand() {
        // [[2,4],[1,2]] -> [[1,2],[0,0]]
        let m = Mat::from_i64(q(), 2, 2, &[2, 4, 1, 2]);
        let (r, p) = m.rref();
        assert_eq!(r, Mat::from_i64(q(), 2, 2, &[1, 2, 0, 0]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(q(), 3).kernel_basis().cols(), 0);
        assert_eq!(Mat::zeros(q(), 1, 3).kernel_basis().cols(), 3);
        // [[1,1]] over F_2: of the four vectors only 00 and 11 are killed
        let f2 = Field::prime(2).unwrap();
        let k = Mat::from_i64(f2, 1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k, Mat::from_i64(f2, 2, 1, &[1, 1]));
    }

    #[test]
    fn solve_examples() {
        let b = Mat::from_i64(q(), 2, 3, &[1, -2, 3, 0, 5, 7]);
        assert_eq!(Mat::identity(q(), 2).solve(&b).unwrap(), Some(b.clone()));
        let z = Mat::zeros(q(), 2, 2);
        assert_eq!(z.solve(&Mat::from_i64(q(), 2, 1, &[1, 0])).unwrap(), None);
        // Cramer: det = -2, x = (6-20... ) -> x1 = (5*4-2*6)/-2 = -4, x2 = (1*6-3*5)/-2 = 9/2
        let a = Mat::from_i64(q(), 2, 2, &[1, 2, 3, 4]);
        let x = a.solve(&Mat::from_i64(q(), 2, 1, &[5, 6])).unwrap().unwrap();
        assert_eq!(x[(0, 0)], q().from_i64(-4));
        assert_eq!(x[(1, 0)], q().parse("9/2").unwrap());
        assert!(a.solve(&Mat::zeros(q(), 3, 1)).is_err());
    }

    #[test]
    fn large_entries_fall_back_to_bigint() {
        let big = 1i64 << 62;
        let m = Mat::from_i64(q(), 3, 3, &[big, big - 1, 3, big - 7, big, 5, 1, 2, big]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(r, Mat::identity(q(), 3));
    }

    #[test]
    fn left_inverse_and_complement() {
        let w = Mat::from_i64(q(), 3, 2, &[1, 0, 2, 1, 0, 3]);
        let l = w.left_inverse();
        assert_eq!(&l * &w, Mat::identity(q(), 2));
        let c = w.complement_indices();
        assert_eq!(c.len(), 1);
    }
}
