//! Matrix factorizations of a univariate polynomial and the MCM modules they
//! present over `R = k[x]/(f)`.

use std::fmt;

use crate::algebra::{decompose, isomorphism, Algebra, FdModule};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Poly, Scalar};

/// A matrix with polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    pub fn new(field: Field, rows: Vec<Vec<Poly>>) -> Result<PolyMat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged polynomial matrix".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| p.field() != field) {
            return Err(Error::DimensionMismatch("polynomial over a different field".into()));
        }
        Ok(PolyMat {
            field,
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn scalar(p: Poly) -> PolyMat {
        PolyMat {
            field: p.field(),
            rows: 1,
            cols: 1,
            entries: vec![p],
        }
    }

    /// `p` times the `n x n` identity.
    pub fn diagonal(p: &Poly, n: usize) -> PolyMat {
        let field = p.field();
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { p.clone() } else { Poly::zero(field) })
            .collect();
        PolyMat {
            field,
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &PolyMat) -> Result<PolyMat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "polynomial product {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Poly::zero(self.field);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
                }
                entries.push(acc);
            }
        }
        Ok(PolyMat {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Largest entry degree, or `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// `phi * psi = psi * phi = f * I`.
pub fn mf_check(phi: &PolyMat, psi: &PolyMat, f: &Poly) -> Result<bool> {
    if !phi.is_square() || !psi.is_square() || phi.rows != psi.rows {
        return Err(Error::DimensionMismatch(format!(
            "factorization needs equal square sizes, got {}x{} and {}x{}",
            phi.rows, phi.cols, psi.rows, psi.cols
        )));
    }
    let target = PolyMat::diagonal(f, phi.rows);
    Ok(phi.mul(psi)? == target && psi.mul(phi)? == target)
}

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFactorization {
    f: Poly,
    phi: PolyMat,
    psi: PolyMat,
}

impl MatrixFactorization {
    pub fn new(f: Poly, phi: PolyMat, psi: PolyMat) -> Result<Self> {
        if f.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidFactorization(format!("{f} is zero or a unit")));
        }
        if !mf_check(&phi, &psi, &f)? {
            return Err(Error::InvalidFactorization(format!(
                "{phi:?} * {psi:?} is not ({f}) * I"
            )));
        }
        Ok(MatrixFactorization { f, phi, psi })
    }

    /// The `1 x 1` factorization `(a, b)` with `a b = f`.
    pub fn rank_one(f: &Poly, a: Poly, b: Poly) -> Result<Self> {
        Self::new(f.clone(), PolyMat::scalar(a), PolyMat::scalar(b))
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn phi(&self) -> &PolyMat {
        &self.phi
    }

    pub fn psi(&self) -> &PolyMat {
        &self.psi
    }

    pub fn size(&self) -> usize {
        self.phi.rows
    }
}

impl fmt::Debug for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MF({:?}, {:?}; f = {})", self.phi, self.psi, self.f)
    }
}

/// `k[x]/(f)` with basis `1, x, ..., x^(d-1)`.
pub fn ring_algebra(f: &Poly) -> Result<Algebra> {
    let field = f.field();
    let d = f
        .degree()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::InvalidFactorization(format!("{f} is zero or a unit")))?;
    let reduce = |k: usize| -> Vec<Scalar> {
        let r = Poly::monomial(field, field.one(), k).rem(f);
        (0..d).map(|i| r.coeff(i)).collect()
    };
    let mult: Vec<Vec<Vec<Scalar>>> = (0..d).map(|i| (0..d).map(|j| reduce(i + j)).collect()).collect();
    let labels = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    Algebra::from_structure_constants(field, Some(labels), &mult, field.unit_vector(d, 0), None)
}

/// `coker(phi)` as a module over `k[x]/(f)`, keeping the factorization.
#[derive(Clone, Debug)]
pub struct McmModule {
    pub module: FdModule,
    pub factorization: MatrixFactorization,
}

/// Multiplication by `p` on `R^n`, coordinates `(component, power)`.
fn multiplication_on_free(p: &Poly, f: &Poly, n: usize) -> Mat {
    let field = f.field();
    let d = f.degree().expect("nonconstant");
    let mut m = Mat::zeros(field, n * d, n * d);
    for k in 0..d {
        let col = Poly::monomial(field, field.one(), k).mul(p).rem(f);
        for c in 0..n {
            for i in 0..d {
                m[(c * d + i, c * d + k)] = col.coeff(i);
            }
        }
    }
    m
}

/// The cokernel of `phi` on `R^n` over `R = k[x]/(f)`, built on `ring`.
pub fn mf_cokernel_over(mf: &MatrixFactorization, ring: &Algebra) -> Result<McmModule> {
    let field = ring.field();
    let f = &mf.f;
    let d = f.degree().expect("validated");
    if ring.dim() != d || ring.field() != f.field() {
        return Err(Error::AlgebraMismatch);
    }
    let n = mf.size();
    let free = FdModule::new_unchecked(
        ring,
        n * d,
        (0..d)
            .map(|j| multiplication_on_free(&Poly::monomial(field, field.one(), j), f, n))
            .collect(),
    );
    let mut image = Vec::with_capacity(n * d);
    for c in 0..n {
        for k in 0..d {
            let mut v = field.zeros(n * d);
            for r in 0..n {
                let entry = mf.phi.get(r, c).mul(&Poly::monomial(field, field.one(), k)).rem(f);
                for i in 0..d {
                    v[r * d + i] = entry.coeff(i);
                }
            }
            image.push(v);
        }
    }
    let image = Mat::from_columns(field, n * d, &image);
    let (module, _) = FdModule::cokernel_of(&free, &image);
    Ok(McmModule {
        module,
        factorization: mf.clone(),
    })
}

pub fn mf_cokernel(mf: &MatrixFactorization) -> Result<McmModule> {
    let ring = ring_algebra(&mf.f)?;
    mf_cokernel_over(mf, &ring)
}

/// Syzygy on factorizations: `(phi, psi) -> (psi, phi)`.
pub fn mf_syzygy(mf: &MatrixFactorization) -> MatrixFactorization {
    MatrixFactorization {
        f: mf.f.clone(),
        phi: mf.psi.clone(),
        psi: mf.phi.clone(),
    }
}

/// Cosyzygy on factorizations; the same swap, inverse to [`mf_syzygy`].
pub fn mf_cosyzygy(mf: &MatrixFactorization) -> MatrixFactorization {
    mf_syzygy(mf)
}

/// `(c, a, n)` with `f = c (x - a)^n`, if `f` has that shape.
pub fn linear_power(f: &Poly) -> Option<(Scalar, Scalar, usize)> {
    let n = f.degree()?;
    if n == 0 {
        return None;
    }
    let roots = f.roots();
    if roots.len() != 1 || f.root_multiplicity(&roots[0]) != n {
        return None;
    }
    Some((f.leading().expect("nonzero").clone(), roots[0].clone(), n))
}

/// Nonprojective indecomposable factorizations of `f = c (x - a)^n`, one per
/// stable isomorphism class: `((x - a)^i, c (x - a)^(n - i))` for `0 < i < n`.
/// The seeds are certified indecomposable and pairwise nonisomorphic through
/// their cokernels.
pub fn mf_indecomposables(f: &Poly) -> Result<Vec<MatrixFactorization>> {
    let (c, a, n) = linear_power(f).ok_or_else(|| Error::UnsupportedPolynomial(f.to_string()))?;
    let field = f.field();
    let lin = Poly::linear(field, &a);
    let seeds = (1..n)
        .map(|i| MatrixFactorization::rank_one(f, lin.pow(i), lin.pow(n - i).scale(&c)))
        .collect::<Result<Vec<_>>>()?;
    if seeds.is_empty() {
        return Ok(seeds);
    }
    let ring = ring_algebra(f)?;
    let modules = seeds
        .iter()
        .map(|s| mf_cokernel_over(s, &ring).map(|m| m.module))
        .collect::<Result<Vec<_>>>()?;
    for (i, m) in modules.iter().enumerate() {
        let d = decompose(m)?;
        if d.len() != 1 || d[0].1 != 1 {
            return Err(Error::IdempotentSplitFailure(format!("seed {i} is decomposable")));
        }
        for other in &modules[..i] {
            if isomorphism(m, other)?.is_some() {
                return Err(Error::IdempotentSplitFailure(format!(
                    "seed {i} repeats an earlier class"
                )));
            }
        }
    }
    Ok(seeds)
}
