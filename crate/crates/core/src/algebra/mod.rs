//! Finite-dimensional algebras and their right modules.

mod decompose;
mod duality;
mod exact;
mod idempotents;
mod module;
mod projective;
mod quiver;
mod radical;
mod structure;

use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};
use structure::Structure;

pub use decompose::{decompose, isomorphism, split, strip_projectives, Summand};
pub use duality::{cosyzygy, dual, lambda_dual, left_proj_approximation, proj_cosyzygy, transpose, LambdaDual};
pub use exact::{splice_syzygy_sequence, ShortExact, SpliceSequence};
pub use module::{hom_space, FdModule};
pub use projective::{is_projective, projective_cover, stable_hom, syzygy, Cover, Projective, StableHom};
pub use quiver::{Arrow, QuiverPresentation, RelationTerm};

/// A finite-dimensional unital associative algebra with a fixed complete set of
/// primitive orthogonal idempotents. Cloning is cheap.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<Inner>,
}

struct Inner {
    labels: Vec<String>,
    s: Structure,
    idempotents: Vec<Vec<Scalar>>,
    radical: Mat,
    generators: Vec<Vec<Scalar>>,
    regular_action: OnceLock<Vec<Mat>>,
    projectives: OnceLock<Vec<ProjectiveBasis>>,
    opposite: OnceLock<Opposite>,
}

enum Opposite {
    Owned(Arc<Inner>),
    Back(Weak<Inner>),
}

/// Basis of `e_i A` whose first column is `e_i`, with a left inverse.
#[derive(Clone, Debug)]
pub(crate) struct ProjectiveBasis {
    pub basis: Mat,
    pub coords: Mat,
    pub action: Vec<Mat>,
}

impl Algebra {
    /// Builds an algebra from `mult[i][j]` = coordinates of `b_i b_j`. Primitive
    /// idempotents are computed unless supplied, in which case they are validated.
    pub fn from_structure_constants(
        field: Field,
        labels: Option<Vec<String>>,
        mult: &[Vec<Vec<Scalar>>],
        unit: Vec<Scalar>,
        idempotents: Option<Vec<Vec<Scalar>>>,
    ) -> Result<Algebra> {
        let s = Structure::from_dense(field, mult, unit)?;
        Self::from_structure(s, labels, idempotents, None)
    }

    /// `radical_hint` is used when it is a nilpotent ideal of the right
    /// codimension; otherwise the radical is computed from scratch.
    pub(crate) fn from_structure(
        s: Structure,
        labels: Option<Vec<String>>,
        idempotents: Option<Vec<Vec<Scalar>>>,
        radical_hint: Option<Mat>,
    ) -> Result<Algebra> {
        let labels = match labels {
            Some(l) if l.len() != s.dim => {
                return Err(Error::DimensionMismatch(format!(
                    "{} basis labels for dimension {}",
                    l.len(),
                    s.dim
                )))
            }
            Some(l) => l,
            None => (0..s.dim).map(|i| format!("b{i}")).collect(),
        };
        s.check_associative()?;
        s.check_unit()?;
        let hinted = radical_hint.filter(|r| {
            let es = idempotents.as_ref().map_or(0, Vec::len);
            es > 0 && r.cols() + es == s.dim && radical::is_nilpotent_ideal(&s, r)
        });
        let radical = match hinted {
            Some(r) => r,
            None => radical::radical(&s)?,
        };
        let idempotents = match idempotents {
            Some(es) => {
                idempotents::validate(&s, &radical, &es)?;
                es
            }
            None => idempotents::primitive_idempotents(&s, &radical)?,
        };
        let generators = algebra_generators(&s, &radical, &idempotents);
        Ok(Algebra {
            inner: Arc::new(Inner {
                labels,
                s,
                idempotents,
                radical,
                generators,
                regular_action: OnceLock::new(),
                projectives: OnceLock::new(),
                opposite: OnceLock::new(),
            }),
        })
    }

    /// The zero algebra, in which `0 = 1`.
    pub fn zero(field: Field) -> Algebra {
        let s = Structure::from_dense(field, &[], Vec::new()).expect("empty shapes");
        Self::from_structure(s, None, None, None).expect("zero algebra is valid")
    }

    /// The field itself, as a one-dimensional algebra.
    pub fn ground_field(field: Field) -> Algebra {
        let mult = vec![vec![vec![field.one()]]];
        Self::from_structure_constants(field, Some(vec!["1".into()]), &mult, vec![field.one()], None)
            .expect("k is an algebra")
    }

    /// The product of `n` copies of the field, with basis the coordinate idempotents.
    pub fn product_of_fields(field: Field, n: usize) -> Algebra {
        let mult: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            field.unit_vector(n, i)
                        } else {
                            field.zeros(n)
                        }
                    })
                    .collect()
            })
            .collect();
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Self::from_structure_constants(field, Some(labels), &mult, vec![field.one(); n], None)
            .expect("k^n is an algebra")
    }

    /// `k[t]/(t^n)` with basis `1, t, ..., t^(n-1)`.
    pub fn truncated_polynomial(field: Field, n: usize) -> Algebra {
        let mult: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i + j < n {
                            field.unit_vector(n, i + j)
                        } else {
                            field.zeros(n)
                        }
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        Self::from_structure_constants(field, Some(labels), &mult, field.unit_vector(n, 0), None)
            .expect("truncated polynomial ring is an algebra")
    }

    pub fn field(&self) -> Field {
        self.inner.s.field
    }

    pub fn dim(&self) -> usize {
        self.inner.s.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.inner.s.unit
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.inner.idempotents
    }

    /// Columns form a basis of the Jacobson radical.
    pub fn radical(&self) -> &Mat {
        &self.inner.radical
    }

    /// Elements generating the algebra; module maps need only commute with these.
    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.inner.generators
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.inner.s.mul(a, b)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.inner.s.basis_product(i, j)
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        self.field().unit_vector(self.dim(), i)
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Mat {
        self.inner.s.left_mult(a)
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Mat {
        self.inner.s.right_mult(a)
    }

    /// Right multiplication by each basis element.
    pub fn regular_action(&self) -> &[Mat] {
        self.inner.regular_action.get_or_init(|| {
            (0..self.dim())
                .map(|j| self.right_mult(&self.basis_element(j)))
                .collect()
        })
    }

    pub(crate) fn projective_bases(&self) -> &[ProjectiveBasis] {
        self.inner.projectives.get_or_init(|| {
            self.idempotents()
                .iter()
                .map(|e| {
                    let mut cols = vec![e.clone()];
                    cols.extend((0..self.dim()).map(|k| self.mul(e, &self.basis_element(k))));
                    let basis = Mat::from_columns(self.field(), self.dim(), &cols).column_basis();
                    let coords = basis.left_inverse();
                    let action = self.regular_action().iter().map(|r| &(&coords * r) * &basis).collect();
                    ProjectiveBasis { basis, coords, action }
                })
                .collect()
        })
    }

    /// Whether the idempotents and the radical span the algebra, i.e. every
    /// simple module is one-dimensional.
    pub fn is_basic_split(&self) -> bool {
        let es = Mat::from_columns(self.field(), self.dim(), self.idempotents());
        Mat::hstack(self.field(), self.dim(), &[&es, self.radical()]).rank() == self.dim()
    }

    /// Dimension of `e_i A e_j` for each pair of idempotents.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let es = self.idempotents();
        es.iter()
            .map(|ei| {
                es.iter()
                    .map(|ej| {
                        let cols: Vec<Vec<Scalar>> = (0..self.dim())
                            .map(|k| self.mul(&self.mul(ei, &self.basis_element(k)), ej))
                            .collect();
                        Mat::from_columns(self.field(), self.dim(), &cols).rank()
                    })
                    .collect()
            })
            .collect()
    }

    /// Dimension of the centre.
    pub fn center_dim(&self) -> usize {
        let d = self.dim();
        if d == 0 {
            return 0;
        }
        let blocks: Vec<Mat> = self
            .generators()
            .iter()
            .map(|g| &self.right_mult(g) - &self.left_mult(g))
            .collect();
        let parts: Vec<&Mat> = blocks.iter().collect();
        d - Mat::vstack(self.field(), d, &parts).rank()
    }

    /// Dimension of `J^k`.
    pub fn radical_power_dim(&self, k: usize) -> usize {
        if k == 0 {
            return self.dim();
        }
        let mut p = self.radical().clone();
        for _ in 1..k {
            p = self.inner.s.product_space(&p, self.radical());
        }
        p.cols()
    }

    /// Least `n` with `J^n = 0`.
    pub fn loewy_length(&self) -> usize {
        if self.dim() == 0 {
            return 0;
        }
        radical::nilpotency_index(&self.inner.s, self.radical()).expect("radical is nilpotent")
    }

    /// The opposite algebra, with the same basis and idempotents. Taking the
    /// opposite twice returns this algebra again.
    pub fn opposite(&self) -> Algebra {
        let slot = self.inner.opposite.get_or_init(|| {
            let inner = self.opposite_inner();
            let _ = inner.opposite.set(Opposite::Back(Arc::downgrade(&self.inner)));
            Opposite::Owned(Arc::new(inner))
        });
        let inner = match slot {
            Opposite::Owned(a) => a.clone(),
            Opposite::Back(w) => w.upgrade().unwrap_or_else(|| Arc::new(self.opposite_inner())),
        };
        Algebra { inner }
    }

    fn opposite_inner(&self) -> Inner {
        Inner {
            labels: self.inner.labels.clone(),
            s: self.inner.s.opposite(),
            idempotents: self.inner.idempotents.clone(),
            radical: self.inner.radical.clone(),
            generators: self.inner.generators.clone(),
            regular_action: OnceLock::new(),
            projectives: OnceLock::new(),
            opposite: OnceLock::new(),
        }
    }

    /// Same structure constants and idempotents.
    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.s == other.inner.s && self.inner.idempotents == other.inner.idempotents)
    }

    /// Whether the algebra equals its opposite on the nose (commutative).
    pub fn is_commutative(&self) -> bool {
        self.inner.s == self.inner.s.opposite()
    }

    /// The quotient `A / I` by a two-sided ideal spanned by the columns of `ideal`.
    pub fn quotient(&self, ideal: &Mat) -> Result<Algebra> {
        let (q, _, _) = self.inner.s.quotient(ideal);
        Self::from_structure(q, None, None, None)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim {} over {}, {} idempotents)",
            self.dim(),
            self.field(),
            self.idempotents().len()
        )
    }
}

fn algebra_generators(s: &Structure, radical: &Mat, idempotents: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let es = Mat::from_columns(s.field, s.dim, idempotents);
    let split = Mat::hstack(s.field, s.dim, &[&es, radical]).rank() == s.dim;
    if !split {
        return (0..s.dim).map(|i| s.field.unit_vector(s.dim, i)).collect();
    }
    let mut gens = idempotents.to_vec();
    let sq = s.product_space(radical, radical);
    let mut span = sq;
    for j in radical.columns() {
        // sandwich by idempotents so each generator lies in some e_i J e_k
        for ei in idempotents {
            for ek in idempotents {
                let x = s.mul(&s.mul(ei, &j), ek);
                let col = Mat::column_vector(s.field, x.clone());
                if !span.spans(&col) {
                    span = Mat::hstack(s.field, s.dim, &[&span, &col]);
                    gens.push(x);
                }
            }
        }
    }
    gens
}
