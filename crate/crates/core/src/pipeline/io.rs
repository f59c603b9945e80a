//! JSON algebra and module files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::{Algebra, Arrow, FdModule, QuiverPresentation, RelationTerm};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};

/// A coefficient written as a decimal integer or a string such as `"-3/4"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    pub fn to_scalar(&self, field: Field) -> Result<Scalar> {
        match self {
            Coeff::Int(v) => Ok(field.from_i64(*v)),
            Coeff::Text(s) => field.parse(s),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub char: u32,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureSpec {
    pub dim: usize,
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    pub unit: Vec<Coeff>,
    /// `mult[i][j]` is the coefficient row of `b_i b_j`.
    pub mult: Vec<Vec<Vec<Coeff>>>,
    #[serde(default)]
    pub idempotents: Option<Vec<Vec<Coeff>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub from: VertexRef,
    pub to: VertexRef,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub path: Vec<String>,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    #[serde(default = "default_cap")]
    pub cap: usize,
}

fn default_cap() -> usize {
    20
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimSpec {
    pub id: String,
    pub expected: Value,
    #[serde(default)]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub kind: String,
    #[serde(default)]
    pub structure: Option<StructureSpec>,
    #[serde(default)]
    pub quiver: Option<QuiverSpec>,
    #[serde(default)]
    pub claims: Vec<ClaimSpec>,
}

/// How an algebra file describes its algebra.
#[derive(Clone, Debug)]
pub enum AlgebraSource {
    Structure(Algebra),
    Quiver(QuiverPresentation),
}

impl AlgebraSource {
    pub fn build(&self) -> Result<Algebra> {
        match self {
            AlgebraSource::Structure(a) => Ok(a.clone()),
            AlgebraSource::Quiver(q) => Algebra::from_quiver(q),
        }
    }
}

fn vertex_index(v: &VertexRef, names: &[String]) -> Result<usize> {
    match v {
        VertexRef::Index(i) if *i < names.len() => Ok(*i),
        VertexRef::Index(i) => Err(Error::Parse(format!("vertex index {i} out of range"))),
        VertexRef::Name(n) => names
            .iter()
            .position(|x| x == n)
            .ok_or_else(|| Error::Parse(format!("unknown vertex {n:?}"))),
    }
}

fn row(field: Field, coeffs: &[Coeff], dim: usize, what: &str) -> Result<Vec<Scalar>> {
    if coeffs.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{what}: {} entries, expected {dim}",
            coeffs.len()
        )));
    }
    coeffs.iter().map(|c| c.to_scalar(field)).collect()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn source(&self) -> Result<AlgebraSource> {
        let field = Field::from_characteristic(self.field.char)?;
        match self.kind.as_str() {
            "structure" => {
                let s = self
                    .structure
                    .as_ref()
                    .ok_or_else(|| Error::Parse("missing \"structure\" section".into()))?;
                let d = s.dim;
                if s.mult.len() != d || s.mult.iter().any(|r| r.len() != d) {
                    return Err(Error::DimensionMismatch(format!(
                        "multiplication table is not {d} x {d}"
                    )));
                }
                let mult = s
                    .mult
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| row(field, c, d, "product"))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let unit = row(field, &s.unit, d, "unit")?;
                let idempotents = s
                    .idempotents
                    .as_ref()
                    .map(|es| {
                        es.iter()
                            .map(|e| row(field, e, d, "idempotent"))
                            .collect::<Result<Vec<_>>>()
                    })
                    .transpose()?;
                let a = Algebra::from_structure_constants(field, s.basis.clone(), &mult, unit, idempotents)?;
                Ok(AlgebraSource::Structure(a))
            }
            "quiver" => {
                let q = self
                    .quiver
                    .as_ref()
                    .ok_or_else(|| Error::Parse("missing \"quiver\" section".into()))?;
                let arrows = q
                    .arrows
                    .iter()
                    .map(|a| {
                        Ok(Arrow {
                            name: a.name.clone(),
                            from: vertex_index(&a.from, &q.vertices)?,
                            to: vertex_index(&a.to, &q.vertices)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let relations = q
                    .relations
                    .iter()
                    .map(|rel| {
                        rel.iter()
                            .map(|t| {
                                Ok(RelationTerm {
                                    path: t.path.clone(),
                                    coeff: t.coeff.to_scalar(field)?,
                                })
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(AlgebraSource::Quiver(QuiverPresentation {
                    field,
                    vertices: q.vertices.clone(),
                    arrows,
                    relations,
                    cap: q.cap,
                }))
            }
            other => Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
        }
    }
}

pub fn read_algebra_file(path: &Path) -> Result<AlgebraFile> {
    AlgebraFile::parse(&std::fs::read_to_string(path)?)
}

/// Either a path to an algebra file or the algebra description inline.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(Box<AlgebraFile>),
}

/// A row-major matrix, nested or flat.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Nested(Vec<Vec<Coeff>>),
    Flat(Vec<Coeff>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: AlgebraRef,
    pub dim: usize,
    /// Matrix of `v -> v b` on column vectors, for every basis label `b`.
    pub action: BTreeMap<String, MatrixSpec>,
}

impl MatrixSpec {
    fn to_mat(&self, field: Field, n: usize) -> Result<Mat> {
        let flat: Vec<&Coeff> = match self {
            MatrixSpec::Nested(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::DimensionMismatch(format!("action matrix is not {n} x {n}")));
                }
                rows.iter().flatten().collect()
            }
            MatrixSpec::Flat(v) => {
                if v.len() != n * n {
                    return Err(Error::DimensionMismatch(format!(
                        "action matrix has {} entries",
                        v.len()
                    )));
                }
                v.iter().collect()
            }
        };
        let data = flat
            .into_iter()
            .map(|c| c.to_scalar(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_vec(field, n, n, data))
    }
}

/// Reads a module file; a relative algebra path is resolved against the
/// module file's directory.
pub fn read_module_file(path: &Path) -> Result<FdModule> {
    let text = std::fs::read_to_string(path)?;
    let spec: ModuleFile = serde_json::from_str(&text)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    module_from_spec(&spec, &base)
}

pub fn module_from_spec(spec: &ModuleFile, base: &Path) -> Result<FdModule> {
    let file = match &spec.algebra {
        AlgebraRef::Path(p) => {
            let p = PathBuf::from(p);
            read_algebra_file(&if p.is_absolute() { p } else { base.join(p) })?
        }
        AlgebraRef::Inline(f) => (**f).clone(),
    };
    let algebra = file.source()?.build()?;
    let field = algebra.field();
    let mut action = Vec::with_capacity(algebra.dim());
    for label in algebra.labels() {
        let m = spec
            .action
            .get(label)
            .ok_or_else(|| Error::Parse(format!("no action given for basis element {label:?}")))?;
        action.push(m.to_mat(field, spec.dim)?);
    }
    if let Some(extra) = spec.action.keys().find(|k| !algebra.labels().contains(k)) {
        return Err(Error::Parse(format!("unknown basis element {extra:?}")));
    }
    FdModule::new(&algebra, spec.dim, action)
}
