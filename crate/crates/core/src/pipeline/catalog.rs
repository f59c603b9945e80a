//! Built-in instances with their expected claims, and claim checking.

use std::path::Path;

use serde_json::{json, Value};

use super::io::{read_algebra_file, AlgebraSource};
use super::iso::algebra_isomorphic_small;
use super::report::{analyze, gdim_value, AnalysisReport, ClaimResult};
use super::stable::{build_stable_category, StableCatPresentation};
use crate::algebra::{Algebra, Arrow, QuiverPresentation, RelationTerm};
use crate::error::{Error, Result};
use crate::linalg::{Field, Poly};

#[derive(Clone, Debug)]
pub enum Construction {
    /// Stable category of maximal Cohen-Macaulay modules over `k[x]/(f)`.
    MfRing(Poly),
    DirectAlgebra(Algebra),
    QuiverAlgebra(QuiverPresentation),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedClaim {
    pub id: String,
    pub expected: Value,
    /// Where the expected value comes from: `"paper"`, `"derived"` or `"trivial"`.
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    pub claims: Vec<ExpectedClaim>,
}

fn claim(id: &str, expected: Value, provenance: &str) -> ExpectedClaim {
    ExpectedClaim {
        id: id.to_string(),
        expected,
        provenance: provenance.to_string(),
    }
}

/// Names of the built-in instances in suite order.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=4).map(|n| format!("a{n}_dim0")).collect();
    names.push("a1_dim1".into());
    names.push("a2_dim1".into());
    names
}

/// The loop `t` at one vertex with `t^2 = 0`.
pub fn dual_numbers_quiver(field: Field) -> QuiverPresentation {
    QuiverPresentation {
        field,
        vertices: vec!["1".into()],
        arrows: vec![Arrow {
            name: "t".into(),
            from: 0,
            to: 0,
        }],
        relations: vec![vec![RelationTerm {
            path: vec!["t".into(), "t".into()],
            coeff: field.one(),
        }]],
        cap: 10,
    }
}

/// Reference algebras named in isomorphism claims.
pub fn reference_algebra(name: &str, field: Field) -> Option<Algebra> {
    match name {
        "0" => Some(Algebra::zero(field)),
        "k" => Some(Algebra::ground_field(field)),
        "k x k" => Some(Algebra::product_of_fields(field, 2)),
        "k[t]/(t^2)" => Some(Algebra::truncated_polynomial(field, 2)),
        _ => None,
    }
}

fn ade_a(n: usize, field: Field) -> Result<CatalogEntry> {
    let f = Poly::monomial(field, field.one(), n + 1);
    let mut claims = vec![
        claim("selfinjective", json!(true), "paper"),
        claim("gorenstein_dim", json!(0), "paper"),
        claim("indecomposables", json!(n), "derived"),
    ];
    if n == 1 {
        claims.extend([
            claim("lambda_iso", json!("k"), "paper"),
            claim("gldim", json!(0), "paper"),
            claim("dsg", json!("trivial"), "paper"),
        ]);
    }
    Ok(CatalogEntry {
        name: format!("a{n}_dim0"),
        construction: Construction::MfRing(f),
        claims,
    })
}

/// A built-in instance by name, or an algebra file by path.
pub fn load_instance(name: &str, field: Field) -> Result<CatalogEntry> {
    if let Some(n) = name
        .strip_prefix('a')
        .and_then(|s| s.strip_suffix("_dim0"))
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
    {
        return ade_a(n, field);
    }
    match name {
        "a1_dim1" => Ok(CatalogEntry {
            name: name.into(),
            construction: Construction::DirectAlgebra(Algebra::product_of_fields(field, 2)),
            claims: vec![
                claim("lambda_iso", json!("k x k"), "paper"),
                claim("gldim", json!(0), "paper"),
                claim("dsg", json!("trivial"), "paper"),
            ],
        }),
        "a2_dim1" => Ok(CatalogEntry {
            name: name.into(),
            construction: Construction::QuiverAlgebra(dual_numbers_quiver(field)),
            claims: vec![
                claim("lambda_iso", json!("k[t]/(t^2)"), "paper"),
                claim("gldim", json!("infinite"), "paper"),
                claim("periodicity", json!([0, 1]), "derived"),
                claim("selfinjective", json!(true), "derived"),
                claim("ig", json!(0), "derived"),
                claim("census_size", json!(1), "derived"),
                claim("dsg", json!("nontrivial"), "paper"),
            ],
        }),
        _ if Path::new(name).is_file() => load_file(Path::new(name)),
        _ => Err(Error::UnknownInstance(name.to_string())),
    }
}

fn load_file(path: &Path) -> Result<CatalogEntry> {
    let file = read_algebra_file(path)?;
    let construction = match file.source()? {
        AlgebraSource::Structure(a) => Construction::DirectAlgebra(a),
        AlgebraSource::Quiver(q) => Construction::QuiverAlgebra(q),
    };
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".into());
    let claims = file
        .claims
        .iter()
        .map(|c| claim(&c.id, c.expected.clone(), c.provenance.as_deref().unwrap_or("")))
        .collect();
    Ok(CatalogEntry {
        name,
        construction,
        claims,
    })
}

impl CatalogEntry {
    pub fn field(&self) -> Field {
        match &self.construction {
            Construction::MfRing(f) => f.field(),
            Construction::DirectAlgebra(a) => a.field(),
            Construction::QuiverAlgebra(q) => q.field,
        }
    }

    pub fn presentation(&self) -> Result<StableCatPresentation> {
        match &self.construction {
            Construction::MfRing(f) => build_stable_category(f),
            Construction::DirectAlgebra(a) => Ok(StableCatPresentation::from_algebra(&self.name, a.clone())),
            Construction::QuiverAlgebra(q) => Ok(StableCatPresentation::from_algebra(
                &self.name,
                Algebra::from_quiver(q)?,
            )),
        }
    }
}

fn actual_value(id: &str, expected: &Value, report: &AnalysisReport, p: &StableCatPresentation) -> Value {
    let lambda = &p.lambda;
    match id {
        "lambda_iso" => {
            let Some(reference) = expected.as_str().and_then(|n| reference_algebra(n, lambda.field())) else {
                return json!("unknown reference algebra");
            };
            match algebra_isomorphic_small(lambda, &reference) {
                Ok(true) => expected.clone(),
                Ok(false) => json!(format!("not isomorphic (dim {})", lambda.dim())),
                Err(e) => json!(e.to_string()),
            }
        }
        "lambda_dim" => json!(lambda.dim()),
        "indecomposables" => json!(p.indecomposables.len()),
        "gldim" => gdim_value(&report.gldim),
        "periodicity" => match &report.gldim {
            crate::homological::GDimReport::InfiniteCertified(w) => json!([w.periodicity.from, w.periodicity.to]),
            _ => Value::Null,
        },
        "selfinjective" => json!(report.selfinjective),
        "ig" => json!(report.ig),
        "gorenstein_dim" => json!(report.gorenstein_dim),
        "census_size" => json!(report.census_size()),
        "dsg" => json!(report.dsg_label()),
        _ => json!("unknown claim"),
    }
}

/// A catalog entry's presentation together with its checked report.
#[derive(Clone, Debug)]
pub struct Verified {
    pub presentation: StableCatPresentation,
    pub report: AnalysisReport,
}

/// Analyzes the entry and evaluates each expected claim; an inconsistent
/// report shows up as a failing claim. Only construction errors are returned.
pub fn verify_paper_claims(entry: &CatalogEntry, cap: usize) -> Result<Verified> {
    let p = entry.presentation()?;
    let mut report = analyze(&entry.name, &p.lambda, cap);
    let mut claims: Vec<ClaimResult> = entry
        .claims
        .iter()
        .map(|c| {
            let actual = actual_value(&c.id, &c.expected, &report, &p);
            ClaimResult {
                id: c.id.clone(),
                pass: actual == c.expected,
                expected: c.expected.clone(),
                actual,
            }
        })
        .collect();
    claims.push(ClaimResult {
        id: "consistent".into(),
        expected: json!(true),
        actual: json!(report.is_consistent()),
        pass: report.is_consistent(),
    });
    report.claims = claims;
    Ok(Verified {
        presentation: p,
        report,
    })
}
