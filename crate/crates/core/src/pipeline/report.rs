//! Homological analysis of an algebra, collected into one report.

use serde_json::{json, Value};

use crate::algebra::{is_projective, Algebra, FdModule};
use crate::homological::{
    global_dimension, gorenstein_dimension_category, gp_census, injective_dimension_regular, is_nakayama,
    is_selfinjective, iwanaga_gorenstein, singularity_trivial, GDimReport, InjectiveDimensions, Singularity,
    SingularityWitness,
};
use crate::linalg::Mat;

/// One expected claim evaluated against a report.
#[derive(Clone, Debug, PartialEq)]
pub struct ClaimResult {
    pub id: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub instance: String,
    pub lambda_dim: usize,
    pub gldim: GDimReport,
    pub injdim: InjectiveDimensions,
    pub ig: Option<usize>,
    pub selfinjective: bool,
    pub gorenstein_dim: Option<usize>,
    /// Nonprojective Gorenstein projective indecomposables; `None` when the
    /// algebra is not Nakayama.
    pub gp_census: Option<Vec<FdModule>>,
    pub dsg: Singularity,
    /// Failures of individual analyses, by report field.
    pub errors: Vec<(String, String)>,
    /// Violated consistency rules; empty for a sound report.
    pub inconsistencies: Vec<String>,
    pub claims: Vec<ClaimResult>,
}

pub fn analyze(instance: &str, lambda: &Algebra, cap: usize) -> AnalysisReport {
    let mut errors = Vec::new();
    let mut report = if lambda.dim() == 0 {
        AnalysisReport {
            instance: instance.to_string(),
            lambda_dim: 0,
            gldim: GDimReport::Finite(0),
            injdim: InjectiveDimensions {
                left: GDimReport::Finite(0),
                right: GDimReport::Finite(0),
            },
            ig: Some(0),
            selfinjective: true,
            gorenstein_dim: Some(0),
            gp_census: Some(Vec::new()),
            dsg: Singularity::Trivial,
            errors: Vec::new(),
            inconsistencies: Vec::new(),
            claims: Vec::new(),
        }
    } else {
        let gldim = global_dimension(lambda, cap);
        let injdim = injective_dimension_regular(lambda, cap);
        let ig = iwanaga_gorenstein(lambda, cap);
        let selfinjective = is_selfinjective(lambda);
        let gorenstein_dim = match gorenstein_dimension_category(lambda, cap) {
            Ok(d) => Some(d),
            Err(e) => {
                errors.push(("gorenstein_dim".to_string(), e.to_string()));
                None
            }
        };
        let census = if is_nakayama(lambda) {
            match gp_census(lambda, cap) {
                Ok(c) => Some(c),
                Err(e) => {
                    errors.push(("gp_census".to_string(), e.to_string()));
                    None
                }
            }
        } else {
            errors.push(("gp_census".to_string(), "not a Nakayama algebra".to_string()));
            None
        };
        let dsg = match singularity_trivial(lambda, cap) {
            Ok(s) => s,
            Err(e) => {
                errors.push(("dsg".to_string(), e.to_string()));
                Singularity::UnknownAtCap
            }
        };
        AnalysisReport {
            instance: instance.to_string(),
            lambda_dim: lambda.dim(),
            gldim,
            injdim,
            ig,
            selfinjective,
            gorenstein_dim,
            gp_census: census,
            dsg,
            errors,
            inconsistencies: Vec::new(),
            claims: Vec::new(),
        }
    };
    report.inconsistencies = report.consistency_violations();
    report
}

impl AnalysisReport {
    fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.selfinjective && self.ig != Some(0) {
            out.push("self-injective but Gorenstein dimension is not 0".to_string());
        }
        if self.gldim.finite().is_some() && !matches!(self.dsg, Singularity::Trivial) {
            out.push("finite global dimension but nontrivial singularity category".to_string());
        }
        if self.gldim.is_infinite() && matches!(self.dsg, Singularity::Trivial) {
            out.push("infinite global dimension but trivial singularity category".to_string());
        }
        if let (Some(g), Some(n)) = (self.gldim.finite(), self.ig) {
            if g != n {
                out.push(format!("global dimension {g} differs from Gorenstein dimension {n}"));
            }
        }
        if let (Some(d), Some(n)) = (self.gorenstein_dim, self.ig) {
            if d > n {
                out.push(format!("category dimension {d} exceeds Gorenstein dimension {n}"));
            }
        }
        if let (Some(c), Some(0)) = (&self.gp_census, self.gldim.finite()) {
            if !c.is_empty() {
                out.push("semisimple algebra with nonprojective modules".to_string());
            }
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }

    pub fn all_claims_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn census_size(&self) -> Option<usize> {
        self.gp_census.as_ref().map(Vec::len)
    }

    pub fn dsg_label(&self) -> &'static str {
        match self.dsg {
            Singularity::Trivial => "trivial",
            Singularity::Nontrivial(_) => "nontrivial",
            Singularity::UnknownAtCap => "unknown",
        }
    }

    pub fn to_json(&self) -> Value {
        let census = self.gp_census.as_ref().map(|c| {
            c.iter()
                .map(|m| json!({"dim": m.dim(), "dim_vector": m.dim_vector(), "projective": is_projective(m)}))
                .collect::<Vec<_>>()
        });
        let errors: serde_json::Map<String, Value> = self
            .errors
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let claims: Vec<Value> = self
            .claims
            .iter()
            .map(|c| json!({"id": c.id, "expected": c.expected, "actual": c.actual, "pass": c.pass}))
            .collect();
        json!({
            "instance": self.instance,
            "lambda_dim": self.lambda_dim,
            "gldim": gdim_json(&self.gldim),
            "injdim": [gdim_value(&self.injdim.left), gdim_value(&self.injdim.right)],
            "ig": self.ig,
            "selfinjective": self.selfinjective,
            "gorenstein_dim": self.gorenstein_dim,
            "gp_census": census,
            "dsg": self.dsg_label(),
            "dsg_witness": dsg_witness(&self.dsg),
            "errors": errors,
            "inconsistencies": self.inconsistencies,
            "claims": claims,
        })
    }
}

fn matrix_json(m: &Mat) -> Value {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| Value::String(x.to_string()))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `n` for a finite dimension, `"infinite"`, or `">=cap"`.
pub fn gdim_value(g: &GDimReport) -> Value {
    match g {
        GDimReport::Finite(n) => json!(n),
        GDimReport::AtLeastCap(c) => json!(format!(">={c}")),
        GDimReport::InfiniteCertified(_) => json!("infinite"),
    }
}

pub fn gdim_json(g: &GDimReport) -> Value {
    match g {
        GDimReport::Finite(n) => json!({"kind": "finite", "value": n, "witness": null}),
        GDimReport::AtLeastCap(c) => json!({"kind": "at_least", "value": c, "witness": null}),
        GDimReport::InfiniteCertified(w) => json!({
            "kind": "infinite",
            "value": null,
            "witness": {
                "simple": w.simple,
                "from": w.periodicity.from,
                "to": w.periodicity.to,
                "isomorphism": matrix_json(&w.periodicity.isomorphism),
            }
        }),
    }
}

fn dsg_witness(s: &Singularity) -> Value {
    match s {
        Singularity::Nontrivial(SingularityWitness::Periodic(w)) => {
            json!({"kind": "periodic_simple", "simple": w.simple, "from": w.periodicity.from, "to": w.periodicity.to})
        }
        Singularity::Nontrivial(SingularityWitness::GorensteinProjective(m)) => {
            json!({"kind": "gorenstein_projective", "dim": m.dim(), "dim_vector": m.dim_vector()})
        }
        _ => Value::Null,
    }
}
