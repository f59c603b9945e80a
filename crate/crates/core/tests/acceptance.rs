//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use syzygy::algebra::Algebra;
use syzygy::homological::{verify_periodicity, GDimReport};
use syzygy::linalg::Field;
use syzygy::pipeline::{algebra_isomorphic_small, load_instance, verify_paper_claims};

const CAP: usize = 20;

struct Outcome {
    failures: Vec<String>,
    /// Field-independent summary, compared across characteristics.
    summary: Value,
    elapsed: Duration,
}

fn timed(f: impl FnOnce(&mut Vec<String>) -> Value) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let summary = f(&mut failures);
    Outcome {
        failures,
        summary,
        elapsed: start.elapsed(),
    }
}

fn expect(failures: &mut Vec<String>, what: &str, actual: &Value, expected: Value) {
    if *actual != expected {
        failures.push(format!("{what}: expected {expected}, got {actual}"));
    }
}

fn analyze_ring(f: &str, field: Field) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_syzygy"))
        .args(["analyze-ring", "--f", f, "--char", &field.characteristic().to_string()])
        .args(["--format", "json"])
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    (code, serde_json::from_slice(&out.stdout).unwrap_or(Value::Null))
}

fn claim_passes(record: &Value, id: &str) -> bool {
    record["claims"]
        .as_array()
        .into_iter()
        .flatten()
        .any(|c| c["id"] == id && c["pass"] == true)
}

fn square_ring(field: Field) -> Outcome {
    timed(|bad| {
        let (code, r) = analyze_ring("x^2", field);
        expect(bad, "exit code", &json!(code), json!(0));
        expect(bad, "indecomposables", &r["indecomposables"], json!(1));
        expect(bad, "lambda_dim", &r["lambda_dim"], json!(1));
        expect(
            bad,
            "lambda is the field",
            &json!(claim_passes(&r, "lambda_iso")),
            json!(true),
        );
        expect(
            bad,
            "gldim",
            &r["gldim"],
            json!({"kind": "finite", "value": 0, "witness": null}),
        );
        expect(bad, "dsg", &r["dsg"], json!("trivial"));
        json!([r["indecomposables"], r["lambda_dim"], r["gldim"], r["dsg"]])
    })
}

fn product_of_fields(field: Field) -> Outcome {
    timed(|bad| {
        let entry = load_instance("a1_dim1", field).unwrap();
        let v = verify_paper_claims(&entry, CAP).unwrap();
        let iso = algebra_isomorphic_small(&v.presentation.lambda, &Algebra::product_of_fields(field, 2));
        expect(bad, "lambda is k x k", &json!(iso.ok()), json!(Some(true)));
        expect(
            bad,
            "gldim",
            &json!(v.report.gldim == GDimReport::Finite(0)),
            json!(true),
        );
        expect(bad, "dsg", &json!(v.report.dsg_label()), json!("trivial"));
        expect(bad, "all claims", &json!(v.report.all_claims_pass()), json!(true));
        json!([v.report.lambda_dim, v.report.gldim.finite(), v.report.dsg_label()])
    })
}

fn dual_numbers(field: Field) -> Outcome {
    timed(|bad| {
        let entry = load_instance("a2_dim1", field).unwrap();
        let v = verify_paper_claims(&entry, CAP).unwrap();
        let lambda = &v.presentation.lambda;
        let r = &v.report;
        let iso = algebra_isomorphic_small(lambda, &Algebra::truncated_polynomial(field, 2));
        expect(bad, "lambda is k[t]/(t^2)", &json!(iso.ok()), json!(Some(true)));
        let witness = match &r.gldim {
            GDimReport::InfiniteCertified(w) => {
                let checked = verify_periodicity(lambda, w, CAP).unwrap_or(false);
                expect(bad, "periodicity verifies", &json!(checked), json!(true));
                json!([w.simple, w.periodicity.from, w.periodicity.to])
            }
            other => {
                bad.push(format!("gldim: expected a certified infinite dimension, got {other:?}"));
                Value::Null
            }
        };
        expect(bad, "periodicity: syzygy of k is k", &witness, json!([0, 0, 1]));
        expect(bad, "selfinjective", &json!(r.selfinjective), json!(true));
        expect(bad, "ig", &json!(r.ig), json!(0));
        let census: Option<Vec<usize>> = r.gp_census.as_ref().map(|c| c.iter().map(|m| m.dim()).collect());
        expect(bad, "census", &json!(census), json!([1]));
        expect(bad, "dsg", &json!(r.dsg_label()), json!("nontrivial"));
        expect(bad, "all claims", &json!(r.all_claims_pass()), json!(true));
        json!([r.lambda_dim, witness, r.selfinjective, r.ig, census, r.dsg_label()])
    })
}

fn frobenius_family(field: Field) -> Outcome {
    timed(|bad| {
        let mut rows = Vec::new();
        for n in 2..=5 {
            let (code, r) = analyze_ring(&format!("x^{n}"), field);
            expect(bad, &format!("x^{n} exit code"), &json!(code), json!(0));
            expect(bad, &format!("x^{n} selfinjective"), &r["selfinjective"], json!(true));
            expect(bad, &format!("x^{n} gorenstein_dim"), &r["gorenstein_dim"], json!(0));
            rows.push(json!([
                r["lambda_dim"],
                r["selfinjective"],
                r["gorenstein_dim"],
                r["hom_table"]
            ]));
        }
        Value::Array(rows)
    })
}

fn sweep(f: impl FnOnce() -> Vec<String>) -> Outcome {
    timed(|bad| {
        bad.extend(f());
        Value::Null
    })
}

fn line(id: usize, title: &str, limit: Duration, o: &Outcome) -> bool {
    let pass = o.failures.is_empty() && o.elapsed < limit;
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("{verdict} {id} {title} ({:.2?}, limit {limit:?})", o.elapsed);
    for f in &o.failures {
        println!("    {f}");
    }
    if o.elapsed >= limit {
        println!("    over time");
    }
    pass
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let per_field: Vec<(Field, [Outcome; 4])> = common::fields()
        .into_iter()
        .map(|f| {
            (
                f,
                [
                    square_ring(f),
                    product_of_fields(f),
                    dual_numbers(f),
                    frobenius_family(f),
                ],
            )
        })
        .collect();
    let rational = &per_field[0].1;
    let mut all = true;
    all &= line(
        1,
        "x^2: one indecomposable, lambda = k, gldim 0, trivial",
        secs(1),
        &rational[0],
    );
    all &= line(2, "k x k: gldim 0, trivial", secs(1), &rational[1]);
    all &= line(
        3,
        "k[t]/(t^2): periodic, self-injective, census [k], nontrivial",
        secs(1),
        &rational[2],
    );
    all &= line(
        4,
        "x^2..x^5: self-injective, Gorenstein dimension 0",
        secs(5),
        &rational[3],
    );

    let oracles = sweep(|| {
        let mut bad = common::ext_mismatches(Field::rationals());
        bad.extend(common::stable_hom_mismatches(Field::rationals()));
        bad
    });
    all &= line(
        5,
        "Ext and stable Hom agree with brute-force oracles",
        secs(30),
        &oracles,
    );

    let properties = sweep(|| common::property_violations(Field::rationals()));
    all &= line(
        6,
        "structural properties on every catalog instance",
        secs(30),
        &properties,
    );

    let mut cross = Outcome {
        failures: Vec::new(),
        summary: Value::Null,
        elapsed: Duration::ZERO,
    };
    for (field, outcomes) in &per_field {
        for (k, o) in outcomes.iter().enumerate() {
            cross.elapsed += o.elapsed;
            if !o.failures.is_empty() {
                cross.failures.push(format!("criterion {} fails over {field}", k + 1));
            }
            if o.summary != rational[k].summary {
                cross.failures.push(format!("criterion {} differs over {field}", k + 1));
            }
        }
    }
    all &= line(7, "criteria 1-4 agree over Q, F_5 and F_7", secs(10), &cross);
    assert!(all, "acceptance criteria failed");
}
