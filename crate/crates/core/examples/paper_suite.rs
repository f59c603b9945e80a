//! The built-in catalog with its expected claims over several fields.

use syzygy::linalg::Field;
use syzygy::pipeline::{builtin_names, load_instance, verify_paper_claims};
use syzygy::Result;

pub fn run_example() -> Result<()> {
    for field in [Field::rationals(), Field::prime(5)?, Field::prime(7)?] {
        for name in builtin_names() {
            let entry = load_instance(&name, field)?;
            let report = verify_paper_claims(&entry, 20)?.report;
            let failed: Vec<&str> = report
                .claims
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.id.as_str())
                .collect();
            println!(
                "{field} {name}: lambda dim {}, dsg {}, failed {failed:?}",
                report.lambda_dim,
                report.dsg_label()
            );
            assert!(failed.is_empty());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
