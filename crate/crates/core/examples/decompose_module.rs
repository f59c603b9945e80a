//! Krull-Schmidt decomposition of a module read from JSON.

use std::path::Path;

use syzygy::algebra::{decompose, is_projective, isomorphism, FdModule};
use syzygy::pipeline::read_module_file;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/kt3_sum.json");
    let m = read_module_file(&path)?;
    let parts = decompose(&m)?;
    for (s, k) in &parts {
        println!("summand of dim {} x{k}, projective: {}", s.dim(), is_projective(s));
    }
    let simple = FdModule::simple(m.algebra(), 0);
    assert!(isomorphism(&parts[0].0, &simple)?.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
