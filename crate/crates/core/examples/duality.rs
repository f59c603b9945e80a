//! Duals, transposes and cosyzygies over a hereditary algebra.

use std::path::Path;

use syzygy::algebra::{cosyzygy, dual, isomorphism, syzygy, transpose, FdModule};
use syzygy::pipeline::read_algebra_file;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/arrow.json");
    let a = read_algebra_file(&path)?.source()?.build()?;
    let simples = FdModule::simples(&a);
    let omega = syzygy(&simples[0]);
    println!("syzygy of the top simple has dim vector {:?}", omega.dim_vector());
    assert!(isomorphism(&omega, &simples[1])?.is_some());
    println!(
        "cosyzygy of the socle simple has dim vector {:?}",
        cosyzygy(&simples[1]).dim_vector()
    );
    println!("transpose of the top simple has dim {}", transpose(&simples[0])?.dim());
    println!(
        "D(S) lives over the opposite algebra: {}",
        dual(&simples[0]).algebra().same_as(&a.opposite())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
