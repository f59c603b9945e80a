//! Minimal resolutions, periodicity certificates and Ext.

use syzygy::algebra::{Algebra, FdModule};
use syzygy::homological::{ext_dim, global_dimension, min_resolution, verify_periodicity, GDimReport};
use syzygy::linalg::Field;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let a = Algebra::truncated_polynomial(Field::rationals(), 3);
    let k = FdModule::simple(&a, 0);
    let res = min_resolution(&k, 6);
    let ranks: Vec<usize> = res.projectives.iter().map(|p| p.dim()).collect();
    println!(
        "k over k[t]/(t^3): projective dims {ranks:?}, periodicity {:?}",
        res.periodicity.as_ref().map(|p| (p.from, p.to))
    );
    for i in 0..4 {
        println!("  dim Ext^{i}(k, k) = {}", ext_dim(&k, &k, i)?);
    }
    match global_dimension(&a, 6) {
        GDimReport::InfiniteCertified(w) => assert!(verify_periodicity(&a, &w, 6)?),
        other => panic!("unexpected {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
