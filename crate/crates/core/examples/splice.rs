//! Rotating a short exact sequence into a long exact syzygy sequence.

use syzygy::algebra::{projective_cover, splice_syzygy_sequence, stable_hom, Algebra, FdModule, ShortExact};
use syzygy::linalg::Field;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let a = Algebra::truncated_polynomial(Field::prime(5)?, 3);
    let k = FdModule::simple(&a, 0);
    let cover = projective_cover(&k);
    let incl = cover.surjection.kernel_basis();
    let omega = cover.projective.module.submodule(&incl);
    let s = ShortExact::new(omega, cover.projective.module.clone(), k, incl, cover.surjection)?;
    let seq = splice_syzygy_sequence(&s, 4)?;
    let dims: Vec<usize> = seq.terms().iter().map(|m| m.dim()).collect();
    println!("terms {dims:?}");
    // consecutive maps compose to zero modulo maps through projectives
    let terms = seq.terms();
    let maps = seq.maps();
    for k in 0..maps.len() - 1 {
        let composite = maps[k] * maps[k + 1];
        assert!(stable_hom(terms[k + 2], terms[k])?.is_stably_zero(&composite)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
