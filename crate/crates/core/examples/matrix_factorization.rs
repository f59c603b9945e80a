//! Matrix factorizations of x^4, their cokernels and the syzygy swap.

use syzygy::algebra::{isomorphism, syzygy};
use syzygy::linalg::{Field, Poly};
use syzygy::mf::{mf_cokernel_over, mf_indecomposables, mf_syzygy, ring_algebra};
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let f = Poly::parse(Field::rationals(), "x^4")?;
    let ring = ring_algebra(&f)?;
    for mf in mf_indecomposables(&f)? {
        let coker = mf_cokernel_over(&mf, &ring)?.module;
        let swapped = mf_cokernel_over(&mf_syzygy(&mf), &ring)?.module;
        let omega = syzygy(&coker);
        let agrees = isomorphism(&omega, &swapped)?.is_some();
        println!("{mf:?}: cokernel dim {}, syzygy matches swap: {agrees}", coker.dim());
        assert!(agrees);
        assert_eq!(mf_syzygy(&mf_syzygy(&mf)), mf);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
