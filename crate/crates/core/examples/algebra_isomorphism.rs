//! Deciding isomorphism of small algebras.

use syzygy::algebra::Algebra;
use syzygy::linalg::Field;
use syzygy::pipeline::{algebra_isomorphic_small, dual_numbers_quiver, find_isomorphism};
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let f = Field::rationals();
    let quiver = Algebra::from_quiver(&dual_numbers_quiver(f))?;
    let direct = Algebra::truncated_polynomial(f, 2);
    let phi = find_isomorphism(&quiver, &direct)?.expect("isomorphic");
    println!("quiver presentation -> k[t]/(t^2): {phi:?}");
    let split = algebra_isomorphic_small(&direct, &Algebra::product_of_fields(f, 2))?;
    println!("k[t]/(t^2) isomorphic to k x k: {split}");
    assert!(!split);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
