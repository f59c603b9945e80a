//! The stable category of k[x]/(x^4) and its stable endomorphism algebra.

use syzygy::linalg::{Field, Poly};
use syzygy::pipeline::build_stable_category;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let f = Poly::parse(Field::rationals(), "x^4")?;
    let p = build_stable_category(&f)?;
    println!("{} indecomposables", p.indecomposables.len());
    for row in &p.hom_table {
        println!("  {row:?}");
    }
    println!("lambda: dim {}, cartan {:?}", p.lambda.dim(), p.lambda.cartan_matrix());
    assert_eq!(p.lambda.dim(), p.hom_table.iter().flatten().sum::<usize>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
