//! Indecomposables of a Nakayama algebra and which are Gorenstein projective.

use syzygy::algebra::is_projective;
use syzygy::homological::{gp_census, is_gorenstein_projective, nakayama_indecomposables};
use syzygy::linalg::{Field, Poly};
use syzygy::pipeline::build_stable_category;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let lambda = build_stable_category(&Poly::parse(Field::rationals(), "x^3")?)?.lambda;
    for m in nakayama_indecomposables(&lambda)? {
        let gp = is_gorenstein_projective(&m, 10)?.is_gp;
        println!(
            "dim vector {:?}: projective {}, gorenstein projective {gp}",
            m.dim_vector(),
            is_projective(&m)
        );
    }
    println!("census size {}", gp_census(&lambda, 10)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
