//! Gorenstein projectives, complete resolutions and Gorenstein dimensions.

use syzygy::algebra::{Algebra, FdModule};
use syzygy::homological::{
    complete_resolution, gorenstein_dimension_category, is_gorenstein_projective, iwanaga_gorenstein,
};
use syzygy::linalg::Field;
use syzygy::pipeline::dual_numbers_quiver;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let a = Algebra::from_quiver(&dual_numbers_quiver(Field::rationals()))?;
    let k = FdModule::simple(&a, 0);
    let report = is_gorenstein_projective(&k, 10)?;
    println!("k over k[t]/(t^2): {report:?}");
    let window = complete_resolution(&k, 3)?;
    println!(
        "complete resolution window of {} terms is exact: {}",
        window.terms.len(),
        window.verify()
    );
    assert!(window.verify());
    println!(
        "Gorenstein dimension {:?}, category dimension {}",
        iwanaga_gorenstein(&a, 10),
        gorenstein_dimension_category(&a, 10)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
