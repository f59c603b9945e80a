//! Exact elimination over the rationals and a prime field.

use syzygy::linalg::{Field, Mat};
use syzygy::Result;

pub fn run_example() -> Result<()> {
    for field in [Field::rationals(), Field::prime(7)?] {
        let m = Mat::from_i64(field, 3, 3, &[2, 4, 6, 1, 3, 5, 1, 1, 1]);
        let kernel = m.kernel_basis();
        println!("over {field}: rank {}, kernel dimension {}", m.rank(), kernel.cols());
        assert!((&m * &kernel).is_zero());
        let (reduced, pivots) = m.rref();
        println!("  pivots {pivots:?}\n  rref {:?}", reduced);
    }
    let half = Field::rationals().parse("1/2")?;
    let m = Mat::identity(Field::rationals(), 2).scale(&half);
    println!("inverse of I/2: {:?}", m.inverse().expect("invertible"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
