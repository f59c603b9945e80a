//! Exact linear algebra over `Q` and `F_p`.

mod echelon;
mod field;
mod mat;
mod poly;

pub use field::{Field, Scalar};
pub use mat::Mat;
pub use poly::Poly;
