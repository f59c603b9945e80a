pub mod algebra;
pub mod cli;
pub mod error;
pub mod homological;
pub mod linalg;
pub mod mf;
pub mod pipeline;

pub use error::{Error, Result};
