pub mod bendcalc;
pub mod cli;
pub mod error;
pub mod f1algebra;
pub mod semiring;
pub mod tropicalize;
pub mod valuation;

pub use error::{Error, Result};
