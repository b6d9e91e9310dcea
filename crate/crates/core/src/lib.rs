pub mod algebra;
pub mod check;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod presentation;

pub use error::{Error, Result};
