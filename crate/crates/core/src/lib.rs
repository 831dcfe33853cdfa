pub mod autos;
pub mod contract;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod liealg;
pub mod poly;
pub mod scalars;
pub mod takiff;

pub use error::{Error, Result};
