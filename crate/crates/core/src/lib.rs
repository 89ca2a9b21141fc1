pub mod afalg;
pub mod duality;
pub mod error;
pub mod hopf;
pub mod cli;
pub mod kernels;
pub mod pirep;
pub mod linear;
pub mod report;
pub mod scalars;
pub mod ufalg;

pub use error::{Error, Result};
