pub mod checks;
pub mod cli;
pub mod error;
pub mod expansions;
pub mod laguerre;
pub mod numerics;
pub mod report;
pub mod sto;

pub use error::{Error, Result};
