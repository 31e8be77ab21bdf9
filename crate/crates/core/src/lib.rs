//! Exhaustive census of smooth genus-5 curves over F_2.

pub mod cicensus;
pub mod cli;
pub mod error;
pub mod gf2algebra;
pub mod grpact;
pub mod hypcensus;
pub mod multivar;
pub mod trigcensus;
pub mod zeta;

pub use error::{Error, Result};
