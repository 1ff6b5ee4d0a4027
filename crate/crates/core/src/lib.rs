//! Exact computations with finite-dimensional algebras, coalgebras, Hopf
//! algebras, comodule and module algebras, and Hopf modules, all given by
//! structure constants over the rationals or a finite field.
#![no_std]

extern crate alloc;

pub mod error;
pub mod exactla;
pub mod report;
pub mod algebra;
pub mod coalgebra;
pub mod hopf;
pub mod comodalg;
pub mod fitting;
pub mod coideal;
pub mod modalg;

pub use error::{Error, Result};
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
