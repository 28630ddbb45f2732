#![no_std]
//! Exact algebra for quantum Grassmann superalgebras, quantum Weyl
//! superalgebras, their pointed Hopf algebras and `U_q(gl(m|n))` actions.

extern crate alloc;

pub mod error;
pub mod hopf;
pub mod indices;
pub mod linalg;
pub mod qarith;
pub mod superspaces;
pub mod uqrep;
pub mod weyl;

pub use error::{Error, Result};

/// Library version embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
