//! Finite inverse semigroups and the module theory over them: inverse sets,
//! adjointable maps, inverse correspondences and their tensor products,
//! Morita equivalences, multiplier semigroups and inverse Rees matrix
//! semigroups. Every structural result is checked by an executable verifier.

pub mod adjointable;
pub mod bicategory;
pub mod correspondence;
pub mod error;
pub mod fixtures;
pub mod inverse_set;
pub mod io;
pub mod multiplier;
pub mod quotient;
pub mod rees;
pub mod report;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
