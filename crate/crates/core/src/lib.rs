//! Braid groups modulo commutators of transversal half-twists.

pub mod braid;
pub mod error;
pub mod freegroup;
pub mod gn;
pub mod perm;
pub mod primes;
pub mod quotient;
pub mod verify;

pub use error::{Error, Result};
