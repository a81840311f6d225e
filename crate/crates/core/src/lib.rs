//! Exact algebraic-number arithmetic and Hermite-Lindemann gap certificates.

pub mod error;
pub mod exact;
pub mod fields;
pub mod hermite;
pub mod numerics;
pub mod qbar;

pub use error::{Error, Result};
