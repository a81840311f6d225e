//! Exact arithmetic: rationals, univariate polynomials over Q and Z, and the
//! algorithms built on them.

pub mod factor;
pub mod gcd;
pub mod integers;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod symmetric;

pub use factor::factor_rational;
pub use gcd::{ext_gcd, gcd, squarefree_decomposition};
pub use poly::{IntPoly, RatPoly, ScaledPoly};
pub use rational::Rational;
pub use resultant::resultant;
pub use symmetric::{power_sums, sum_over_roots};
