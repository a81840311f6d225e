//! Rigorous numerics: dyadic numbers, complex balls, root isolation and
//! segment quadrature.

pub mod ball;
pub mod dyadic;
pub mod quadrature;
pub mod roots;

pub use ball::ComplexBall;
pub use dyadic::{Dyadic, Round};
pub use quadrature::{segment_integral_exp, segment_integral_exp_taylor};
pub use roots::{isolate_complex_roots, refine_box, IsolatingBox};
