//! Hermite–Lindemann machinery: the machines, their exact divisibility
//! tables and critical integers, rigorous integral bounds, and the
//! certificates that turn these into explicit lower bounds on exponential
//! sums.

mod certificate;
mod galois;
mod lw;
mod pi;
mod reduce;

pub use certificate::{best, HermiteCertificate};
pub use galois::NormalClosure;
pub use lw::{
    certify_gap_lw, conjugate_expand, conjugate_expand_capped, lw_critical, lw_tables, sweep_lw, LwCritical, LwMachine,
    LwTable,
};
pub use pi::{
    certify_gap_pi, critical_integer, derivative_table, hermite_fp_pi, integral_identity_check, subset_sum_closure,
    subset_sum_closure_capped, sweep_pi, tail_bound, CriticalInteger, DerivativeRow, FDerivativeTable, IdentityPair,
    IdentityReport, PiMachine, DEFAULT_CAP,
};
pub use reduce::{qbar_reduce, qbar_reduce_capped, QbarReduction};
