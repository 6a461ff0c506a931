//! The field `Q(q)` of rational functions in one variable, q-analogs, and
//! cyclotomic pole analysis.

mod laurent;
mod poles;
mod qcomb;
mod ratfn;
mod upoly;

pub use laurent::LaurentPoly;
pub use poles::{cyclotomic, pole_orders, PoleReport};
pub use qcomb::{q_binomial, q_bracket, q_factorial};
pub use ratfn::{eval_polynomial, QRatFn, QRatFnJson};
