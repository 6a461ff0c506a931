//! Exact q-weighted Ehrhart theory for lattice and rational polytopes.
//!
//! Given a polytope by its vertices and an integral linear form `lambda`,
//! the weighted count `sum q^lambda(m)` over lattice points `m` of the
//! dilate `tP` is a polynomial in `[t]_q = (q^t - 1)/(q - 1)` with
//! coefficients in `Q(q)`. This crate computes that polynomial (and its
//! quasipolynomial constituents for rational polytopes) from the
//! integer-point transforms of the vertex cones, and checks it against a
//! brute-force lattice-point count.

pub mod chapoton;
pub mod conezeta;
mod error;
pub mod exactalg;
pub mod knownforms;
pub mod oracle;
pub mod polytope;
pub mod qfield;

pub use chapoton::{
    chapoton_polynomial, constituents, rational_reciprocity_check, ChapotonMeta, ChapotonPolynomial, QXPoly,
};
pub use error::{Error, Result};
pub use exactalg::{parse_rational, IntVector, RatMatrix, RatVector, Rational};
pub use oracle::{oracle_count, verify_polytope, VerifyReport, WeightedCount};
pub use polytope::{build_polytope, IntegralForm, Polytope, VertexCone};
pub use qfield::{q_binomial, q_bracket, LaurentPoly, PoleReport, QRatFn};
