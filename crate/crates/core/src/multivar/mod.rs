//! Multivariate polynomials over F_2 and Gröbner bases.

mod groebner;
mod monomial;
mod poly;

pub use groebner::{
    cone_dimension, groebner, groebner_truncated, projective_is_empty, projectively_empty_up_to,
    IdealBasis, StopRule,
};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS, VAR_NAMES};
pub use poly::{jacobian_minors, MultiPoly};
