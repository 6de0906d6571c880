//! Exact arithmetic: Laurent polynomials in `q` and `(q, v)`, quotients of
//! the latter, and Laurent polynomials in `x` over either coefficient ring.
//!
//! Everything is big-integer exact and immutable once built.

mod bipoly;
mod laurent;
mod qpoly;
mod rational;
mod xpoly;

pub use bipoly::BiPolynomial;
pub use laurent::{Exponent, Laurent, QvExp};
pub use qpoly::QPolynomial;
pub use rational::RationalFunction;
pub use xpoly::{Coefficient, TermRow, XPolynomial, XqRow};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("denominator vanishes at v = 0")]
    DenominatorVanishesAtZero,
    #[error("numerator has a pole at v = 0")]
    PoleAtZero,
    #[error("division leaves a remainder")]
    NotPolynomial,
    #[error("numerator outgrows denominator as v -> infinity")]
    DivergesAtInfinity,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed term row: {0}")]
    BadTermRow(String),
}

/// `q -> q^-1` on a one-variable polynomial.
pub fn substitute_q_inverse(p: &QPolynomial) -> QPolynomial {
    p.substitute_q_inverse()
}

/// Value of `r` at `v = 0`.
pub fn rf_eval_v0(r: &RationalFunction) -> Result<QPolynomial, RingError> {
    r.eval_v0()
}

/// Limit of `r` as `v -> infinity`.
pub fn rf_limit_v_infinity(r: &RationalFunction) -> Result<QPolynomial, RingError> {
    r.limit_v_infinity()
}

/// Convenience alias for the x-polynomials produced by specializations and
/// characters.
pub type QXPoly = XPolynomial<QPolynomial>;

/// x-polynomials with rational coefficients, as produced by the full
/// Ram-Yip sums.
pub type RfXPoly = XPolynomial<RationalFunction>;
