use std::fmt;
use std::str::FromStr;

use crate::qcomb::{euler_product_truncated, FactorKind, TruncatedSeries};

use super::{ch_d, ch_w, ch_w_sigma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    Untwisted,
    Twisted,
    ClassicalEven,
    ClassicalOdd,
}

impl LimitKind {
    pub const ALL: [LimitKind; 4] =
        [LimitKind::Untwisted, LimitKind::Twisted, LimitKind::ClassicalEven, LimitKind::ClassicalOdd];

    pub fn name(self) -> &'static str {
        match self {
            LimitKind::Untwisted => "untwisted",
            LimitKind::Twisted => "twisted",
            LimitKind::ClassicalEven => "classical_even",
            LimitKind::ClassicalOdd => "classical_odd",
        }
    }

    fn factor_kind(self) -> FactorKind {
        match self {
            LimitKind::Untwisted => FactorKind::UntwistedPair,
            LimitKind::Twisted => FactorKind::TwistedPair,
            LimitKind::ClassicalEven => FactorKind::ClassicalThetaEven,
            LimitKind::ClassicalOdd => FactorKind::ClassicalThetaOdd,
        }
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LimitKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        LimitKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown limit kind {s:?}"))
    }
}

/// The limit character as a truncated product (or theta quotient).
pub fn limit_char(kind: LimitKind, q_bound: i64, x_bound: i64) -> TruncatedSeries {
    euler_product_truncated(kind.factor_kind(), q_bound, x_bound)
}

/// The `n`-th finite approximant `q^{top} ch(x, q^-1)`, truncated. For the
/// classical kinds `n` indexes `D_{-2n}` (even) or `D_{-2n-1}` (odd).
pub fn approximant(kind: LimitKind, n: i64, q_bound: i64, x_bound: i64) -> TruncatedSeries {
    let (ch, top) = match kind {
        LimitKind::Untwisted => (ch_w(-n), n * (n - 1) / 2),
        LimitKind::Twisted => (ch_w_sigma(-n), n * n),
        LimitKind::ClassicalEven => (ch_d(2 * n), n * n),
        LimitKind::ClassicalOdd => (ch_d(2 * n + 1), n * (n + 1)),
    };
    TruncatedSeries::new(ch.substitute_q_inverse().shift_q(top), q_bound, x_bound)
}

/// Largest `q`-degree at which the `n`-th approximant is trusted.
pub fn trusted_q_degree(n: i64) -> i64 {
    (n - 1).div_euclid(2)
}
