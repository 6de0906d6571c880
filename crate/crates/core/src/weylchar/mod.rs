//! Characters of Weyl modules for `sl2[t]` and `osp(1,2)[t]` (untwisted and
//! twisted), their spanning bases, PBW-graded characters and `n -> infinity`
//! limits, plus the harness comparing them with the specialized polynomials.

mod basis;
mod limits;
pub mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

pub use basis::{character_of, enumerate_basis, enumerate_limit_basis, BasisKind, BasisMonomial};
pub use limits::{approximant, limit_char, trusted_q_degree, LimitKind};

use crate::qcomb::q_binomial;
use crate::ring::{QPolynomial, QXPoly};

/// Character of the classical Weyl module `D_{-n}`:
/// `sum_k x^{-n+2k} [n; k]_q`.
pub fn ch_d(n: i64) -> QXPoly {
    assert!(n >= 0);
    let mut out = QXPoly::zero();
    for k in 0..=n {
        out.add_term(-n + 2 * k, q_binomial(n, k, 1));
    }
    out
}

/// Character of the untwisted module `W_n` for any integer `n`.
pub fn ch_w(n: i64) -> QXPoly {
    let mut out = QXPoly::zero();
    if n <= 0 {
        let m = -n;
        for k in 0..=m {
            let outer = q_binomial(m, k, 1).shift(k * (k - 1) / 2);
            for s in 0..=m - k {
                out.add_term(-m + k + 2 * s, &outer * &q_binomial(m - k, s, 1));
            }
        }
    } else {
        for k in 0..n {
            let outer = q_binomial(n - 1, k, 1).shift(k * (k + 1) / 2);
            for s in 0..n - k {
                out.add_term(n - k - 2 * s, (&outer * &q_binomial(n - k - 1, s, 1)).shift(s));
            }
        }
    }
    out
}

/// Character of the twisted module `W^sigma_n` for any integer `n`.
pub fn ch_w_sigma(n: i64) -> QXPoly {
    let mut out = QXPoly::zero();
    if n <= 0 {
        let m = -n;
        for k in 0..=m {
            let outer = q_binomial(m, k, 2).shift(k * k);
            for s in 0..=m - k {
                out.add_term(-m + k + 2 * s, &outer * &q_binomial(m - k, s, 2));
            }
        }
    } else {
        for k in 0..n {
            let outer = q_binomial(n - 1, k, 2).shift(k * k);
            for s in 0..n - k {
                let inner = &outer * &q_binomial(n - k - 1, s, 2);
                out.add_term(n - k - 2 * s, inner.shift(2 * s));
                out.add_term(n - k - 2 * s - 1, inner.shift(2 * n - 1));
            }
        }
    }
    out
}

/// A character with an extra (PBW) grading: `layers[p]` is the `(x, q)`
/// character of the PBW-degree-`p` part.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GradedCharacter {
    pub layers: BTreeMap<i64, QXPoly>,
}

impl GradedCharacter {
    pub fn from_basis(basis: &[BasisMonomial]) -> GradedCharacter {
        let mut layers: BTreeMap<i64, QXPoly> = BTreeMap::new();
        for m in basis {
            layers.entry(m.pbw_degree).or_insert_with(QXPoly::zero).add_term(m.weight, QPolynomial::q_pow(m.t_degree));
        }
        GradedCharacter { layers }
    }

    /// Forgets the extra grading.
    pub fn total(&self) -> QXPoly {
        self.layers.values().fold(QXPoly::zero(), |acc, l| acc + l.clone())
    }

    /// `q -> q^{q_power}` and the PBW variable `-> q^{pbw_power}`.
    pub fn specialize(&self, q_power: i64, pbw_power: i64) -> QXPoly {
        self.layers
            .iter()
            .fold(QXPoly::zero(), |acc, (p, l)| acc + l.substitute_q_power(q_power).shift_q(p * pbw_power))
    }

    pub fn dimension(&self) -> BigInt {
        self.layers.values().map(|l| l.eval_at_one()).sum()
    }
}

/// PBW-graded character of `W_{-n}` (or `W^sigma_{-n}`). The untwisted grading
/// counts all generators; the twisted one counts only the `e`'s.
pub fn ch_gr_w_pbw(n: i64, twisted: bool) -> GradedCharacter {
    let kind = if twisted { BasisKind::TwistedNeg } else { BasisKind::UntwistedNeg };
    GradedCharacter::from_basis(&enumerate_basis(kind, n))
}

/// The PBW character at the specialization used in the comparison with
/// `t = infinity`: `(x, q^2, q^2)` untwisted, `(x, q, q)` twisted.
pub fn ch_gr_w_pbw_specialized(n: i64, twisted: bool) -> QXPoly {
    let g = ch_gr_w_pbw(n, twisted);
    if twisted {
        g.specialize(1, 1)
    } else {
        g.specialize(2, 2)
    }
}

/// `t`-degree carried by the image of `w_{-n}` under `W_{-n} -> W_{-n-1}`,
/// `w_{-n} -> g+_{top} w_{-n-1}`: the top odd degree of the larger module.
pub fn embedding_shift(n: i64, twisted: bool) -> i64 {
    if twisted {
        2 * n + 1
    } else {
        n
    }
}

/// Whether `q^{shift} ch(-n)` is dominated coefficientwise by `ch(-n-1)`.
pub fn embedding_dominated(n: i64, twisted: bool) -> bool {
    let ch = |m: i64| if twisted { ch_w_sigma(-m) } else { ch_w(-m) };
    let small = ch(n).shift_q(embedding_shift(n, twisted));
    let big = ch(n + 1);
    let dominated = small.terms().all(|(x, c)| {
        c.terms().all(|(q, a)| {
            let b = big.coeff_xq(*x, *q);
            !b.is_zero() && &b >= a
        })
    });
    dominated
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xq(terms: &[(i64, i64, i64)]) -> QXPoly {
        terms.iter().fold(QXPoly::zero(), |acc, &(x, q, c)| acc + QXPoly::xq(x, q, c))
    }

    #[test]
    fn classical_examples() {
        assert_eq!(ch_d(0), QXPoly::one());
        assert_eq!(ch_d(1), xq(&[(-1, 0, 1), (1, 0, 1)]));
        assert_eq!(ch_d(2), xq(&[(-2, 0, 1), (0, 0, 1), (0, 1, 1), (2, 0, 1)]));
        for n in 0..=10 {
            assert_eq!(ch_d(n).eval_at_one(), BigInt::from(1u64 << n));
            assert_eq!(ch_d(n), character_of(&enumerate_basis(BasisKind::Classical, n)));
        }
    }

    #[test]
    fn untwisted_examples() {
        assert_eq!(ch_w(-1), xq(&[(-1, 0, 1), (0, 0, 1), (1, 0, 1)]));
        assert_eq!(
            ch_w(-2),
            xq(&[(-2, 0, 1), (-1, 0, 1), (-1, 1, 1), (0, 0, 1), (0, 1, 2), (1, 0, 1), (1, 1, 1), (2, 0, 1)])
        );
        assert_eq!(ch_w(2).substitute_q_power(2), xq(&[(2, 0, 1), (1, 2, 1), (0, 2, 1)]));
    }

    #[test]
    fn twisted_examples() {
        assert_eq!(ch_w_sigma(-1), xq(&[(-1, 0, 1), (0, 1, 1), (1, 0, 1)]));
        assert_eq!(ch_w_sigma(1), xq(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(ch_w_sigma(2), xq(&[(2, 0, 1), (1, 1, 1), (1, 3, 1), (0, 2, 1), (0, 4, 1), (-1, 3, 1)]));
    }

    #[test]
    fn closed_forms_match_bases() {
        for n in 0..=6 {
            assert_eq!(ch_w(-n), character_of(&enumerate_basis(BasisKind::UntwistedNeg, n)), "W -{n}");
            assert_eq!(ch_w_sigma(-n), character_of(&enumerate_basis(BasisKind::TwistedNeg, n)), "Ws -{n}");
            if n >= 1 {
                assert_eq!(ch_w(n), character_of(&enumerate_basis(BasisKind::UntwistedPos, n)), "W {n}");
                assert_eq!(ch_w_sigma(n), character_of(&enumerate_basis(BasisKind::TwistedPos, n)), "Ws {n}");
            }
        }
    }

    #[test]
    fn negative_characters_are_symmetric() {
        for n in 1..=6 {
            assert_eq!(ch_w(-n).mirror(), ch_w(-n));
            assert_eq!(ch_w_sigma(-n).mirror(), ch_w_sigma(-n));
        }
        assert_ne!(ch_w(2).mirror(), ch_w(2));
        assert_ne!(ch_w_sigma(2).mirror(), ch_w_sigma(2));
    }

    #[test]
    fn pbw_examples() {
        assert_eq!(ch_gr_w_pbw_specialized(1, false), xq(&[(-1, 0, 1), (1, 2, 1), (0, 2, 1)]));
        assert_eq!(ch_gr_w_pbw_specialized(1, true), xq(&[(-1, 0, 1), (1, 1, 1), (0, 1, 1)]));
        for tw in [false, true] {
            assert_eq!(ch_gr_w_pbw_specialized(0, tw), QXPoly::one());
        }
    }

    /// The printed multinomial forms of the specialized PBW characters.
    fn pbw_closed(n: i64, twisted: bool) -> QXPoly {
        let mut out = QXPoly::zero();
        for k in 0..=n {
            for s in 0..=n - k {
                let lead = if twisted { k * k + s } else { k * (k - 1) + 2 * k + 2 * s };
                let c = crate::qcomb::q_multinomial(k, s, n - k - s, 2).shift(lead);
                out.add_term(-n + k + 2 * s, c);
            }
        }
        out
    }

    #[test]
    fn pbw_matches_multinomial_form() {
        for n in 0..=5 {
            for tw in [false, true] {
                assert_eq!(ch_gr_w_pbw_specialized(n, tw), pbw_closed(n, tw), "n={n} twisted={tw}");
                assert_eq!(ch_gr_w_pbw(n, tw).dimension(), BigInt::from(3).pow(n as u32));
            }
        }
    }

    #[test]
    fn embedding_is_dominated() {
        for n in 1..=5 {
            assert!(embedding_dominated(n, false), "untwisted {n}");
            assert!(embedding_dominated(n, true), "twisted {n}");
        }
        // one more unit of degree is too much for the top vector
        let ch = ch_w(-2).shift_q(embedding_shift(2, false) + 1);
        let big = ch_w(-3);
        assert!(ch.terms().any(|(x, c)| c.terms().any(|(q, a)| &big.coeff_xq(*x, *q) < a)));
    }
}
