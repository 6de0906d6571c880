use num_traits::{One, Signed, Zero};

use super::laurent::{Laurent, QvExp};
use super::qpoly::QPolynomial;

/// Integer Laurent polynomial in `q` and `v` (with `t = v^2`).
pub type BiPolynomial = Laurent<QvExp>;

impl Laurent<QvExp> {
    /// `q^q * v^v`.
    pub fn qv(q: i64, v: i64) -> Self {
        Self::monomial(QvExp::new(q, v), 1)
    }

    pub fn from_q(p: &QPolynomial) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (QvExp::new(*e, 0), c.clone())))
    }

    pub fn min_v(&self) -> Option<i64> {
        self.terms().map(|(e, _)| e.v).min()
    }

    pub fn max_v(&self) -> Option<i64> {
        self.terms().map(|(e, _)| e.v).max()
    }

    /// Coefficient of `v^k`, as a polynomial in `q`.
    pub fn v_coefficient(&self, k: i64) -> QPolynomial {
        QPolynomial::from_terms(self.terms().filter(|(e, _)| e.v == k).map(|(e, c)| (e.q, c.clone())))
    }

    pub fn substitute_q_inverse(&self) -> Self {
        self.map_exponents(|e| QvExp::new(-e.q, e.v))
    }

    pub fn shift_v(&self, k: i64) -> Self {
        self.shift(QvExp::new(0, k))
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mut factors = Vec::new();
            match e.q {
                0 => {}
                1 => factors.push("q".to_string()),
                k => factors.push(format!("q^{k}")),
            }
            match e.v {
                0 => {}
                1 => factors.push("v".to_string()),
                k => factors.push(format!("v^{k}")),
            }
            let abs = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&format!("{abs}*{}", factors.join("*")));
            }
        }
        out
    }
}
