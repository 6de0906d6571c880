use num_traits::{One, Signed, Zero};

use super::laurent::Laurent;
use super::RingError;

/// Integer Laurent polynomial in a single variable `q`.
pub type QPolynomial = Laurent<i64>;

impl Laurent<i64> {
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms().next_back().map(|(e, _)| *e)
    }

    /// `q -> q^-1`.
    pub fn substitute_q_inverse(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    /// `q -> q^k`.
    pub fn substitute_q_power(&self, k: i64) -> Self {
        self.map_exponents(|e| e * k)
    }

    /// Drops every term with exponent above `max_exp`.
    pub fn truncate(&self, max_exp: i64) -> Self {
        self.filter(|e| *e <= max_exp)
    }

    /// Exact division in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial, RingError> {
        let (d_lo, d_hi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(RingError::DivisionByZero),
        };
        let d_lead = divisor.coeff(d_hi);
        let span = d_hi - d_lo;
        let mut rem = self.clone();
        let mut quot = QPolynomial::zero();
        while let (Some(r_lo), Some(r_hi)) = (rem.min_exp(), rem.max_exp()) {
            if r_hi - r_lo < span {
                return Err(RingError::NotPolynomial);
            }
            let c = rem.coeff(r_hi);
            if !(&c % &d_lead).is_zero() {
                return Err(RingError::NotPolynomial);
            }
            let t = QPolynomial::monomial(r_hi - d_hi, c / &d_lead);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Ok(quot)
    }

    /// Compact rendering: ascending exponents, no spaces, e.g. `1-q+2*q^3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mono = if *e == 0 {
                String::new()
            } else if *e == 1 {
                "q".to_string()
            } else {
                format!("q^{e}")
            };
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}
