use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::bipoly::BiPolynomial;
use super::laurent::QvExp;
use super::qpoly::QPolynomial;
use super::rational::RationalFunction;
use super::RingError;

/// Coefficient ring of an [`XPolynomial`].
pub trait Coefficient: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Rendering used inside an x-polynomial; multi-term values are
    /// parenthesized by the caller.
    fn render_coeff(&self) -> String;
    fn is_single_term(&self) -> bool;
}

impl Coefficient for QPolynomial {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn render_coeff(&self) -> String {
        self.render()
    }
    fn is_single_term(&self) -> bool {
        self.len() <= 1
    }
}

impl Coefficient for RationalFunction {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn render_coeff(&self) -> String {
        self.render()
    }
    fn is_single_term(&self) -> bool {
        self.denominator().is_one() && self.numerator().len() <= 1
    }
}

/// Laurent polynomial in `x` with coefficients in `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct XPolynomial<C: Coefficient> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for XPolynomial<C> {
    fn default() -> Self {
        XPolynomial { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> XPolynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn monomial(x_exp: i64, coeff: C) -> Self {
        let mut p = Self::default();
        p.add_term(x_exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, x_exp: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let updated = match self.terms.remove(&x_exp) {
            Some(old) => old.add_ref(&coeff),
            None => coeff,
        };
        if !updated.is_zero() {
            self.terms.insert(x_exp, updated);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, x_exp: i64) -> C {
        self.terms.get(&x_exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `x -> x^-1`.
    pub fn mirror(&self) -> Self {
        XPolynomial { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift_x(&self, k: i64) -> Self {
        XPolynomial { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.mul_ref(c))))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> XPolynomial<D> {
        XPolynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn try_map_coeffs<D: Coefficient, Err>(&self, f: impl Fn(&C) -> Result<D, Err>) -> Result<XPolynomial<D>, Err> {
        let mut out = XPolynomial::default();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c)?);
        }
        Ok(out)
    }

    /// Canonical text form: x-exponents ascending, multi-term coefficients
    /// in parentheses, e.g. `q^3*x^-1 + (q^2+q^4) + (q+q^3)*x + x^2`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = match *e {
                0 => String::new(),
                1 => "x".to_string(),
                k => format!("x^{k}"),
            };
            let coeff = c.render_coeff();
            let piece = if mono.is_empty() {
                if c.is_single_term() {
                    coeff
                } else {
                    format!("({coeff})")
                }
            } else if c.is_one() {
                mono
            } else if c.neg_ref().is_one() {
                format!("-{mono}")
            } else if c.is_single_term() {
                format!("{coeff}*{mono}")
            } else {
                format!("({coeff})*{mono}")
            };
            if i == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

impl<C: Coefficient> Add<&XPolynomial<C>> for &XPolynomial<C> {
    type Output = XPolynomial<C>;
    fn add(self, rhs: &XPolynomial<C>) -> XPolynomial<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub<&XPolynomial<C>> for &XPolynomial<C> {
    type Output = XPolynomial<C>;
    fn sub(self, rhs: &XPolynomial<C>) -> XPolynomial<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.neg_ref());
        }
        out
    }
}

impl<C: Coefficient> Mul<&XPolynomial<C>> for &XPolynomial<C> {
    type Output = XPolynomial<C>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &XPolynomial<C>) -> XPolynomial<C> {
        let mut out = XPolynomial::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &XPolynomial<C> {
    type Output = XPolynomial<C>;
    fn neg(self) -> XPolynomial<C> {
        self.map_coeffs(|c| c.neg_ref())
    }
}

impl<C: Coefficient> Add for XPolynomial<C> {
    type Output = XPolynomial<C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for XPolynomial<C> {
    type Output = XPolynomial<C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for XPolynomial<C> {
    type Output = XPolynomial<C>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// One row of the JSON term encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRow {
    pub x: i64,
    pub q: i64,
    pub v: i64,
    pub coeff: String,
}

/// A `q`-polynomial term without the `v` column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XqRow {
    pub x: i64,
    pub q: i64,
    pub coeff: String,
}

impl XPolynomial<QPolynomial> {
    /// Monomial `c * q^q * x^x`.
    pub fn xq(x: i64, q: i64, c: i64) -> Self {
        Self::monomial(x, QPolynomial::monomial(q, c))
    }

    /// Sum of all coefficients at `x = q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms().map(|(_, c)| c.eval_at_one()).sum()
    }

    pub fn substitute_q_inverse(&self) -> Self {
        self.map_coeffs(|c| c.substitute_q_inverse())
    }

    pub fn substitute_q_power(&self, k: i64) -> Self {
        self.map_coeffs(|c| c.substitute_q_power(k))
    }

    pub fn shift_q(&self, k: i64) -> Self {
        self.map_coeffs(|c| c.shift(k))
    }

    /// Keeps terms with `q`-exponent at most `q_bound` and `|x-exp| <= x_bound`.
    pub fn truncate(&self, q_bound: i64, x_bound: i64) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| e.abs() <= x_bound).map(|(e, c)| (*e, c.truncate(q_bound))))
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms().filter_map(|(_, c)| c.min_exp()).min()
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms().filter_map(|(_, c)| c.max_exp()).max()
    }

    /// Coefficient of `x^x q^q`.
    pub fn coeff_xq(&self, x: i64, q: i64) -> BigInt {
        self.coeff(x).coeff(q)
    }

    pub fn to_rows(&self) -> Vec<TermRow> {
        self.terms()
            .flat_map(|(x, c)| c.terms().map(move |(q, k)| TermRow { x: *x, q: *q, v: 0, coeff: k.to_string() }))
            .collect()
    }

    pub fn to_xq_rows(&self) -> Vec<XqRow> {
        self.to_rows().into_iter().map(|r| XqRow { x: r.x, q: r.q, coeff: r.coeff }).collect()
    }

    pub fn from_xq_rows(rows: &[XqRow]) -> Result<Self, RingError> {
        let rows: Vec<TermRow> =
            rows.iter().map(|r| TermRow { x: r.x, q: r.q, v: 0, coeff: r.coeff.clone() }).collect();
        Self::from_rows(&rows)
    }

    pub fn from_rows(rows: &[TermRow]) -> Result<Self, RingError> {
        let mut out = Self::default();
        for r in rows {
            if r.v != 0 {
                return Err(RingError::BadTermRow(format!("unexpected v-exponent {}", r.v)));
            }
            let c: BigInt = r.coeff.parse().map_err(|_| RingError::BadTermRow(r.coeff.clone()))?;
            out.add_term(r.x, QPolynomial::monomial(r.q, c));
        }
        Ok(out)
    }
}

impl XPolynomial<RationalFunction> {
    /// JSON rows of a rational-coefficient polynomial: one row per numerator
    /// term and per denominator term, grouped by x-exponent.
    pub fn to_fraction_rows(&self) -> Vec<(i64, Vec<TermRow>, Vec<TermRow>)> {
        fn rows(x: i64, p: &BiPolynomial) -> Vec<TermRow> {
            p.terms().map(|(e, c): (&QvExp, &BigInt)| TermRow { x, q: e.q, v: e.v, coeff: c.to_string() }).collect()
        }
        self.terms().map(|(x, c)| (*x, rows(*x, c.numerator()), rows(*x, c.denominator()))).collect()
    }
}
