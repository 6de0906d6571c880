use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::bipoly::BiPolynomial;
use super::qpoly::QPolynomial;
use super::RingError;

/// A quotient `numerator / denominator` of two `(q, v)` Laurent polynomials.
///
/// No gcd reduction is performed. Two fractions are equal when
/// `a * d == c * b`. Sums over a shared denominator keep that denominator,
/// so callers that pre-arrange a common denominator avoid blow-up.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: BiPolynomial,
    denominator: BiPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: BiPolynomial, denominator: BiPolynomial) -> Result<Self, RingError> {
        if denominator.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn from_poly(p: BiPolynomial) -> Self {
        RationalFunction { numerator: p, denominator: BiPolynomial::one() }
    }

    pub fn numerator(&self) -> &BiPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BiPolynomial {
        &self.denominator
    }

    /// Multiplies by `v^k`.
    pub fn shift_v(&self, k: i64) -> Self {
        RationalFunction { numerator: self.numerator.shift_v(k), denominator: self.denominator.clone() }
    }

    pub fn substitute_q_inverse(&self) -> Self {
        RationalFunction {
            numerator: self.numerator.substitute_q_inverse(),
            denominator: self.denominator.substitute_q_inverse(),
        }
    }

    /// Order of vanishing at `v = 0` (negative for a pole). `None` for zero.
    pub fn v_valuation(&self) -> Option<i64> {
        Some(self.numerator.min_v()? - self.denominator.min_v()?)
    }

    /// Growth order at `v = infinity`. `None` for zero.
    pub fn v_degree(&self) -> Option<i64> {
        Some(self.numerator.max_v()? - self.denominator.max_v()?)
    }

    /// `num(q, 0) / den(q, 0)`.
    ///
    /// The denominator must be a polynomial in `v` with a nonzero constant
    /// term; the numerator must carry no negative power of `v`.
    pub fn eval_v0(&self) -> Result<QPolynomial, RingError> {
        let den_lo = self.denominator.min_v().ok_or(RingError::ZeroDenominator)?;
        if den_lo != 0 {
            return Err(RingError::DenominatorVanishesAtZero);
        }
        if let Some(lo) = self.numerator.min_v() {
            if lo < 0 {
                return Err(RingError::PoleAtZero);
            }
        }
        let num0 = self.numerator.v_coefficient(0);
        let den0 = self.denominator.v_coefficient(0);
        num0.div_exact(&den0)
    }

    /// `lim_{v -> infinity}`: zero when the denominator dominates, the ratio of
    /// leading `v`-coefficients when the degrees tie.
    pub fn limit_v_infinity(&self) -> Result<QPolynomial, RingError> {
        let den_hi = self.denominator.max_v().ok_or(RingError::ZeroDenominator)?;
        let Some(num_hi) = self.numerator.max_v() else {
            return Ok(QPolynomial::zero());
        };
        if num_hi > den_hi {
            return Err(RingError::DivergesAtInfinity);
        }
        if num_hi < den_hi {
            return Ok(QPolynomial::zero());
        }
        self.numerator.v_coefficient(num_hi).div_exact(&self.denominator.v_coefficient(den_hi))
    }

    pub fn render(&self) -> String {
        if self.denominator.is_one() {
            self.numerator.render()
        } else {
            format!("({})/({})", self.numerator.render(), self.denominator.render())
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.denominator == other.denominator {
            return self.numerator == other.numerator;
        }
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalFunction {}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(BiPolynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(BiPolynomial::one())
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.denominator == rhs.denominator {
            return RationalFunction {
                numerator: &self.numerator + &rhs.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalFunction {
            numerator: &self.numerator * &rhs.denominator + &rhs.numerator * &self.denominator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}
