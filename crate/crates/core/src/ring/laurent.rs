//! Sparse Laurent polynomials with big-integer coefficients.
//!
//! [`Laurent`] is generic over its exponent type so that the one-variable
//! ring `Z[q, q^-1]` and the two-variable ring `Z[q^±1, v^±1]` share the
//! same canonical-form machinery. Only nonzero coefficients are stored.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Monomial exponent: a commutative monoid under `+` with negation.
pub trait Exponent: Copy + Ord + Debug + Default + Add<Output = Self> + Neg<Output = Self> {}

impl Exponent for i64 {}

/// Exponent of a monomial `q^q * v^v`. Ordered by `q` first, then `v`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QvExp {
    pub q: i64,
    pub v: i64,
}

impl QvExp {
    pub const fn new(q: i64, v: i64) -> Self {
        QvExp { q, v }
    }
}

impl Add for QvExp {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QvExp::new(self.q + rhs.q, self.v + rhs.v)
    }
}

impl Neg for QvExp {
    type Output = Self;
    fn neg(self) -> Self {
        QvExp::new(-self.q, -self.v)
    }
}

impl Exponent for QvExp {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

impl<E: Exponent> Default for Laurent<E> {
    fn default() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
}

impl<E: Exponent> Laurent<E> {
    pub fn monomial(exp: E, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(E::default(), c)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `coeff * m^exp` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: E, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&E, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: E) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by the monomial `m^exp`.
    pub fn shift(&self, exp: E) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e + exp, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::default();
        }
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Applies an exponent map. The map need not be injective; colliding
    /// terms are summed.
    pub fn map_exponents(&self, f: impl Fn(E) -> E) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&E) -> bool) -> Self {
        Laurent { terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Sum of all coefficients (every variable evaluated at 1).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<E: Exponent> Zero for Laurent<E> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent> One for Laurent<E> {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl<E: Exponent> AddAssign<&Laurent<E>> for Laurent<E> {
    fn add_assign(&mut self, rhs: &Laurent<E>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<E: Exponent> SubAssign<&Laurent<E>> for Laurent<E> {
    fn sub_assign(&mut self, rhs: &Laurent<E>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<E: Exponent> Add<&Laurent<E>> for &Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<E: Exponent> Sub<&Laurent<E>> for &Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<E: Exponent> Mul<&Laurent<E>> for &Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = Laurent::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea + *eb, ca * cb);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<E: Exponent> $tr<Laurent<E>> for Laurent<E> {
            type Output = Laurent<E>;
            fn $method(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$method(&rhs)
            }
        }
        impl<E: Exponent> $tr<&Laurent<E>> for Laurent<E> {
            type Output = Laurent<E>;
            fn $method(self, rhs: &Laurent<E>) -> Laurent<E> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<E: Exponent> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        -&self
    }
}

impl<E: Exponent> std::iter::Sum for Laurent<E> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::default();
        for p in iter {
            acc += &p;
        }
        acc
    }
}
