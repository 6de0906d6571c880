//! Gaussian binomials, q-multinomials and truncated infinite products.

use num_traits::{One, Zero};

use crate::ring::{QPolynomial, QXPoly};

/// Gaussian binomial `[n choose m]` in the variable `q^base`.
///
/// Zero when `m` lies outside `[0, n]`. Built from the Pascal rule
/// `[n;m] = [n-1;m-1] + Q^m [n-1;m]`, `Q = q^base`.
pub fn q_binomial(n: i64, m: i64, base: i64) -> QPolynomial {
    if n < 0 || m < 0 || m > n {
        return QPolynomial::zero();
    }
    let m = m.min(n - m) as usize;
    // row[j] = [i; j] for the current i
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for i in 1..=n as usize {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=i.min(m) {
            let mut v = if j > 0 { row[j - 1].clone() } else { QPolynomial::zero() };
            if j < row.len() {
                v += &row[j].shift(base * j as i64);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(m)
}

/// `(k1 + k2 + k3; k1, k2, k3)` in the variable `q^base`; zero if any part
/// is negative.
pub fn q_multinomial(k1: i64, k2: i64, k3: i64, base: i64) -> QPolynomial {
    if k1 < 0 || k2 < 0 || k3 < 0 {
        return QPolynomial::zero();
    }
    let n = k1 + k2 + k3;
    &q_binomial(n, k1, base) * &q_binomial(n - k1, k2, base)
}

/// `1 / ((1 - q)(1 - q^2)...(1 - q^k))` expanded up to `q^q_bound`.
pub fn inverse_q_pochhammer(k: i64, q_bound: i64) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for i in 1..=k {
        if i > q_bound {
            break;
        }
        let geometric = QPolynomial::from_terms((0..=q_bound / i).map(|j| (i * j, 1)));
        acc = (&acc * &geometric).truncate(q_bound);
    }
    acc
}

/// `1 / (q)_infinity` up to `q^q_bound` (the partition generating function).
pub fn inverse_euler_function(q_bound: i64) -> QPolynomial {
    inverse_q_pochhammer(q_bound, q_bound)
}

/// An x-polynomial known only up to `q^q_bound` and `|x-exp| <= x_bound`.
///
/// Products truncate to the smaller bounds of their operands. All series here
/// have nonnegative `q`-exponents, so dropping high `q` early is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    pub poly: QXPoly,
    pub q_bound: i64,
    pub x_bound: i64,
}

impl TruncatedSeries {
    pub fn new(poly: QXPoly, q_bound: i64, x_bound: i64) -> Self {
        TruncatedSeries { poly: poly.truncate(q_bound, x_bound), q_bound, x_bound }
    }

    pub fn one(q_bound: i64, x_bound: i64) -> Self {
        Self::new(QXPoly::one(), q_bound, x_bound)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let q_bound = self.q_bound.min(other.q_bound);
        let x_bound = self.x_bound.min(other.x_bound);
        let a = self.poly.truncate(q_bound, i64::MAX);
        let b = other.poly.truncate(q_bound, i64::MAX);
        let mut prod = QXPoly::zero();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                prod.add_term(ea + eb, (ca * cb).truncate(q_bound));
            }
        }
        Self::new(prod, q_bound, x_bound)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let q_bound = self.q_bound.min(other.q_bound);
        let x_bound = self.x_bound.min(other.x_bound);
        Self::new(&self.poly + &other.poly, q_bound, x_bound)
    }

    /// Restricts to tighter bounds.
    pub fn restrict(&self, q_bound: i64, x_bound: i64) -> TruncatedSeries {
        Self::new(self.poly.clone(), q_bound.min(self.q_bound), x_bound.min(self.x_bound))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `prod_{i>=0} (1 + q^i x)(1 + q^i x^-1)`
    UntwistedPair,
    /// `prod_{i>=0} (1 + q^{2i+1} x)(1 + q^{2i+1} x^-1)`
    TwistedPair,
    /// `prod_{i>=0} (1 + q^i x)`
    SinglePlus,
    /// `sum_k x^{2k} q^{k^2} / (q)_inf`
    ClassicalThetaEven,
    /// `sum_k x^{2k+1} q^{k(k+1)} / (q)_inf`
    ClassicalThetaOdd,
}

fn linear_factor_product(exponents: impl Iterator<Item = i64>, x_sign: i64, q_bound: i64) -> TruncatedSeries {
    // Every factor's x-degree is bounded by the number of factors, which is
    // at most q_bound + 1.
    let inner_x = q_bound + 1;
    let mut acc = TruncatedSeries::one(q_bound, inner_x);
    for e in exponents.take_while(|e| *e <= q_bound) {
        let factor = TruncatedSeries::new(QXPoly::one() + QXPoly::xq(x_sign, e, 1), q_bound, inner_x);
        acc = acc.mul(&factor);
    }
    acc
}

fn theta_over_eta(exponent_of: impl Fn(i64) -> (i64, i64), q_bound: i64, x_bound: i64) -> TruncatedSeries {
    let mut theta = QXPoly::zero();
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for kk in [k, -k - 1] {
            let (x, q) = exponent_of(kk);
            if q <= q_bound {
                theta.add_term(x, QPolynomial::q_pow(q));
                any = true;
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    let eta_inv = TruncatedSeries::new(QXPoly::monomial(0, inverse_euler_function(q_bound)), q_bound, x_bound);
    TruncatedSeries::new(theta, q_bound, i64::MAX).mul(&eta_inv)
}

/// Expands the named infinite product (or theta quotient) up to the bounds.
pub fn euler_product_truncated(kind: FactorKind, q_bound: i64, x_bound: i64) -> TruncatedSeries {
    match kind {
        FactorKind::SinglePlus => linear_factor_product(0.., 1, q_bound).restrict(q_bound, x_bound),
        FactorKind::UntwistedPair => linear_factor_product(0.., 1, q_bound)
            .mul(&linear_factor_product(0.., -1, q_bound))
            .restrict(q_bound, x_bound),
        FactorKind::TwistedPair => linear_factor_product((0..).map(|i| 2 * i + 1), 1, q_bound)
            .mul(&linear_factor_product((0..).map(|i| 2 * i + 1), -1, q_bound))
            .restrict(q_bound, x_bound),
        FactorKind::ClassicalThetaEven => theta_over_eta(|k| (2 * k, k * k), q_bound, x_bound),
        FactorKind::ClassicalThetaOdd => theta_over_eta(|k| (2 * k + 1, k * (k + 1)), q_bound, x_bound),
    }
}

/// `sum_{k>=0} q^{k(k-1)/2} / (q)_k * x^k`, truncated.
pub fn wedge_lhs_truncated(q_bound: i64, x_bound: i64) -> TruncatedSeries {
    let mut acc = QXPoly::zero();
    for k in 0..=x_bound.max(0) {
        let lead = k * (k - 1) / 2;
        if lead > q_bound {
            break;
        }
        let coeff = inverse_q_pochhammer(k, q_bound - lead).shift(lead);
        acc.add_term(k, coeff);
    }
    TruncatedSeries::new(acc, q_bound, x_bound)
}
