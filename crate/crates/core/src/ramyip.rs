//! Ram-Yip alcove-walk sums for `E_n` and their specializations.
//!
//! Every walk contributes
//! `v^{(sign(n)-1)/2 + d - |J|} (1 - v^2)^{|J|} * prod_{j in J} f_j`
//! times `x^{wt}`, where `f_j` depends on the family, on the label of the
//! folded wall and on the sign of the folding, and `xi_j = q^{deg beta_j} v^2`.
//!
//! All factors have denominators dividing `1 - xi_j^2`, so every term is
//! lifted to the common denominator `prod_j (1 - xi_j^2)` and the sum is a
//! plain numerator sum.

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::ring::{BiPolynomial, QPolynomial, QXPoly, RationalFunction, RfXPoly, RingError};
use crate::walks::{
    beta_degree, enumerate_walks, hword_from_stats, leg, legprime, legprime_shifted, survives, traverse, AlcoveWalk,
    Reflection, WalkError, WalkStats,
};
use crate::{Family, Specialization};

pub const DEFAULT_MAX_ABS_N: i64 = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RamYipError {
    #[error("|n| = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: i64, bound: i64 },
    #[error(
        "routes disagree for {family} n={n} {spec}: geometric {} vs combinatorial {}",
        geometric.render(),
        combinatorial.render()
    )]
    RouteMismatch { family: Family, n: i64, spec: Specialization, geometric: QXPoly, combinatorial: QXPoly },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// Which reading of the `t = infinity` statistic the combinatorial route uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegVariant {
    /// `j` per match, index set taken literally.
    Literal,
    /// `j + 1` per match: the root degree of the folded step.
    Shifted,
}

/// One walk's contribution.
#[derive(Clone, Debug)]
pub struct RamYipTerm {
    pub walk: AlcoveWalk,
    pub stats: WalkStats,
    /// Exponent of the leading `v` power (before the `(1-v^2)^{|J|}` factor).
    pub v_exponent: i64,
    /// One factor per folded step, in step order.
    pub factors: Vec<RationalFunction>,
    pub x_exponent: i64,
    /// The term times the common denominator.
    pub lifted_numerator: BiPolynomial,
}

impl RamYipTerm {
    /// The term as a stand-alone rational function, from its factor list.
    pub fn value(&self) -> RationalFunction {
        let one_minus_v2 = BiPolynomial::one() - BiPolynomial::qv(0, 2);
        let lead = BiPolynomial::qv(0, self.v_exponent) * one_minus_v2.pow(self.factors.len() as u32);
        self.factors.iter().fold(RationalFunction::from_poly(lead), |acc, f| &acc * f)
    }
}

fn xi(deg: i64) -> BiPolynomial {
    BiPolynomial::qv(deg, 2)
}

/// `prod_{j=1..l} (1 - xi_j^2)`.
pub fn common_denominator(l: usize) -> BiPolynomial {
    (1..=l).fold(BiPolynomial::one(), |acc, j| {
        let x = xi(beta_degree(j, l));
        acc * (BiPolynomial::one() - &x * &x)
    })
}

/// Literal factor of a folded step, and its numerator over `1 - xi^2`.
fn fold_factor(family: Family, letter: Reflection, positive: bool, deg: i64) -> (RationalFunction, BiPolynomial) {
    let x = xi(deg);
    let one = BiPolynomial::one();
    let x2 = &x * &x;
    let over = |num: BiPolynomial, den: BiPolynomial| RationalFunction::new(num, den).expect("nonzero denominator");
    match (family, letter, positive) {
        (Family::A2, Reflection::S0, _) => (over(x.clone(), &one - &x2), x),
        (Family::A2Dagger, Reflection::S0, true) => (over(one.clone(), &one - &x2), one),
        (Family::A2Dagger, Reflection::S0, false) => (over(x2.clone(), &one - &x2), x2),
        (_, Reflection::S1, true) => (over(one.clone(), &one - &x), &one + &x),
        (_, Reflection::S1, false) => (over(x.clone(), &one - &x), &x * &(&one + &x)),
    }
}

fn check_bound(n: i64, bound: i64) -> Result<(), RamYipError> {
    if n.abs() > bound {
        return Err(RamYipError::BoundExceeded { n: n.abs(), bound });
    }
    Ok(())
}

pub fn ramyip_terms(family: Family, n: i64) -> Result<Vec<RamYipTerm>, RamYipError> {
    ramyip_terms_bounded(family, n, DEFAULT_MAX_ABS_N)
}

pub fn ramyip_terms_bounded(family: Family, n: i64, bound: i64) -> Result<Vec<RamYipTerm>, RamYipError> {
    check_bound(n, bound)?;
    let walks = enumerate_walks(n);
    walks.into_par_iter().map(|walk| build_term(family, n, walk)).collect()
}

fn build_term(family: Family, n: i64, walk: AlcoveWalk) -> Result<RamYipTerm, RamYipError> {
    let stats = traverse(&walk)?;
    let l = walk.len();
    let folded = stats.folded.len() as i64;
    let v_exponent = (n.signum() - 1) / 2 + stats.d() as i64 - folded;
    let one = BiPolynomial::one();
    let one_minus_v2 = &one - &BiPolynomial::qv(0, 2);
    let mut lifted = BiPolynomial::qv(0, v_exponent) * one_minus_v2.pow(folded as u32);
    let mut factors = Vec::with_capacity(folded as usize);
    for (i, step) in stats.steps.iter().enumerate() {
        let deg = beta_degree(i + 1, l);
        if step.kind == crate::walks::StepKind::Folding {
            let (factor, numerator) = fold_factor(family, step.letter, step.rightward, deg);
            factors.push(factor);
            lifted = lifted * numerator;
        } else {
            let x = xi(deg);
            lifted = lifted * (&one - &(&x * &x));
        }
    }
    Ok(RamYipTerm { x_exponent: stats.wt(), walk, stats, v_exponent, factors, lifted_numerator: lifted })
}

/// The `v` shift that makes the lowest `v` power among the terms surviving
/// the `t = 0` filter equal to zero.
pub fn normalization_shift(family: Family, terms: &[RamYipTerm]) -> i64 {
    terms
        .iter()
        .filter(|t| survives(&t.stats, family, Specialization::T0))
        .filter_map(|t| t.lifted_numerator.min_v())
        .min()
        .map_or(0, |m| -m)
}

pub fn ramyip_sum(family: Family, n: i64, normalize: bool) -> Result<RfXPoly, RamYipError> {
    ramyip_sum_bounded(family, n, normalize, DEFAULT_MAX_ABS_N)
}

pub fn ramyip_sum_bounded(family: Family, n: i64, normalize: bool, bound: i64) -> Result<RfXPoly, RamYipError> {
    check_bound(n, bound)?;
    if n == 0 {
        return Ok(RfXPoly::one());
    }
    let terms = ramyip_terms_bounded(family, n, bound)?;
    let shift = if normalize { normalization_shift(family, &terms) } else { 0 };
    let den = common_denominator(terms[0].walk.len());
    let mut numerators: std::collections::BTreeMap<i64, BiPolynomial> = Default::default();
    for t in &terms {
        *numerators.entry(t.x_exponent).or_insert_with(BiPolynomial::zero) += &t.lifted_numerator;
    }
    let mut out = RfXPoly::zero();
    for (x, num) in numerators {
        out.add_term(x, RationalFunction::new(num.shift_v(shift), den.clone())?);
    }
    Ok(out)
}

/// Route (a): specialize the normalized rational coefficients directly.
pub fn geometric_route(family: Family, n: i64, spec: Specialization) -> Result<QXPoly, RamYipError> {
    let sum = ramyip_sum(family, n, true)?;
    let out = match spec {
        Specialization::T0 => sum.try_map_coeffs(|c| c.eval_v0())?,
        Specialization::TinfQinv => sum.try_map_coeffs(|c| c.substitute_q_inverse().limit_v_infinity())?,
    };
    Ok(out)
}

/// Route (b): surviving walks weighted by their leg statistic.
pub fn combinatorial_route(
    family: Family,
    n: i64,
    spec: Specialization,
    variant: LegVariant,
) -> Result<QXPoly, RamYipError> {
    check_bound(n, DEFAULT_MAX_ABS_N)?;
    if n == 0 {
        return Ok(QXPoly::one());
    }
    let mut out = QXPoly::zero();
    for walk in enumerate_walks(n) {
        let stats = traverse(&walk)?;
        if !survives(&stats, family, spec) {
            continue;
        }
        let h = hword_from_stats(&stats, n.signum());
        let q = match (spec, variant) {
            (Specialization::T0, _) => leg(&h),
            (Specialization::TinfQinv, LegVariant::Literal) => legprime(&h),
            (Specialization::TinfQinv, LegVariant::Shifted) => legprime_shifted(&h),
        };
        out.add_term(crate::walks::x_weight(&h), QPolynomial::q_pow(q));
    }
    Ok(out)
}

/// Both routes, returning the combinatorial one when they agree.
pub fn specialize(family: Family, n: i64, spec: Specialization) -> Result<QXPoly, RamYipError> {
    let geometric = geometric_route(family, n, spec)?;
    let combinatorial = combinatorial_route(family, n, spec, LegVariant::Shifted)?;
    if geometric != combinatorial {
        return Err(RamYipError::RouteMismatch { family, n, spec, geometric, combinatorial });
    }
    Ok(combinatorial)
}
