//! Graded tensor products of evaluation modules.
//!
//! `V(z_1) (x) ... (x) V(z_n)` for the 3-dimensional module `V` is filtered by
//! `t`-degree starting from `u- (x) ... (x) u-`; the graded pieces give the
//! character of the fusion product.

mod linalg;
mod superalg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use linalg::{Subspace, Vector};
pub use superalg::{build_rep, BracketTable, Generator, Matrix, SuperRep};

use crate::ring::{QPolynomial, QXPoly};

pub const MAX_FUSION_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("relation {0} fails")]
    RelationViolation(String),
    #[error("filtration stabilizes at dimension {dimension}, expected {expected}")]
    NotCyclic { dimension: usize, expected: usize },
    #[error("n = {0} exceeds the fusion bound")]
    BoundExceeded(usize),
    #[error("invalid points: {0}")]
    InvalidPoints(String),
}

/// Parses `"1,2,-1/2"`.
pub fn parse_points(s: &str) -> Result<Vec<BigRational>, FusionError> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            let (num, den) = match p.split_once('/') {
                Some((a, b)) => (a, b),
                None => (p, "1"),
            };
            let num: BigInt = num.parse().map_err(|_| FusionError::InvalidPoints(p.to_string()))?;
            let den: BigInt = den.parse().map_err(|_| FusionError::InvalidPoints(p.to_string()))?;
            if den.is_zero() {
                return Err(FusionError::InvalidPoints(p.to_string()));
            }
            Ok(BigRational::new(num, den))
        })
        .collect()
}

/// Three point sets valid in both modes: nonzero, with pairwise distinct
/// squares. (At `z = 0` the odd twisted currents act by zero.)
pub fn sample_point_sets(n: usize) -> Vec<Vec<BigRational>> {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let sets = [
        vec![r(1, 1), r(2, 1), r(3, 1), r(4, 1)],
        vec![r(1, 2), r(-3, 1), r(5, 1), r(7, 3)],
        vec![r(3, 1), r(-1, 1), r(2, 1), r(-5, 2)],
    ];
    sets.into_iter().map(|s| s.into_iter().take(n).collect()).collect()
}

struct Tensor<'a> {
    rep: &'a SuperRep,
    n: usize,
    /// `powers[j][k] = z_j^k`
    powers: Vec<Vec<BigRational>>,
}

impl Tensor<'_> {
    fn dim(&self) -> usize {
        3usize.pow(self.n as u32)
    }

    fn digit(idx: usize, j: usize) -> usize {
        idx / 3usize.pow(j as u32) % 3
    }

    /// `g (x) t^k` acting on `v`.
    fn apply(&self, g: Generator, k: usize, v: &[BigRational]) -> Vector {
        let mut out = vec![BigRational::zero(); v.len()];
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut odd_before = false;
            for j in 0..self.n {
                let d = Self::digit(idx, j);
                let z = &self.powers[j][k];
                if !z.is_zero() {
                    let sign = if g.is_odd() && odd_before { -BigRational::one() } else { BigRational::one() };
                    for (r, m) in self.rep.column(g, d) {
                        let target = idx + r * 3usize.pow(j as u32) - d * 3usize.pow(j as u32);
                        out[target] += c * z * &m * &sign;
                    }
                }
                odd_before ^= self.rep.odd_basis[d];
            }
        }
        out
    }
}

/// Character of the fusion product at the given points. The twisted variant
/// lets the even generators act with even `t`-powers and the odd ones with
/// odd powers.
pub fn fusion_character(n: usize, points: &[BigRational], twisted: bool) -> Result<QXPoly, FusionError> {
    if n > MAX_FUSION_N {
        return Err(FusionError::BoundExceeded(n));
    }
    if points.len() != n {
        return Err(FusionError::InvalidPoints(format!("expected {n} points, got {}", points.len())));
    }
    if n == 0 {
        return Ok(QXPoly::one());
    }
    let rep = build_rep()?;
    let max_k = if twisted { 2 * n + 1 } else { 2 * n };
    let powers = points
        .iter()
        .map(|z| {
            let mut acc = vec![BigRational::one()];
            for _ in 0..max_k {
                let next = acc.last().unwrap() * z;
                acc.push(next);
            }
            acc
        })
        .collect();
    let tensor = Tensor { rep: &rep, n, powers };
    let ops_at = |k: usize| -> Vec<Generator> {
        Generator::ALL
            .into_iter()
            .filter(|g| !twisted || g.is_odd() == (k % 2 == 1))
            .filter(|g| !(k == 0 && *g == Generator::H))
            .collect()
    };

    let dim = tensor.dim();
    let mut space = Subspace::new(dim);
    // layers[s] = vectors (with weights) added at degree s
    let mut layers: Vec<Vec<(Vector, i64)>> = Vec::new();
    let mut start = vec![BigRational::zero(); dim];
    start[0] = BigRational::one();
    let mut s = 0usize;
    let mut last_growth = 0usize;
    loop {
        let mut fresh: Vec<(Vector, i64)> = Vec::new();
        if s == 0 {
            space.insert(&start);
            fresh.push((start.clone(), -(n as i64)));
        } else {
            for k in 1..=s.min(max_k) {
                for g in ops_at(k) {
                    for (v, w) in &layers[s - k] {
                        let img = tensor.apply(g, k, v);
                        if space.insert(&img) {
                            fresh.push((img, w + g.weight()));
                        }
                    }
                }
            }
        }
        // close under degree-zero operators
        let mut i = 0;
        while i < fresh.len() {
            for g in ops_at(0) {
                let img = tensor.apply(g, 0, &fresh[i].0);
                if space.insert(&img) {
                    let w = fresh[i].1 + g.weight();
                    fresh.push((img, w));
                }
            }
            i += 1;
        }
        if !fresh.is_empty() {
            last_growth = s;
        }
        layers.push(fresh);
        if space.rank() == dim {
            break;
        }
        if s >= last_growth + max_k {
            return Err(FusionError::NotCyclic { dimension: space.rank(), expected: dim });
        }
        s += 1;
    }
    let mut out = QXPoly::zero();
    for (deg, layer) in layers.iter().enumerate() {
        for (_, w) in layer {
            out.add_term(*w, QPolynomial::q_pow(deg as i64));
        }
    }
    Ok(out)
}
