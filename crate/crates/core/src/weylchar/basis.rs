use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ring::{QPolynomial, QXPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    UntwistedNeg,
    TwistedNeg,
    UntwistedPos,
    TwistedPos1,
    TwistedPos2,
    /// Both positive twisted families together.
    TwistedPos,
    Classical,
    /// Basis of the limit module, enumerated up to a `q`-degree bound.
    Limit,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::UntwistedNeg => "untwisted_neg",
            BasisKind::TwistedNeg => "twisted_neg",
            BasisKind::UntwistedPos => "untwisted_pos",
            BasisKind::TwistedPos1 => "twisted_pos_1",
            BasisKind::TwistedPos2 => "twisted_pos_2",
            BasisKind::TwistedPos => "twisted_pos",
            BasisKind::Classical => "classical",
            BasisKind::Limit => "limit",
        }
    }

    fn is_positive(self) -> bool {
        matches!(
            self,
            BasisKind::UntwistedPos | BasisKind::TwistedPos1 | BasisKind::TwistedPos2 | BasisKind::TwistedPos
        )
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [
            BasisKind::UntwistedNeg,
            BasisKind::TwistedNeg,
            BasisKind::UntwistedPos,
            BasisKind::TwistedPos1,
            BasisKind::TwistedPos2,
            BasisKind::TwistedPos,
            BasisKind::Classical,
            BasisKind::Limit,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown basis kind {s:?}"))
    }
}

/// One spanning monomial applied to the cyclic vector.
///
/// For the negative kinds the even generators are `e` and the odd ones `g+`;
/// for the positive kinds they are `f` and `g-`. For the limit basis
/// `g_degrees` holds the `c` in `g-_{-c}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMonomial {
    pub kind: BasisKind,
    pub e_degrees: Vec<i64>,
    pub g_degrees: Vec<i64>,
    pub weight: i64,
    pub t_degree: i64,
    pub pbw_degree: i64,
}

impl BasisMonomial {
    pub fn render(&self) -> String {
        let (even, odd) = match self.kind {
            k if k.is_positive() => ("f", "g-"),
            BasisKind::Limit => ("e", "g-_-"),
            _ => ("e", "g+"),
        };
        let mut parts: Vec<String> = self.e_degrees.iter().map(|a| format!("{even}_{a}")).collect();
        parts.extend(self.g_degrees.iter().map(|b| {
            if self.kind == BasisKind::Limit {
                format!("{odd}{b}")
            } else {
                format!("{odd}_{b}")
            }
        }));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Strictly increasing length-`k` sequences from the sorted `values`.
fn strict_sequences(values: &[i64], k: usize) -> Vec<Vec<i64>> {
    fn go(values: &[i64], k: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            if values.len() - i < k - cur.len() {
                break;
            }
            cur.push(values[i]);
            go(values, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Weakly increasing length-`s` sequences from the sorted `values`.
fn weak_sequences(values: &[i64], s: usize) -> Vec<Vec<i64>> {
    fn go(values: &[i64], s: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, s, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 || !values.is_empty() {
        go(values, s, 0, &mut Vec::with_capacity(s), &mut out);
    }
    out
}

fn range(lo: i64, hi: i64, step: i64) -> Vec<i64> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).step_by(step as usize).collect()
}

struct Stratum {
    kind: BasisKind,
    g_values: Vec<i64>,
    /// Generators forced at the end of the odd part.
    g_tail: Vec<i64>,
    k_free: usize,
}

fn assemble(
    st: &Stratum,
    e_range: impl Fn(usize, usize) -> Vec<i64>,
    weight: impl Fn(i64, i64) -> i64,
    pbw: impl Fn(i64, i64) -> i64,
    max_s: usize,
) -> Vec<BasisMonomial> {
    let mut out = Vec::new();
    for bs in strict_sequences(&st.g_values, st.k_free) {
        let mut g = bs;
        g.extend(&st.g_tail);
        let k = g.len();
        for s in 0..=max_s {
            let values = e_range(k, s);
            for a in weak_sequences(&values, s) {
                let t_degree = a.iter().sum::<i64>() + g.iter().sum::<i64>();
                out.push(BasisMonomial {
                    kind: st.kind,
                    weight: weight(k as i64, s as i64),
                    pbw_degree: pbw(k as i64, s as i64),
                    t_degree,
                    e_degrees: a,
                    g_degrees: g.clone(),
                });
            }
        }
    }
    out
}

/// All spanning monomials of the given kind. For `Limit` use
/// [`enumerate_limit_basis`].
pub fn enumerate_basis(kind: BasisKind, n: i64) -> Vec<BasisMonomial> {
    assert!(n >= 0, "n must be nonnegative");
    let nu = n as usize;
    match kind {
        BasisKind::UntwistedNeg => (0..=nu)
            .into_par_iter()
            .flat_map_iter(|k| {
                let st = Stratum { kind, g_values: range(0, n - 1, 1), g_tail: vec![], k_free: k };
                assemble(&st, |k, s| range(0, n - k as i64 - s as i64, 1), |k, s| -n + k + 2 * s, |k, s| k + s, nu - k)
            })
            .collect(),
        BasisKind::TwistedNeg => (0..=nu)
            .into_par_iter()
            .flat_map_iter(|k| {
                let st = Stratum { kind, g_values: range(1, 2 * n - 1, 2), g_tail: vec![], k_free: k };
                assemble(
                    &st,
                    |k, s| range(0, 2 * (n - k as i64 - s as i64), 2),
                    |k, s| -n + k + 2 * s,
                    |_, s| s,
                    nu - k,
                )
            })
            .collect(),
        BasisKind::UntwistedPos => {
            if n == 0 {
                return Vec::new();
            }
            (0..nu)
                .into_par_iter()
                .flat_map_iter(|k| {
                    let st = Stratum { kind, g_values: range(1, n - 1, 1), g_tail: vec![], k_free: k };
                    assemble(
                        &st,
                        |k, s| range(1, n - s as i64 - k as i64, 1),
                        |k, s| n - k - 2 * s,
                        |k, s| k + s,
                        nu - 1 - k,
                    )
                })
                .collect()
        }
        BasisKind::TwistedPos1 => {
            if n == 0 {
                return Vec::new();
            }
            (0..nu)
                .into_par_iter()
                .flat_map_iter(|k| {
                    let st = Stratum { kind, g_values: range(1, 2 * n - 3, 2), g_tail: vec![], k_free: k };
                    assemble(
                        &st,
                        |k, s| range(2, 2 * (n - s as i64 - k as i64), 2),
                        |k, s| n - k - 2 * s,
                        |_, s| s,
                        nu - 1 - k,
                    )
                })
                .collect()
        }
        BasisKind::TwistedPos2 => {
            if n == 0 {
                return Vec::new();
            }
            (1..=nu)
                .into_par_iter()
                .flat_map_iter(|k| {
                    let st = Stratum { kind, g_values: range(1, 2 * n - 3, 2), g_tail: vec![2 * n - 1], k_free: k - 1 };
                    assemble(
                        &st,
                        |k, s| range(0, 2 * (n - s as i64 - k as i64), 2),
                        |k, s| n - k - 2 * s,
                        |_, s| s,
                        nu - k,
                    )
                })
                .collect()
        }
        BasisKind::TwistedPos => {
            let mut v = enumerate_basis(BasisKind::TwistedPos1, n);
            v.extend(enumerate_basis(BasisKind::TwistedPos2, n));
            v
        }
        BasisKind::Classical => {
            let st = Stratum { kind, g_values: vec![], g_tail: vec![], k_free: 0 };
            assemble(&st, |_, s| range(0, n - s as i64, 1), |_, s| -n + 2 * s, |_, s| s, nu)
        }
        BasisKind::Limit => panic!("the limit basis is infinite; use enumerate_limit_basis"),
    }
}

/// Limit-module monomials `e_{a_1}..e_{a_s} g-_{-c_1}..g-_{-c_k} l_0` with
/// `0 <= c_1 < .. < c_k`, `0 <= a_1 <= .. <= a_s <= k - s`, whose `q`-degree
/// `sum c - sum a` is at most `q_bound`.
pub fn enumerate_limit_basis(q_bound: i64) -> Vec<BasisMonomial> {
    let mut out = Vec::new();
    let mut k: i64 = 0;
    loop {
        // smallest degree reachable with k odd generators
        let floor = (0..=k).map(|s| k * (k - 1) / 2 - s * (k - s)).min().unwrap_or(0);
        if floor > q_bound {
            break;
        }
        for s in 0..=k {
            let a_max_total = s * (k - s);
            let c_budget = q_bound + a_max_total;
            let c_values = range(0, c_budget, 1);
            for c in strict_sequences_bounded(&c_values, k as usize, c_budget) {
                let sc: i64 = c.iter().sum();
                for a in weak_sequences(&range(0, k - s, 1), s as usize) {
                    let deg = sc - a.iter().sum::<i64>();
                    if deg <= q_bound {
                        out.push(BasisMonomial {
                            kind: BasisKind::Limit,
                            e_degrees: a,
                            g_degrees: c.clone(),
                            weight: -k + 2 * s,
                            t_degree: deg,
                            pbw_degree: k + s,
                        });
                    }
                }
            }
        }
        k += 1;
    }
    out
}

fn strict_sequences_bounded(values: &[i64], k: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn go(values: &[i64], k: usize, start: usize, sum: i64, max_sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            let remaining = (k - cur.len()) as i64;
            // the rest are at least values[i], values[i]+1, ...
            if sum + remaining * values[i] + remaining * (remaining - 1) / 2 > max_sum {
                break;
            }
            cur.push(values[i]);
            go(values, k, i + 1, sum + values[i], max_sum, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, k, 0, 0, max_sum, &mut Vec::new(), &mut out);
    out
}

/// `sum x^{weight} q^{t_degree}` over the monomials.
pub fn character_of(basis: &[BasisMonomial]) -> QXPoly {
    let mut out = QXPoly::zero();
    for m in basis {
        out.add_term(m.weight, QPolynomial::q_pow(m.t_degree));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_examples() {
        let b = enumerate_basis(BasisKind::UntwistedNeg, 1);
        let rendered: Vec<(String, i64)> = b.iter().map(|m| (m.render(), m.weight)).collect();
        assert_eq!(rendered.len(), 3);
        assert!(rendered.contains(&("1".into(), -1)));
        assert!(rendered.contains(&("e_0".into(), 1)));
        assert!(rendered.contains(&("g+_0".into(), 0)));
        assert_eq!(enumerate_basis(BasisKind::UntwistedNeg, 2).len(), 9);
        assert_eq!(enumerate_basis(BasisKind::TwistedPos, 2).len(), 6);
        assert_eq!(enumerate_basis(BasisKind::UntwistedNeg, 0).len(), 1);
    }

    #[test]
    fn counts() {
        for n in 0..=7 {
            let three = 3usize.pow(n as u32);
            assert_eq!(enumerate_basis(BasisKind::UntwistedNeg, n).len(), three);
            assert_eq!(enumerate_basis(BasisKind::TwistedNeg, n).len(), three);
            assert_eq!(enumerate_basis(BasisKind::Classical, n).len(), 1 << n);
            if n >= 1 {
                assert_eq!(enumerate_basis(BasisKind::UntwistedPos, n).len(), three / 3);
                assert_eq!(enumerate_basis(BasisKind::TwistedPos, n).len(), 2 * three / 3);
            }
        }
    }

    #[test]
    fn monomials_respect_bounds() {
        for n in 1..=5 {
            for m in enumerate_basis(BasisKind::TwistedNeg, n) {
                assert!(m.g_degrees.iter().all(|b| b % 2 == 1 && *b < 2 * n));
                assert!(m.e_degrees.iter().all(|a| a % 2 == 0));
                assert!(m.g_degrees.windows(2).all(|w| w[0] < w[1]));
                assert!(m.e_degrees.windows(2).all(|w| w[0] <= w[1]));
            }
            for m in enumerate_basis(BasisKind::TwistedPos2, n) {
                assert_eq!(*m.g_degrees.last().unwrap(), 2 * n - 1);
            }
        }
    }

    #[test]
    fn limit_basis_degree_bound() {
        let b = enumerate_limit_basis(3);
        assert!(b.iter().all(|m| m.t_degree <= 3));
        let ch = character_of(&b);
        // the q^0 part is x^-1 + 2 + x
        assert_eq!(ch.coeff_xq(0, 0), BigInt::from(2));
        assert_eq!(ch.coeff_xq(1, 0), BigInt::from(1));
        assert_eq!(ch.coeff_xq(-1, 0), BigInt::from(1));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ["untwisted_neg", "twisted_pos", "twisted_pos_2", "limit"] {
            assert_eq!(k.parse::<BasisKind>().unwrap().name(), k);
        }
        assert!("bogus".parse::<BasisKind>().is_err());
    }
}
