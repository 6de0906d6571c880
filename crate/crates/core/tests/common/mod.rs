//! Independent oracle for the integration tests.
//!
//! Nothing here calls into the library's arithmetic: polynomials are dense
//! `i128` vectors or `(x, q)`-keyed maps, Gaussian coefficients come from
//! factorial quotients by exact series division, and walks are simulated as
//! compositions of affine reflections of the line.

#![allow(dead_code)]

use std::collections::BTreeMap;

use osp_macdonald::ring::QXPoly;

/// Dense polynomial in `q`, index = exponent.
pub type Qp = Vec<i128>;
/// Sparse Laurent polynomial in `(x, q)`.
pub type Xq = BTreeMap<(i64, i64), i128>;

pub fn qp_mul(a: &Qp, b: &Qp) -> Qp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` where `b(0) = 1` and the quotient is known to be a polynomial.
pub fn qp_div_exact(a: &Qp, b: &Qp) -> Qp {
    assert_eq!(b[0], 1);
    let mut rem = a.clone();
    let len = a.len().saturating_sub(b.len() - 1);
    let mut quot = vec![0; len];
    for i in 0..len {
        let c = rem[i];
        quot[i] = c;
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= c * bj;
        }
    }
    assert!(rem.iter().all(|c| *c == 0), "inexact division");
    quot
}

/// `prod_{i=1}^{n} (1 - Q^i)` with `Q = q^base`.
pub fn q_factorial(n: i64, base: i64) -> Qp {
    let mut acc = vec![1];
    for i in 1..=n {
        let mut f = vec![0; (base * i) as usize + 1];
        f[0] = 1;
        f[(base * i) as usize] = -1;
        acc = qp_mul(&acc, &f);
    }
    acc
}

pub fn q_binomial(n: i64, m: i64, base: i64) -> Qp {
    if m < 0 || m > n {
        return Vec::new();
    }
    q_multinomial(&[m, n - m], base)
}

pub fn q_multinomial(parts: &[i64], base: i64) -> Qp {
    if parts.iter().any(|p| *p < 0) {
        return Vec::new();
    }
    let total: i64 = parts.iter().sum();
    let den = parts.iter().fold(vec![1], |acc, p| qp_mul(&acc, &q_factorial(*p, base)));
    qp_div_exact(&q_factorial(total, base), &den)
}

pub fn add_qp(out: &mut Xq, x: i64, shift: i64, p: &Qp) {
    for (i, c) in p.iter().enumerate() {
        if *c != 0 {
            *out.entry((x, i as i64 + shift)).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
}

pub fn add_mono(out: &mut Xq, x: i64, q: i64, c: i128) {
    *out.entry((x, q)).or_insert(0) += c;
    out.retain(|_, c| *c != 0);
}

pub fn from_lib(p: &QXPoly) -> Xq {
    let mut out = Xq::new();
    for r in p.to_xq_rows() {
        add_mono(&mut out, r.x, r.q, r.coeff.parse().unwrap());
    }
    out
}

/// Parses `[(x, q, c)]` literals.
pub fn xq(terms: &[(i64, i64, i128)]) -> Xq {
    let mut out = Xq::new();
    for &(x, q, c) in terms {
        add_mono(&mut out, x, q, c);
    }
    out
}

pub fn substitute_q_power(p: &Xq, k: i64) -> Xq {
    let mut out = Xq::new();
    for ((x, q), c) in p {
        add_mono(&mut out, *x, q * k, *c);
    }
    out
}

pub fn mirror(p: &Xq) -> Xq {
    p.iter().map(|((x, q), c)| ((-x, *q), *c)).collect()
}

pub fn times_x(p: &Xq) -> Xq {
    p.iter().map(|((x, q), c)| ((x + 1, *q), *c)).collect()
}

pub fn mass(p: &Xq) -> i128 {
    p.values().sum()
}

pub fn truncate(p: &Xq, q_bound: i64, x_bound: i64) -> Xq {
    p.iter().filter(|((x, q), _)| *q <= q_bound && x.abs() <= x_bound).map(|(k, c)| (*k, *c)).collect()
}

// ---------------------------------------------------------------- characters

/// `sum_k x^{-n+2k} [n;k]_q`
pub fn ch_d(n: i64) -> Xq {
    let mut out = Xq::new();
    for k in 0..=n {
        add_qp(&mut out, -n + 2 * k, 0, &q_binomial(n, k, 1));
    }
    out
}

/// Character of `W_{-n}`, `n >= 0`.
pub fn ch_w_neg(n: i64) -> Xq {
    let mut out = Xq::new();
    for k in 0..=n {
        let outer = q_binomial(n, k, 1);
        for s in 0..=n - k {
            add_qp(&mut out, -n + k + 2 * s, k * (k - 1) / 2, &qp_mul(&outer, &q_binomial(n - k, s, 1)));
        }
    }
    out
}

/// Character of `W_n`, `n >= 1`.
pub fn ch_w_pos(n: i64) -> Xq {
    let mut out = Xq::new();
    for k in 0..n {
        let outer = q_binomial(n - 1, k, 1);
        for s in 0..n - k {
            add_qp(&mut out, n - k - 2 * s, k * (k + 1) / 2 + s, &qp_mul(&outer, &q_binomial(n - k - 1, s, 1)));
        }
    }
    out
}

pub fn ch_ws_neg(n: i64) -> Xq {
    let mut out = Xq::new();
    for k in 0..=n {
        let outer = q_binomial(n, k, 2);
        for s in 0..=n - k {
            add_qp(&mut out, -n + k + 2 * s, k * k, &qp_mul(&outer, &q_binomial(n - k, s, 2)));
        }
    }
    out
}

pub fn ch_ws_pos(n: i64) -> Xq {
    let mut out = Xq::new();
    for k in 0..n {
        let outer = q_binomial(n - 1, k, 2);
        for s in 0..n - k {
            let c = qp_mul(&outer, &q_binomial(n - k - 1, s, 2));
            add_qp(&mut out, n - k - 2 * s, k * k + 2 * s, &c);
            add_qp(&mut out, n - k - 2 * s - 1, 2 * n - 1 + k * k, &c);
        }
    }
    out
}

/// Specialized PBW characters of `W_{-n}` in their multinomial form.
pub fn pbw(n: i64, twisted: bool) -> Xq {
    let mut out = Xq::new();
    for k in 0..=n {
        for s in 0..=n - k {
            let lead = if twisted { k * k + s } else { k * (k - 1) + 2 * k + 2 * s };
            add_qp(&mut out, -n + k + 2 * s, lead, &q_multinomial(&[k, s, n - k - s], 2));
        }
    }
    out
}

// ------------------------------------------------------ coefficient formulas

pub fn c(r: u8, k: [i64; 3]) -> Qp {
    if k.iter().any(|v| *v < 0) {
        return Vec::new();
    }
    let [k22, k12, _] = k;
    let lead = k12 * k12 + if r == 1 { 2 * k22 } else { 0 };
    shift_qp(&q_multinomial(&k, 2), lead)
}

pub fn c_dag(r: u8, k: [i64; 3]) -> Qp {
    if k.iter().any(|v| *v < 0) {
        return Vec::new();
    }
    let [k22, k21, _] = k;
    let lead = k21 * (k21 - 1) + if r == 1 { 2 * k22 + 2 * k21 } else { 0 };
    shift_qp(&q_multinomial(&k, 2), lead)
}

fn shift_qp(p: &Qp, k: i64) -> Qp {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k as usize];
    out.extend_from_slice(p);
    out
}

fn qp_add(a: &Qp, b: &Qp) -> Qp {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    out
}

fn triples(n: i64) -> Vec<[i64; 3]> {
    let mut v = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            v.push([a, b, n - a - b]);
        }
    }
    v
}

/// The eight printed formulas; `n` is the polynomial's index, `tinf` the
/// `q -> q^-1, t -> infinity` specialization, `dagger` the dual family.
pub fn e_printed(dagger: bool, n: i64, tinf: bool) -> Xq {
    let mut out = Xq::new();
    if n == 0 {
        add_mono(&mut out, 0, 0, 1);
        return out;
    }
    if n < 0 {
        let m = -n;
        for k in triples(m) {
            let [k22, _, k11] = k;
            match (dagger, tinf) {
                (false, false) => add_qp(&mut out, k22 - k11, 0, &c(2, k)),
                (false, true) => add_qp(&mut out, k11 - k22, 0, &c(1, k)),
                (true, false) => add_qp(&mut out, k11 - k22, 0, &c_dag(2, k)),
                (true, true) => add_qp(&mut out, k11 - k22, 0, &c_dag(1, k)),
            }
        }
        return out;
    }
    // E_{m+1}
    let m = n - 1;
    match (dagger, tinf) {
        (false, false) => {
            for k in triples(m + 1) {
                let [k22, k12, k11] = k;
                let v = qp_add(&shift_qp(&c(2, [k22 - 1, k12, k11]), 2 * m + 1), &c(1, [k22, k12 - 1, k11]));
                add_qp(&mut out, k11 - k22 + 1, 0, &v);
            }
        }
        (false, true) => {
            for k in triples(m) {
                add_qp(&mut out, k[2] - k[0] + 1, 0, &c(2, k));
            }
        }
        (true, false) => {
            for k in triples(m) {
                add_qp(&mut out, k[2] - k[0] + 1, 0, &c_dag(1, k));
            }
        }
        (true, true) => {
            for k in triples(m) {
                add_qp(&mut out, k[2] - k[0] + 1, 0, &qp_add(&c_dag(2, k), &c_dag(1, k)));
            }
        }
    }
    out
}

// --------------------------------------------------------------------- walks

/// Affine map `x -> eps * x + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Affine {
    eps: i64,
    c: i64,
}

impl Affine {
    fn apply(self, x: i64) -> i64 {
        self.eps * x + self.c
    }

    /// `self o s`, where `s` reflects about `fix`.
    fn then_reflect(self, fix: i64) -> Affine {
        // s(x) = 2 fix - x
        Affine { eps: -self.eps, c: self.eps * 2 * fix + self.c }
    }
}

#[derive(Clone, Debug)]
pub struct OracleWalk {
    /// Left endpoint of the final alcove.
    pub left: i64,
    /// `(step, is_s0, positive)` for every folding, 1-based steps.
    pub folds: Vec<(usize, bool, bool)>,
    /// Arrow direction after each step: `true` = rightward.
    pub rightward: Vec<bool>,
    pub len: usize,
}

impl OracleWalk {
    pub fn wt(&self) -> i64 {
        (self.left + 1).div_euclid(2)
    }

    pub fn d(&self) -> i64 {
        self.left.rem_euclid(2)
    }

    /// Root degree of step `j`.
    pub fn degree(&self, j: usize) -> i64 {
        (self.len - j + 1) as i64
    }
}

/// Word length for target `n`.
pub fn word_len(n: i64) -> usize {
    if n < 0 {
        (-2 * n) as usize
    } else if n > 0 {
        (2 * n - 1) as usize
    } else {
        0
    }
}

/// Letter of step `i` (1-based): `true` for `s0`.
pub fn is_s0(n: i64, i: usize) -> bool {
    if n < 0 {
        i.is_multiple_of(2)
    } else {
        i % 2 == 1
    }
}

/// `mask[i]`: `true` crosses, `false` folds.
pub fn simulate(n: i64, mask: &[bool]) -> OracleWalk {
    let mut w = Affine { eps: 1, c: 0 };
    let mut folds = Vec::new();
    let mut rightward = Vec::new();
    for (i, cross) in mask.iter().enumerate() {
        let step = i + 1;
        let s0 = is_s0(n, step);
        let fix = if s0 { 1 } else { 0 };
        let (a, b) = (w.apply(0), w.apply(1));
        let (lo, hi) = (a.min(b), a.max(b));
        let p = w.apply(fix);
        if *cross {
            rightward.push(p == hi);
            w = w.then_reflect(fix);
        } else {
            let positive = p == lo;
            rightward.push(positive);
            folds.push((step, s0, positive));
        }
    }
    let (a, b) = (w.apply(0), w.apply(1));
    OracleWalk { left: a.min(b), folds, rightward, len: mask.len() }
}

pub fn all_masks(l: usize) -> Vec<Vec<bool>> {
    (0u64..1 << l).map(|bits| (0..l).map(|i| bits >> (l - 1 - i) & 1 == 1).collect()).collect()
}

/// Specialization through the walks: survivors weighted by the degrees of
/// their negative (t = 0) or positive (t = infinity) foldings.
pub fn walk_specialization(dagger: bool, n: i64, tinf: bool) -> Xq {
    let mut out = Xq::new();
    if n == 0 {
        add_mono(&mut out, 0, 0, 1);
        return out;
    }
    // the surviving sign of s0-foldings
    let forbidden_positive = dagger == tinf;
    for mask in all_masks(word_len(n)) {
        let w = simulate(n, &mask);
        if w.folds.iter().any(|&(_, s0, pos)| s0 && pos == forbidden_positive) {
            continue;
        }
        let q: i64 = w.folds.iter().filter(|&&(_, _, pos)| pos == tinf).map(|&(j, _, _)| w.degree(j)).sum();
        add_mono(&mut out, w.wt(), q, 1);
    }
    out
}

// ------------------------------------------------------------------ products

fn mul_trunc(a: &Xq, b: &Xq, q_bound: i64) -> Xq {
    let mut out = Xq::new();
    for ((xa, qa), ca) in a {
        for ((xb, qb), cb) in b {
            if qa + qb <= q_bound {
                *out.entry((xa + xb, qa + qb)).or_insert(0) += ca * cb;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `prod (1 + q^e x^sign)` over the exponents, truncated at `q_bound`.
pub fn linear_product(exps: impl Iterator<Item = i64>, sign: i64, q_bound: i64) -> Xq {
    let mut acc = xq(&[(0, 0, 1)]);
    for e in exps.take_while(|e| *e <= q_bound) {
        acc = mul_trunc(&acc, &xq(&[(0, 0, 1), (sign, e, 1)]), q_bound);
    }
    acc
}

pub fn untwisted_limit(q_bound: i64) -> Xq {
    mul_trunc(&linear_product(0.., 1, q_bound), &linear_product(0.., -1, q_bound), q_bound)
}

pub fn twisted_limit(q_bound: i64) -> Xq {
    let odd = || (0..).map(|i| 2 * i + 1);
    mul_trunc(&linear_product(odd(), 1, q_bound), &linear_product(odd(), -1, q_bound), q_bound)
}

/// `1 / prod_{i=1}^{k} (1 - q^i)` up to `q_bound`, by series division.
pub fn inverse_pochhammer(k: i64, q_bound: i64) -> Qp {
    let den = q_factorial(k.min(q_bound), 1);
    let mut num = vec![0i128; q_bound as usize + 1];
    num[0] = 1;
    let mut out = vec![0i128; q_bound as usize + 1];
    for i in 0..=q_bound as usize {
        let c = num[i];
        out[i] = c;
        for (j, d) in den.iter().enumerate() {
            if i + j <= q_bound as usize {
                num[i + j] -= c * d;
            }
        }
    }
    out
}

/// `theta(x, q) / (q)_inf` with `theta = sum_k x^{a(k)} q^{b(k)}`.
pub fn theta_limit(odd: bool, q_bound: i64) -> Xq {
    let eta = inverse_pochhammer(q_bound, q_bound);
    let mut out = Xq::new();
    for k in -20i64..=20 {
        let (x, q) = if odd { (2 * k + 1, k * (k + 1)) } else { (2 * k, k * k) };
        if q <= q_bound {
            let part: Qp = eta.iter().take((q_bound - q) as usize + 1).copied().collect();
            add_qp(&mut out, x, q, &part);
        }
    }
    out
}

pub fn wedge_sum(q_bound: i64, x_bound: i64) -> Xq {
    let mut out = Xq::new();
    for k in 0..=x_bound {
        let lead = k * (k - 1) / 2;
        if lead <= q_bound {
            add_qp(&mut out, k, lead, &inverse_pochhammer(k, q_bound - lead));
        }
    }
    out
}

/// `q^top p(x, q^-1)`.
pub fn reverse_q(p: &Xq, top: i64) -> Xq {
    p.iter().map(|((x, q), c)| ((*x, top - q), *c)).collect()
}
