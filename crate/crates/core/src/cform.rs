//! Coefficient tables `c_r`, `c_r^dagger` and the specialized `E_n` built
//! from them.
//!
//! Indices are written `(k_outer, k_mid, k_inner)`, i.e. `(k22, k12, k11)`
//! for the untwisted table and `(k22, k21, k11)` for the dagger table.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::qcomb::q_multinomial;
use crate::ring::{QPolynomial, QXPoly};
use crate::{Family, Specialization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CKey {
    pub r: u8,
    pub k_outer: i64,
    pub k_mid: i64,
    pub k_inner: i64,
}

impl CKey {
    pub fn new(r: u8, k_outer: i64, k_mid: i64, k_inner: i64) -> CKey {
        assert!(r == 1 || r == 2, "r must be 1 or 2");
        CKey { r, k_outer, k_mid, k_inner }
    }

    pub fn n(&self) -> i64 {
        self.k_outer + self.k_mid + self.k_inner
    }

    fn negative(&self) -> bool {
        self.k_outer < 0 || self.k_mid < 0 || self.k_inner < 0
    }

    fn with(&self, r: u8, d_outer: i64, d_mid: i64, d_inner: i64) -> CKey {
        CKey::new(r, self.k_outer + d_outer, self.k_mid + d_mid, self.k_inner + d_inner)
    }
}

/// Memo table for one recurrence. Not shared between threads; build one per
/// evaluation context.
#[derive(Debug)]
pub struct CTable {
    family: Family,
    memo: HashMap<CKey, QPolynomial>,
}

impl CTable {
    /// `Family::A2` selects `c_r`, `Family::A2Dagger` selects `c_r^dagger`.
    pub fn new(family: Family) -> CTable {
        CTable { family, memo: HashMap::new() }
    }

    pub fn get(&mut self, key: CKey) -> QPolynomial {
        if key.negative() {
            return QPolynomial::zero();
        }
        if key.n() == 0 {
            return QPolynomial::one();
        }
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let n = key.n();
        let value = match (self.family, key.r) {
            (Family::A2, 1) => {
                self.get(key.with(2, -1, 0, 0)).shift(2 * n)
                    + self.get(key.with(2, 0, -1, 0)).shift(2 * n - 1)
                    + self.get(key.with(1, 0, 0, -1))
            }
            (Family::A2, _) => {
                self.get(key.with(2, -1, 0, 0))
                    + self.get(key.with(2, 0, -1, 0)).shift(2 * n - 1)
                    + self.get(key.with(1, 0, 0, -1))
            }
            (Family::A2Dagger, 1) => {
                self.get(key.with(2, -1, 0, 0)).shift(2 * n)
                    + self.get(key.with(1, 0, -1, 0)).shift(2 * n)
                    + self.get(key.with(1, 0, 0, -1))
            }
            (Family::A2Dagger, _) => {
                self.get(key.with(2, -1, 0, 0)) + self.get(key.with(1, 0, -1, 0)) + self.get(key.with(1, 0, 0, -1))
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

pub fn c_rec(key: CKey) -> QPolynomial {
    CTable::new(Family::A2).get(key)
}

pub fn cdag_rec(key: CKey) -> QPolynomial {
    CTable::new(Family::A2Dagger).get(key)
}

pub fn c_closed(key: CKey) -> QPolynomial {
    if key.negative() {
        return QPolynomial::zero();
    }
    let CKey { r, k_outer: k22, k_mid: k12, k_inner: k11 } = key;
    let lead = k12 * k12 + if r == 1 { 2 * k22 } else { 0 };
    q_multinomial(k22, k12, k11, 2).shift(lead)
}

pub fn cdag_closed(key: CKey) -> QPolynomial {
    if key.negative() {
        return QPolynomial::zero();
    }
    let CKey { r, k_outer: k22, k_mid: k21, k_inner: k11 } = key;
    let lead = k21 * (k21 - 1) + if r == 1 { 2 * k22 + 2 * k21 } else { 0 };
    q_multinomial(k22, k21, k11, 2).shift(lead)
}

/// All `(k_outer, k_mid, k_inner)` with nonnegative entries summing to `n`.
pub fn triples(n: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (0..=n).flat_map(move |a| (0..=n - a).map(move |b| (a, b, n - a - b)))
}

/// The specialized polynomial assembled from the coefficient tables, each
/// formula taken exactly as printed (no orientation correction).
pub fn e_spec(family: Family, n: i64, spec: Specialization) -> QXPoly {
    if n == 0 {
        return QXPoly::one();
    }
    let mut t = CTable::new(family);
    let mut out = QXPoly::zero();
    let m = n.abs();
    use Family::*;
    use Specialization::*;
    match (family, spec, n < 0) {
        (A2, T0, true) => {
            for (k22, k12, k11) in triples(m) {
                out.add_term(k22 - k11, t.get(CKey::new(2, k22, k12, k11)));
            }
        }
        (A2, T0, false) => {
            // subscript n + 1 = m, triples total m
            let p = m - 1;
            for (k22, k12, k11) in triples(m) {
                let c =
                    t.get(CKey::new(2, k22 - 1, k12, k11)).shift(2 * p + 1) + t.get(CKey::new(1, k22, k12 - 1, k11));
                out.add_term(k11 - k22 + 1, c);
            }
        }
        (A2, TinfQinv, true) => {
            for (k22, k12, k11) in triples(m) {
                out.add_term(k11 - k22, t.get(CKey::new(1, k22, k12, k11)));
            }
        }
        (A2, TinfQinv, false) => {
            for (k22, k12, k11) in triples(m - 1) {
                out.add_term(k11 - k22 + 1, t.get(CKey::new(2, k22, k12, k11)));
            }
        }
        (A2Dagger, T0, true) => {
            for (k22, k21, k11) in triples(m) {
                out.add_term(k11 - k22, t.get(CKey::new(2, k22, k21, k11)));
            }
        }
        (A2Dagger, T0, false) => {
            for (k22, k21, k11) in triples(m - 1) {
                out.add_term(k11 - k22 + 1, t.get(CKey::new(1, k22, k21, k11)));
            }
        }
        (A2Dagger, TinfQinv, true) => {
            for (k22, k21, k11) in triples(m) {
                out.add_term(k11 - k22, t.get(CKey::new(1, k22, k21, k11)));
            }
        }
        (A2Dagger, TinfQinv, false) => {
            for (k22, k21, k11) in triples(m - 1) {
                let c = t.get(CKey::new(2, k22, k21, k11)) + t.get(CKey::new(1, k22, k21, k11));
                out.add_term(k11 - k22 + 1, c);
            }
        }
    }
    out
}

/// One row of a dumped coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CTableRow {
    pub r: u8,
    pub k: [i64; 3],
    pub value: String,
}

/// All values with index sum `<= max_n`, in `(sum, k_outer, k_mid)` order.
pub fn dump_table(family: Family, r: u8, max_n: i64) -> Vec<CTableRow> {
    let mut t = CTable::new(family);
    (0..=max_n)
        .flat_map(triples)
        .map(|(a, b, c)| CTableRow { r, k: [a, b, c], value: t.get(CKey::new(r, a, b, c)).render() })
        .collect()
}
