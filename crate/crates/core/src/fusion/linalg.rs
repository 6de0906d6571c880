//! Exact subspaces of `Q^d` kept in reduced row-echelon form.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Vector = Vec<BigRational>;

#[derive(Clone, Debug, Default)]
pub struct Subspace {
    dim: usize,
    /// Rows with a leading one at `pivots[i]`, zero in every other pivot column.
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(dim: usize) -> Subspace {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// `v` minus its projection along the pivot rows.
    pub fn reduce(&self, v: &[BigRational]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &c * ri;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / &w[p];
        for c in w.iter_mut() {
            *c *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (ri, wi) in row.iter_mut().zip(&w) {
                if !wi.is_zero() {
                    *ri -= &c * wi;
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|x| BigRational::from_integer(BigInt::from(*x))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut s = Subspace::new(3);
        assert!(s.insert(&v(&[1, 2, 3])));
        assert!(s.insert(&v(&[0, 1, 1])));
        assert!(!s.insert(&v(&[2, 5, 7])));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&v(&[1, 3, 4])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert!(s.insert(&v(&[0, 0, 5])));
        assert_eq!(s.rank(), 3);
        assert!(!s.insert(&v(&[0, 0, 0])));
    }

    #[test]
    fn rows_are_reduced() {
        let mut s = Subspace::new(4);
        for r in [[2, 4, 0, 6], [1, 1, 1, 1], [0, 3, 9, 0]] {
            s.insert(&v(&r));
        }
        for (i, row) in s.basis().iter().enumerate() {
            for (j, &p) in s.pivots.iter().enumerate() {
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(row[p], expect);
            }
        }
    }
}
