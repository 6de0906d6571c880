//! The three-dimensional representation of osp(1,2) and relation checks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::FusionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E,
    F,
    H,
    GPlus,
    GMinus,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::E, Generator::F, Generator::H, Generator::GPlus, Generator::GMinus];

    pub fn is_odd(self) -> bool {
        matches!(self, Generator::GPlus | Generator::GMinus)
    }

    /// `h`-weight of the generator.
    pub fn weight(self) -> i64 {
        match self {
            Generator::E => 2,
            Generator::F => -2,
            Generator::H => 0,
            Generator::GPlus => 1,
            Generator::GMinus => -1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::E => "e",
            Generator::F => "f",
            Generator::H => "h",
            Generator::GPlus => "g+",
            Generator::GMinus => "g-",
        })
    }
}

pub type Matrix = Vec<Vec<BigRational>>;

fn zero_matrix() -> Matrix {
    vec![vec![BigRational::zero(); 3]; 3]
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = zero_matrix();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = BigRational::zero();
            for k in 0..3 {
                acc += &a[i][k] * &b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn mat_lin(a: &Matrix, ca: &BigRational, b: &Matrix, cb: &BigRational) -> Matrix {
    let mut out = zero_matrix();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = ca * &a[i][j] + cb * &b[i][j];
        }
    }
    out
}

/// A finite-dimensional super representation on `(u-, u0, u+)` with
/// parities `(even, odd, even)`. Columns are images of basis vectors.
#[derive(Clone, Debug)]
pub struct SuperRep {
    pub matrices: BTreeMap<Generator, Matrix>,
    pub odd_basis: [bool; 3],
}

impl SuperRep {
    pub fn matrix(&self, g: Generator) -> &Matrix {
        &self.matrices[&g]
    }

    /// `(image index, coefficient)` pairs of the generator on basis vector `i`.
    pub fn column(&self, g: Generator, i: usize) -> Vec<(usize, BigRational)> {
        let m = self.matrix(g);
        (0..3).filter(|&r| !m[r][i].is_zero()).map(|r| (r, m[r][i].clone())).collect()
    }

    /// `[a, b]` with the super sign.
    pub fn bracket(&self, a: Generator, b: Generator) -> Matrix {
        let (ma, mb) = (self.matrix(a), self.matrix(b));
        let sign = if a.is_odd() && b.is_odd() { int(1) } else { int(-1) };
        mat_lin(&mat_mul(ma, mb), &int(1), &mat_mul(mb, ma), &sign)
    }

    /// Checks every relation in the table against the matrices.
    pub fn check(&self, table: &BracketTable) -> Result<(), FusionError> {
        for a in Generator::ALL {
            for b in Generator::ALL {
                let lhs = self.bracket(a, b);
                let mut rhs = zero_matrix();
                for (g, c) in table.bracket(a, b) {
                    rhs = mat_lin(&rhs, &int(1), self.matrix(g), &c);
                }
                if lhs != rhs {
                    return Err(FusionError::RelationViolation(format!("[{a},{b}]")));
                }
            }
        }
        Ok(())
    }
}

/// The 3-dimensional module, checked against the corrected bracket table.
pub fn build_rep() -> Result<SuperRep, FusionError> {
    let mut m: BTreeMap<Generator, Matrix> = Generator::ALL.iter().map(|g| (*g, zero_matrix())).collect();
    let set = |m: &mut BTreeMap<Generator, Matrix>, g: Generator, row: usize, col: usize, v: i64| {
        m.get_mut(&g).unwrap()[row][col] = int(v);
    };
    // basis order: 0 = u-, 1 = u0, 2 = u+
    set(&mut m, Generator::H, 0, 0, -1);
    set(&mut m, Generator::H, 2, 2, 1);
    set(&mut m, Generator::E, 2, 0, 1);
    set(&mut m, Generator::F, 0, 2, 1);
    set(&mut m, Generator::GPlus, 1, 0, 1);
    set(&mut m, Generator::GPlus, 2, 1, 1);
    set(&mut m, Generator::GMinus, 1, 2, 1);
    set(&mut m, Generator::GMinus, 0, 1, -1);
    let rep = SuperRep { matrices: m, odd_basis: [false, true, false] };
    rep.check(&BracketTable::corrected())?;
    Ok(rep)
}

/// Structure constants of a 5-dimensional superalgebra on the generators:
/// `[a, b] = sum c_g g`. Only listed pairs need be given; the rest follow by
/// super-antisymmetry or are zero.
#[derive(Clone, Debug)]
pub struct BracketTable {
    entries: BTreeMap<(Generator, Generator), Vec<(Generator, BigRational)>>,
}

/// `[a, b] = sum c * g`, with integer `c`.
type BracketRow<'a> = (Generator, Generator, &'a [(Generator, i64)]);

impl BracketTable {
    fn from_list(list: &[BracketRow]) -> BracketTable {
        let mut entries = BTreeMap::new();
        for (a, b, rhs) in list {
            let v: Vec<(Generator, BigRational)> = rhs.iter().map(|(g, c)| (*g, int(*c))).collect();
            // [b, a] = -(-1)^{|a||b|} [a, b]
            let sign = if a.is_odd() && b.is_odd() { 1 } else { -1 };
            let w: Vec<(Generator, BigRational)> = v.iter().map(|(g, c)| (*g, c * int(sign))).collect();
            entries.insert((*a, *b), v);
            entries.insert((*b, *a), w);
        }
        BracketTable { entries }
    }

    /// The relations exactly as usually printed, with `[f, g+] = g-`.
    pub fn printed() -> BracketTable {
        Self::with_f_gplus(1)
    }

    /// The consistent table: `[f, g+] = -g-`.
    pub fn corrected() -> BracketTable {
        Self::with_f_gplus(-1)
    }

    fn with_f_gplus(sign: i64) -> BracketTable {
        use Generator::*;
        Self::from_list(&[
            (E, F, &[(H, 1)]),
            (H, E, &[(E, 2)]),
            (H, F, &[(F, -2)]),
            (H, GPlus, &[(GPlus, 1)]),
            (H, GMinus, &[(GMinus, -1)]),
            (GPlus, GMinus, &[(H, 1)]),
            (GPlus, GPlus, &[(E, 2)]),
            (GMinus, GMinus, &[(F, -2)]),
            (F, GPlus, &[(GMinus, sign)]),
            (E, GMinus, &[(GPlus, -1)]),
        ])
    }

    pub fn bracket(&self, a: Generator, b: Generator) -> Vec<(Generator, BigRational)> {
        self.entries.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn bracket_lin(
        &self,
        x: &[(Generator, BigRational)],
        y: &[(Generator, BigRational)],
    ) -> BTreeMap<Generator, BigRational> {
        let mut out: BTreeMap<Generator, BigRational> = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                for (g, c) in self.bracket(*a, *b) {
                    *out.entry(g).or_insert_with(BigRational::zero) += ca * cb * c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// First triple violating the super Jacobi identity
    /// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]`, if any.
    pub fn jacobi_violation(&self) -> Option<(Generator, Generator, Generator)> {
        let unit = |g: Generator| vec![(g, BigRational::one())];
        for x in Generator::ALL {
            for y in Generator::ALL {
                for z in Generator::ALL {
                    let yz: Vec<_> = self.bracket_lin(&unit(y), &unit(z)).into_iter().collect();
                    let xy: Vec<_> = self.bracket_lin(&unit(x), &unit(y)).into_iter().collect();
                    let xz: Vec<_> = self.bracket_lin(&unit(x), &unit(z)).into_iter().collect();
                    let lhs = self.bracket_lin(&unit(x), &yz);
                    let mut rhs = self.bracket_lin(&xy, &unit(z));
                    let sign = if x.is_odd() && y.is_odd() { int(-1) } else { int(1) };
                    for (g, c) in self.bracket_lin(&unit(y), &xz) {
                        *rhs.entry(g).or_insert_with(BigRational::zero) += sign.clone() * c;
                    }
                    rhs.retain(|_, c| !c.is_zero());
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}
