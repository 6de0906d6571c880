//! Specializations of rank-one nonsymmetric Macdonald polynomials of types
//! A2(2) and its dual at `t = 0` and `t = infinity`, computed three ways
//! (alcove walks, coefficient tables, Weyl-module characters), plus the
//! osp(1,2) current-algebra machinery used to cross-check them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub mod cform;
pub mod cli;
pub mod fusion;
pub mod qcomb;
pub mod ramyip;
pub mod ring;
pub mod walks;
pub mod weylchar;

/// Root-system family of the polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A2,
    #[serde(rename = "A2dagger")]
    A2Dagger,
}

/// Which specialization of `t` to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Specialization {
    /// `t = 0`
    #[serde(rename = "t0")]
    T0,
    /// `q -> q^-1`, then `t -> infinity`
    #[serde(rename = "tinf")]
    TinfQinv,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::A2, Family::A2Dagger];

    pub fn name(self) -> &'static str {
        match self {
            Family::A2 => "A2",
            Family::A2Dagger => "A2dagger",
        }
    }
}

impl Specialization {
    pub const ALL: [Specialization; 2] = [Specialization::T0, Specialization::TinfQinv];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::T0 => "t0",
            Specialization::TinfQinv => "tinf",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A2" => Ok(Family::A2),
            "A2dagger" => Ok(Family::A2Dagger),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

impl FromStr for Specialization {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "t0" => Ok(Specialization::T0),
            "tinf" | "tinf_qinv" => Ok(Specialization::TinfQinv),
            other => Err(format!("unknown specialization {other:?}")),
        }
    }
}
