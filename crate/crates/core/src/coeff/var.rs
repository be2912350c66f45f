//! Named commuting indeterminates of the coefficient tower.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A commuting indeterminate.
///
/// Variant order fixes the variable order used by every monomial order in
/// the crate, so `q` always outranks `x1`, which outranks `y1`, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `q` for index 0, `q_i` otherwise.
    Q(u16),
    X(u16),
    Y(u16),
    H(u16),
    /// `H` of the rank-one bases `k[H]` and `k[H, C]`.
    BigH,
    /// `C`, the Casimir-like central variable.
    BigC,
    /// Sphere parameter `c`.
    SmallC,
    /// Sphere parameter `d`.
    SmallD,
    /// Formal square root `s` of the sphere parameter, `lambda = s^2`.
    SqrtLambda,
    W(u16),
}

impl Var {
    pub const fn q() -> Var {
        Var::Q(0)
    }

    pub fn is_parameter(self) -> bool {
        matches!(
            self,
            Var::Q(_) | Var::SmallC | Var::SmallD | Var::SqrtLambda
        )
    }

    pub fn is_q(self) -> bool {
        matches!(self, Var::Q(_))
    }

    /// Index of an indexed family variable (`x3` -> 3).
    pub fn index(self) -> Option<u16> {
        match self {
            Var::Q(i) | Var::X(i) | Var::Y(i) | Var::H(i) | Var::W(i) => Some(i),
            _ => None,
        }
    }

    /// Same family with a different index; identity on unindexed variables.
    pub fn with_index(self, i: u16) -> Var {
        match self {
            Var::Q(_) => Var::Q(i),
            Var::X(_) => Var::X(i),
            Var::Y(_) => Var::Y(i),
            Var::H(_) => Var::H(i),
            Var::W(_) => Var::W(i),
            other => other,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Q(0) => write!(f, "q"),
            Var::Q(i) => write!(f, "q{i}"),
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::H(i) => write!(f, "h{i}"),
            Var::BigH => write!(f, "H"),
            Var::BigC => write!(f, "C"),
            Var::SmallC => write!(f, "c"),
            Var::SmallD => write!(f, "d"),
            Var::SqrtLambda => write!(f, "s"),
            Var::W(i) => write!(f, "w{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        match s {
            "q" => return Ok(Var::Q(0)),
            "H" => return Ok(Var::BigH),
            "C" => return Ok(Var::BigC),
            "c" => return Ok(Var::SmallC),
            "d" => return Ok(Var::SmallD),
            "s" => return Ok(Var::SqrtLambda),
            "x" => return Ok(Var::X(1)),
            "y" => return Ok(Var::Y(1)),
            "h" => return Ok(Var::H(1)),
            _ => {}
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (head, digits) = s.split_at(split);
        let index: u16 = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        match head {
            "q" => Ok(Var::Q(index)),
            "x" => Ok(Var::X(index)),
            "y" => Ok(Var::Y(index)),
            "h" => Ok(Var::H(index)),
            "w" => Ok(Var::W(index)),
            _ => Err(bad()),
        }
    }
}
