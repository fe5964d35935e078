//! Pieces shared by the tripling and doubling families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CubicCurve, CurveError};
use crate::field::{Elem, FieldError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `y^2 = x^3 + 3u(x + 1)^2`, characteristic at least 5.
    Tripling,
    /// `y^2 = x^3 + u x^2 + 16 u x`, characteristic at least 3.
    Doubling,
}

impl Family {
    pub fn min_characteristic(self) -> u64 {
        match self {
            Family::Tripling => 5,
            Family::Doubling => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Tripling => "tripling",
            Family::Doubling => "doubling",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tripling" => Ok(Family::Tripling),
            "doubling" => Ok(Family::Doubling),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("the {family} family needs characteristic at least {min}, got {p}")]
    Characteristic { family: Family, min: u64, p: u64 },
    #[error("u = {0} is excluded from the family")]
    Excluded(String),
    #[error("{0} is outside the domain of this operation")]
    Domain(String),
    #[error("the discriminant of g_u vanishes at u = {0}")]
    DegenerateDiscriminant(String),
}

pub(crate) fn require_characteristic(family: Family, p: u64) -> Result<(), FamilyError> {
    let min = family.min_characteristic();
    if p < min {
        return Err(FamilyError::Characteristic { family, min, p });
    }
    Ok(())
}

/// A closed-form count whose rational value failed to be an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{num}/{den} is not an integer")]
pub struct Inexact {
    pub num: i64,
    pub den: i64,
}

pub(crate) fn exact_div(num: i64, den: i64) -> Result<i64, Inexact> {
    if num % den == 0 {
        Ok(num / den)
    } else {
        Err(Inexact { num, den })
    }
}

/// The five counters attached to the tripling partition labels.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCounts {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub b1: i64,
    pub b2: i64,
}

impl LabelCounts {
    pub fn as_array(&self) -> [i64; 5] {
        [self.a1, self.a2, self.a3, self.b1, self.b2]
    }
}

/// Groups members into F_q-isomorphism blocks, comparing each new member
/// against the first member of every existing block. Blocks keep the order
/// in which their first member appears.
pub(crate) fn fq_blocks<'f>(
    members: &[Elem<'f>],
    curve: impl Fn(Elem<'f>) -> CubicCurve<'f>,
) -> Result<Vec<Vec<Elem<'f>>>, CurveError> {
    let mut blocks: Vec<Vec<Elem<'f>>> = Vec::new();
    'members: for &m in members {
        let c = curve(m);
        for block in blocks.iter_mut() {
            if curve(block[0]).isomorphic_fq(&c)?.is_some() {
                block.push(m);
                continue 'members;
            }
        }
        blocks.push(vec![m]);
    }
    Ok(blocks)
}
