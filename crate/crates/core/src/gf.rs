//! Arithmetic in the fields F_2, F_3, F_4 and F_5.
//!
//! Elements are small indices. For F_4 the indices 0, 1, 2, 3 stand for
//! 0, 1, ω, ω² where ω² = ω + 1, so addition is XOR of the 2-bit index.

use crate::error::{domain, Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One of the four supported fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    F2,
    F3,
    F4,
    F5,
}

/// q mod 4, with characteristic 2 split out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    Char2,
    OneMod4,
    ThreeMod4,
}

/// A field element, stored as its index in `0..q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElem(pub u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl FieldSpec {
    pub fn from_order(q: u32) -> Result<FieldSpec> {
        match q {
            2 => Ok(FieldSpec::F2),
            3 => Ok(FieldSpec::F3),
            4 => Ok(FieldSpec::F4),
            5 => Ok(FieldSpec::F5),
            _ => domain(format!("unsupported field order {q}")),
        }
    }

    #[inline]
    pub fn q(self) -> u32 {
        match self {
            FieldSpec::F2 => 2,
            FieldSpec::F3 => 3,
            FieldSpec::F4 => 4,
            FieldSpec::F5 => 5,
        }
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::F2 | FieldSpec::F4 => 2,
            FieldSpec::F3 => 3,
            FieldSpec::F5 => 5,
        }
    }

    pub fn residue_class(self) -> ResidueClass {
        match self {
            FieldSpec::F2 | FieldSpec::F4 => ResidueClass::Char2,
            FieldSpec::F5 => ResidueClass::OneMod4,
            FieldSpec::F3 => ResidueClass::ThreeMod4,
        }
    }

    /// True when branch (i) of the building-up construction applies.
    pub fn supports_branch_i(self) -> bool {
        self.residue_class() != ResidueClass::ThreeMod4
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElem> {
        (0..self.q() as u8).map(FieldElem)
    }

    pub fn nonzero(self) -> impl Iterator<Item = FieldElem> {
        (1..self.q() as u8).map(FieldElem)
    }

    pub fn elem(self, v: u8) -> Result<FieldElem> {
        if (v as u32) < self.q() {
            Ok(FieldElem(v))
        } else {
            domain(format!("{v} is not an element of F_{}", self.q()))
        }
    }

    #[inline]
    pub fn add(self, a: FieldElem, b: FieldElem) -> FieldElem {
        match self {
            FieldSpec::F2 | FieldSpec::F4 => FieldElem(a.0 ^ b.0),
            FieldSpec::F3 => FieldElem((a.0 + b.0) % 3),
            FieldSpec::F5 => FieldElem((a.0 + b.0) % 5),
        }
    }

    #[inline]
    pub fn neg(self, a: FieldElem) -> FieldElem {
        match self {
            FieldSpec::F2 | FieldSpec::F4 => a,
            FieldSpec::F3 => FieldElem((3 - a.0) % 3),
            FieldSpec::F5 => FieldElem((5 - a.0) % 5),
        }
    }

    #[inline]
    pub fn sub(self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: FieldElem, b: FieldElem) -> FieldElem {
        match self {
            FieldSpec::F2 => FieldElem(a.0 & b.0),
            FieldSpec::F3 => FieldElem((a.0 * b.0) % 3),
            FieldSpec::F4 => FieldElem(F4_MUL[a.0 as usize][b.0 as usize]),
            FieldSpec::F5 => FieldElem((a.0 * b.0) % 5),
        }
    }

    pub fn inv(self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return domain("inverse of zero");
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(self, a: FieldElem) -> FieldElem {
        let v = match (self, a.0) {
            (FieldSpec::F4, 2) => 3,
            (FieldSpec::F4, 3) => 2,
            (FieldSpec::F5, 2) => 3,
            (FieldSpec::F5, 3) => 2,
            (_, v) => v,
        };
        FieldElem(v)
    }

    /// The image of an integer under Z → F_q.
    pub fn from_int(self, v: i64) -> FieldElem {
        let p = self.characteristic() as i64;
        FieldElem(v.rem_euclid(p) as u8)
    }

    pub fn minus_one(self) -> FieldElem {
        self.neg(FieldElem::ONE)
    }

    /// Smallest c with c² = −1.
    pub fn sqrt_of_minus_one(self) -> Result<FieldElem> {
        let target = self.minus_one();
        self.elements()
            .find(|&c| self.mul(c, c) == target)
            .ok_or_else(|| Error::NoSolution(format!("−1 is not a square in F_{}", self.q())))
    }

    /// Lexicographically smallest nonzero (α, β) with α² + β² + 1 = 0.
    pub fn sum_of_squares_minus_one(self) -> Result<(FieldElem, FieldElem)> {
        if self.residue_class() != ResidueClass::ThreeMod4 {
            return domain(format!("F_{} is not ≡ 3 mod 4", self.q()));
        }
        for a in self.nonzero() {
            for b in self.nonzero() {
                let s = self.add(self.add(self.mul(a, a), self.mul(b, b)), FieldElem::ONE);
                if s.is_zero() {
                    return Ok((a, b));
                }
            }
        }
        Err(Error::NoSolution("no α, β found".into()))
    }

    /// Symbol used in polynomial text, e.g. `w^2`.
    pub fn symbol(self, a: FieldElem) -> &'static str {
        const DIGITS: [&str; 5] = ["0", "1", "2", "3", "4"];
        match (self, a.0) {
            (FieldSpec::F4, 2) => "w",
            (FieldSpec::F4, 3) => "w^2",
            (_, v) => DIGITS[v as usize],
        }
    }

    /// Symbol used in matrix files, e.g. `w2`.
    pub fn file_symbol(self, a: FieldElem) -> &'static str {
        match (self, a.0) {
            (FieldSpec::F4, 3) => "w2",
            _ => self.symbol(a),
        }
    }

    pub fn parse_symbol(self, s: &str) -> Option<FieldElem> {
        let v = match (self, s) {
            (FieldSpec::F4, "w") => 2,
            (FieldSpec::F4, "w2" | "w^2") => 3,
            (_, s) => s.parse::<u8>().ok()?,
        };
        ((v as u32) < self.q()).then_some(FieldElem(v))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}
