//! Group elements in normal form `[a,b]^k b^m a^n`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Base, Letter, Word};

/// The element `[a,b]^k b^m a^n`: coordinates `(n, m)` and area `k`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct GroupElement {
    pub n: i64,
    pub m: i64,
    pub k: i64,
}

/// The commutator `[a,b] = aba⁻¹b⁻¹`, generator of the centre.
pub const COMMUTATOR: GroupElement = GroupElement::new(0, 0, 1);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { n: 0, m: 0, k: 0 };

    pub const fn new(n: i64, m: i64, k: i64) -> GroupElement {
        GroupElement { n, m, k }
    }

    /// `[a,b]^k`.
    pub const fn central(k: i64) -> GroupElement {
        GroupElement { n: 0, m: 0, k }
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::IDENTITY
    }

    pub fn is_central(&self) -> bool {
        self.n == 0 && self.m == 0
    }

    /// Right multiplication by one letter.
    pub fn try_step(self, letter: Letter) -> Result<GroupElement> {
        let e = letter.sign();
        let mut g = self;
        match letter.base() {
            Base::A => {
                g.n =
                    g.n.checked_add(e)
                        .ok_or(Error::Overflow("multiplying by a"))?;
            }
            Base::B => {
                g.m =
                    g.m.checked_add(e)
                        .ok_or(Error::Overflow("multiplying by b"))?;
                g.k =
                    g.k.checked_add(e * g.n)
                        .ok_or(Error::Overflow("multiplying by b"))?;
            }
        }
        Ok(g)
    }

    /// Right multiplication by one letter; panics on overflow.
    pub fn step(self, letter: Letter) -> GroupElement {
        self.try_step(letter).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `(n₁+n₂, m₁+m₂, k₁+k₂+n₁m₂)`.
    pub fn try_multiply(self, rhs: GroupElement) -> Result<GroupElement> {
        let overflow = || Error::Overflow("multiplying group elements");
        let cross = self.n.checked_mul(rhs.m).ok_or_else(overflow)?;
        Ok(GroupElement {
            n: self.n.checked_add(rhs.n).ok_or_else(overflow)?,
            m: self.m.checked_add(rhs.m).ok_or_else(overflow)?,
            k: self
                .k
                .checked_add(rhs.k)
                .and_then(|k| k.checked_add(cross))
                .ok_or_else(overflow)?,
        })
    }

    pub fn try_invert(self) -> Result<GroupElement> {
        let overflow = || Error::Overflow("inverting a group element");
        let nm = self.n.checked_mul(self.m).ok_or_else(overflow)?;
        Ok(GroupElement {
            n: self.n.checked_neg().ok_or_else(overflow)?,
            m: self.m.checked_neg().ok_or_else(overflow)?,
            k: nm.checked_sub(self.k).ok_or_else(overflow)?,
        })
    }

    pub fn invert(self) -> GroupElement {
        self.try_invert().unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    /// Panics on overflow; use [`GroupElement::try_multiply`] to handle it.
    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.try_multiply(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.m, self.k)
    }
}

pub fn multiply(g: GroupElement, h: GroupElement) -> GroupElement {
    g * h
}

pub fn invert(g: GroupElement) -> GroupElement {
    g.invert()
}

/// Folds the right-multiplication rules over the word.
pub fn try_evaluate(w: &Word) -> Result<GroupElement> {
    w.letters()
        .iter()
        .try_fold(GroupElement::IDENTITY, |g, &l| g.try_step(l))
}

/// Evaluates a word; panics with a diagnostic on arithmetic overflow.
pub fn evaluate(w: &Word) -> GroupElement {
    try_evaluate(w).unwrap_or_else(|e| panic!("evaluating {w}: {e}"))
}
