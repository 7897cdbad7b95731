//! The sixteen geometric symmetries of the word metric.
//!
//! A symmetry is one of the eight letter permutations that preserve inverse
//! pairs (the dihedral group of the square acting on the plane projection),
//! optionally followed by reversing the order of letters. Word inversion is
//! the member `reverse ∘ (a ↦ a⁻¹, b ↦ b⁻¹)`.
//!
//! On normal-form coordinates, with `sa`, `sb` the signs of the images of
//! `a` and `b`:
//!
//! * no swap: `(n, m, k) ↦ (sa·n, sb·m, sa·sb·k)`
//! * swap `a ↔ b`: `(n, m, k) ↦ (sb·m, sa·n, sa·sb·(nm − k))`
//! * reversal: `(n, m, k) ↦ (n, m, nm − k)`
//!
//! These follow from reading `k` as `∫ x dy` along the projected path and
//! `nm − k` as `∫ y dx`. Tests check every one against word evaluation.

use std::fmt;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::word::{Base, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    /// Exchange the roles of `a` and `b`.
    pub swap: bool,
    /// The image of `a` is inverted.
    pub flip_a: bool,
    /// The image of `b` is inverted.
    pub flip_b: bool,
    /// Reverse the order of letters.
    pub reverse: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::from_index(0);

    /// All sixteen symmetries, identity first.
    pub const ALL: [Symmetry; 16] = {
        let mut all = [Symmetry::IDENTITY; 16];
        let mut i = 0;
        while i < 16 {
            all[i] = Symmetry::from_index(i as u8);
            i += 1;
        }
        all
    };

    /// Word inversion as a member of the group.
    pub const INVERSION: Symmetry = Symmetry {
        swap: false,
        flip_a: true,
        flip_b: true,
        reverse: true,
    };

    pub const fn from_index(i: u8) -> Symmetry {
        Symmetry {
            swap: i & 1 != 0,
            flip_a: i & 2 != 0,
            flip_b: i & 4 != 0,
            reverse: i & 8 != 0,
        }
    }

    pub const fn index(self) -> u8 {
        self.swap as u8
            | (self.flip_a as u8) << 1
            | (self.flip_b as u8) << 2
            | (self.reverse as u8) << 3
    }

    pub fn map_letter(self, l: Letter) -> Letter {
        let (base, flip) = match l.base() {
            Base::A => (if self.swap { Base::B } else { Base::A }, self.flip_a),
            Base::B => (if self.swap { Base::A } else { Base::B }, self.flip_b),
        };
        Letter::new(base, l.is_positive() != flip)
    }

    pub fn apply_word(self, w: &Word) -> Word {
        let mapped = w.letters().iter().map(|&l| self.map_letter(l));
        if self.reverse {
            mapped.rev().collect()
        } else {
            mapped.collect()
        }
    }

    pub fn try_apply_element(self, g: GroupElement) -> Result<GroupElement> {
        let overflow = || Error::Overflow("applying a symmetry");
        let sa: i64 = if self.flip_a { -1 } else { 1 };
        let sb: i64 = if self.flip_b { -1 } else { 1 };
        let nm = g.n.checked_mul(g.m).ok_or_else(overflow)?;
        let scale = |s: i64, v: i64| v.checked_mul(s).ok_or_else(overflow);
        let mut out = if self.swap {
            let dual = nm.checked_sub(g.k).ok_or_else(overflow)?;
            GroupElement::new(scale(sb, g.m)?, scale(sa, g.n)?, scale(sa * sb, dual)?)
        } else {
            GroupElement::new(scale(sa, g.n)?, scale(sb, g.m)?, scale(sa * sb, g.k)?)
        };
        if self.reverse {
            let image_nm = out.n.checked_mul(out.m).ok_or_else(overflow)?;
            out.k = image_nm.checked_sub(out.k).ok_or_else(overflow)?;
        }
        Ok(out)
    }

    /// Coordinate action; panics on overflow.
    pub fn apply_element(self, g: GroupElement) -> GroupElement {
        self.try_apply_element(g).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `self` followed by `other`.
    pub fn then(self, other: Symmetry) -> Symmetry {
        let a = other.map_letter(self.map_letter(Letter::A));
        let b = other.map_letter(self.map_letter(Letter::B));
        Symmetry {
            swap: a.base() == Base::B,
            flip_a: !a.is_positive(),
            flip_b: !b.is_positive(),
            reverse: self.reverse != other.reverse,
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a->{} b->{}{}",
            self.map_letter(Letter::A),
            self.map_letter(Letter::B),
            if self.reverse { " reversed" } else { "" }
        )
    }
}

pub fn apply_symmetry(sym: Symmetry, w: &Word) -> Word {
    sym.apply_word(w)
}

pub fn element_symmetry(sym: Symmetry, g: GroupElement) -> GroupElement {
    sym.apply_element(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::evaluate;
    use crate::word::w;

    fn swap_ab() -> Symmetry {
        Symmetry {
            swap: true,
            ..Symmetry::IDENTITY
        }
    }

    #[test]
    fn sixteen_distinct_bijections() {
        let sample = w("aabAbbBa");
        let images: std::collections::BTreeSet<_> = Symmetry::ALL
            .iter()
            .map(|s| s.apply_word(&sample))
            .collect();
        assert_eq!(images.len(), 16);
        for (i, s) in Symmetry::ALL.iter().enumerate() {
            assert_eq!(s.index() as usize, i);
            let mapped: std::collections::BTreeSet<_> =
                Letter::ALL.iter().map(|&l| s.map_letter(l)).collect();
            assert_eq!(mapped.len(), 4);
            for l in Letter::ALL {
                assert_eq!(s.map_letter(l.inverse()), s.map_letter(l).inverse());
            }
        }
    }

    #[test]
    fn documented_actions() {
        // a <-> b on b^-3
        assert_eq!(swap_ab().apply_word(&w("B3")), w("A3"));
        assert_eq!(
            swap_ab().apply_element(GroupElement::new(0, -3, 0)),
            GroupElement::new(-3, 0, 0)
        );
        let flip_a = Symmetry {
            flip_a: true,
            ..Symmetry::IDENTITY
        };
        assert_eq!(
            flip_a.apply_element(GroupElement::new(2, 1, 5)),
            GroupElement::new(-2, 1, -5)
        );
        let rev = Symmetry {
            reverse: true,
            ..Symmetry::IDENTITY
        };
        assert_eq!(rev.apply_word(&w("ab")), w("ba"));
        assert_eq!(
            rev.apply_element(GroupElement::new(1, 1, 1)),
            GroupElement::new(1, 1, 0)
        );
    }

    #[test]
    fn inversion_member_matches_word_inverse() {
        let u = w("a2bAB3ab");
        assert_eq!(Symmetry::INVERSION.apply_word(&u), u.inverse());
        assert_eq!(
            Symmetry::INVERSION.apply_element(evaluate(&u)),
            evaluate(&u).invert()
        );
    }

    #[test]
    fn composition_is_closed() {
        let u = w("abbAbaaBBa");
        for s in Symmetry::ALL {
            for t in Symmetry::ALL {
                assert_eq!(s.then(t).apply_word(&u), t.apply_word(&s.apply_word(&u)));
            }
        }
    }
}
