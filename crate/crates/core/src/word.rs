//! Letters and words over `{a, b, a⁻¹, b⁻¹}`.
//!
//! The text syntax writes `a`, `b` for the generators and `A`, `B` for their
//! inverses, each optionally followed by a decimal repeat count, so `a3B2`
//! is `a a a b⁻¹ b⁻¹`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    B,
}

/// A generator or the inverse of a generator.
///
/// The derived ordering `a < b < a⁻¹ < b⁻¹` is the search order used
/// throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    AInv,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::AInv, Letter::BInv];

    pub const fn new(base: Base, positive: bool) -> Letter {
        match (base, positive) {
            (Base::A, true) => Letter::A,
            (Base::B, true) => Letter::B,
            (Base::A, false) => Letter::AInv,
            (Base::B, false) => Letter::BInv,
        }
    }

    pub const fn base(self) -> Base {
        match self {
            Letter::A | Letter::AInv => Base::A,
            Letter::B | Letter::BInv => Base::B,
        }
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub const fn sign(self) -> i64 {
        match self {
            Letter::A | Letter::B => 1,
            Letter::AInv | Letter::BInv => -1,
        }
    }

    pub const fn is_positive(self) -> bool {
        self.sign() > 0
    }

    pub const fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::B => Letter::BInv,
            Letter::AInv => Letter::A,
            Letter::BInv => Letter::B,
        }
    }

    /// Unit step of the letter in the plane.
    pub const fn step(self) -> (i64, i64) {
        match self {
            Letter::A => (1, 0),
            Letter::B => (0, 1),
            Letter::AInv => (-1, 0),
            Letter::BInv => (0, -1),
        }
    }

    pub const fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::AInv => 'A',
            Letter::BInv => 'B',
        }
    }

    pub const fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'A' => Some(Letter::AInv),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word. Ordered lexicographically by letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// `letter^count`.
    pub fn power(letter: Letter, count: usize) -> Word {
        Word(vec![letter; count])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn pop(&mut self) -> Option<Letter> {
        self.0.pop()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn with(&self, letter: Letter) -> Word {
        let mut w = self.clone();
        w.push(letter);
        w
    }

    /// The inverse word: letters in reverse order, each inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The same letters in reverse order.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Rotation starting at `start` (taken modulo the length).
    pub fn rotated(&self, start: usize) -> Word {
        if self.0.is_empty() {
            return Word::new();
        }
        let mut letters = self.0.clone();
        letters.rotate_left(start % self.0.len());
        Word(letters)
    }

    /// All `len()` rotations, in order of starting index. Periodic words
    /// produce repeated entries.
    pub fn cyclic_shifts(&self) -> Vec<Word> {
        (0..self.0.len()).map(|i| self.rotated(i)).collect()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Endpoint of the projected plane path, i.e. the abelianization.
    pub fn displacement(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(x, y), l| {
            let (dx, dy) = l.step();
            (x + dx, y + dy)
        })
    }

    /// Vertices visited by the projected plane path, starting at the origin.
    pub fn plane_trace(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.0.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for l in &self.0 {
            let (dx, dy) = l.step();
            x += dx;
            y += dy;
            pts.push((x, y));
        }
        pts
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

/// Parses the compact syntax, e.g. `"a3B2"`.
pub fn parse_word(text: &str) -> Result<Word> {
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let letter = Letter::from_char(c).ok_or_else(|| Error::Parse {
            offset: i,
            message: if bytes[i].is_ascii_digit() {
                "repeat count without a preceding letter".to_owned()
            } else {
                format!(
                    "unexpected character {:?}",
                    text[i..].chars().next().unwrap_or(c)
                )
            },
        })?;
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let count = if start == i {
            1
        } else {
            let count: usize = text[start..i].parse().map_err(|_| Error::Parse {
                offset: start,
                message: "repeat count out of range".to_owned(),
            })?;
            if count == 0 {
                return Err(Error::Parse {
                    offset: start,
                    message: "repeat count must be at least 1".to_owned(),
                });
            }
            count
        };
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok(Word(letters))
}

/// Canonical compact form: maximal runs written as `letter` or `letterN`.
pub fn format_word(w: &Word) -> String {
    let mut out = String::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        out.push(l.to_char());
        if j - i > 1 {
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

#[cfg(test)]
pub(crate) fn w(text: &str) -> Word {
    parse_word(text).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert!(w("").is_empty());
        assert_eq!(
            w("abAB").letters(),
            &[Letter::A, Letter::B, Letter::AInv, Letter::BInv]
        );
        assert_eq!(
            w("a3B2").letters(),
            &[Letter::A, Letter::A, Letter::A, Letter::BInv, Letter::BInv]
        );
        assert_eq!(w("b12").len(), 12);
    }

    #[test]
    fn parse_errors_carry_offset() {
        match parse_word("ab0") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("abxA") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("3a") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word("a b").is_err());
        assert!(parse_word("a99999999999999999999999").is_err());
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format_word(&w("aaabBB")), "a3bB2");
        assert_eq!(format_word(&w("a1a2")), "a3");
        assert_eq!(w("bababa3B3ABABA3b2").to_string(), "bababa3B3ABABA3b2");
        assert_eq!(w("").to_string(), "");
    }

    #[test]
    fn inverse_reverse_shifts() {
        assert_eq!(w("abAB").inverse(), w("baBA"));
        assert_eq!(w("a2b").reversed(), w("ba2"));
        assert_eq!(
            w("abAB").cyclic_shifts(),
            vec![w("abAB"), w("bABa"), w("ABab"), w("BabA")]
        );
        assert_eq!(w("abab").cyclic_shifts().len(), 4);
        assert!(Word::new().cyclic_shifts().is_empty());
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w("abBA").free_reduce(), Word::new());
        assert_eq!(w("aabBb").free_reduce(), w("a2b"));
    }

    #[test]
    fn letter_order() {
        let mut ls = vec![Letter::BInv, Letter::A, Letter::AInv, Letter::B];
        ls.sort();
        assert_eq!(ls, Letter::ALL);
        for l in Letter::ALL {
            assert_eq!(l.inverse().inverse(), l);
            assert_ne!(l.inverse(), l);
        }
    }
}
