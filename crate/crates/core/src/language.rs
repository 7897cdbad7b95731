//! The geodesic language: swap rewriting, generation of every dead-end word,
//! prefixes of infinite geodesics, and completion of geodesics to dead ends.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::ceil_two_sqrt;
use crate::element::{evaluate, try_evaluate, GroupElement};
use crate::error::{check_ceiling, Error, Result};
use crate::metric::try_length;
use crate::polyomino::{p, q_range};
use crate::word::{Letter, Word};

/// Default largest area for [`generate_dead_end_words`].
pub const DEFAULT_GENERATION_CEILING: u64 = 32;

/// One of the four adjacent transpositions `ab ↦ ba`, `ba⁻¹ ↦ a⁻¹b`,
/// `a⁻¹b⁻¹ ↦ b⁻¹a⁻¹`, `b⁻¹a ↦ ab⁻¹`. Each lowers the area by one and keeps
/// length and endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SwapRule {
    pub pattern: [Letter; 2],
}

impl SwapRule {
    pub const ALL: [SwapRule; 4] = [
        SwapRule {
            pattern: [Letter::A, Letter::B],
        },
        SwapRule {
            pattern: [Letter::B, Letter::AInv],
        },
        SwapRule {
            pattern: [Letter::AInv, Letter::BInv],
        },
        SwapRule {
            pattern: [Letter::BInv, Letter::A],
        },
    ];

    pub fn replacement(self) -> [Letter; 2] {
        [self.pattern[1], self.pattern[0]]
    }

    pub fn matching(x: Letter, y: Letter) -> Option<SwapRule> {
        SwapRule::ALL.into_iter().find(|r| r.pattern == [x, y])
    }
}

/// Positions `i` where `w[i] w[i+1]` matches a swap rule.
pub fn linear_swap_sites(w: &Word) -> Vec<usize> {
    w.letters()
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| SwapRule::matching(pair[0], pair[1]).is_some())
        .map(|(i, _)| i)
        .collect()
}

/// Applies the swap at linear position `i`.
pub fn swap_at(w: &Word, i: usize) -> Result<Word> {
    let letters = w.letters();
    if i + 1 >= letters.len() || SwapRule::matching(letters[i], letters[i + 1]).is_none() {
        return Err(Error::NoSwap(i));
    }
    let mut out = letters.to_vec();
    out.swap(i, i + 1);
    Ok(out.into())
}

/// A word up to rotation, stored as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    canonical: Word,
}

fn least_rotation(w: &Word) -> Word {
    (0..w.len().max(1))
        .map(|i| w.rotated(i))
        .min()
        .unwrap_or_default()
}

impl CyclicWord {
    pub fn new(w: &Word) -> CyclicWord {
        CyclicWord {
            canonical: least_rotation(w),
        }
    }

    /// The least rotation; swap positions refer to this representative.
    pub fn representative(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Positions `i` where the letters at `i` and `i + 1` (mod length) match
    /// a swap rule, including the wrap-around pair.
    pub fn applicable_swaps(&self) -> Vec<usize> {
        let ls = self.canonical.letters();
        let n = ls.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .filter(|&i| SwapRule::matching(ls[i], ls[(i + 1) % n]).is_some())
            .collect()
    }

    pub fn apply_swap(&self, pos: usize) -> Result<CyclicWord> {
        let n = self.canonical.len();
        if pos >= n || n < 2 {
            return Err(Error::NoSwap(pos));
        }
        // Rotate the site to the front, then swap linearly.
        let rotated = self.canonical.rotated(pos);
        Ok(CyclicWord::new(&swap_at(&rotated, 0)?))
    }

    /// All distinct rotations.
    pub fn linearizations(&self) -> BTreeSet<Word> {
        self.canonical.cyclic_shifts().into_iter().collect()
    }

    /// Area of the closed loop, if the word is closed.
    pub fn area(&self) -> Option<i64> {
        let g = try_evaluate(&self.canonical).ok()?;
        g.is_central().then_some(g.k)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.canonical)
    }
}

/// Boundary word of the `width × height` rectangle read counter-clockwise
/// from its lower-left corner.
pub fn rectangle_word(width: usize, height: usize) -> Word {
    let mut letters = Vec::with_capacity(2 * (width + height));
    letters.extend(std::iter::repeat_n(Letter::A, width));
    letters.extend(std::iter::repeat_n(Letter::B, height));
    letters.extend(std::iter::repeat_n(Letter::AInv, width));
    letters.extend(std::iter::repeat_n(Letter::BInv, height));
    letters.into()
}

/// Cyclic words reachable from `start` by exactly `steps` swaps.
pub fn swap_level(start: &CyclicWord, steps: u64) -> BTreeSet<CyclicWord> {
    let mut level = BTreeSet::from([start.clone()]);
    for _ in 0..steps {
        level = level
            .iter()
            .flat_map(|c| {
                c.applicable_swaps()
                    .into_iter()
                    .map(move |i| c.apply_swap(i).expect("site just listed"))
            })
            .collect();
    }
    level
}

/// Every geodesic representative of `[a,b]^k` and `[a,b]^-k`.
///
/// Starts from each rectangle of half-perimeter `H = ⌈2√k⌉` and sides
/// `L × (H − L)` with `L ∈ [q₋(k), q₊(k)]`, applies exactly `L(H − L) − k`
/// cyclic swaps in every possible way, and emits every rotation of every
/// result together with its inverse. Sorted.
pub fn generate_dead_end_words(k: u64, ceiling: u64) -> Result<BTreeSet<Word>> {
    check_ceiling("dead-end area", k, ceiling)?;
    let half = p(k)? / 2;
    let (lo, hi) = q_range(k)?;
    let mut out = BTreeSet::new();
    for side in lo..=hi {
        let base = CyclicWord::new(&rectangle_word(side as usize, (half - side) as usize));
        let surplus = side * (half - side) - k;
        for c in swap_level(&base, surplus) {
            for w in c.linearizations() {
                out.insert(w.inverse());
                out.insert(w);
            }
        }
    }
    Ok(out)
}

/// Which of the two families of right-infinite geodesics a finite word is a
/// prefix of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfiniteClass {
    /// A word over one pair `{x, y}` of letters that are not mutually inverse.
    ClassA,
    ClassB(ClassBWitness),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Template {
    /// `V x y^m x⁻¹ y^∞`.
    TurnBack,
    /// `x^n y⁻¹ x^m y V y^∞`.
    DipFirst { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBWitness {
    pub template: Template,
    pub x: Letter,
    pub y: Letter,
    pub m: usize,
    /// The `{x, y}` word, needing fewer than `m` adjacent transpositions to
    /// reach `x^i y^j`.
    pub v: Word,
}

impl InfiniteClass {
    pub fn is_none(&self) -> bool {
        *self == InfiniteClass::None
    }
}

/// Number of pairs with `y` before `x`: adjacent transpositions needed to
/// sort `v` into `x^i y^j`.
pub fn inversions(v: &[Letter], x: Letter) -> usize {
    let mut ys = 0;
    let mut total = 0;
    for &l in v {
        if l == x {
            total += ys;
        } else {
            ys += 1;
        }
    }
    total
}

/// The eight ordered pairs `(x, y)` of letters on different axes.
fn transverse_pairs() -> impl Iterator<Item = (Letter, Letter)> {
    Letter::ALL.into_iter().flat_map(|x| {
        Letter::ALL
            .into_iter()
            .filter(move |y| y.base() != x.base())
            .map(move |y| (x, y))
    })
}

fn is_homogeneous(w: &Word) -> bool {
    let present: BTreeSet<Letter> = w.letters().iter().copied().collect();
    !present.iter().any(|l| present.contains(&l.inverse()))
}

/// `w = V x y^m x⁻¹ y^j`.
fn match_turn_back(w: &[Letter], x: Letter, y: Letter) -> Option<ClassBWitness> {
    let turn = w.iter().position(|&l| l == x.inverse())?;
    let (before, after) = (&w[..turn], &w[turn + 1..]);
    if !after.iter().all(|&l| l == y) || !before.iter().all(|&l| l == x || l == y) {
        return None;
    }
    let m = before.iter().rev().take_while(|&&l| l == y).count();
    if m == 0 || before.len() == m {
        return None;
    }
    let v = &before[..before.len() - m - 1];
    (inversions(v, x) < m).then(|| ClassBWitness {
        template: Template::TurnBack,
        x,
        y,
        m,
        v: v.to_vec().into(),
    })
}

/// `w = x^n y⁻¹ x^m y V'` with `V'` a prefix of `V y^∞`.
fn match_dip_first(w: &[Letter], x: Letter, y: Letter) -> Option<ClassBWitness> {
    let n = w.iter().take_while(|&&l| l == x).count();
    if w.get(n) != Some(&y.inverse()) {
        return None;
    }
    let rest = &w[n + 1..];
    let m = rest.iter().take_while(|&&l| l == x).count();
    if m == 0 || rest.get(m) != Some(&y) {
        return None;
    }
    let v = &rest[m + 1..];
    if !v.iter().all(|&l| l == x || l == y) {
        return None;
    }
    (inversions(v, x) < m).then(|| ClassBWitness {
        template: Template::DipFirst { n },
        x,
        y,
        m,
        v: v.to_vec().into(),
    })
}

/// Classifies `w` as a prefix of a right-infinite geodesic.
pub fn classify_infinite_prefix(w: &Word) -> InfiniteClass {
    if is_homogeneous(w) {
        return InfiniteClass::ClassA;
    }
    for (x, y) in transverse_pairs() {
        if let Some(witness) =
            match_turn_back(w.letters(), x, y).or_else(|| match_dip_first(w.letters(), x, y))
        {
            return InfiniteClass::ClassB(witness);
        }
    }
    InfiniteClass::None
}

/// A dead-end word extending a given geodesic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub word: Word,
    /// Signed area of the dead end reached.
    pub area: i64,
}

/// Extends the geodesic `w` to a dead-end word.
///
/// Tries targets `[a,b]^κ` for `κ = 1, −1, 2, −2, …` up to `max_area` and
/// returns the first completion found; letters are tried in the order
/// `a < b < a⁻¹ < b⁻¹`. A completion of length `p(κ)` ending at `[a,b]^κ`
/// is geodesic, and every prefix on the search path is kept geodesic.
pub fn extend_to_dead_end(w: &Word, max_area: u64) -> Result<Completion> {
    let start = try_evaluate(w)?;
    if try_length(start)? != w.len() as u64 {
        return Err(Error::NotGeodesic(w.to_string()));
    }
    for kappa in 1..=max_area {
        let total = 2 * ceil_two_sqrt(kappa);
        if total < w.len() as u64 {
            continue;
        }
        for sign in [1i64, -1] {
            let target = GroupElement::central(sign * kappa as i64);
            let mut word = w.clone();
            if complete_towards(start, target, total, &mut word)? {
                debug_assert_eq!(evaluate(&word), target);
                return Ok(Completion {
                    word,
                    area: target.k,
                });
            }
        }
    }
    Err(Error::CompletionNotFound {
        word: w.to_string(),
        max_area,
    })
}

/// Depth-first search for a geodesic continuation of `word` (evaluating to
/// `at`) that reaches `target` at total length `total`.
fn complete_towards(
    at: GroupElement,
    target: GroupElement,
    total: u64,
    word: &mut Word,
) -> Result<bool> {
    let done = word.len() as u64;
    let remaining = try_length(at.try_invert()?.try_multiply(target)?)?;
    if remaining != total - done {
        return Ok(false);
    }
    if remaining == 0 {
        return Ok(true);
    }
    for l in Letter::ALL {
        let next = at.try_step(l)?;
        if try_length(next)? != done + 1 {
            continue;
        }
        word.push(l);
        if complete_towards(next, target, total, word)? {
            return Ok(true);
        }
        word.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{is_dead_end_word, is_geodesic, length};
    use crate::word::w;

    #[test]
    fn swap_example_from_linear_word() {
        assert_eq!(linear_swap_sites(&w("abbbA")), vec![0, 3]);
        assert_eq!(swap_at(&w("abbbA"), 0).unwrap(), w("babbA"));
        assert_eq!(swap_at(&w("babbA"), 3).unwrap(), w("babAb"));
        assert!(matches!(swap_at(&w("abbbA"), 1), Err(Error::NoSwap(1))));
        assert_eq!(
            CyclicWord::new(&w("abbbA")).apply_swap(0).unwrap(),
            CyclicWord::new(&w("babbA"))
        );
    }

    #[test]
    fn rules_lower_area_by_one() {
        for r in SwapRule::ALL {
            let before = evaluate(&Word::from(r.pattern.to_vec()));
            let after = evaluate(&Word::from(r.replacement().to_vec()));
            assert_eq!(
                (after.n, after.m, after.k),
                (before.n, before.m, before.k - 1)
            );
        }
    }

    #[test]
    fn square_swaps_give_four_l_trominoes() {
        let square = CyclicWord::new(&w("a2b2A2B2"));
        let sites = square.applicable_swaps();
        assert_eq!(sites.len(), 4);
        let results: BTreeSet<_> = sites
            .iter()
            .map(|&i| square.apply_swap(i).unwrap())
            .collect();
        assert_eq!(results.len(), 4);
        for c in &results {
            assert_eq!(c.area(), Some(3));
            assert_eq!(c.len(), 8);
        }
        // The three sites of the linear word a2b2A2B2 miss one corner.
        let linear: BTreeSet<_> = linear_swap_sites(&w("a2b2A2B2"))
            .into_iter()
            .map(|i| CyclicWord::new(&swap_at(&w("a2b2A2B2"), i).unwrap()))
            .collect();
        assert_eq!(linear.len(), 3);
        assert!(linear.is_subset(&results));
    }

    #[test]
    fn generation_small_counts() {
        let one = generate_dead_end_words(1, 32).unwrap();
        assert_eq!(one.len(), 8);
        assert!(one.contains(&w("abAB")) && one.contains(&w("baBA")));
        assert_eq!(generate_dead_end_words(2, 32).unwrap().len(), 24);
        assert_eq!(generate_dead_end_words(4, 32).unwrap().len(), 16);
        assert!(generate_dead_end_words(33, 32).is_err());
        assert!(generate_dead_end_words(0, 32).is_err());
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(classify_infinite_prefix(&w("abab")), InfiniteClass::ClassA);
        assert_eq!(classify_infinite_prefix(&w("")), InfiniteClass::ClassA);
        assert_eq!(classify_infinite_prefix(&w("AbbA")), InfiniteClass::ClassA);
        assert!(classify_infinite_prefix(&w("a4b4A4B4")).is_none());
        assert!(classify_infinite_prefix(&w("a2b2A2B2")).is_none());
        assert!(classify_infinite_prefix(&w("aA")).is_none());
        match classify_infinite_prefix(&w("abA")) {
            InfiniteClass::ClassB(wit) => {
                assert_eq!(wit.template, Template::TurnBack);
                assert_eq!((wit.x, wit.y, wit.m), (Letter::A, Letter::B, 1));
                assert!(wit.v.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
        for j in 0..=15 {
            let word = w("abA").concat(&Word::power(Letter::B, j));
            assert!(is_geodesic(&word), "abAb^{j}");
            assert!(!classify_infinite_prefix(&word).is_none());
        }
        match classify_infinite_prefix(&w("a2Ba3bab")) {
            InfiniteClass::ClassB(wit) => {
                assert_eq!(wit.template, Template::DipFirst { n: 2 });
                assert_eq!(wit.m, 3);
                assert_eq!(wit.v, w("ab"));
            }
            other => panic!("unexpected {other:?}"),
        }
        // V = ba needs one swap, so m must exceed 1.
        assert!(classify_infinite_prefix(&w("baabA")).is_none());
        assert!(!classify_infinite_prefix(&w("baab2A")).is_none());
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&w("ab").into_letters(), Letter::A), 0);
        assert_eq!(inversions(&w("ba").into_letters(), Letter::A), 1);
        assert_eq!(inversions(&w("bbaa").into_letters(), Letter::A), 4);
        assert_eq!(inversions(&w("AB").into_letters(), Letter::BInv), 1);
    }

    #[test]
    fn completion_examples() {
        let c = extend_to_dead_end(&w("aBAb"), 64).unwrap();
        assert_eq!((c.word, c.area), (w("aBAb"), -1));

        let c = extend_to_dead_end(&w("abab"), 64).unwrap();
        assert_eq!(c.word, w("ababA2B2"));
        assert_eq!(c.area, 3);
        assert_eq!(c.word.len() as u64, length(GroupElement::central(3)));

        // a4 first fits a 4x2 rectangle with one corner removed (area 7).
        let c = extend_to_dead_end(&w("a4"), 64).unwrap();
        assert_eq!(c.area, 7);
        assert_eq!(c.word.len(), 12);
        assert!(c.word.letters().starts_with(&w("a4").into_letters()));
        assert!(is_dead_end_word(&c.word));

        assert!(matches!(
            extend_to_dead_end(&w("aA"), 64),
            Err(Error::NotGeodesic(_))
        ));
        assert!(matches!(
            extend_to_dead_end(&w("a9"), 8),
            Err(Error::CompletionNotFound { .. })
        ));
    }
}
