//! Closed-form word length and the predicates built on it.
//!
//! For `0 ≤ m ≤ n`, `k ≥ 0` and `(n, m, k) ≠ (0, 0, 0)`:
//!
//! | case | condition          | length                 |
//! |------|--------------------|------------------------|
//! | 1    | `n² ≤ k`           | `2⌈2√k⌉ − n − m`       |
//! | 2a   | `n² ≥ k`, `nm ≥ k` | `n + m`                |
//! | 2b   | `n² ≥ k`, `nm ≤ k` | `2⌈k/n⌉ + n − m`       |
//!
//! Case 1 also covers `n = m = 0`, `k > 0`. Every other element is first moved
//! into this region by one of the sixteen symmetries, which are isometries.
//! All comparisons are exact integer arithmetic.

use std::collections::HashSet;

use crate::arith::{ceil_div, ceil_two_sqrt};
use crate::element::{evaluate, try_evaluate, GroupElement};
use crate::error::{Error, Result};
use crate::symmetry::Symmetry;
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Identity,
    /// `n² ≤ k`.
    Case1,
    /// `n² > k` and `nm ≥ k`.
    Case2a,
    /// `n² > k` and `nm < k`.
    Case2b,
}

/// An element moved into the formula's domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthCase {
    pub tag: CaseTag,
    /// Image of the input with `0 ≤ m ≤ n` and `k ≥ 0`.
    pub canonical: GroupElement,
    /// Symmetry that maps the input to `canonical`.
    pub sym: Symmetry,
}

fn in_domain(g: &GroupElement) -> bool {
    0 <= g.m && g.m <= g.n && g.k >= 0
}

/// Finds the first symmetry (in index order) landing `g` in the domain of
/// the length formula and classifies the result.
pub fn canonicalize(g: GroupElement) -> Result<LengthCase> {
    for sym in Symmetry::ALL {
        let image = sym.try_apply_element(g)?;
        if in_domain(&image) {
            return Ok(LengthCase {
                tag: classify(image),
                canonical: image,
                sym,
            });
        }
    }
    Err(Error::Internal(
        "no symmetry maps the element into 0 <= m <= n, k >= 0",
    ))
}

fn classify(c: GroupElement) -> CaseTag {
    let (n, m, k) = (c.n as u128, c.m as u128, c.k as u128);
    if c.is_identity() {
        CaseTag::Identity
    } else if n * n <= k {
        CaseTag::Case1
    } else if n * m >= k {
        CaseTag::Case2a
    } else {
        CaseTag::Case2b
    }
}

pub(crate) fn case1_length(n: u64, m: u64, k: u64) -> u64 {
    2 * ceil_two_sqrt(k) - n - m
}

pub(crate) fn case2a_length(n: u64, m: u64) -> u64 {
    n + m
}

pub(crate) fn case2b_length(n: u64, m: u64, k: u64) -> u64 {
    2 * ceil_div(k, n) + n - m
}

/// Word length of `g`; errors only on arithmetic overflow.
pub fn try_length(g: GroupElement) -> Result<u64> {
    let case = canonicalize(g)?;
    let c = case.canonical;
    let (n, m, k) = (c.n as u64, c.m as u64, c.k as u64);
    Ok(match case.tag {
        CaseTag::Identity => 0,
        CaseTag::Case1 => case1_length(n, m, k),
        CaseTag::Case2a => case2a_length(n, m),
        CaseTag::Case2b => case2b_length(n, m, k),
    })
}

/// Word length of `g` with respect to `{a, b}`.
pub fn length(g: GroupElement) -> u64 {
    try_length(g).unwrap_or_else(|e| panic!("length of {g}: {e}"))
}

/// Distance between two elements, `l(g⁻¹h)`.
pub fn distance(g: GroupElement, h: GroupElement) -> u64 {
    length(g.invert() * h)
}

pub fn is_geodesic(w: &Word) -> bool {
    match try_evaluate(w) {
        Ok(g) => try_length(g).is_ok_and(|l| l == w.len() as u64),
        Err(_) => false,
    }
}

/// Letters `x` (in letter order) such that `wx` is geodesic.
pub fn geodesic_extensions(w: &Word) -> Result<Vec<Letter>> {
    let g = try_evaluate(w)?;
    let len = try_length(g)?;
    if len != w.len() as u64 {
        return Err(Error::NotGeodesic(w.to_string()));
    }
    let mut out = Vec::new();
    for l in Letter::ALL {
        if try_length(g.try_step(l)?)? == len + 1 {
            out.push(l);
        }
    }
    Ok(out)
}

/// Every neighbour `gs` is strictly closer to the identity than `g`.
pub fn is_dead_end_element(g: GroupElement) -> bool {
    let len = length(g);
    Letter::ALL.iter().all(|&l| length(g.step(l)) < len)
}

/// A geodesic word with no geodesic one-letter extension.
pub fn is_dead_end_word(w: &Word) -> bool {
    geodesic_extensions(w).is_ok_and(|ext| ext.is_empty())
}

/// The closed-form characterisation of dead ends: nontrivial central
/// elements. Kept separate from [`is_dead_end_element`] so that the two can
/// be checked against each other.
pub fn predict_dead_end(g: GroupElement) -> bool {
    g.is_central() && g.k != 0
}

/// Whether the projected plane path visits no vertex twice. A closed path
/// may return to its start, provided it has at least four edges.
pub fn is_simple_path(w: &Word) -> bool {
    let trace = w.plane_trace();
    let closed = !w.is_empty() && trace.first() == trace.last();
    let body = if closed {
        if w.len() < 4 {
            return false;
        }
        &trace[..trace.len() - 1]
    } else {
        &trace[..]
    };
    let mut seen = HashSet::with_capacity(body.len());
    body.iter().all(|p| seen.insert(*p))
}

/// `length(evaluate(w))`, convenience for callers holding words.
pub fn word_length(w: &Word) -> u64 {
    length(evaluate(w))
}
