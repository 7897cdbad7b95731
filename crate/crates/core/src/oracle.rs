//! Brute-force ground truth computed directly on the Cayley graph.
//!
//! Nothing in here consults the closed-form length; the ball is built by
//! breadth-first search and everything else is read off the ball.

use std::collections::HashMap;

use crate::element::GroupElement;
use crate::error::{check_ceiling, Error, Result};
use crate::word::{Letter, Word};

/// Resource ceilings for the exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub ball_radius: u32,
    pub geodesic_length: u32,
    pub growth_nmax: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            ball_radius: 16,
            geodesic_length: 20,
            growth_nmax: 12,
        }
    }
}

/// Radius beyond which packed keys could collide.
pub const MAX_PACKABLE_RADIUS: u32 = 4096;

fn pack(g: &GroupElement) -> u64 {
    let n = (g.n + (1 << 15)) as u64;
    let m = (g.m + (1 << 15)) as u64;
    let k = (g.k + (1 << 31)) as u64;
    n << 48 | m << 32 | k
}

/// Every element within `radius` of the identity, with its distance.
#[derive(Clone, Debug)]
pub struct DistanceBall {
    radius: u32,
    table: HashMap<u64, u32>,
    spheres: Vec<Vec<GroupElement>>,
}

impl DistanceBall {
    /// Builds the ball of the given radius, subject to the ceiling in `limits`.
    pub fn new(radius: u32, limits: &Limits) -> Result<DistanceBall> {
        check_ceiling("ball radius", radius as u64, limits.ball_radius as u64)?;
        Ok(DistanceBall::unbounded(radius))
    }

    /// Builds the ball without consulting a ceiling (still bounded by key packing).
    pub fn unbounded(radius: u32) -> DistanceBall {
        assert!(
            radius <= MAX_PACKABLE_RADIUS,
            "radius {radius} too large to pack"
        );
        let mut ball = DistanceBall {
            radius: 0,
            table: HashMap::from([(pack(&GroupElement::IDENTITY), 0)]),
            spheres: vec![vec![GroupElement::IDENTITY]],
        };
        while ball.radius < radius {
            ball.grow();
        }
        ball
    }

    /// Adds the next sphere.
    pub fn grow(&mut self) {
        let next = self.radius + 1;
        let mut frontier = Vec::new();
        for g in &self.spheres[self.radius as usize] {
            for l in Letter::ALL {
                let h = g.step(l);
                let key = pack(&h);
                if let std::collections::hash_map::Entry::Vacant(e) = self.table.entry(key) {
                    e.insert(next);
                    frontier.push(h);
                }
            }
        }
        frontier.sort_unstable();
        self.spheres.push(frontier);
        self.radius = next;
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn distance(&self, g: &GroupElement) -> Option<u32> {
        if g.n.unsigned_abs() > MAX_PACKABLE_RADIUS as u64
            || g.m.unsigned_abs() > MAX_PACKABLE_RADIUS as u64
            || g.k.unsigned_abs() >= 1 << 31
        {
            return None;
        }
        self.table.get(&pack(g)).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.distance(g).is_some()
    }

    /// Elements at exactly distance `d`, sorted.
    pub fn sphere(&self, d: u32) -> &[GroupElement] {
        self.spheres.get(d as usize).map_or(&[], |s| s.as_slice())
    }

    /// `(element, distance)` pairs sorted by `(n, m, k)`.
    pub fn sorted_entries(&self) -> Vec<(GroupElement, u32)> {
        let mut out: Vec<_> = self
            .spheres
            .iter()
            .enumerate()
            .flat_map(|(d, s)| s.iter().map(move |g| (*g, d as u32)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Letters `s` with `d(g·s⁻¹) = d(g) − 1`, i.e. possible last letters of
    /// a geodesic for `g`.
    fn last_letters(&self, g: &GroupElement, d: u32) -> impl Iterator<Item = Letter> + '_ {
        let g = *g;
        Letter::ALL
            .into_iter()
            .filter(move |l| d > 0 && self.distance(&g.step(l.inverse())) == Some(d - 1))
    }

    /// All geodesic words for `g`, sorted lexicographically. `g` must lie in
    /// the ball.
    pub fn geodesics_to(&self, g: &GroupElement) -> Result<Vec<Word>> {
        let d = self.distance(g).ok_or(Error::Ceiling {
            what: "element distance beyond ball radius",
            requested: self.radius as u64 + 1,
            limit: self.radius as u64,
        })?;
        let mut out = Vec::new();
        let mut suffix = Vec::with_capacity(d as usize);
        self.collect_geodesics(*g, d, &mut suffix, &mut out);
        out.sort_unstable();
        Ok(out)
    }

    fn collect_geodesics(
        &self,
        g: GroupElement,
        d: u32,
        suffix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if d == 0 {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for l in self.last_letters(&g, d).collect::<Vec<_>>() {
            suffix.push(l);
            self.collect_geodesics(g.step(l.inverse()), d - 1, suffix, out);
            suffix.pop();
        }
    }

    /// Number of geodesic words for each element, by dynamic programming
    /// over the spheres.
    pub fn geodesic_counts(&self) -> HashMap<GroupElement, u64> {
        let mut counts = HashMap::with_capacity(self.table.len());
        counts.insert(GroupElement::IDENTITY, 1u64);
        for d in 1..=self.radius {
            for g in self.sphere(d) {
                let c = self
                    .last_letters(g, d)
                    .map(|l| counts[&g.step(l.inverse())])
                    .sum();
                counts.insert(*g, c);
            }
        }
        counts
    }

    /// Elements of distance at most `radius − 1` whose four neighbours are
    /// all strictly closer to the identity.
    pub fn dead_ends(&self) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for d in 1..self.radius {
            for g in self.sphere(d) {
                if Letter::ALL
                    .iter()
                    .all(|&l| self.distance(&g.step(l)).is_some_and(|e| e < d))
                {
                    out.push(*g);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub fn bfs_ball(radius: u32, limits: &Limits) -> Result<DistanceBall> {
    DistanceBall::new(radius, limits)
}

/// All geodesic words for `g`, growing a ball until `g` is reached.
pub fn enumerate_geodesics(g: GroupElement, limits: &Limits) -> Result<Vec<Word>> {
    let mut ball = DistanceBall::unbounded(0);
    while !ball.contains(&g) {
        if ball.radius() >= limits.geodesic_length {
            return Err(Error::Ceiling {
                what: "geodesic length",
                requested: ball.radius() as u64 + 1,
                limit: limits.geodesic_length as u64,
            });
        }
        ball.grow();
    }
    ball.geodesics_to(&g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: u32,
    /// Number of elements of length `n`.
    pub sphere: u64,
    /// Number of geodesic words of length `n`.
    pub gamma: u64,
}

/// γ(n) by depth-first search over words whose every prefix is geodesic.
pub fn gamma_by_prefix_search(ball: &DistanceBall, nmax: u32) -> Vec<u64> {
    fn dfs(ball: &DistanceBall, g: GroupElement, depth: u32, nmax: u32, gamma: &mut [u64]) {
        gamma[depth as usize] += 1;
        if depth == nmax {
            return;
        }
        for l in Letter::ALL {
            let h = g.step(l);
            if ball.distance(&h) == Some(depth + 1) {
                dfs(ball, h, depth + 1, nmax, gamma);
            }
        }
    }
    assert!(nmax <= ball.radius());
    let mut gamma = vec![0; nmax as usize + 1];
    dfs(ball, GroupElement::IDENTITY, 0, nmax, &mut gamma);
    gamma
}

/// Every geodesic word of length at most `nmax`, sorted by length and then
/// lexicographically.
pub fn geodesic_words(ball: &DistanceBall, nmax: u32) -> Vec<Word> {
    fn dfs(
        ball: &DistanceBall,
        g: GroupElement,
        prefix: &mut Word,
        nmax: u32,
        out: &mut Vec<Word>,
    ) {
        out.push(prefix.clone());
        let depth = prefix.len() as u32;
        if depth == nmax {
            return;
        }
        for l in Letter::ALL {
            let h = g.step(l);
            if ball.distance(&h) == Some(depth + 1) {
                prefix.push(l);
                dfs(ball, h, prefix, nmax, out);
                prefix.pop();
            }
        }
    }
    assert!(nmax <= ball.radius());
    let mut out = Vec::new();
    dfs(
        ball,
        GroupElement::IDENTITY,
        &mut Word::new(),
        nmax,
        &mut out,
    );
    out.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
    out
}

/// γ(n) by summing per-element geodesic counts over each sphere.
pub fn gamma_by_element_counts(ball: &DistanceBall, nmax: u32) -> Vec<u64> {
    assert!(nmax <= ball.radius());
    let counts = ball.geodesic_counts();
    (0..=nmax)
        .map(|d| ball.sphere(d).iter().map(|g| counts[g]).sum())
        .collect()
}

/// Sphere sizes and geodesic growth up to `nmax`. Both growth strategies are
/// run and must agree.
pub fn geodesic_growth(nmax: u32, limits: &Limits) -> Result<Vec<GrowthRow>> {
    check_ceiling("growth nmax", nmax as u64, limits.growth_nmax as u64)?;
    let ball = DistanceBall::unbounded(nmax);
    let by_prefix = gamma_by_prefix_search(&ball, nmax);
    let by_counts = gamma_by_element_counts(&ball, nmax);
    if by_prefix != by_counts {
        return Err(Error::Internal("growth strategies disagree"));
    }
    Ok((0..=nmax)
        .map(|n| GrowthRow {
            n,
            sphere: ball.sphere(n).len() as u64,
            gamma: by_prefix[n as usize],
        })
        .collect())
}

/// Dead-end elements of length at most `radius − 1`, read off the ball.
pub fn dead_end_census(radius: u32, limits: &Limits) -> Result<Vec<GroupElement>> {
    if radius < 2 {
        return Err(Error::InvalidArgument(format!(
            "dead-end census needs radius >= 2, got {radius}"
        )));
    }
    Ok(DistanceBall::new(radius, limits)?.dead_ends())
}
