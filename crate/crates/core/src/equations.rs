//! Bounded enumeration of elements and exact solvers for `a·x = b` and
//! `x·c = d`.
//!
//! In `a·x = b` the shift of `x` is forced and so is `dom x ∩ ran a`; the
//! points outside `ran a` never influence the product and may be chosen
//! freely. Solution sets are therefore finite, of size at most
//! `2^|ℕ ∖ ran a|`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cofinite::CofiniteSet;
use crate::isometry::Isometry;

/// Refuse to materialize more than `2^MAX_FREE_POINTS` solutions.
pub const MAX_FREE_POINTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquationError {
    #[error("{free} free points give 2^{free} solutions, above the limit of 2^{MAX_FREE_POINTS}")]
    TooManySolutions { free: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bounds must look like `K,M` with nonnegative integers, got `{0}`")]
pub struct BoundsParseError(String);

/// Desk-scale truncation of the monoid.
///
/// The induced set holds every element with at most `max_complement` points
/// missing from its domain, all of them below `max_complement + max_offset + 1`,
/// with `min dom ≤ max_offset + 1` and `|shift| ≤ max_offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumBounds {
    pub max_complement: u64,
    pub max_offset: u64,
}

impl EnumBounds {
    pub const fn new(max_complement: u64, max_offset: u64) -> Self {
        EnumBounds {
            max_complement,
            max_offset,
        }
    }

    /// Domains contain `[window_end)`.
    pub fn window_end(&self) -> u64 {
        self.max_complement + self.max_offset + 1
    }

    pub fn contains(&self, g: &Isometry) -> bool {
        g.dom().complement_len() <= self.max_complement
            && g.tail_dom() <= self.window_end()
            && g.min_dom() <= self.max_offset + 1
            && g.shift().unsigned_abs() <= self.max_offset
    }
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds::new(3, 4)
    }
}

impl fmt::Display for EnumBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.max_complement, self.max_offset)
    }
}

impl FromStr for EnumBounds {
    type Err = BoundsParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "default" {
            return Ok(EnumBounds::default());
        }
        let err = || BoundsParseError(s.to_string());
        let (k, m) = s.split_once(',').ok_or_else(err)?;
        Ok(EnumBounds::new(
            k.trim().parse().map_err(|_| err())?,
            m.trim().parse().map_err(|_| err())?,
        ))
    }
}

/// Every element inside `bounds`, ordered by complement of the domain (by
/// size, then lexicographically) and then by shift.
pub fn enumerate_elements(bounds: EnumBounds) -> Vec<Isometry> {
    let window: Vec<u64> = (1..bounds.window_end()).collect();
    let mut out = Vec::new();
    let m = bounds.max_offset as i64;
    for size in 0..=bounds.max_complement.min(window.len() as u64) as usize {
        for missing in combinations(&window, size) {
            let dom = CofiniteSet::new(
                window.iter().copied().filter(|x| !missing.contains(x)),
                bounds.window_end(),
            )
            .expect("window members are positive");
            if dom.min_member() > bounds.max_offset + 1 {
                continue;
            }
            let lowest = 1 - dom.min_member() as i64;
            for shift in lowest.max(-m)..=m {
                out.push(Isometry::new(dom.clone(), shift).expect("shift kept the range in ℕ"));
            }
        }
    }
    out
}

/// All `k`-subsets of `items`, in lexicographic order.
fn combinations(items: &[u64], k: usize) -> Vec<Vec<u64>> {
    fn go(items: &[u64], k: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for idx in start..items.len() {
            if items.len() - idx < k - cur.len() {
                break;
            }
            cur.push(items[idx]);
            go(items, k, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `{x : a·x = b}`, sorted by textual form.
pub fn solve_left(a: &Isometry, b: &Isometry) -> Result<Vec<Isometry>, EquationError> {
    if !b.dom().is_subset_of(a.dom()) {
        return Ok(Vec::new());
    }
    let shift = b.shift() - a.shift();
    let required = b
        .dom()
        .translate(a.shift())
        .expect("dom b ⊆ dom a translates into ran a");
    // Points of ℕ ∖ ran a that x can map into ℕ.
    let lowest_free = (1 - shift).max(1) as u64;
    let ran = a.ran();
    let free_count = ran.complement_count_from(lowest_free);
    if free_count > MAX_FREE_POINTS as u64 {
        return Err(EquationError::TooManySolutions {
            free: free_count as usize,
        });
    }
    let free: Vec<u64> = ran
        .complement_list()
        .into_iter()
        .filter(|&z| z >= lowest_free)
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1 << free.len()) {
        let chosen = free
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &z)| z);
        let dom = CofiniteSet::new(
            required.finite_part().iter().copied().chain(chosen),
            required.tail_start(),
        )
        .expect("free points are positive");
        let Ok(x) = Isometry::new(dom, shift) else {
            continue;
        };
        if &a.compose(&x) == b {
            out.push(x);
        }
    }
    sort_by_text(&mut out);
    Ok(out)
}

/// `{x : x·c = d}`, via `x·c = d ⟺ c⁻¹·x⁻¹ = d⁻¹`.
pub fn solve_right(c: &Isometry, d: &Isometry) -> Result<Vec<Isometry>, EquationError> {
    let mut out: Vec<Isometry> = solve_left(&c.invert(), &d.invert())?
        .iter()
        .map(Isometry::invert)
        .collect();
    sort_by_text(&mut out);
    Ok(out)
}

fn sort_by_text(xs: &mut [Isometry]) {
    xs.sort_by_cached_key(|x| x.to_string());
}
