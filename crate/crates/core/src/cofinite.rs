//! Cofinite subsets of the positive integers.
//!
//! A [`CofiniteSet`] is stored as a finite part together with the start of an
//! unbroken tail, `finite ∪ [tail, ∞)`. The representation is kept normalized:
//! the tail start is as small as possible, so `tail - 1` is never a member
//! (unless `tail == 1`, which encodes all of ℕ). Structural equality is
//! therefore set equality.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CofiniteError {
    #[error("0 is not a positive integer")]
    ZeroMember,
    #[error("translating by {shift} moves {member} out of the positive integers")]
    Underflow { member: u64, shift: i64 },
    #[error("malformed cofinite set `{0}`")]
    Malformed(String),
}

/// `finite ∪ [tail, ∞)` with `finite` sorted ascending and every member
/// strictly below `tail - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CofiniteSet {
    // Field order matters for the derived `Ord`: tails first, then finite parts.
    tail: u64,
    finite: Vec<u64>,
}

impl CofiniteSet {
    /// All of ℕ.
    pub fn naturals() -> Self {
        CofiniteSet {
            tail: 1,
            finite: Vec::new(),
        }
    }

    /// The ray `[start, ∞)`. A start of 0 is clamped to 1.
    pub fn ray(start: u64) -> Self {
        CofiniteSet {
            tail: start.max(1),
            finite: Vec::new(),
        }
    }

    /// Builds `finite ∪ [tail, ∞)` in normalized form.
    pub fn new<I>(finite: I, tail: u64) -> Result<Self, CofiniteError>
    where
        I: IntoIterator<Item = u64>,
    {
        if tail == 0 {
            return Err(CofiniteError::ZeroMember);
        }
        let mut members: Vec<u64> = Vec::new();
        for m in finite {
            if m == 0 {
                return Err(CofiniteError::ZeroMember);
            }
            if m < tail {
                members.push(m);
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self::normalized(members, tail))
    }

    /// `members` must be sorted, deduplicated, positive and below `tail`.
    fn normalized(mut members: Vec<u64>, mut tail: u64) -> Self {
        while tail > 1 && members.last() == Some(&(tail - 1)) {
            members.pop();
            tail -= 1;
        }
        CofiniteSet {
            tail,
            finite: members,
        }
    }

    pub fn finite_part(&self) -> &[u64] {
        &self.finite
    }

    pub fn tail_start(&self) -> u64 {
        self.tail
    }

    pub fn is_naturals(&self) -> bool {
        self.tail == 1
    }

    /// True when the set is a single ray `[t, ∞)`.
    pub fn is_ray(&self) -> bool {
        self.finite.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.tail || self.finite.binary_search(&n).is_ok()
    }

    pub fn min_member(&self) -> u64 {
        self.finite.first().copied().unwrap_or(self.tail)
    }

    pub fn intersect(&self, other: &CofiniteSet) -> CofiniteSet {
        // Below the larger tail only the finite part of the set owning that
        // tail can contribute.
        let (hi, lo) = if self.tail >= other.tail {
            (self, other)
        } else {
            (other, self)
        };
        let members = hi
            .finite
            .iter()
            .copied()
            .filter(|&m| lo.contains(m))
            .collect();
        Self::normalized(members, hi.tail)
    }

    pub fn union(&self, other: &CofiniteSet) -> CofiniteSet {
        let tail = self.tail.min(other.tail);
        let mut members: Vec<u64> = self
            .finite
            .iter()
            .chain(other.finite.iter())
            .copied()
            .filter(|&m| m < tail)
            .collect();
        members.sort_unstable();
        members.dedup();
        Self::normalized(members, tail)
    }

    /// `{x + c : x ∈ self}`; fails if some member would leave ℕ.
    pub fn translate(&self, shift: i64) -> Result<CofiniteSet, CofiniteError> {
        let min = self.min_member();
        let Some(moved_min) = add_signed(min, shift) else {
            return Err(CofiniteError::Underflow { member: min, shift });
        };
        debug_assert!(moved_min >= 1);
        let mv = |x: u64| add_signed(x, shift).expect("members above the minimum stay positive");
        Ok(CofiniteSet {
            tail: mv(self.tail),
            finite: self.finite.iter().map(|&x| mv(x)).collect(),
        })
    }

    /// `{x + c : x ∈ self} ∩ ℕ`, the part of the translate that stays positive.
    pub fn translate_clipped(&self, shift: i64) -> CofiniteSet {
        let tail = add_signed(self.tail, shift).unwrap_or(1);
        let members = self
            .finite
            .iter()
            .filter_map(|&x| add_signed(x, shift))
            .collect();
        Self::normalized(members, tail)
    }

    /// `ℕ ∖ self` in increasing order.
    pub fn complement_list(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.complement_len() as usize);
        let mut members = self.finite.iter().peekable();
        for n in 1..self.tail {
            if members.peek() == Some(&&n) {
                members.next();
            } else {
                out.push(n);
            }
        }
        out
    }

    pub fn complement_len(&self) -> u64 {
        self.tail - 1 - self.finite.len() as u64
    }

    /// Number of non-members `n ≥ from`.
    pub fn complement_count_from(&self, from: u64) -> u64 {
        let from = from.max(1);
        if from >= self.tail {
            return 0;
        }
        let members = self.finite.iter().filter(|&&m| m >= from).count() as u64;
        self.tail - from - members
    }

    pub fn is_subset_of(&self, other: &CofiniteSet) -> bool {
        // `other.tail - 1` is missing from `other`, so the ray of `self` must
        // already sit inside the ray of `other`.
        self.tail >= other.tail && self.finite.iter().all(|&m| other.contains(m))
    }
}

/// `x + c` if it is still a positive integer.
pub(crate) fn add_signed(x: u64, c: i64) -> Option<u64> {
    let y = (x as i128) + (c as i128);
    if y >= 1 && y <= u64::MAX as i128 {
        Some(y as u64)
    } else {
        None
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.finite.is_empty() {
            write!(f, "{{")?;
            for (k, m) in self.finite.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{m}")?;
            }
            write!(f, "}}+")?;
        }
        write!(f, "[{})", self.tail)
    }
}

impl FromStr for CofiniteSet {
    type Err = CofiniteError;

    /// Accepts `{m1,m2,...}+[t)` or `[t)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || CofiniteError::Malformed(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (finite, ray) = match compact.split_once('+') {
            Some((set, ray)) => {
                let inner = set
                    .strip_prefix('{')
                    .and_then(|x| x.strip_suffix('}'))
                    .ok_or_else(malformed)?;
                let members = if inner.is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|m| m.parse::<u64>().map_err(|_| malformed()))
                        .collect::<Result<Vec<_>, _>>()?
                };
                (members, ray)
            }
            None => (Vec::new(), compact.as_str()),
        };
        let tail = ray
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(malformed)?
            .parse::<u64>()
            .map_err(|_| malformed())?;
        CofiniteSet::new(finite, tail)
    }
}
