//! The natural partial order, the conjugation order `≪` and the cosets
//! `⟨A[n0)⟩` it lives in.
//!
//! `γ ≪ δ` holds when `γ = βᵏ·δ·αᵏ` for some `k ≥ 0`. It is decided here from
//! canonical forms: both elements must carry the same `(A, n0)` and their
//! offsets must differ by the same `k` on both sides.

use std::fmt;

use thiserror::Error;

use crate::isometry::{Coset, Isometry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("power {power} exceeds the offset i = {i}")]
    BoundViolation { power: u64, i: u64 },
}

/// `s ≼ t`: `s` is a restriction of `t`.
pub fn natural_leq(s: &Isometry, t: &Isometry) -> bool {
    s.shift() == t.shift() && s.dom().is_subset_of(t.dom())
}

/// `g ≪ d`.
pub fn ll_leq(g: &Isometry, d: &Isometry) -> bool {
    ll_offset(g, d).is_some()
}

/// The `k` with `g = βᵏ·d·αᵏ`, if any.
pub fn ll_offset(g: &Isometry, d: &Isometry) -> Option<u64> {
    let (cg, cd) = (g.canonical_form(), d.canonical_form());
    if cg.coset != cd.coset || cg.i < cd.i {
        return None;
    }
    let k = cg.i - cd.i;
    (cg.j.checked_sub(cd.j) == Some(k)).then_some(k)
}

/// `βᵏ·g·αᵏ`: the same translation on `dom g + k`.
pub fn conjugate_down(g: &Isometry, k: u64) -> Isometry {
    let dom = g
        .dom()
        .translate(k as i64)
        .expect("translating up stays in ℕ");
    Isometry::new(dom, g.shift()).expect("translating up keeps the range in ℕ")
}

/// `αᵏ·g·βᵏ` when it lies above `g`, i.e. when both `min dom - 1` and
/// `min ran - 1` are at least `k`.
pub fn conjugate_up(g: &Isometry, k: u64) -> Option<Isometry> {
    if g.min_dom() <= k || g.min_ran() <= k {
        return None;
    }
    let dom = g.dom().translate(-(k as i64)).ok()?;
    Isometry::new(dom, g.shift()).ok()
}

/// The `(A, n0)` of the canonical form; bicyclic for elements of `𝒞ℕ`.
pub fn coset_of(g: &Isometry) -> Coset {
    g.canonical_form().coset
}

/// Lazy walk down `↓≪γ`: yields `βᵏ·γ·αᵏ` for `k = index, index + 1, ...`.
#[derive(Debug, Clone)]
pub struct ChainCursor {
    base: Isometry,
    index: u64,
}

impl ChainCursor {
    pub fn new(base: Isometry) -> Self {
        ChainCursor { base, index: 0 }
    }

    pub fn base(&self) -> &Isometry {
        &self.base
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn element(&self, k: u64) -> Isometry {
        conjugate_down(&self.base, k)
    }
}

impl Iterator for ChainCursor {
    type Item = Isometry;

    fn next(&mut self) -> Option<Isometry> {
        let out = self.element(self.index);
        self.index += 1;
        Some(out)
    }
}

/// Which way an idempotent is pushed past a power of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// `αᵖ·ε[i) = ε[i-p)·αᵖ`, needs `p ≤ i`.
    AlphaLeft,
    /// `βᵠ·ε[i) = ε[i+q)·βᵠ`.
    BetaLeft,
    /// `ε[i)·αᵖ = αᵖ·ε[i+p)`.
    AlphaRight,
    /// `ε[i)·βᵠ = βᵠ·ε[i-q)`, needs `q ≤ i`.
    BetaRight,
}

impl Clause {
    pub const ALL: [Clause; 4] = [
        Clause::AlphaLeft,
        Clause::BetaLeft,
        Clause::AlphaRight,
        Clause::BetaRight,
    ];

    fn letter(self) -> char {
        match self {
            Clause::AlphaLeft | Clause::AlphaRight => 'a',
            Clause::BetaLeft | Clause::BetaRight => 'b',
        }
    }

    fn generator_first(self) -> bool {
        matches!(self, Clause::AlphaLeft | Clause::BetaLeft)
    }
}

/// An idempotent `ε[i)` of a fixed coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Eps {
    pub coset: Coset,
    pub i: u64,
}

impl Eps {
    pub fn new(coset: Coset, i: u64) -> Self {
        Eps { coset, i }
    }

    pub fn element(&self) -> Isometry {
        self.coset.epsilon(self.i)
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coset.is_bicyclic() {
            write!(f, "b^{} a^{}", self.i, self.i)
        } else {
            write!(f, "eps({})[{})", self.coset, self.i)
        }
    }
}

/// One application of a commutation identity: `before` and `after` are the
/// idempotents on the two sides of the generator power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub clause: Clause,
    pub power: u64,
    pub before: Eps,
    pub after: Eps,
}

impl Rewrite {
    fn generator(&self) -> Isometry {
        match self.clause.letter() {
            'a' => Isometry::alpha_pow(self.power),
            _ => Isometry::beta_pow(self.power),
        }
    }

    fn generator_word(&self) -> String {
        format!("{}^{}", self.clause.letter(), self.power)
    }

    /// The side containing `before`.
    pub fn lhs(&self) -> Isometry {
        let (g, e) = (self.generator(), self.before.element());
        if self.clause.generator_first() {
            g.compose(&e)
        } else {
            e.compose(&g)
        }
    }

    pub fn rhs(&self) -> Isometry {
        let (g, e) = (self.generator(), self.after.element());
        if self.clause.generator_first() {
            e.compose(&g)
        } else {
            g.compose(&e)
        }
    }

    /// Both sides as words in the textual element syntax.
    pub fn words(&self) -> (String, String) {
        let g = self.generator_word();
        if self.clause.generator_first() {
            (
                format!("{g} {}", self.before),
                format!("{} {g}", self.after),
            )
        } else {
            (
                format!("{} {g}", self.before),
                format!("{g} {}", self.after),
            )
        }
    }
}

/// Moves `ε[i)` past a generator power according to `clause`.
pub fn commute_eps(clause: Clause, power: u64, eps: &Eps) -> Result<Rewrite, OrderError> {
    let i = match clause {
        Clause::AlphaLeft | Clause::BetaRight => eps
            .i
            .checked_sub(power)
            .ok_or(OrderError::BoundViolation { power, i: eps.i })?,
        Clause::BetaLeft | Clause::AlphaRight => eps.i + power,
    };
    Ok(Rewrite {
        clause,
        power,
        before: eps.clone(),
        after: Eps::new(eps.coset.clone(), i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cofinite::CofiniteSet;

    fn ba(i: u64, j: u64) -> Isometry {
        Isometry::bicyclic(i, j)
    }

    fn sample() -> Isometry {
        Isometry::new(CofiniteSet::new([2], 4).unwrap(), 2).unwrap()
    }

    fn coset(a: &[u64], n0: u64) -> Coset {
        Coset::new(a.to_vec(), n0).unwrap()
    }

    #[test]
    fn natural_order_examples() {
        assert!(natural_leq(&ba(1, 1), &Isometry::identity()));
        assert!(!natural_leq(&Isometry::alpha(), &Isometry::beta()));
        assert!(natural_leq(&ba(2, 3), &ba(1, 2)));
        assert!(!natural_leq(&ba(1, 2), &ba(2, 3)));
    }

    #[test]
    fn conjugation_order_examples() {
        let g = sample();
        let down = Isometry::beta_pow(2)
            .compose(&g)
            .compose(&Isometry::alpha_pow(2));
        assert!(ll_leq(&down, &g));
        assert_eq!(ll_offset(&down, &g), Some(2));
        assert!(!ll_leq(&g, &down));

        let c = coset(&[1], 3);
        assert!(ll_leq(&c.epsilon(5), &c.epsilon(3)));
        assert!(!ll_leq(&c.epsilon(3), &c.epsilon(5)));

        let other = coset(&[1], 4);
        assert!(!ll_leq(&other.epsilon(5), &c.epsilon(3)));
        assert!(!ll_leq(&ba(4, 4), &c.epsilon(3)));
    }

    #[test]
    fn conjugate_down_examples() {
        let g = sample();
        assert_eq!(conjugate_down(&g, 0), g);
        let c = coset(&[1, 2], 5);
        for i in 0..4 {
            for k in 0..4 {
                assert_eq!(conjugate_down(&c.epsilon(i), k), c.epsilon(i + k));
            }
        }
        assert_eq!(
            conjugate_down(&Isometry::identity(), 1),
            Isometry::identity_of(CofiniteSet::ray(2))
        );
        let via_words = Isometry::beta_pow(3)
            .compose(&g)
            .compose(&Isometry::alpha_pow(3));
        assert_eq!(conjugate_down(&g, 3), via_words);
    }

    #[test]
    fn conjugate_up_examples() {
        assert_eq!(conjugate_up(&ba(2, 3), 1), Some(ba(1, 2)));
        assert_eq!(
            Isometry::alpha()
                .compose(&ba(2, 3))
                .compose(&Isometry::beta()),
            ba(1, 2)
        );
        assert_eq!(conjugate_up(&Isometry::identity(), 1), None);
        let g = sample();
        for k in 0..6 {
            assert_eq!(conjugate_up(&conjugate_down(&g, k), k), Some(g.clone()));
        }
        assert_eq!(conjugate_up(&g, 2), None);
    }

    #[test]
    fn cosets() {
        assert_eq!(coset_of(&ba(3, 1)), Coset::bicyclic());
        assert_eq!(coset_of(&sample()), coset(&[1], 3));
        let g = sample();
        for h in ChainCursor::new(g.clone()).take(10) {
            assert_eq!(coset_of(&h), coset_of(&g));
        }
    }

    #[test]
    fn chain_cursor_walks_down() {
        let mut cur = ChainCursor::new(sample());
        let first = cur.next().unwrap();
        let second = cur.next().unwrap();
        assert_eq!(first, sample());
        assert!(ll_leq(&second, &first) && second != first);
        assert_eq!(cur.index(), 2);
    }

    #[test]
    fn commutation_examples() {
        let e = Eps::new(coset(&[1], 3), 1);
        let r = commute_eps(Clause::BetaLeft, 2, &e).unwrap();
        assert_eq!(r.after.i, 3);
        assert_eq!(r.lhs(), r.rhs());
        assert_eq!(
            r.words(),
            (
                "b^2 eps(A={1};n0=3)[1)".to_string(),
                "eps(A={1};n0=3)[3) b^2".to_string()
            )
        );

        let e = Eps::new(coset(&[1, 3], 5), 4);
        let r = commute_eps(Clause::AlphaLeft, 4, &e).unwrap();
        assert_eq!(r.after.i, 0);
        assert_eq!(r.lhs(), r.rhs());

        assert_eq!(
            commute_eps(Clause::BetaRight, 2, &Eps::new(coset(&[1], 3), 1)),
            Err(OrderError::BoundViolation { power: 2, i: 1 })
        );
        assert!(commute_eps(Clause::AlphaRight, 9, &Eps::new(coset(&[1], 3), 0)).is_ok());
    }
}
