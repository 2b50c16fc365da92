//! Reference computations that share no code path with the decision
//! procedures they check.

use std::collections::HashMap;

use crate::isometry::Isometry;

/// `n` pushed through `g` and then `d`, one point at a time.
pub(super) fn pointwise(g: &Isometry, d: &Isometry, n: u64) -> Option<u64> {
    g.eval(n).and_then(|m| d.eval(m))
}

/// Does `g` agree with `f` on `1..=upto`?
pub(super) fn agrees_pointwise(g: &Isometry, f: impl Fn(u64) -> Option<u64>, upto: u64) -> bool {
    (1..=upto).all(|n| g.eval(n) == f(n))
}

/// `βᵏ·d·αᵏ` for `k = 0..=max_k`, by composition.
pub(super) fn conjugates(d: &Isometry, max_k: u64) -> Vec<Isometry> {
    (0..=max_k)
        .map(|k| {
            Isometry::beta_pow(k)
                .compose(d)
                .compose(&Isometry::alpha_pow(k))
        })
        .collect()
}

/// The idempotent `g·g⁻¹`.
pub(super) fn left_unit(g: &Isometry) -> Isometry {
    g.compose(&g.invert())
}

/// The idempotent `g⁻¹·g`.
pub(super) fn right_unit(g: &Isometry) -> Isometry {
    g.invert().compose(g)
}

/// Least `m ≤ max_tail` such that the identity of `[m)` equalizes `g` and `d`
/// from the left.
pub(super) fn equalizer_search(g: &Isometry, d: &Isometry, max_tail: u64) -> Option<u64> {
    (1..=max_tail).find(|&m| {
        let e = Isometry::bicyclic(m - 1, m - 1);
        e.compose(g) == e.compose(d)
    })
}

/// For a fixed `g`, the members of a pool grouped by `g·x` and by `x·g`,
/// keeping only products accepted by `keep`.
pub(super) struct ProductIndex {
    left: HashMap<Isometry, Vec<usize>>,
    right: HashMap<Isometry, Vec<usize>>,
}

impl ProductIndex {
    pub(super) fn new(g: &Isometry, pool: &[Isometry], keep: impl Fn(&Isometry) -> bool) -> Self {
        let mut left: HashMap<Isometry, Vec<usize>> = HashMap::new();
        let mut right: HashMap<Isometry, Vec<usize>> = HashMap::new();
        for (idx, x) in pool.iter().enumerate() {
            let gx = g.compose(x);
            if keep(&gx) {
                left.entry(gx).or_default().push(idx);
            }
            let xg = x.compose(g);
            if keep(&xg) {
                right.entry(xg).or_default().push(idx);
            }
        }
        ProductIndex { left, right }
    }

    /// Indices of `x` with `g·x = b`.
    pub(super) fn left(&self, b: &Isometry) -> &[usize] {
        self.left.get(b).map_or(&[], Vec::as_slice)
    }

    /// Indices of `x` with `x·g = b`.
    pub(super) fn right(&self, b: &Isometry) -> &[usize] {
        self.right.get(b).map_or(&[], Vec::as_slice)
    }
}
