use std::collections::HashSet;

use super::oracle::conjugates;
use super::{Report, VerifyConfig};
use crate::equations::enumerate_elements;
use crate::isometry::{Coset, Isometry};
use crate::orders::{
    commute_eps, conjugate_down, conjugate_up, coset_of, ll_leq, ll_offset, natural_leq,
    ChainCursor, Clause, Eps, OrderError,
};
use crate::wordlang::eval_str;
use crate::zerotop::ZElem;

/// The generator power and the index of the idempotent on the far side, from
/// the identity itself; `None` when the far index would be negative.
fn expected_rewrite(clause: Clause, p: u64, i: u64) -> (Isometry, Option<u64>) {
    match clause {
        Clause::AlphaLeft => (Isometry::alpha().pow(p), i.checked_sub(p)),
        Clause::BetaLeft => (Isometry::beta().pow(p), Some(i + p)),
        Clause::AlphaRight => (Isometry::alpha().pow(p), Some(i + p)),
        Clause::BetaRight => (Isometry::beta().pow(p), i.checked_sub(p)),
    }
}

pub(super) fn commutation(cfg: &VerifyConfig, r: &mut Report) {
    const MAX_N0: u64 = 6;
    let cosets: Vec<Coset> = Coset::all_up_to(MAX_N0)
        .into_iter()
        .filter(|c| c.a().len() <= 2)
        .collect();
    let mut violations = 0;
    for coset in &cosets {
        for i in 0..=cfg.max_i {
            let eps = Eps::new(coset.clone(), i);
            for clause in Clause::ALL {
                for p in 0..=cfg.max_i {
                    let (gen, far) = expected_rewrite(clause, p, i);
                    let ctx = || format!("{clause:?} p={p} on {eps}");
                    match (commute_eps(clause, p, &eps), far) {
                        (Err(OrderError::BoundViolation { .. }), None) => {
                            violations += 1;
                            r.check(true, ctx);
                        }
                        (Err(e), Some(_)) => {
                            r.check(false, || format!("{}: unexpected {e}", ctx()))
                        }
                        (Ok(_), None) => {
                            r.check(false, || format!("{}: bound violation not raised", ctx()))
                        }
                        (Ok(rw), Some(k)) => {
                            let before = coset.epsilon(i);
                            let after = coset.epsilon(k);
                            let (lhs, rhs) = match clause {
                                Clause::AlphaLeft | Clause::BetaLeft => {
                                    (gen.compose(&before), after.compose(&gen))
                                }
                                Clause::AlphaRight | Clause::BetaRight => {
                                    (before.compose(&gen), gen.compose(&after))
                                }
                            };
                            r.check(lhs == rhs, || format!("{}: sides differ", ctx()));
                            r.check(
                                rw.after.i == k && rw.lhs() == lhs && rw.rhs() == rhs,
                                || format!("{}: rewrite disagrees with direct composition", ctx()),
                            );
                            let (wl, wr) = rw.words();
                            let same =
                                |w: &str, x: &Isometry| eval_str(w) == Ok(ZElem::Elem(x.clone()));
                            r.check(same(&wl, &lhs) && same(&wr, &rhs), || {
                                format!(
                                    "{}: words `{wl}` = `{wr}` do not evaluate to the sides",
                                    ctx()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    r.note(format!(
        "{} cosets, i and powers ≤ {}, {violations} bound violations raised",
        cosets.len(),
        cfg.max_i
    ));
}

pub(super) fn orders(cfg: &VerifyConfig, r: &mut Report) {
    const MAX_CONJUGATION: u64 = 10;
    let pool = enumerate_elements(cfg.bounds);
    let n = pool.len();
    let conj: Vec<Vec<Isometry>> = pool
        .iter()
        .map(|d| conjugates(d, MAX_CONJUGATION))
        .collect();

    // below[d] = indices of g with g ≪ d.
    let mut below: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for (gi, g) in pool.iter().enumerate() {
        for (di, d) in pool.iter().enumerate() {
            let decided = ll_offset(g, d);
            let searched = conj[di].iter().position(|c| c == g).map(|k| k as u64);
            r.check(decided == searched, || {
                format!("{g} ≪ {d}: decided {decided:?}, search found {searched:?}")
            });
            if decided.is_some() {
                below[di].insert(gi);
            }
        }
    }
    for (gi, g) in pool.iter().enumerate() {
        r.check(below[gi].contains(&gi), || format!("{g} ≪ {g} fails"));
    }
    for d in 0..n {
        for &g in &below[d] {
            r.check(g == d || !below[g].contains(&d), || {
                format!("{} and {} are mutually ≪", pool[g], pool[d])
            });
            r.check(coset_of(&pool[g]) == coset_of(&pool[d]), || {
                format!("{} ≪ {} across cosets", pool[g], pool[d])
            });
            for &h in &below[g] {
                r.check(below[d].contains(&h), || {
                    format!(
                        "{} ≪ {} ≪ {} without transitivity",
                        pool[h], pool[g], pool[d]
                    )
                });
            }
        }
    }
    // Maximal elements are those that cannot be conjugated up.
    for (gi, g) in pool.iter().enumerate() {
        let above = (0..n)
            .filter(|&d| d != gi && below[d].contains(&gi))
            .count();
        let liftable = conjugate_up(g, 1);
        r.check(
            (above == 0) == (g.min_dom() == 1 || g.min_ran() == 1),
            || format!("{g} has {above} strict upper bounds"),
        );
        if let Some(up) = liftable {
            r.check(ll_leq(g, &up) && &up != g, || {
                format!("{g} is not below its lift {up}")
            });
        }
    }

    // On the bicyclic submonoid ≪ is the natural order.
    const MAX_BICYCLIC: u64 = 8;
    for i in 0..=MAX_BICYCLIC {
        for j in 0..=MAX_BICYCLIC {
            let g = Isometry::bicyclic(i, j);
            for k in 0..=MAX_BICYCLIC {
                for l in 0..=MAX_BICYCLIC {
                    let d = Isometry::bicyclic(k, l);
                    let formula = i >= k && i - k == j.wrapping_sub(l) && j >= l;
                    r.check(
                        ll_leq(&g, &d) == formula && natural_leq(&g, &d) == formula,
                        || format!("β^{i}α^{j} vs β^{k}α^{l}: the orders disagree"),
                    );
                }
            }
        }
    }

    // The natural order against the existence of an idempotent factor
    // s = e·t; e = id(dom s) stays inside the enumeration.
    let small = enumerate_elements(cfg.small);
    let idempotents: Vec<&Isometry> = small.iter().filter(|e| e.is_idempotent()).collect();
    for s in &small {
        for t in &small {
            let searched = idempotents.iter().any(|e| &e.compose(t) == s);
            r.check(natural_leq(s, t) == searched, || {
                format!(
                    "{s} ≼ {t}: decided {}, search {searched}",
                    natural_leq(s, t)
                )
            });
        }
    }
    r.note(format!(
        "{n} elements at {}, {} at {}",
        cfg.bounds,
        small.len(),
        cfg.small
    ));
}

pub(super) fn chains(cfg: &VerifyConfig, r: &mut Report) {
    const LENGTH: usize = 20;
    const LIFTS: u64 = 5;
    let pool = enumerate_elements(cfg.bounds);
    for g in &pool {
        let chain: Vec<Isometry> = ChainCursor::new(g.clone()).take(LENGTH + 1).collect();
        let by_composition = conjugates(g, LENGTH as u64);
        r.check(chain == by_composition, || {
            format!("chain of {g} differs from βᵏ·γ·αᵏ")
        });
        for a in 0..chain.len() {
            for b in a + 1..chain.len() {
                r.check(
                    ll_leq(&chain[b], &chain[a]) && !ll_leq(&chain[a], &chain[b]),
                    || format!("chain of {g} is not strictly decreasing at ({a}, {b})"),
                );
            }
        }
        let cf = g.canonical_form();
        for (k, c) in chain.iter().enumerate() {
            let ccf = c.canonical_form();
            r.check(
                ccf.coset == cf.coset && ccf.i == cf.i + k as u64 && ccf.j == cf.j + k as u64,
                || format!("conjugate {k} of {g} left its coset"),
            );
        }
        // Everything below g in the pool is on the chain.
        for d in &pool {
            if ll_leq(d, g) {
                r.check(chain.contains(d), || {
                    format!("{d} ≪ {g} but is not on the chain")
                });
            }
        }
        for i in 0..=LIFTS {
            let lifted = Isometry::alpha_pow(i)
                .compose(g)
                .compose(&Isometry::beta_pow(i));
            // Without clipping the lift is the conjugate above g; with
            // clipping it only stays above g inside the bicyclic submonoid.
            let unclipped = cf.i >= i && cf.j >= i;
            let expected = unclipped || g.is_bicyclic();
            r.check(ll_leq(g, &lifted) == expected, || {
                format!("↓{g} ⊆ ↓(α^{i}·γ·β^{i}) should be {expected}")
            });
            r.check(
                conjugate_up(g, i).as_ref() == unclipped.then_some(&lifted),
                || format!("conjugate_up({g}, {i}) disagrees with composition"),
            );
            for c in chain.iter().take(LIFTS as usize) {
                let pushed = conjugate_down(c, i);
                r.check(ll_leq(&pushed, g), || {
                    format!("β^{i}·{c}·α^{i} escaped ↓{g}")
                });
            }
        }
    }

    // s₁·η·s₂ ≪ s₁·γ·s₂ whenever η ≪ γ and the product stays in γ's coset.
    let m = cfg.bounds.max_offset;
    let bicyclic: Vec<Isometry> = (0..=m)
        .flat_map(|i| (0..=m).map(move |j| Isometry::bicyclic(i, j)))
        .collect();
    let mut in_coset = 0u64;
    for g in &pool {
        let coset = coset_of(g);
        let below: Vec<Isometry> = (1..=LIFTS).map(|k| conjugate_down(g, k)).collect();
        for s1 in &bicyclic {
            let left = s1.compose(g);
            for s2 in &bicyclic {
                let p = left.compose(s2);
                if coset_of(&p) != coset {
                    continue;
                }
                in_coset += 1;
                for eta in &below {
                    let q = s1.compose(eta).compose(s2);
                    r.check(ll_leq(&q, &p), || {
                        format!("{s1}·{eta}·{s2} is not ≪ {s1}·{g}·{s2}")
                    });
                }
            }
        }
    }
    r.note(format!(
        "{} chains of length {LENGTH}, {in_coset} in-coset sandwiches",
        pool.len()
    ));
}
