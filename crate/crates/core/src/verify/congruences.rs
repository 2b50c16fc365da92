use std::collections::HashSet;

use super::oracle::{equalizer_search, left_unit, right_unit};
use super::{Report, VerifyConfig};
use crate::congruence::{green_d, green_h, green_l, green_r, mg_image, mg_related, simple_witness};
use crate::equations::enumerate_elements;
use crate::isometry::Isometry;

pub(super) fn group_congruence(cfg: &VerifyConfig, r: &mut Report) {
    const MAX_WITNESS_TAIL: u64 = 12;
    let pool = enumerate_elements(cfg.bounds);
    for g in &pool {
        for d in &pool {
            let gd = g.compose(d);
            r.check(mg_image(&gd) == mg_image(g) + mg_image(d), || {
                format!("image of {g}·{d} is not the sum")
            });
        }
    }
    for c in 0..=cfg.bounds.max_offset {
        r.check(mg_image(&Isometry::alpha_pow(c)) == c as i64, || {
            format!("α^{c} misses {c}")
        });
        r.check(mg_image(&Isometry::beta_pow(c)) == -(c as i64), || {
            format!("β^{c} misses -{c}")
        });
    }
    for i in 0..=cfg.max_i {
        for j in 0..=cfg.max_i {
            let g = Isometry::bicyclic(i, j);
            let pure = if j >= i {
                Isometry::alpha_pow(j - i)
            } else {
                Isometry::beta_pow(i - j)
            };
            r.check(
                mg_image(&g) == j as i64 - i as i64 && mg_related(&g, &pure).is_some(),
                || format!("β^{i}α^{j} is not congruent to its pure shift"),
            );
        }
    }

    let small = enumerate_elements(cfg.small);
    let mut related = Vec::new();
    for g in &small {
        for d in &small {
            let decided = mg_related(g, d);
            let searched = equalizer_search(g, d, MAX_WITNESS_TAIL);
            let decided_m = decided.as_ref().map(Isometry::min_dom);
            r.check(decided_m == searched, || {
                format!("{g} ~ {d}: decided witness {decided_m:?}, search {searched:?}")
            });
            if let Some(e) = decided {
                r.check(e.is_idempotent() && e.compose(g) == e.compose(d), || {
                    format!("witness {e} does not equalize {g} and {d}")
                });
                related.push((g, d));
            }
        }
    }
    // Compatibility with multiplication on both sides.
    for (g, d) in &related {
        for c in &small {
            r.check(mg_related(&c.compose(g), &c.compose(d)).is_some(), || {
                format!("{c}·{g} and {c}·{d} are not congruent")
            });
            r.check(mg_related(&g.compose(c), &d.compose(c)).is_some(), || {
                format!("{g}·{c} and {d}·{c} are not congruent")
            });
        }
    }
    r.note(format!(
        "{} congruent pairs at {}",
        related.len(),
        cfg.small
    ));
}

pub(super) fn simplicity(cfg: &VerifyConfig, r: &mut Report) {
    let small = enumerate_elements(cfg.small);
    for g in &small {
        for d in &small {
            let (u, v) = simple_witness(g, d);
            r.check(&u.compose(g).compose(&v) == d, || {
                format!("witness for ({g}, {d}) gives {u}·{g}·{v}")
            });
        }
    }
}

pub(super) fn green(cfg: &VerifyConfig, r: &mut Report) {
    let small = enumerate_elements(cfg.small);
    let wide = enumerate_elements(cfg.wide);
    // g D d iff some x has x·x⁻¹ = g·g⁻¹ and x⁻¹·x = d⁻¹·d.
    let links: HashSet<(Isometry, Isometry)> =
        wide.iter().map(|x| (left_unit(x), right_unit(x))).collect();
    for g in &small {
        for d in &small {
            let rr = left_unit(g) == left_unit(d);
            let ll = right_unit(g) == right_unit(d);
            let dd = links.contains(&(left_unit(g), right_unit(d)));
            r.check(green_r(g, d) == rr, || format!("R on ({g}, {d})"));
            r.check(green_l(g, d) == ll, || format!("L on ({g}, {d})"));
            r.check(green_h(g, d) == (rr && ll), || format!("H on ({g}, {d})"));
            r.check(green_d(g, d) == dd, || format!("D on ({g}, {d})"));
            r.check(green_d(g, d) == green_d(d, g), || {
                format!("D is not symmetric on ({g}, {d})")
            });
        }
        r.check(green_d(g, g), || format!("D is not reflexive at {g}"));
    }
    // Transitivity through the D-classes: classes found greedily must be
    // cliques, and separate classes must not touch.
    let mut classes: Vec<Vec<&Isometry>> = Vec::new();
    for g in &small {
        match classes.iter_mut().find(|c| green_d(c[0], g)) {
            Some(c) => c.push(g),
            None => classes.push(vec![g]),
        }
    }
    for (ci, c) in classes.iter().enumerate() {
        for g in c {
            for d in c {
                r.check(green_d(g, d), || format!("D is not transitive: {g}, {d}"));
            }
            for other in &classes[ci + 1..] {
                r.check(!green_d(g, other[0]), || {
                    format!("D classes of {g} and {} touch", other[0])
                });
            }
        }
    }
    r.note(format!("{} D-classes at {}", classes.len(), cfg.small));
}
