use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::oracle::{agrees_pointwise, pointwise};
use super::{Report, VerifyConfig};
use crate::equations::enumerate_elements;
use crate::isometry::{CanonicalForm, Coset, Isometry};

pub(super) fn inverse_monoid(cfg: &VerifyConfig, r: &mut Report) {
    let pool = enumerate_elements(cfg.bounds);
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let [x, y, z] = [0; 3].map(|_| &pool[rng.gen_range(0..pool.len())]);
        r.check(x.compose(y).compose(z) == x.compose(&y.compose(z)), || {
            format!("({x})({y})({z}) not associative")
        });
    }

    let small = enumerate_elements(cfg.small);
    let table: Vec<Vec<Isometry>> = small
        .iter()
        .map(|x| small.iter().map(|y| x.compose(y)).collect())
        .collect();
    for (i, x) in small.iter().enumerate() {
        for (j, y) in small.iter().enumerate() {
            for (k, z) in small.iter().enumerate() {
                r.check(table[i][j].compose(z) == x.compose(&table[j][k]), || {
                    format!("({x})({y})({z}) not associative")
                });
            }
            // Every point beyond the window behaves like the tail.
            let upto = 2 * cfg.small.window_end() + 2 * cfg.small.max_offset;
            r.check(
                agrees_pointwise(&table[i][j], |n| pointwise(x, y, n), upto),
                || format!("({x})({y}) disagrees with pointwise composition"),
            );
        }
    }

    let unit = Isometry::identity();
    for x in &pool {
        let inv = x.invert();
        r.check(&x.compose(&inv).compose(x) == x, || {
            format!("x x⁻¹ x ≠ x for {x}")
        });
        r.check(inv.compose(x).compose(&inv) == inv, || {
            format!("x⁻¹ x x⁻¹ ≠ x⁻¹ for {x}")
        });
        r.check(&inv.invert() == x, || format!("(x⁻¹)⁻¹ ≠ x for {x}"));
        r.check(
            x.compose(&inv) == Isometry::identity_of(x.dom().clone()),
            || format!("x x⁻¹ is not the identity of dom x for {x}"),
        );
        r.check(&unit.compose(x) == x && &x.compose(&unit) == x, || {
            format!("unit fails on {x}")
        });
        let pointwise_inverse = (1..=cfg.bounds.window_end() * 2)
            .filter_map(|n| x.eval(n).map(|m| (n, m)))
            .all(|(n, m)| inv.eval(m) == Some(n));
        r.check(pointwise_inverse, || format!("x⁻¹ does not undo {x}"));
    }

    // Idempotents commute, so the inverse is unique.
    let idempotents: Vec<&Isometry> = pool.iter().filter(|x| x.is_idempotent()).collect();
    for e in &idempotents {
        r.check(&e.compose(e) == *e, || format!("{e} is not idempotent"));
        for f in &idempotents {
            r.check(e.compose(f) == f.compose(e), || {
                format!("{e} and {f} do not commute")
            });
        }
    }
    r.note(format!(
        "{} elements at {}, {} at {}, {} sampled triples",
        pool.len(),
        cfg.bounds,
        small.len(),
        cfg.small,
        cfg.samples
    ));
}

/// Membership in `i + A[n0)`, straight from the definition.
fn in_shifted_coset(coset: &Coset, i: u64, x: u64) -> bool {
    if x <= i {
        return false;
    }
    let y = x - i;
    if coset.is_bicyclic() {
        true
    } else {
        coset.a().contains(&y) || y >= coset.n0()
    }
}

pub(super) fn canonical_form(cfg: &VerifyConfig, r: &mut Report) {
    let pool = enumerate_elements(cfg.bounds);
    for g in &pool {
        let cf = g.canonical_form();
        r.check(&cf.rebuild() == g, || {
            format!("rebuild of the form of {} differs", g.iso_notation())
        });
        r.check(cf.i == g.min_dom() - 1 && cf.j == g.min_ran() - 1, || {
            format!("offsets of {} are ({}, {})", g.iso_notation(), cf.i, cf.j)
        });
    }

    let m = cfg.bounds.max_offset;
    let cosets = Coset::all_up_to(cfg.bounds.window_end());
    let upto = 2 * cfg.bounds.window_end() + 2 * m;
    for coset in &cosets {
        for i in 0..=m {
            for j in 0..=m {
                let cf = CanonicalForm::new(coset.clone(), i, j);
                let g = cf.rebuild();
                r.check(g.canonical_form() == cf, || {
                    format!("form {cf} does not survive a round trip")
                });
                let by_definition = |x: u64| in_shifted_coset(coset, i, x).then(|| x - i + j);
                r.check(agrees_pointwise(&g, by_definition, upto), || {
                    format!("{cf} is not the translation of i + A[n0)")
                });
                let left = coset.epsilon(i).compose(&Isometry::bicyclic(i, j));
                let right = Isometry::bicyclic(i, j).compose(&coset.epsilon(j));
                r.check(left == g && right == g, || {
                    format!("the two factorizations of {cf} differ")
                });
                for k in 0..=i.min(j) {
                    let short = Isometry::bicyclic(i - k, j - k);
                    r.check(coset.epsilon(i).compose(&short) == g, || {
                        format!("ε[{i}) β^{} α^{} ≠ {cf}", i - k, j - k)
                    });
                    r.check(short.compose(&coset.epsilon(j)) == g, || {
                        format!("β^{} α^{} ε[{j}) ≠ {cf}", i - k, j - k)
                    });
                }
            }
        }
    }
    r.note(format!(
        "{} cosets with n0 ≤ {}",
        cosets.len(),
        cfg.bounds.window_end()
    ));
}

pub(super) fn bicyclic(_cfg: &VerifyConfig, r: &mut Report) {
    const MAX: u64 = 8;
    let alpha = Isometry::alpha();
    let beta = Isometry::beta();
    let by_generators = |i: u64, j: u64| beta.pow(i).compose(&alpha.pow(j));
    for k in 0..=MAX {
        for l in 0..=MAX {
            r.check(by_generators(k, l) == Isometry::bicyclic(k, l), || {
                format!("β^{k} α^{l} differs from the generator product")
            });
            for m in 0..=MAX {
                for n in 0..=MAX {
                    let lhs = by_generators(k, l).compose(&by_generators(m, n));
                    let t = l.min(m);
                    let rhs = Isometry::bicyclic(k + m - t, l + n - t);
                    r.check(lhs == rhs, || {
                        format!("β^{k}α^{l}·β^{m}α^{n} = {lhs}, expected {rhs}")
                    });
                }
            }
        }
    }
    r.check(alpha.compose(&beta) == Isometry::identity(), || {
        "αβ ≠ 𝕀".into()
    });
    r.check(beta.compose(&alpha) != Isometry::identity(), || {
        "βα = 𝕀".into()
    });
}
