use std::collections::{BTreeSet, HashSet};

use super::oracle::ProductIndex;
use super::{Report, VerifyConfig};
use crate::equations::{enumerate_elements, solve_left, solve_right};
use crate::isometry::Isometry;
use crate::zerotop::{
    check_pair, shrink_neighborhood, symmetric_difference_check, zmul, CofiniteNbhd, Shrinker,
    ZElem,
};

fn inverted(xs: &[Isometry]) -> BTreeSet<Isometry> {
    xs.iter().map(Isometry::invert).collect()
}

pub(super) fn f_property(cfg: &VerifyConfig, r: &mut Report) {
    let small = enumerate_elements(cfg.small);
    let wide = enumerate_elements(cfg.wide);
    let keep: HashSet<&Isometry> = small.iter().collect();
    let mut outside = 0usize;
    let mut largest = 0usize;
    for a in &small {
        let index = ProductIndex::new(a, &wide, |p| keep.contains(p));
        let left_bound = 1usize << a.ran().complement_len();
        let right_bound = 1usize << a.dom().complement_len();
        for b in &small {
            let ctx = |side: &str| format!("{side} equation with a = {a}, b = {b}");
            let (left, right) = match (solve_left(a, b), solve_right(a, b)) {
                (Ok(l), Ok(rt)) => (l, rt),
                (l, rt) => {
                    r.check(false, || {
                        format!("{}: {:?} {:?}", ctx("solver"), l.err(), rt.err())
                    });
                    continue;
                }
            };
            largest = largest.max(left.len()).max(right.len());
            r.check(left.iter().all(|x| &a.compose(x) == b), || {
                format!("{}: a wrong solution", ctx("left"))
            });
            r.check(right.iter().all(|x| &x.compose(a) == b), || {
                format!("{}: a wrong solution", ctx("right"))
            });
            r.check(left.len() <= left_bound, || {
                format!("{}: {} solutions", ctx("left"), left.len())
            });
            r.check(right.len() <= right_bound, || {
                format!("{}: {} solutions", ctx("right"), right.len())
            });

            let brute: BTreeSet<&Isometry> = index.left(b).iter().map(|&i| &wide[i]).collect();
            let found: BTreeSet<&Isometry> = left.iter().filter(|x| cfg.wide.contains(x)).collect();
            outside += left.len() - found.len();
            r.check(brute == found, || {
                format!(
                    "{}: solver {} vs brute force {} inside {}",
                    ctx("left"),
                    found.len(),
                    brute.len(),
                    cfg.wide
                )
            });
            let brute: BTreeSet<&Isometry> = index.right(b).iter().map(|&i| &wide[i]).collect();
            let found: BTreeSet<&Isometry> =
                right.iter().filter(|x| cfg.wide.contains(x)).collect();
            outside += right.len() - found.len();
            r.check(brute == found, || {
                format!(
                    "{}: solver {} vs brute force {} inside {}",
                    ctx("right"),
                    found.len(),
                    brute.len(),
                    cfg.wide
                )
            });

            // x·a = b  ⟺  a⁻¹·x⁻¹ = b⁻¹, computed the other way round.
            let mirrored = solve_left(&a.invert(), &b.invert()).map(|xs| inverted(&xs));
            r.check(mirrored == Ok(right.iter().cloned().collect()), || {
                format!("{}: inverse symmetry fails", ctx("right"))
            });
        }
    }
    r.note(format!(
        "{} equations per side at {}, largest solution set {largest}, {outside} solutions outside {}",
        small.len() * small.len(),
        cfg.small,
        cfg.wide
    ));
}

/// All subsets of `0..n` with at most `k` members, in lexicographic order.
fn small_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&x: &usize| x + 1);
            for x in start..n {
                let mut t: Vec<usize> = s.clone();
                t.push(x);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub(super) fn compact_model(cfg: &VerifyConfig, r: &mut Report) {
    const MAX_EXCLUDED: usize = 3;
    const LITERAL_EVERY: usize = 997;
    let small = enumerate_elements(cfg.small);
    let wide = enumerate_elements(cfg.wide);
    let keep: HashSet<&Isometry> = small.iter().collect();
    let subsets = small_subsets(small.len(), MAX_EXCLUDED);
    let mut literal = 0usize;
    let mut mutations = 0usize;
    let mut counter = 0usize;
    for g in &small {
        let index = ProductIndex::new(g, &wide, |p| keep.contains(p));
        let mut shrinker = Shrinker::new(g.clone());
        let mut mutated = false;
        for subset in &subsets {
            let u = CofiniteNbhd::excluding(subset.iter().map(|&i| small[i].clone()));
            let v = match shrinker.shrink(&u) {
                Ok(v) => v,
                Err(e) => {
                    r.check(false, || format!("shrinking for {g}: {e}"));
                    continue;
                }
            };
            // x ∈ V with g·x ∉ U or x·g ∉ U means g·x or x·g lands in the
            // excluded set; the index lists exactly those x of the pool.
            let required: Vec<usize> = subset
                .iter()
                .flat_map(|&k| index.left(&small[k]).iter().chain(index.right(&small[k])))
                .copied()
                .collect();
            let escaped = required.iter().find(|&&x| !v.excluded().contains(&wide[x]));
            r.check(
                v.excluded().is_superset(u.excluded()) && escaped.is_none(),
                || {
                    format!(
                        "g = {g}, U excludes {:?}: V misses {:?}",
                        subset,
                        escaped.map(|&x| &wide[x])
                    )
                },
            );

            counter += 1;
            if counter.is_multiple_of(LITERAL_EVERY) {
                literal += 1;
                r.check(check_pair(g, &u, &v, &wide), || {
                    format!("literal check for {g} on {subset:?}")
                });
                let memo_free = shrink_neighborhood(g, &u);
                r.check(memo_free.as_ref() == Ok(&v), || {
                    format!("memoized shrink differs for {g}")
                });
            }

            // Dropping one required exclusion must be detected.
            if !mutated {
                if let Some(&x) = required.iter().find(|&&x| !u.excluded().contains(&wide[x])) {
                    mutated = true;
                    mutations += 1;
                    let mut broken = v.excluded().clone();
                    broken.remove(&wide[x]);
                    let broken = CofiniteNbhd::excluding(broken);
                    r.check(!check_pair(g, &u, &broken, &wide), || {
                        format!("dropping {} from V for {g} went unnoticed", wide[x])
                    });
                }
            }
        }
    }

    // Neighbourhoods of the zero differ by finitely many points.
    for (k, pair) in subsets
        .iter()
        .zip(subsets.iter().skip(1))
        .take(2000)
        .enumerate()
    {
        let u = CofiniteNbhd::excluding(pair.0.iter().map(|&i| small[i].clone()));
        let v =
            CofiniteNbhd::excluding(pair.1.iter().map(|&i| small[(i + k) % small.len()].clone()));
        let (u_minus_v, v_minus_u) = symmetric_difference_check(&u, &v);
        let ok =
            u_minus_v.iter().all(|x| {
                u.contains(&ZElem::Elem(x.clone())) && !v.contains(&ZElem::Elem(x.clone()))
            }) && v_minus_u.iter().all(|x| {
                v.contains(&ZElem::Elem(x.clone())) && !u.contains(&ZElem::Elem(x.clone()))
            }) && u_minus_v.len() <= v.excluded().len()
                && v_minus_u.len() <= u.excluded().len();
        r.check(ok, || format!("symmetric difference of {pair:?}"));
    }

    // The adjoined zero absorbs, and the discrete model multiplies as S does.
    let mut with_zero: Vec<ZElem> = small.iter().cloned().map(ZElem::Elem).collect();
    with_zero.push(ZElem::Zero);
    for x in &with_zero {
        for y in &with_zero {
            let xy = zmul(x, y);
            let expected = match (x, y) {
                (ZElem::Elem(g), ZElem::Elem(d)) => ZElem::Elem(g.compose(d)),
                _ => ZElem::Zero,
            };
            r.check(xy == expected, || format!("{x}·{y} = {xy}"));
        }
    }
    let tiny: Vec<&ZElem> = with_zero.iter().step_by(3).collect();
    for x in &tiny {
        for y in &tiny {
            for z in &tiny {
                r.check(zmul(&zmul(x, y), z) == zmul(x, &zmul(y, z)), || {
                    format!("({x})({y})({z}) with zero")
                });
            }
        }
    }
    r.note(format!(
        "{} neighbourhoods for each of {} elements, {literal} checked literally over {} elements, {mutations} mutations",
        subsets.len(),
        small.len(),
        wide.len()
    ));
}
