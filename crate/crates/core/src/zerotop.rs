//! The monoid with an adjoined zero and its compact topology.
//!
//! Points of the monoid are isolated; the basic neighbourhoods of the zero are
//! the sets missing only finitely many points. A neighbourhood is therefore
//! stored exactly, as its finite set of excluded elements. Because every
//! one-sided equation has finitely many solutions, each element `g` admits a
//! smaller neighbourhood `V` with `g·V ⊆ U` and `V·g ⊆ U`, computed here by
//! [`shrink_neighborhood`].
//!
//! The discrete topology is the other locally compact endpoint; in it every
//! multiplication map is trivially continuous and products are those of
//! [`zmul`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::equations::{enumerate_elements, solve_left, solve_right, EnumBounds, EquationError};
use crate::isometry::Isometry;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZElem {
    Zero,
    Elem(Isometry),
}

impl ZElem {
    pub fn as_isometry(&self) -> Option<&Isometry> {
        match self {
            ZElem::Zero => None,
            ZElem::Elem(g) => Some(g),
        }
    }
}

impl From<Isometry> for ZElem {
    fn from(g: Isometry) -> Self {
        ZElem::Elem(g)
    }
}

impl fmt::Display for ZElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZElem::Zero => write!(f, "Z"),
            ZElem::Elem(g) => g.fmt(f),
        }
    }
}

pub fn zmul(x: &ZElem, y: &ZElem) -> ZElem {
    match (x, y) {
        (ZElem::Elem(g), ZElem::Elem(d)) => ZElem::Elem(g.compose(d)),
        _ => ZElem::Zero,
    }
}

/// `{0} ∪ (S ∖ excluded)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CofiniteNbhd {
    excluded: BTreeSet<Isometry>,
}

impl CofiniteNbhd {
    /// The whole space.
    pub fn full() -> Self {
        Self::default()
    }

    pub fn excluding<I: IntoIterator<Item = Isometry>>(excluded: I) -> Self {
        CofiniteNbhd {
            excluded: excluded.into_iter().collect(),
        }
    }

    pub fn excluded(&self) -> &BTreeSet<Isometry> {
        &self.excluded
    }

    pub fn contains(&self, x: &ZElem) -> bool {
        match x {
            ZElem::Zero => true,
            ZElem::Elem(g) => !self.excluded.contains(g),
        }
    }

    /// Same neighbourhood with one more point removed.
    pub fn without(mut self, g: Isometry) -> Self {
        self.excluded.insert(g);
        self
    }
}

/// `K_g` for a single excluded point `k`: every `x` with `g·x = k` or `x·g = k`.
pub fn exclusions_for(g: &Isometry, k: &Isometry) -> Result<Vec<Isometry>, EquationError> {
    let mut out = solve_left(g, k)?;
    out.extend(solve_right(g, k)?);
    out.sort();
    out.dedup();
    Ok(out)
}

/// `V = U ∖ K_g`, the shrunken neighbourhood with `g·V ⊆ U` and `V·g ⊆ U`.
pub fn shrink_neighborhood(g: &Isometry, u: &CofiniteNbhd) -> Result<CofiniteNbhd, EquationError> {
    let mut excluded = u.excluded.clone();
    for k in &u.excluded {
        excluded.extend(exclusions_for(g, k)?);
    }
    Ok(CofiniteNbhd { excluded })
}

/// Memoizes `K_g(k)` for a fixed `g` across many neighbourhoods.
#[derive(Debug)]
pub struct Shrinker {
    g: Isometry,
    cache: HashMap<Isometry, Vec<Isometry>>,
}

impl Shrinker {
    pub fn new(g: Isometry) -> Self {
        Shrinker {
            g,
            cache: HashMap::new(),
        }
    }

    pub fn element(&self) -> &Isometry {
        &self.g
    }

    pub fn exclusions_for(&mut self, k: &Isometry) -> Result<&[Isometry], EquationError> {
        if !self.cache.contains_key(k) {
            let value = exclusions_for(&self.g, k)?;
            self.cache.insert(k.clone(), value);
        }
        Ok(&self.cache[k])
    }

    /// Same result as [`shrink_neighborhood`] for the fixed element.
    pub fn shrink(&mut self, u: &CofiniteNbhd) -> Result<CofiniteNbhd, EquationError> {
        let mut excluded = u.excluded.clone();
        for k in &u.excluded {
            excluded.extend(self.exclusions_for(k)?.iter().cloned());
        }
        Ok(CofiniteNbhd { excluded })
    }
}

/// Checks `g·x ∈ U` and `x·g ∈ U` for every candidate `x` in `V`.
pub fn check_pair(
    g: &Isometry,
    u: &CofiniteNbhd,
    v: &CofiniteNbhd,
    candidates: &[Isometry],
) -> bool {
    candidates
        .iter()
        .filter(|x| !v.excluded.contains(*x))
        .all(|x| !u.excluded.contains(&g.compose(x)) && !u.excluded.contains(&x.compose(g)))
}

/// Shrinks `U` for `g` and validates the result over the bounded enumeration.
pub fn check_separate_continuity(
    g: &Isometry,
    u: &CofiniteNbhd,
    bounds: EnumBounds,
) -> Result<bool, EquationError> {
    let v = shrink_neighborhood(g, u)?;
    Ok(v.excluded.is_superset(&u.excluded) && check_pair(g, u, &v, &enumerate_elements(bounds)))
}

/// `(U ∖ V, V ∖ U)` as sets of monoid elements. Both are finite since each
/// is contained in the other neighbourhood's excluded set.
pub fn symmetric_difference_check(
    u: &CofiniteNbhd,
    v: &CofiniteNbhd,
) -> (Vec<Isometry>, Vec<Isometry>) {
    let u_minus_v = v.excluded.difference(&u.excluded).cloned().collect();
    let v_minus_u = u.excluded.difference(&v.excluded).cloned().collect();
    (u_minus_v, v_minus_u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: Isometry) -> ZElem {
        ZElem::Elem(g)
    }

    #[test]
    fn zero_absorbs() {
        let a = el(Isometry::alpha());
        assert_eq!(zmul(&ZElem::Zero, &a), ZElem::Zero);
        assert_eq!(zmul(&a, &ZElem::Zero), ZElem::Zero);
        assert_eq!(zmul(&ZElem::Zero, &ZElem::Zero), ZElem::Zero);
        assert_eq!(zmul(&a, &el(Isometry::beta())), el(Isometry::identity()));
    }

    #[test]
    fn shrinking_the_full_space_is_a_no_op() {
        let u = CofiniteNbhd::full();
        for g in enumerate_elements(EnumBounds::new(1, 2)) {
            assert_eq!(shrink_neighborhood(&g, &u).unwrap(), u);
        }
    }

    #[test]
    fn shrink_examples() {
        let one = Isometry::identity();
        let u = CofiniteNbhd::excluding([one.clone()]);
        let v = shrink_neighborhood(&Isometry::alpha(), &u).unwrap();
        assert!(v.excluded().contains(&one));
        assert!(v.excluded().contains(&Isometry::beta()));

        let e = Isometry::epsilon(&[1], 3, 1).unwrap();
        let u = CofiniteNbhd::excluding([e.clone()]);
        let v = shrink_neighborhood(&e, &u).unwrap();
        for x in enumerate_elements(EnumBounds::new(4, 6)) {
            if e.compose(&x) == e || x.compose(&e) == e {
                assert!(v.excluded().contains(&x), "{x}");
            }
        }
    }

    #[test]
    fn identity_needs_no_extra_exclusions() {
        let u = CofiniteNbhd::excluding([Isometry::alpha(), Isometry::bicyclic(2, 1)]);
        let v = shrink_neighborhood(&Isometry::identity(), &u).unwrap();
        assert_eq!(v, u);
        assert!(check_pair(
            &Isometry::identity(),
            &u,
            &u,
            &enumerate_elements(EnumBounds::new(2, 3))
        ));
    }

    #[test]
    fn corrupted_neighbourhood_is_caught() {
        let g = Isometry::alpha();
        let u = CofiniteNbhd::excluding([Isometry::identity()]);
        assert!(check_separate_continuity(&g, &u, EnumBounds::new(2, 3)).unwrap());
        let v = shrink_neighborhood(&g, &u).unwrap();
        let mut broken = v.excluded().clone();
        broken.remove(&Isometry::beta());
        let broken = CofiniteNbhd::excluding(broken);
        assert!(!check_pair(
            &g,
            &u,
            &broken,
            &enumerate_elements(EnumBounds::new(2, 3))
        ));
    }

    #[test]
    fn memoized_shrinker_agrees() {
        let pool = enumerate_elements(EnumBounds::new(1, 2));
        for g in &pool {
            let mut shrinker = Shrinker::new(g.clone());
            for pair in pool.windows(2) {
                let u = CofiniteNbhd::excluding(pair.iter().cloned());
                assert_eq!(
                    shrinker.shrink(&u).unwrap(),
                    shrink_neighborhood(g, &u).unwrap()
                );
            }
        }
    }

    #[test]
    fn symmetric_differences() {
        let (a, b) = (Isometry::alpha(), Isometry::beta());
        let u = CofiniteNbhd::excluding([a.clone()]);
        let v = CofiniteNbhd::excluding([b.clone()]);
        assert_eq!(symmetric_difference_check(&u, &v), (vec![b], vec![a]));
        assert_eq!(symmetric_difference_check(&u, &u), (vec![], vec![]));

        let pool = enumerate_elements(EnumBounds::new(1, 2));
        let u = CofiniteNbhd::excluding(pool[..2].iter().cloned());
        let v = CofiniteNbhd::excluding(pool[2..5].iter().cloned());
        let (x, y) = symmetric_difference_check(&u, &v);
        assert_eq!((x.len(), y.len()), (3, 2));
    }
}
