//! The minimum group congruence, simplicity witnesses and Green's relations.

use std::fmt;
use std::str::FromStr;

use crate::cofinite::CofiniteSet;
use crate::isometry::Isometry;

/// Image in `ℤ(+)` under the quotient by the minimum group congruence: the
/// translation amount.
pub fn mg_image(g: &Isometry) -> i64 {
    g.shift()
}

/// Returns the witness idempotent `e` with `e·g = e·d` when `g` and `d` are
/// congruent. The witness is the identity of `[m)` for the least such `m`.
pub fn mg_related(g: &Isometry, d: &Isometry) -> Option<Isometry> {
    (g.shift() == d.shift())
        .then(|| Isometry::identity_of(CofiniteSet::ray(agreement_start(g.dom(), d.dom()))))
}

/// Least `m` such that the two sets agree on `[m)`.
fn agreement_start(x: &CofiniteSet, y: &CofiniteSet) -> u64 {
    let top = x.tail_start().max(y.tail_start());
    (1..top)
        .rev()
        .find(|&n| x.contains(n) != y.contains(n))
        .map_or(1, |n| n + 1)
}

/// `(u, v)` with `u·g·v = d`.
///
/// `α^p·g` is a pure shift on ℕ once `p` reaches the tail of `dom g`, so
/// `α^p·g·β^r = 𝕀` for `r = p + shift`. The canonical form of `d` then
/// finishes the job: `u = ε[i)·βⁱ·α^p`, `v = β^r·αʲ`.
pub fn simple_witness(g: &Isometry, d: &Isometry) -> (Isometry, Isometry) {
    let p = g.tail_dom() - 1;
    let r = g.tail_ran() - 1;
    let cf = d.canonical_form();
    let u = cf
        .coset
        .epsilon(cf.i)
        .compose(&Isometry::beta_pow(cf.i))
        .compose(&Isometry::alpha_pow(p));
    let v = Isometry::bicyclic(r, cf.j);
    (u, v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Green {
    R,
    L,
    H,
    D,
}

impl Green {
    pub fn related(self, g: &Isometry, d: &Isometry) -> bool {
        match self {
            Green::R => green_r(g, d),
            Green::L => green_l(g, d),
            Green::H => green_h(g, d),
            Green::D => green_d(g, d),
        }
    }
}

impl FromStr for Green {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(Green::R),
            "L" | "l" => Ok(Green::L),
            "H" | "h" => Ok(Green::H),
            "D" | "d" => Ok(Green::D),
            _ => Err(format!(
                "unknown Green relation `{s}` (expected R, L, H or D)"
            )),
        }
    }
}

impl fmt::Display for Green {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Green::R => 'R',
            Green::L => 'L',
            Green::H => 'H',
            Green::D => 'D',
        };
        write!(f, "{c}")
    }
}

pub fn green_r(g: &Isometry, d: &Isometry) -> bool {
    g.dom() == d.dom()
}

pub fn green_l(g: &Isometry, d: &Isometry) -> bool {
    g.ran() == d.ran()
}

pub fn green_h(g: &Isometry, d: &Isometry) -> bool {
    green_r(g, d) && green_l(g, d)
}

/// The domains are translates of each other.
pub fn green_d(g: &Isometry, d: &Isometry) -> bool {
    let c = d.min_dom() as i64 - g.min_dom() as i64;
    g.dom().translate(c).is_ok_and(|t| &t == d.dom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ba(i: u64, j: u64) -> Isometry {
        Isometry::bicyclic(i, j)
    }

    #[test]
    fn mg_image_examples() {
        let deep_tail = Isometry::identity_of(CofiniteSet::ray(8));
        for i in 0..=6 {
            for j in 0..=6 {
                let g = ba(i, j);
                assert_eq!(mg_image(&g), j as i64 - i as i64);
                let pure = if j >= i {
                    Isometry::alpha_pow(j - i)
                } else {
                    Isometry::beta_pow(i - j)
                };
                assert_eq!(deep_tail.compose(&g), deep_tail.compose(&pure));
            }
        }
        assert_eq!(mg_image(&Isometry::identity()), 0);
        assert_eq!(mg_image(&Isometry::epsilon(&[1, 2], 5, 3).unwrap()), 0);
    }

    #[test]
    fn mg_related_examples() {
        let (a, b) = (Isometry::alpha(), Isometry::beta());
        let ab = a.compose(&b);
        let bav = b.compose(&a);
        let e = mg_related(&ab, &bav).unwrap();
        assert_eq!(e, Isometry::identity_of(CofiniteSet::ray(2)));
        assert_eq!(e.compose(&ab), e.compose(&bav));
        assert_eq!(mg_related(&a, &b), None);
        let g = Isometry::epsilon(&[1], 4, 2).unwrap();
        assert_eq!(mg_related(&g, &g), Some(Isometry::identity()));
    }

    #[test]
    fn simple_witness_examples() {
        let g = Isometry::new(CofiniteSet::new([2], 4).unwrap(), 2).unwrap();
        let (u, v) = simple_witness(&g, &g);
        assert_eq!(u.compose(&g).compose(&v), g);

        let target = ba(2, 3);
        let (u, v) = simple_witness(&Isometry::identity(), &target);
        assert_eq!((u.clone(), v.clone()), (ba(2, 0), ba(0, 3)));
        assert_eq!(u.compose(&Isometry::identity()).compose(&v), target);

        let (u, v) = simple_witness(&target, &g);
        assert_eq!(u.compose(&target).compose(&v), g);
    }

    #[test]
    fn green_examples() {
        let (a, b, one) = (Isometry::alpha(), Isometry::beta(), Isometry::identity());
        assert!(green_r(&a, &one));
        assert!(!green_l(&a, &b));
        assert!(green_d(&one, &ba(1, 1)));
        assert!(!green_d(&one, &Isometry::epsilon(&[1], 3, 0).unwrap()));
        assert!(green_h(&one, &one));
        assert!(!green_h(&a, &one));
        assert_eq!("D".parse::<Green>(), Ok(Green::D));
        assert!("X".parse::<Green>().is_err());
    }
}
