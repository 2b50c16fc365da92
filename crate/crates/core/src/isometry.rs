//! Elements of the inverse monoid of cofinite partial isometries of ℕ.
//!
//! Every such partial isometry is a translation `x ↦ x + c` restricted to a
//! cofinite domain, so an [`Isometry`] is just that pair. Maps act on the
//! right: in `g.compose(&d)` the map `g` is applied first.
//!
//! The generators are `α: n ↦ n + 1` on ℕ and its inverse `β: n ↦ n - 1` on
//! `[2)`. Every element factors uniquely as `ε·βⁱαʲ` where `ε` is the identity
//! of `i + A[n0)`; see [`CanonicalForm`].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

use crate::cofinite::{add_signed, CofiniteError, CofiniteSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsometryError {
    #[error("shift {shift} moves the minimum {min_dom} of the domain out of ℕ")]
    RangeUnderflow { min_dom: u64, shift: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Set(#[from] CofiniteError),
    #[error("malformed element `{0}`")]
    Malformed(String),
    #[error("element too large to represent: {0}")]
    Overflow(String),
}

/// A cofinite partial isometry of ℕ: the translation by `shift` on `dom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isometry {
    dom: CofiniteSet,
    shift: i64,
}

impl Isometry {
    pub fn new(dom: CofiniteSet, shift: i64) -> Result<Self, IsometryError> {
        let min_dom = dom.min_member();
        if add_signed(min_dom, shift).is_none() {
            return Err(IsometryError::RangeUnderflow { min_dom, shift });
        }
        Ok(Isometry { dom, shift })
    }

    /// The unit `𝕀`.
    pub fn identity() -> Self {
        Isometry {
            dom: CofiniteSet::naturals(),
            shift: 0,
        }
    }

    pub fn alpha() -> Self {
        Self::alpha_pow(1)
    }

    pub fn beta() -> Self {
        Self::beta_pow(1)
    }

    /// `αᵏ`: `n ↦ n + k` on ℕ.
    pub fn alpha_pow(k: u64) -> Self {
        Self::bicyclic(0, k)
    }

    /// `βᵏ`: `n ↦ n - k` on `[k + 1)`.
    pub fn beta_pow(k: u64) -> Self {
        Self::bicyclic(k, 0)
    }

    /// `βⁱαʲ`: the translation by `j - i` on `[i + 1)`.
    pub fn bicyclic(i: u64, j: u64) -> Self {
        Isometry {
            dom: CofiniteSet::ray(i + 1),
            shift: j as i64 - i as i64,
        }
    }

    /// The identity map of a cofinite set.
    pub fn identity_of(dom: CofiniteSet) -> Self {
        Isometry { dom, shift: 0 }
    }

    /// `εᴬ[i)` for the exceptional data `(A, n0)`: the identity of `i + A[n0)`.
    /// For `A = ∅` (and `n0 = 0`) this is the identity of `[i + 1)`.
    pub fn epsilon(a: &[u64], n0: u64, i: u64) -> Result<Self, IsometryError> {
        Ok(Coset::new(a.to_vec(), n0)?.epsilon(i))
    }

    pub fn dom(&self) -> &CofiniteSet {
        &self.dom
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn ran(&self) -> CofiniteSet {
        self.dom
            .translate(self.shift)
            .expect("range of a valid isometry lies in ℕ")
    }

    /// Composition with `self` applied first: `x(gd) = (xg)d`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let dom = self
            .dom
            .intersect(&other.dom.translate_clipped(-self.shift));
        Isometry {
            dom,
            shift: self.shift + other.shift,
        }
    }

    pub fn invert(&self) -> Isometry {
        Isometry {
            dom: self.ran(),
            shift: -self.shift,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.shift == 0
    }

    /// `self` composed with itself `k` times; `g⁰ = 𝕀`.
    pub fn pow(&self, mut k: u64) -> Isometry {
        let mut acc = Isometry::identity();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    pub fn eval(&self, n: u64) -> Option<u64> {
        if n >= 1 && self.dom.contains(n) {
            add_signed(n, self.shift)
        } else {
            None
        }
    }

    /// `min dom`.
    pub fn min_dom(&self) -> u64 {
        self.dom.min_member()
    }

    /// `min ran`.
    pub fn min_ran(&self) -> u64 {
        add_signed(self.min_dom(), self.shift).expect("valid isometry")
    }

    /// The least `m` with `[m) ⊆ dom`, i.e. where the unbroken tail starts.
    pub fn tail_dom(&self) -> u64 {
        self.dom.tail_start()
    }

    /// The image of [`Self::tail_dom`].
    pub fn tail_ran(&self) -> u64 {
        add_signed(self.tail_dom(), self.shift).expect("valid isometry")
    }

    /// Tail start minus minimum of the domain; 0 exactly on the bicyclic
    /// submonoid.
    pub fn noise(&self) -> u64 {
        self.tail_dom() - self.min_dom()
    }

    pub fn is_bicyclic(&self) -> bool {
        self.dom.is_ray()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let i = self.min_dom() - 1;
        let j = self.min_ran() - 1;
        let coset = if self.dom.is_ray() {
            Coset::bicyclic()
        } else {
            Coset {
                a: self.dom.finite_part().iter().map(|&m| m - i).collect(),
                n0: self.dom.tail_start() - i,
            }
        };
        CanonicalForm { coset, i, j }
    }

    /// The `iso(dom=...; shift=c)` notation.
    pub fn iso_notation(&self) -> String {
        format!("iso(dom={}; shift={})", self.dom, self.shift)
    }
}

impl Mul for &Isometry {
    type Output = Isometry;

    fn mul(self, rhs: &Isometry) -> Isometry {
        self.compose(rhs)
    }
}

impl fmt::Display for Isometry {
    /// The canonical word, e.g. `eps(A={1};n0=3)[1) b^1 a^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical_form().fmt(f)
    }
}

impl FromStr for Isometry {
    type Err = IsometryError;

    /// Parses the `iso(dom=...; shift=c)` notation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || IsometryError::Malformed(s.to_string());
        let body = s
            .trim()
            .strip_prefix("iso(")
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let (dom, shift) = body.split_once(';').ok_or_else(malformed)?;
        let dom = dom
            .trim()
            .strip_prefix("dom")
            .map(str::trim_start)
            .and_then(|x| x.strip_prefix('='))
            .ok_or_else(malformed)?;
        let shift = shift
            .trim()
            .strip_prefix("shift")
            .map(str::trim_start)
            .and_then(|x| x.strip_prefix('='))
            .ok_or_else(malformed)?
            .trim()
            .parse::<i64>()
            .map_err(|_| malformed())?;
        Isometry::new(dom.parse()?, shift)
    }
}

/// Exceptional data `(A, n0)` of a canonical form. `A = ∅, n0 = 0` is the
/// bicyclic submonoid; otherwise `min A = 1` and `n0 ≥ max A + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    a: Vec<u64>,
    n0: u64,
}

impl Coset {
    pub fn new(mut a: Vec<u64>, n0: u64) -> Result<Self, IsometryError> {
        a.sort_unstable();
        a.dedup();
        match (a.first(), a.last()) {
            (None, _) if n0 == 0 => Ok(Coset { a, n0 }),
            (None, _) => Err(IsometryError::InvalidParameters(format!(
                "empty A requires n0 = 0, got n0 = {n0}"
            ))),
            (Some(&min), _) if min != 1 => Err(IsometryError::InvalidParameters(format!(
                "min A must be 1, got {min}"
            ))),
            (_, Some(&max)) if n0 < max + 2 => Err(IsometryError::InvalidParameters(format!(
                "n0 = {n0} is below max A + 2 = {}",
                max + 2
            ))),
            _ => Ok(Coset { a, n0 }),
        }
    }

    pub fn bicyclic() -> Self {
        Coset {
            a: Vec::new(),
            n0: 0,
        }
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn n0(&self) -> u64 {
        self.n0
    }

    pub fn is_bicyclic(&self) -> bool {
        self.a.is_empty()
    }

    /// The identity of `i + A[n0)`, or of `[i + 1)` for the bicyclic coset.
    pub fn epsilon(&self, i: u64) -> Isometry {
        let dom = if self.is_bicyclic() {
            CofiniteSet::ray(i + 1)
        } else {
            CofiniteSet::new(self.a.iter().map(|&m| m + i), self.n0 + i)
                .expect("coset invariants give a valid set")
        };
        Isometry::identity_of(dom)
    }

    /// Every coset whose `n0` is at most `max_n0`, bicyclic first.
    pub fn all_up_to(max_n0: u64) -> Vec<Coset> {
        let mut out = vec![Coset::bicyclic()];
        for n0 in 3..=max_n0 {
            // A ⊆ {1, ..., n0 - 2} with 1 ∈ A
            let free = n0 - 3;
            for mask in 0u64..(1 << free) {
                let mut a = vec![1];
                a.extend((0..free).filter(|b| mask >> b & 1 == 1).map(|b| b + 2));
                out.push(Coset { a, n0 });
            }
        }
        out
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={{")?;
        for (k, m) in self.a.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}};n0={}", self.n0)
    }
}

/// The unique factorization `εᴬ[i)·βⁱαʲ` with `i = min dom - 1` and
/// `j = min ran - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub coset: Coset,
    pub i: u64,
    pub j: u64,
}

impl CanonicalForm {
    pub fn new(coset: Coset, i: u64, j: u64) -> Self {
        CanonicalForm { coset, i, j }
    }

    pub fn rebuild(&self) -> Isometry {
        self.coset
            .epsilon(self.i)
            .compose(&Isometry::bicyclic(self.i, self.j))
    }
}

impl fmt::Display for CanonicalForm {
    /// Omits `eps` for the bicyclic coset and zero powers; `𝕀` prints as `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::with_capacity(3);
        if !self.coset.is_bicyclic() {
            parts.push(format!("eps({})[{})", self.coset, self.i));
        }
        if self.i > 0 {
            parts.push(format!("b^{}", self.i));
        }
        if self.j > 0 {
            parts.push(format!("a^{}", self.j));
        }
        if parts.is_empty() {
            write!(f, "I")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(finite: &[u64], tail: u64) -> CofiniteSet {
        CofiniteSet::new(finite.iter().copied(), tail).unwrap()
    }

    fn iso(finite: &[u64], tail: u64, shift: i64) -> Isometry {
        Isometry::new(set(finite, tail), shift).unwrap()
    }

    /// Pointwise composition oracle on 1..=n.
    fn pointwise_agrees(g: &Isometry, f: impl Fn(u64) -> Option<u64>, n: u64) -> bool {
        (1..=n).all(|x| g.eval(x) == f(x))
    }

    #[test]
    fn generators() {
        let a = Isometry::alpha();
        assert_eq!(a.dom(), &CofiniteSet::naturals());
        assert_eq!(a.ran(), CofiniteSet::ray(2));
        assert_eq!(a.eval(3), Some(4));
        assert_eq!(Isometry::beta().eval(1), None);
        assert_eq!(Isometry::identity().eval(7), Some(7));
    }

    #[test]
    fn compose_examples() {
        let (a, b) = (Isometry::alpha(), Isometry::beta());
        assert_eq!(&a * &b, Isometry::identity());
        let ba = &b * &a;
        assert_eq!(ba, Isometry::identity_of(CofiniteSet::ray(2)));
        assert!(pointwise_agrees(&ba, |x| (x >= 2).then_some(x), 10));
        assert_eq!(
            Isometry::bicyclic(2, 3).compose(&Isometry::bicyclic(1, 2)),
            Isometry::bicyclic(2, 4)
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Isometry::alpha().invert(), Isometry::beta());
        assert_eq!(Isometry::identity().invert(), Isometry::identity());
        let g = iso(&[2], 4, 2);
        let inv = g.invert();
        assert_eq!(inv, iso(&[4], 6, -2));
        assert!(pointwise_agrees(
            &inv,
            |x| (x == 4 || x >= 6).then(|| x - 2),
            12
        ));
        assert_eq!(&g * &inv, Isometry::identity_of(g.dom().clone()));
        assert_eq!(&inv * &g, Isometry::identity_of(g.ran()));
    }

    #[test]
    fn idempotents() {
        assert!(Isometry::identity().is_idempotent());
        assert!(!Isometry::alpha().is_idempotent());
        assert!(Isometry::identity_of(set(&[2], 4)).is_idempotent());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(
            Isometry::epsilon(&[1], 3, 1).unwrap(),
            Isometry::identity_of(set(&[1], 3).translate(1).unwrap())
        );
        assert!(matches!(
            Isometry::epsilon(&[1, 2], 3, 0),
            Err(IsometryError::InvalidParameters(_))
        ));
        assert!(Isometry::epsilon(&[2], 4, 0).is_err());
        assert!(Isometry::epsilon(&[], 3, 0).is_err());
        assert_eq!(
            Isometry::epsilon(&[], 0, 2).unwrap(),
            Isometry::bicyclic(2, 2)
        );
    }

    #[test]
    fn canonical_form_examples() {
        let cf = iso(&[2], 4, 2).canonical_form();
        assert_eq!(cf.coset.a(), &[1]);
        assert_eq!((cf.coset.n0(), cf.i, cf.j), (3, 1, 3));
        assert_eq!(cf.rebuild(), iso(&[2], 4, 2));

        let cf = Isometry::identity().canonical_form();
        assert_eq!(cf, CanonicalForm::new(Coset::bicyclic(), 0, 0));

        for i in 0..=6 {
            for j in 0..=6 {
                let g = Isometry::bicyclic(i, j);
                let cf = g.canonical_form();
                assert_eq!(cf, CanonicalForm::new(Coset::bicyclic(), i, j));
                assert_eq!(cf.rebuild(), g);
            }
        }
    }

    #[test]
    fn noise_examples() {
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(Isometry::bicyclic(i, j).noise(), 0);
            }
        }
        assert_eq!(iso(&[2], 4, 2).noise(), 2);
        assert_eq!(Isometry::identity().noise(), 0);
    }

    #[test]
    fn powers() {
        assert_eq!(Isometry::alpha().pow(0), Isometry::identity());
        assert_eq!(Isometry::alpha().pow(5), Isometry::alpha_pow(5));
        assert_eq!(Isometry::beta().pow(3), Isometry::beta_pow(3));
        let g = iso(&[1], 3, 1);
        let mut naive = Isometry::identity();
        for k in 0..9 {
            assert_eq!(g.pow(k), naive);
            naive = naive.compose(&g);
        }
    }

    #[test]
    fn text_forms() {
        let g = iso(&[2], 4, 2);
        assert_eq!(g.to_string(), "eps(A={1};n0=3)[1) b^1 a^3");
        assert_eq!(Isometry::bicyclic(2, 4).to_string(), "b^2 a^4");
        assert_eq!(Isometry::identity().to_string(), "I");
        assert_eq!(g.iso_notation(), "iso(dom={2}+[4); shift=2)");
        assert_eq!(g.iso_notation().parse::<Isometry>().unwrap(), g);
        assert!("iso(dom=[1); shift=-1)".parse::<Isometry>().is_err());
    }

    #[test]
    fn cosets_enumerate_valid_data() {
        let all = Coset::all_up_to(6);
        // 1 + 1 + 2 + 4 + 8
        assert_eq!(all.len(), 16);
        for c in &all {
            assert_eq!(&Coset::new(c.a().to_vec(), c.n0()).unwrap(), c);
        }
    }
}
