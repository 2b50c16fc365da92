//! Exact computation in `IN∞`, the inverse monoid of cofinite partial
//! isometries of the positive integers, and in its submonoids containing the
//! bicyclic monoid generated by `α: n ↦ n + 1` and `β: n + 1 ↦ n`.
//!
//! Elements are represented exactly as translations of cofinite domains
//! ([`Isometry`]), with the adjoined zero handled by [`ZElem`]. The
//! [`verify`] module runs exhaustive checks of the algebraic laws over
//! bounded enumerations.

pub mod cofinite;
pub mod congruence;
pub mod equations;
pub mod isometry;
pub mod orders;
pub mod verify;
pub mod wordlang;
pub mod zerotop;

pub use cofinite::{CofiniteError, CofiniteSet};
pub use congruence::{
    green_d, green_h, green_l, green_r, mg_image, mg_related, simple_witness, Green,
};
pub use equations::{enumerate_elements, solve_left, solve_right, EnumBounds, EquationError};
pub use isometry::{CanonicalForm, Coset, Isometry, IsometryError};
pub use orders::{
    commute_eps, conjugate_down, conjugate_up, coset_of, ll_leq, natural_leq, ChainCursor, Clause,
    Eps, OrderError, Rewrite,
};
pub use wordlang::{eval_str, eval_word, format, parse, GenWord, WordError};
pub use zerotop::{shrink_neighborhood, zmul, CofiniteNbhd, Shrinker, ZElem};
