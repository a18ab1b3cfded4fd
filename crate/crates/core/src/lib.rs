//! Arithmetic models of weak fragments of arithmetic, together with the
//! string and ur-string codings that live inside them.
//!
//! * [`rings`]: polynomial models `M0 ⊂ M1 ⊂ M2`, the naturals and the
//!   non-negative rationals, with dominance order and Euclidean division.
//! * [`beta`]: Cantor pairing and the β-function sequence coding.
//! * [`dyadic`]: Smullyan's dyadic string coding on the naturals.
//! * [`markov`]: strings as `SL2` matrices, normal forms and ur-strings.
//! * [`tcstrings`]: partitions, refinements and the `abc → b` rewrite monoid.
//! * [`axiomlab`]: axiom checking over the models above.

pub mod axiomlab;
pub mod beta;
pub mod dyadic;
mod error;
pub mod letters;
pub mod markov;
pub mod rings;
pub mod tcstrings;

pub use error::Error;
pub use letters::{Letter, Word};
pub use rings::{ModelElem, ModelId, Poly};

/// Arbitrary precision natural numbers.
pub type Nat = num_bigint::BigUint;
/// Arbitrary precision rationals in lowest terms.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which disjunct of an editors principle a witness satisfies.
///
/// For `x·y = u·v`: `Left` means `x·η = u` and `y = η·v`; `Right` means
/// `x = u·η` and `η·y = v`. `Both` is the overlap where `η` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Side {
    Left,
    Right,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditorsSplit<T> {
    pub side: Side,
    pub eta: T,
}
