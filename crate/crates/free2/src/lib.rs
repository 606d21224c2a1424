//! Exact word calculus for the free group `F = <x, y>` of rank two.
//!
//! The crate is organized in layers:
//!
//! * [`word`]: freely reduced words, cyclic words with a canonical rotation,
//!   parsing and printing, abelianized exponent sums.
//! * [`aut`]: automorphisms of `F` as compositions of elementary moves,
//!   Whitehead minimization of cyclic words, orbit equivalence, primitivity
//!   and primitive-root/multiplicity computations, basis completion.
//! * [`conjugacy`]: the coarser relation "conjugate up to inversion", and
//!   decision procedures for commutator-of-powers normal forms.
//! * [`family`]: the parameterized word families attached to the knot family
//!   `K(p,q)`: curve lifts, disk boundaries, and related boundary words.
//! * [`classify`]: the `K(p,q)` classification pipeline: special forms,
//!   injectivity, tunnel and atoroidality certificates, the `(1,1)` decision,
//!   surgery invariants, and grid surveys.
//! * [`oracle`]: brute-force reference implementations used to cross-check
//!   the algebraic machinery on small words.
//!
//! ## Design
//!
//! Words are kept freely reduced at all times; cyclic words are kept
//! cyclically reduced and stored in a canonical rotation, so equality of
//! values coincides with equality of conjugacy classes. All decision
//! procedures are exact integer/word computations with no floating point and
//! no randomness, so every public function is deterministic.

pub mod aut;
pub mod classify;
pub mod conjugacy;
mod error;
pub mod family;
pub mod oracle;
pub mod word;

pub use error::{Error, Result};
pub use word::{AbelianImage, CyclicWord, Letter, Word, DEFAULT_LENGTH_CAP};
