//! Word metric, geodesics and dead ends of the discrete Heisenberg group
//! `H(ℤ) = ⟨a, b | [[a,b],a], [[a,b],b]⟩` with generating set `{a, b}`.
//!
//! * [`word`], [`element`], [`symmetry`]: words, normal-form elements and the
//!   sixteen length-preserving symmetries.
//! * [`metric`]: closed-form length and the geodesic / dead-end predicates.
//! * [`oracle`]: breadth-first ground truth on the Cayley graph.
//! * [`polyomino`]: minimal-perimeter polyominoes and their boundary words.
//! * [`language`]: swap rewriting, dead-end word generation, infinite
//!   geodesic prefixes and completion to dead ends.
//! * [`verify`]: the acceptance checks, shared by the test suite and the CLI.

pub mod arith;
pub mod element;
pub mod error;
pub mod export;
pub mod language;
pub mod metric;
pub mod oracle;
pub mod polyomino;
pub mod symmetry;
pub mod verify;
pub mod word;

pub use element::{evaluate, invert, multiply, GroupElement};
pub use error::{Error, Result};
pub use metric::length;
pub use symmetry::Symmetry;
pub use word::{format_word, parse_word, Letter, Word};
