//! The guide's chapters, included as module documentation so that every
//! code block in the book compiles and runs as a doc-test under
//! `cargo test`. The rendered book lives in `book/` at the workspace root
//! (`mdbook build book`); these modules carry no code of their own.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/algebraic-numbers.md")]
pub mod algebraic_numbers {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/matching-polynomial.md")]
pub mod matching_polynomial {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/operators.md")]
pub mod operators {}

#[doc = include_str!("../../../book/src/tutte-sets.md")]
pub mod tutte_sets {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
