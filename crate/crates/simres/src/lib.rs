//! Simplicially supported free resolutions of monomial ideals, and an
//! expansion operation that grows an ideal by one generator while changing
//! its betti numbers in a completely predicted way.
//!
//! The building blocks: monomials and ideals over a fixed variable context
//! ([`monomial`]), simplicial complexes with monomial labels ([`complex`]),
//! exact reduced homology over the rationals or a prime field ([`homology`]),
//! and betti tables read off supporting complexes with the Taylor complex as
//! the built-in oracle ([`resolution`]).
//!
//! On top of those sit the expansion set with its membership tests,
//! witnesses and predicted betti deltas ([`expansion`]), polarization to the
//! square-free world ([`polarization`]), and Cohen-Macaulay analysis through
//! Reisner's criterion ([`scm`]).
//!
//! ```
//! use simres::monomial::{MonomialIdeal, VarContext, DEFAULT_ENUMERATION_CAP};
//! use simres::homology::FieldSpec;
//! use simres::resolution::betti_oracle;
//!
//! let ctx = VarContext::new(["a", "b", "c"]).unwrap();
//! let ideal = MonomialIdeal::parse(&ctx, &["a^3 b", "a^2 b^2 c", "b^4 c^2", "a c^3"]).unwrap();
//! let table = betti_oracle(&ideal, FieldSpec::Rationals, DEFAULT_ENUMERATION_CAP).unwrap();
//! assert_eq!(table.totals(), &[1, 4, 5, 2]);
//! ```
//!
//! A longer walkthrough lives in the book under `book/`; its code blocks are
//! compiled and run as doc-tests of this crate.

pub mod complex;
pub mod error;
pub mod expansion;
pub mod homology;
pub mod io;
pub mod monomial;
pub mod polarization;
pub mod resolution;
pub mod sampling;
pub mod scm;

pub use error::{Error, Result};

// Each book chapter doubles as a doc-test module, so `cargo test --doc`
// keeps the book's code in sync with the crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/monomials-and-ideals.md")]
    mod monomials_and_ideals {}
    #[doc = include_str!("../../../book/src/complexes-and-collapses.md")]
    mod complexes_and_collapses {}
    #[doc = include_str!("../../../book/src/homology-over-a-field.md")]
    mod homology_over_a_field {}
    #[doc = include_str!("../../../book/src/supported-resolutions.md")]
    mod supported_resolutions {}
    #[doc = include_str!("../../../book/src/expanding-an-ideal.md")]
    mod expanding_an_ideal {}
    #[doc = include_str!("../../../book/src/growing-families.md")]
    mod growing_families {}
    #[doc = include_str!("../../../book/src/polarization.md")]
    mod polarization {}
    #[doc = include_str!("../../../book/src/cohen-macaulay.md")]
    mod cohen_macaulay {}
}
