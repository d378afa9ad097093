//! Exact equivariant Hilbert series of invariant filtrations of toric ideals
//! of hierarchical models.
//!
//! The pipeline: a [`model::ModelSpec`] is validated and reduced to a chain
//! of two-element facets, the words of the associated regular language
//! ([`language`]) are recognized by an explicit finite automaton
//! ([`automaton`]), and the transfer-matrix method ([`transfer`]) turns the
//! weighted automaton into a rational function with rational coefficients.
//! [`oracle`] holds the independent counting checks.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod automaton;
pub mod language;
pub mod model;
pub mod oracle;
pub mod transfer;

pub use arith::{ArithError, MultiPoly, RatFunc, SeriesTable, VarSet};
pub use automaton::{build_automaton, Dfa};
pub use language::{Alphabet, Letter, Word, YMonomial};
pub use model::{hilbert_series, ModelSpec, ReducedSpec};
pub use transfer::{equiv_hilbert, generating_function, WeightFunction};
