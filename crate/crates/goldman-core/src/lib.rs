//! Exact combinatorics of curves on oriented surfaces.
//!
//! A simple closed curve on a surface splits its fundamental group into an
//! amalgamated free product (separating curve) or an HNN extension
//! (non-separating curve) over cyclic subgroups. This crate implements the
//! word-level machinery of those decompositions — normal forms, cyclic
//! reduction, conjugacy tests, double-coset cycles — and uses it to compute
//! Goldman bracket terms, term counts and minimal intersection numbers when
//! one of the two curves is simple.
//!
//! The crate is `no_std` (with `alloc`); all state is immutable after
//! construction and every operation is a pure function.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod amalgam;
pub mod freegroup;
pub mod goldman;
pub mod hnn;
pub mod surfaces;

use alloc::string::String;
use core::fmt;

/// Errors shared by all modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A token or symbol index does not belong to the alphabet in use.
    UnknownSymbol(String),
    /// A power or double-coset solver was handed an empty base word.
    EmptyBase,
    /// The operation requires a cyclically reduced, nonempty word.
    NotCyclicallyReduced,
    /// A sequence term uses a word outside its declared factor alphabet.
    WrongAlphabet,
    /// The sequence is too short for the requested operation.
    TooShort,
    /// Invalid input handed to a context constructor or parser.
    Malformed(String),
    /// Two values from different decompositions were mixed.
    MixedContext,
    /// The word is not in the associated subgroup.
    NotInSubgroup,
    /// No built-in decomposition with that name.
    UnknownName(String),
    /// Enumeration bounds exceed the configured safety cap.
    BoundsTooLarge,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownSymbol(tok) => write!(f, "unknown symbol: {tok}"),
            Error::EmptyBase => write!(f, "base word must be nonempty"),
            Error::NotCyclicallyReduced => write!(f, "word must be cyclically reduced and nonempty"),
            Error::WrongAlphabet => write!(f, "word does not fit the declared factor alphabet"),
            Error::TooShort => write!(f, "sequence has too few terms for this operation"),
            Error::Malformed(msg) => write!(f, "malformed input: {msg}"),
            Error::MixedContext => write!(f, "values belong to different decompositions"),
            Error::NotInSubgroup => write!(f, "word is not in the associated subgroup"),
            Error::UnknownName(name) => write!(f, "unknown decomposition name: {name}"),
            Error::BoundsTooLarge => write!(f, "enumeration bounds exceed the safety cap"),
        }
    }
}

impl core::error::Error for Error {}

pub use amalgam::{AmalgamCtx, AmalgamSeq, CosetCycle, CosetKey, CyclicAmalgamSeq, Factor};
pub use freegroup::{Alphabet, CyclicWord, Letter, Word};
pub use goldman::{BracketResult, ConjClassRep, FormalSum, UnorientedResult};
pub use hnn::{CyclicHnnSeq, HnnCtx, HnnSeq, Sign};
pub use surfaces::{ClassBounds, SurfaceDecomposition};
