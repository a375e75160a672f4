//! Geodesic languages of finitely generated groups and the
//! piecewise-excluding property.
//!
//! The layers build on each other: [`words`] (alphabets, words, forbidden
//! sets), [`groups`] (exact group engines), [`geodesics`] (balls and
//! geodesic languages), [`classify`] (the PE decision) and [`witnesses`]
//! (constructive reproductions with text reports).
//!
//! The infinite-group engines are generic over an integer [`scalar::Coord`];
//! the aliases below fix the usual choices.

pub mod classify;
pub mod geodesics;
pub mod groups;
pub mod scalar;
pub mod witnesses;
pub mod words;

use num_bigint::BigInt;
use thiserror::Error;

pub use classify::{pe_check, pe_check_bounded, PEVerdict};
pub use geodesics::{ball, geodesic_language, is_geodesic, validate_genset, Bound, GenSet, GeodesicError};
pub use groups::{AnyEngine, FiniteGroupTable, GroupEngine, GroupError, Presentation};
pub use witnesses::WitnessError;
pub use words::{Alphabet, ForbiddenSet, Language, Word, WordError};

/// `ℤⁿ ⋊ ℤ/2` with exact coordinates.
pub type ZnC2 = groups::ZnC2Engine<BigInt>;
/// `ℤⁿ ⋊ ℤ/2` with machine coordinates, for bounded searches.
pub type ZnC2Fast = groups::ZnC2Engine<i64>;
pub type BS12 = groups::BS12Engine<BigInt>;
pub type BS12Fast = groups::BS12Engine<i64>;
/// `ℤ/n ⋊ ℤ` or `ℤ/n ⋊ ℤ/m`.
pub type Zm = groups::ZmSemidirectEngine<BigInt>;
pub type ZmFast = groups::ZmSemidirectEngine<i64>;
/// Split extension `H ⋊ ℤʳ`.
pub type Extension = groups::ExtensionEngine<BigInt>;
pub type ExtensionFast = groups::ExtensionEngine<i64>;

/// Any error the library can raise.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geodesic(#[from] GeodesicError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}
