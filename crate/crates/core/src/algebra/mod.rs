//! Exact integer linear algebra over the abelianized surface group.
//!
//! Everything works in `Z^{2g}` with arbitrary-precision entries. The two
//! normal forms are deliberately separate routes: `smith_normal_form` backs
//! the canonical quotient coordinates, while `hermite_normal_form` backs
//! `lattice_member`, so each can cross-check the other.

mod hnf;
mod matrix;
mod quotient;
mod snf;
mod vector;
mod word;

pub(crate) use word::parse_letter;

pub use hnf::{hermite_normal_form, lattice_member};
pub use matrix::IntMatrix;
pub use quotient::{build_quotient, ClassCoordinate, QuotientGroup, TorsionResidue};
pub use snf::{smith_normal_form, SnfDecomposition};
pub use vector::IntVector;
pub use word::{abelianize, prefix_vector, suffix_vector, Letter, Sign, Word};

use thiserror::Error;

/// Failure of a core algebra operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A word letter references a generator outside `c1..c2g`.
    #[error("letter c{index} out of range c1..c{max} for genus {genus}", max = 2 * genus)]
    LetterOutOfRange { index: usize, genus: usize },
    /// A split position lies outside `0..=len`.
    #[error("position {position} out of range 0..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    /// A vector length does not match the ambient rank.
    #[error("expected vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A word token is not of the form `c<k>` or `-c<k>`.
    #[error("invalid word token `{0}`")]
    InvalidToken(String),
}
