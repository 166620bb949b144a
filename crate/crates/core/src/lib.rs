//! Exact computational tools for closures of positive braid words.
//!
//! The library computes HOMFLYPT polynomials of positive braid closures by
//! resolving words into simple (permutation) braids, evaluates the associated
//! inner product on the braid algebra, and derives Morton-Franks-Williams
//! braid-index bounds together with sharpness certificates.
//!
//! All arithmetic is exact: polynomials are sparse integer Laurent polynomials
//! in the two framing/skein variables `v` and `z`, and coefficient overflow
//! panics rather than wrapping.

pub mod homfly;
pub mod inner;
pub mod mfw;
pub mod perm;
pub mod poly;
pub mod resolve;
pub mod word;

pub use homfly::{homfly_positive_closure, homfly_simple_closure, Evaluator};
pub use inner::{gram_matrix, inner_product_def, inner_product_simple, GramMatrix};
pub use mfw::{
    classify3, conjugation_normal_form3, corollary6_family, is_mfw_sharp, mfw_report,
    sharpness_certificate, CertStep, Certificate, Classification3, Cor6Family, MfwReport,
    RelationKind, ThreeStrandFamily,
};
pub use perm::Permutation;
pub use poly::Laurent2;
pub use resolve::{
    build_tree, find_square_split, hecke_decompose, HeckeDecomposition, ResolutionTree,
    SquareSplit,
};
pub use word::{destabilize_simple, half_twist_word, reduced_word, BraidWord};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A braid word needs at least one strand.
    #[error("invalid strand count 0: a braid word needs at least one strand")]
    InvalidStrandCount,
    /// A generator index outside `1..=strands-1`.
    #[error("letter {letter} out of range for {strands} strand(s)")]
    LetterOutOfRange { letter: usize, strands: usize },
    /// A token in a braid-word string that does not parse as a generator.
    #[error("unexpected token `{0}` in braid word")]
    WordSyntax(String),
    /// A declared strand count below what the letters require.
    #[error("strand count {given} is smaller than the required {required}")]
    StrandsTooSmall { given: usize, required: usize },
    /// The zero polynomial has no degree bounds.
    #[error("zero polynomial has no v-degree bounds")]
    ZeroPolynomial,
    /// Destabilization needs a permutation that moves the last strand.
    #[error("permutation fixes the last strand")]
    FixesLastStrand,
    /// Two words that must share a strand count do not.
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    /// Three-strand classification applied to a word on `n != 3` strands.
    #[error("expected a 3-strand word, got {0} strand(s)")]
    NotThreeStrands(usize),
    /// A one-line array that is not a permutation of `1..=n`.
    #[error("invalid one-line permutation")]
    InvalidPermutation,
    /// A certificate step whose precondition fails during replay.
    #[error("certificate replay failed at step {step}: {reason}")]
    CertificateReplay { step: usize, reason: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
