//! Exact combinatorics for the Iwahori-Weyl group of split `GO_2n`.
//!
//! The crate computes, for the minuscule cocharacters `μ1 = (1^(n), 0^(n))`
//! and `μ2 = (1^(n-1), 0, 1, 0^(n-1))`, three subsets of the Iwahori-Weyl group:
//!
//! * `Adm°(μ)`, the Bruhat-order closure of the translations `t_{σμ}`, `σ ∈ W°`
//!   ([`admissibility`]);
//! * `Perm^sp(μ)`, the spin-permissible elements, read off extended alcoves
//!   ([`permissibility`]);
//! * `Perm(μ)`, the elements whose alcove displacement stays in `Conv(W°μ)`
//!   ([`permissibility::is_permissible`]).
//!
//! Each set is produced by its own pipeline so that their equality is a real
//! check. [`admissibility::ascent_chain`] additionally certifies every
//! spin-permissible element by an explicit chain of length-increasing affine
//! reflections ending at a translation. [`spin_exterior`] implements the
//! operator `a` on `∧^n V` and the valuation test on torus-fixed points.
//!
//! All arithmetic is exact; all set outputs are sorted.

pub mod admissibility;
pub mod codec;
pub mod index_set;
pub mod iwahori_weyl;
pub mod length_bruhat;
pub mod permissibility;
pub mod report;
pub mod root_datum;
pub mod spin_exterior;

pub use admissibility::{adm, adm_circ, ascent_chain, ascent_step, AscentCertificate};
pub use index_set::IndexSet;
pub use iwahori_weyl::{BaseAlcove, ExtendedAlcove, IwElement};
pub use length_bruhat::{bruhat_leq, length, lower_closure, AffineRoot};
pub use permissibility::{
    enumerate_perm, enumerate_perm_sp, is_gl_permissible, is_permissible, is_spin_permissible,
    z_set, KInterval,
};
pub use root_datum::{Cocharacter, HalfVector, Mu, SignedPermutation};

/// Errors raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cocharacter: {0}")]
    InvalidCocharacter(String),
    #[error("invalid extended alcove: {0}")]
    InvalidAlcove(String),
    #[error("unsupported cocharacter {0}; only mu1 and mu2 are handled")]
    UnsupportedMu(String),
    #[error("element is not GL-permissible")]
    NotGlPermissible,
    #[error("element is a translation")]
    TranslationElement,
    #[error("invalid affine root ({i}, {j}; {d})")]
    InvalidRoot { i: usize, j: usize, d: i64 },
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("malformed torus-fixed point: {0}")]
    MalformedFixedPoint(String),
    #[error("decode error: {0}")]
    Decode(String),
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
