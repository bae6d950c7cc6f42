//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// Budget exhaustion during a search is *not* an error: the purity engine
/// reports it through its verdict types so that partial work is never
/// silently discarded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is empty")]
    EmptySequence,

    #[error("candidate sequence must start with h_0 = 1, got {0}")]
    FirstEntryNotOne(u64),

    #[error("degree {degree} out of range (socle degree {socle_degree})")]
    DegreeOutOfRange { degree: usize, socle_degree: usize },

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generators use {got} variables but the ambient context has {ambient}")]
    AmbientMismatch { got: usize, ambient: usize },

    #[error("cannot parse monomial {input:?}: {reason}")]
    MonomialParse { input: String, reason: String },

    #[error("cannot parse sequence {input:?}: {reason}")]
    SequenceParse { input: String, reason: String },

    #[error("cannot parse partition {input:?}: {reason}")]
    PartitionParse { input: String, reason: String },

    #[error("candidate pool of {pool} degree-{degree} monomials exceeds the budget cap {cap}")]
    PoolExceeded { pool: u64, degree: usize, cap: u64 },

    #[error("candidate has type t = 0 (no generators); not a meaningful query")]
    ZeroType,

    #[error(
        "design S({l},{m},{r}) impossible by counting: \
         lambda_{level} = {num}/{den} is not an integer"
    )]
    DesignCounting {
        l: usize,
        m: usize,
        r: usize,
        level: usize,
        num: u64,
        den: u64,
    },

    #[error("no Steiner triple system on {0} points: order must be 1 or 3 mod 6")]
    StsCongruence(usize),

    #[error("labeled STS count supported only for r in {{3, 7, 9}}, got {0}")]
    StsCountRange(usize),

    #[error("blocks must be {m}-subsets of 1..={r}; block {index} has {got} elements")]
    BlockSize {
        m: usize,
        r: usize,
        index: usize,
        got: usize,
    },

    #[error("block {index} contains vertex {vertex}, outside 1..={r}")]
    BlockVertex {
        index: usize,
        vertex: usize,
        r: usize,
    },

    #[error("monomial {0} is not squarefree; design translation needs squarefree generators")]
    NotSquarefree(String),

    #[error("vertex {0} is used by no facet; complexes must cover their vertex set")]
    UnusedVertex(usize),

    #[error("complex on {got} vertices exceeds the matroid-recognition cap of {cap}")]
    TooManyVertices { got: usize, cap: usize },

    #[error("f-vector has {got} entries but dimension argument d = {d} needs {want}")]
    FVectorLength { got: usize, d: usize, want: usize },

    #[error("h-vector entry h_{index} = {value} is negative; the complex is not Cohen-Macaulay-like and has no level-algebra reading")]
    NegativeHEntry { index: usize, value: i64 },

    #[error("not a matroid: restriction to {witness:?} is not pure")]
    NotMatroid { witness: Vec<usize> },

    #[error("order ideal is not pure: maximal monomials span degrees {min_deg} and {max_deg}")]
    NotPureIdeal { min_deg: usize, max_deg: usize },

    #[error("disjoint sum needs equal socle degrees; first summand has {first}, summand {index} has {got}")]
    SocleMismatch {
        first: usize,
        index: usize,
        got: usize,
    },

    #[error("nonunimodal factory supports 2 <= M <= 4 at desk scale, got {0}")]
    FactoryRange(u32),

    #[error("projective plane order must be at least 2, got {0}")]
    PlaneOrder(u64),

    #[error("an exact integer entry overflows the supported machine range")]
    EntryOverflow,

    #[error("{0}")]
    Invalid(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
