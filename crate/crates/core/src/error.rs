use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error in {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    /// The fraction parser only accepts canonical "p/q" (irreducible, q >= 0,
    /// infinity written 1/0).
    #[error("non-canonical fraction: {0}")]
    NonCanonicalFraction(String),

    #[error("not a Farey edge: distance is {distance}, expected 1")]
    NotAnEdge { distance: BigInt },

    #[error("invalid Farey polygon: {0}")]
    InvalidPolygon(String),

    #[error("inconsistent triangulation: {0}")]
    Inconsistent(String),

    #[error("polygon is not normalized (expected v0 = 1/0 and v_{{n-1}} = 0/1)")]
    NotNormalized,

    #[error("renormalization failed: no sign choice yields a decreasing normalized polygon")]
    NormalizationFailed,

    #[error("not a quiddity: {0}")]
    NotAQuiddity(String),

    #[error("degenerate order {n}: operation requires order >= 3")]
    DegenerateOrder { n: usize },

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("tiling is not tame: {0}")]
    NotTame(String),

    #[error("index ({i}, {j}) outside the fundamental domain")]
    IndexOutOfDomain { i: i64, j: i64 },

    #[error("polygon separation violated: the n-gon does not fit between v'_(m-2) and v'_(m-1)")]
    SeparationViolated,

    #[error("{what} bound exceeded: {got} > {max}")]
    BoundExceeded {
        what: &'static str,
        max: u64,
        got: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
