//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoseaError {
    /// Operands belong to different algebras or have incompatible shapes.
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    /// `a ⊕ b` requested but `a ⊥ b` fails beyond tolerance.
    #[error("effects are not orthogonal: order violation {residual:.3e}")]
    NotOrthogonal { residual: f64 },

    /// `b ⊖ c` requested but `c ≤ b` fails beyond tolerance.
    #[error("effect is not dominated: order violation {residual:.3e}")]
    NotDominated { residual: f64 },

    /// Scalar products are only defined for coefficients in `[0, 1]`.
    #[error("scalar {0} outside [0, 1]")]
    ScalarOutOfRange(f64),

    /// Matrix input to a Hilbertian constructor is not Hermitian.
    #[error("matrix is not Hermitian: asymmetry {residual:.3e}")]
    NotHermitian { residual: f64 },

    /// Entries or eigenvalues escape `[0, 1]` beyond tolerance.
    #[error("effect outside the interval [0, 1]: violation {violation:.3e}")]
    OutOfInterval { violation: f64 },

    /// Matrix input to a context constructor is not unitary.
    #[error("matrix is not unitary: residual {residual:.3e}")]
    NotUnitary { residual: f64 },

    /// Operation requires a one-dimensional sharp effect.
    #[error("effect is not one-dimensional sharp")]
    NotOneDimensional,

    /// Direct-sum component count disagrees with the algebra.
    #[error("direct-sum arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// Context members fail the context invariants.
    #[error("invalid context: {0}")]
    InvalidContext(String),

    /// Mixture weights are not convex coefficients.
    #[error("weights are not convex coefficients")]
    NotConvex,

    /// Operation requires a sharp effect.
    #[error("effect is not sharp: residual {residual:.3e}")]
    NotSharp { residual: f64 },

    /// Operation requires a central effect.
    #[error("effect is not central: commutator residual {residual:.3e}")]
    NotCentral { residual: f64 },

    /// Central split by `0` or `1` carves nothing.
    #[error("central split by 0 or 1 is trivial")]
    TrivialSplit,

    /// The generic-element spectral trick failed to separate minimal central
    /// projections after the retry budget.
    #[error("generic central combination stayed degenerate after {retries} retries")]
    DegenerateGeneric { retries: usize },

    /// Operation requires commuting effects.
    #[error("effects do not commute: residual {residual:.3e}")]
    NotCommuting { residual: f64 },

    /// The zero effect has no pseudo-inverse.
    #[error("zero effect")]
    ZeroEffect,

    /// Operation requires an invertible effect.
    #[error("effect is not invertible: smallest eigenvalue {min_eigenvalue:.3e}")]
    NotInvertible { min_eigenvalue: f64 },

    /// Conditioning on an effect of probability zero.
    #[error("conditioning effect has probability below tolerance")]
    ZeroProbability,

    /// Effect admits no representation in the requested context.
    #[error("effect not representable in the context: residual {residual:.3e}")]
    NotRepresentable { residual: f64 },

    /// Comparability data returned context-dependent representations.
    #[error("comparability violated: representations differ by {residual:.3e}")]
    ComparabilityViolated { residual: f64 },

    /// Comparability data does not cover all ordered context pairs.
    #[error("incomplete comparability data: {0}")]
    IncompleteData(String),
}

pub type Result<T> = std::result::Result<T, CoseaError>;
