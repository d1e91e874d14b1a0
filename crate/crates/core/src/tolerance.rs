//! Numerical tolerances used throughout the crate.

/// Tolerance bundle attached to every [`crate::Algebra`].
///
/// Floating-point eigendecompositions cannot deliver exact equality, so all
/// equalities, order checks, and rank decisions are made against these
/// thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Equality of effects and scalars: max-abs for classical payloads,
    /// Frobenius norm for Hilbertian ones.
    pub eps_eq: f64,
    /// Eigenvalue floor for the positive-semidefinite order: `a ≤ b` accepts
    /// `min_eig(b − a) ≥ −eps_psd`.
    pub eps_psd: f64,
    /// Gap threshold for single-linkage eigenvalue clustering; values closer
    /// than this are treated as one eigenvalue.
    pub delta_cluster: f64,
    /// Singular-value cutoff for kernel and rank computations.
    pub eps_rank: f64,
}

impl ToleranceConfig {
    pub const DEFAULT_EPS_EQ: f64 = 1e-9;
    pub const DEFAULT_EPS_PSD: f64 = 1e-9;
    pub const DEFAULT_DELTA_CLUSTER: f64 = 1e-7;
    pub const DEFAULT_EPS_RANK: f64 = 1e-10;

    /// All tolerances must be strictly positive and the cluster gap must
    /// exceed the equality tolerance.
    pub fn new(eps_eq: f64, eps_psd: f64, delta_cluster: f64, eps_rank: f64) -> Option<Self> {
        let all_positive = eps_eq > 0.0 && eps_psd > 0.0 && delta_cluster > 0.0 && eps_rank > 0.0;
        (all_positive && delta_cluster > eps_eq).then_some(Self {
            eps_eq,
            eps_psd,
            delta_cluster,
            eps_rank,
        })
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eps_eq: Self::DEFAULT_EPS_EQ,
            eps_psd: Self::DEFAULT_EPS_PSD,
            delta_cluster: Self::DEFAULT_DELTA_CLUSTER,
            eps_rank: Self::DEFAULT_EPS_RANK,
        }
    }
}
