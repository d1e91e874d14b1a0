//! Algebra descriptors and the effect-algebra operations `⊕`, `⊖`, `′`,
//! `≤`, scalar product, and the sequential product `∘`.
//!
//! Three backends are supported:
//!
//! - classical fuzzy events over `n` outcomes, `f ∘ g = fg` pointwise;
//! - Hilbertian matrix effects `0 ≤ A ≤ I` on `C^d`, `A ∘ B = A^{1/2} B A^{1/2}`,
//!   optionally carrying a generator list when the algebra is a sub-algebra
//!   of the full operator interval;
//! - direct sums of the above with componentwise operations.
//!
//! Commutation in the Hilbertian backend is decided by the commutator norm
//! `‖AB − BA‖ ≤ ε_eq`; `A ∘ B = B ∘ A` holds iff `AB = BA`, so this is
//! equivalent to the definitional check, which remains available as
//! [`Algebra::commutes_via_seq`] for cross-validation.
//!
//! Arithmetic results are clamped back into the legal interval (eigenvalues
//! into `[0, 1]`) after the order preconditions have been checked; the clamp
//! magnitude is recorded on the effect. Near-boundary sums whose maximal
//! eigenvalue lands in `(1, 1 + ε_psd]` are therefore accepted and repaired.

use crate::effect::{Effect, EffectData};
use crate::error::{CoseaError, Result};
use crate::linalg::{self, CMat, CVec};
use crate::tolerance::ToleranceConfig;
use nalgebra::DVector;
use num_complex::Complex64 as C64;

/// Backend payload of an algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum Backend {
    Classical { outcomes: usize },
    Hilbertian { dim: usize, generators: Option<Vec<Effect>> },
    DirectSum { parts: Vec<Algebra> },
}

/// A finite-dimensional effect algebra with its tolerance configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    backend: Backend,
    tol: ToleranceConfig,
}

impl Algebra {
    /// Classical algebra over `n ≥ 1` outcomes.
    pub fn classical(outcomes: usize) -> Result<Self> {
        if outcomes == 0 {
            return Err(CoseaError::BackendMismatch(
                "classical algebra needs at least one outcome".into(),
            ));
        }
        Ok(Self { backend: Backend::Classical { outcomes }, tol: ToleranceConfig::default() })
    }

    /// Full Hilbertian algebra on `C^d`, `d ≥ 1`.
    pub fn hilbertian(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(CoseaError::BackendMismatch(
                "Hilbertian algebra needs dimension at least one".into(),
            ));
        }
        Ok(Self {
            backend: Backend::Hilbertian { dim, generators: None },
            tol: ToleranceConfig::default(),
        })
    }

    /// Sub-Hilbertian algebra presented by a generator list. Membership in
    /// the generated algebra is not decided here; the generators feed the
    /// commutant machinery.
    pub fn hilbertian_with_generators(dim: usize, generators: Vec<Effect>) -> Result<Self> {
        let base = Self::hilbertian(dim)?;
        for g in &generators {
            base.validate_effect(g)?;
        }
        Ok(Self {
            backend: Backend::Hilbertian { dim, generators: Some(generators) },
            tol: base.tol,
        })
    }

    /// Direct sum of at least two algebras. Nested sums are flattened, so
    /// the parenthesization of repeated sums is immaterial.
    pub fn direct_sum(parts: Vec<Algebra>) -> Result<Self> {
        let mut flat = Vec::new();
        for p in parts {
            match p.backend {
                Backend::DirectSum { parts } => flat.extend(parts),
                _ => flat.push(p),
            }
        }
        if flat.len() < 2 {
            return Err(CoseaError::ArityMismatch { expected: 2, got: flat.len() });
        }
        let tol = flat[0].tol;
        let flat = flat.into_iter().map(|p| p.with_tolerances(tol)).collect();
        Ok(Self { backend: Backend::DirectSum { parts: flat }, tol })
    }

    /// Replace the tolerance configuration (propagates into summands).
    pub fn with_tolerances(mut self, tol: ToleranceConfig) -> Self {
        self.tol = tol;
        if let Backend::DirectSum { parts } = &mut self.backend {
            *parts = parts.iter().map(|p| p.clone().with_tolerances(tol)).collect();
        }
        self
    }

    pub fn tolerances(&self) -> &ToleranceConfig {
        &self.tol
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.backend, Backend::Classical { .. })
    }

    pub fn is_hilbertian(&self) -> bool {
        matches!(self.backend, Backend::Hilbertian { .. })
    }

    pub fn is_direct_sum(&self) -> bool {
        matches!(self.backend, Backend::DirectSum { .. })
    }

    /// Summands of a direct sum.
    pub fn parts(&self) -> Option<&[Algebra]> {
        match &self.backend {
            Backend::DirectSum { parts } => Some(parts),
            _ => None,
        }
    }

    /// Generator list of a sub-Hilbertian algebra.
    pub fn generators(&self) -> Option<&[Effect]> {
        match &self.backend {
            Backend::Hilbertian { generators, .. } => generators.as_deref(),
            _ => None,
        }
    }

    /// Cardinality every context of this algebra has: the outcome count,
    /// the Hilbert dimension, or the sum over summands.
    pub fn total_dim(&self) -> usize {
        match &self.backend {
            Backend::Classical { outcomes } => *outcomes,
            Backend::Hilbertian { dim, .. } => *dim,
            Backend::DirectSum { parts } => parts.iter().map(Algebra::total_dim).sum(),
        }
    }

    /* Effect construction ****************************************************/

    /// The null effect.
    pub fn zero(&self) -> Effect {
        match &self.backend {
            Backend::Classical { outcomes } => Effect::classical(DVector::zeros(*outcomes)),
            Backend::Hilbertian { dim, .. } => Effect::hilbertian(CMat::zeros(*dim, *dim)),
            Backend::DirectSum { parts } => {
                Effect::direct_sum(parts.iter().map(Algebra::zero).collect())
            }
        }
    }

    /// The unit effect.
    pub fn unit(&self) -> Effect {
        match &self.backend {
            Backend::Classical { outcomes } => {
                Effect::classical(DVector::from_element(*outcomes, 1.0))
            }
            Backend::Hilbertian { dim, .. } => Effect::hilbertian(CMat::identity(*dim, *dim)),
            Backend::DirectSum { parts } => {
                Effect::direct_sum(parts.iter().map(Algebra::unit).collect())
            }
        }
    }

    /// Validate a complex matrix as a Hilbertian effect: Hermitian within
    /// tolerance, eigenvalues inside `[−ε_psd, 1 + ε_psd]`. Eigenvalues are
    /// clamped into `[0, 1]` and the clamp magnitude recorded.
    pub fn effect_from_matrix(&self, m: &CMat) -> Result<Effect> {
        let dim = match &self.backend {
            Backend::Hilbertian { dim, .. } => *dim,
            _ => {
                return Err(CoseaError::BackendMismatch(
                    "matrix effects require a Hilbertian algebra".into(),
                ))
            }
        };
        if m.nrows() != dim || m.ncols() != dim {
            return Err(CoseaError::BackendMismatch(format!(
                "expected a {dim}x{dim} matrix, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let asym = linalg::hermitian_residual(m);
        if asym > self.tol.eps_eq {
            return Err(CoseaError::NotHermitian { residual: asym });
        }
        let (values, vectors) = linalg::eigh(m);
        let violation = linalg::interval_violation(&values);
        if violation > self.tol.eps_psd {
            return Err(CoseaError::OutOfInterval { violation });
        }
        Ok(clamp_eigh(&values, &vectors, violation))
    }

    /// Validate a real vector as a classical effect; entries are clamped
    /// into `[0, 1]`.
    pub fn effect_from_vector(&self, v: &DVector<f64>) -> Result<Effect> {
        let n = match &self.backend {
            Backend::Classical { outcomes } => *outcomes,
            _ => {
                return Err(CoseaError::BackendMismatch(
                    "vector effects require a classical algebra".into(),
                ))
            }
        };
        if v.len() != n {
            return Err(CoseaError::BackendMismatch(format!(
                "expected {n} outcomes, got {}",
                v.len()
            )));
        }
        let violation = v.iter().map(|&x| (-x).max(x - 1.0).max(0.0)).fold(0.0, f64::max);
        if violation > self.tol.eps_eq {
            return Err(CoseaError::OutOfInterval { violation });
        }
        let mut e = Effect::classical(v.map(|x| x.clamp(0.0, 1.0)));
        e.clamped_by = violation;
        Ok(e)
    }

    /// Assemble a direct-sum effect from one component per summand.
    pub fn effect_from_components(&self, components: Vec<Effect>) -> Result<Effect> {
        let parts = self.parts().ok_or_else(|| {
            CoseaError::BackendMismatch("component effects require a direct sum".into())
        })?;
        if components.len() != parts.len() {
            return Err(CoseaError::ArityMismatch {
                expected: parts.len(),
                got: components.len(),
            });
        }
        for (p, c) in parts.iter().zip(&components) {
            p.validate_effect(c)?;
        }
        Ok(Effect::direct_sum(components))
    }

    /// Extract the `index`-th component of a direct-sum effect.
    pub fn project_component(&self, a: &Effect, index: usize) -> Result<Effect> {
        let parts = self.parts().ok_or_else(|| {
            CoseaError::BackendMismatch("component projection requires a direct sum".into())
        })?;
        let comps = a
            .as_components()
            .ok_or_else(|| CoseaError::BackendMismatch("effect is not a direct-sum effect".into()))?;
        if index >= parts.len() || comps.len() != parts.len() {
            return Err(CoseaError::ArityMismatch { expected: parts.len(), got: comps.len() });
        }
        Ok(comps[index].clone())
    }

    /// Shape-check an effect against this algebra.
    pub fn validate_effect(&self, a: &Effect) -> Result<()> {
        match (&self.backend, &a.data) {
            (Backend::Classical { outcomes }, EffectData::Classical(v))
                if v.len() == *outcomes =>
            {
                Ok(())
            }
            (Backend::Hilbertian { dim, .. }, EffectData::Hilbertian(m))
                if m.nrows() == *dim && m.ncols() == *dim =>
            {
                Ok(())
            }
            (Backend::DirectSum { parts }, EffectData::DirectSum(comps))
                if parts.len() == comps.len() =>
            {
                parts.iter().zip(comps).try_for_each(|(p, c)| p.validate_effect(c))
            }
            _ => Err(CoseaError::BackendMismatch("effect does not fit the algebra".into())),
        }
    }

    fn validate_pair(&self, a: &Effect, b: &Effect) -> Result<()> {
        self.validate_effect(a)?;
        self.validate_effect(b)
    }

    /* Equality and order *****************************************************/

    /// Tolerance equality: max-abs (classical) or Frobenius (Hilbertian)
    /// distance within `ε_eq`.
    pub fn eq_effects(&self, a: &Effect, b: &Effect) -> bool {
        a.distance(b).is_some_and(|d| d <= self.tol.eps_eq)
    }

    /// How far `a ≤ b` is violated: the most negative entry or eigenvalue of
    /// `b − a`, as a nonnegative magnitude.
    pub fn order_violation(&self, a: &Effect, b: &Effect) -> Result<f64> {
        self.validate_pair(a, b)?;
        Ok(match (&a.data, &b.data) {
            (EffectData::Classical(x), EffectData::Classical(y)) => {
                x.iter().zip(y.iter()).map(|(p, q)| (p - q).max(0.0)).fold(0.0, f64::max)
            }
            (EffectData::Hilbertian(x), EffectData::Hilbertian(y)) => {
                let (values, _) = linalg::eigh(&(y - x));
                (-values[0]).max(0.0)
            }
            (EffectData::DirectSum(xs), EffectData::DirectSum(ys)) => {
                let parts = self.parts().expect("validated direct sum");
                let mut worst = 0.0f64;
                for ((p, x), y) in parts.iter().zip(xs).zip(ys) {
                    worst = worst.max(p.order_violation(x, y)?);
                }
                worst
            }
            _ => unreachable!("validated shapes"),
        })
    }

    fn order_slack(&self) -> f64 {
        if self.is_classical() {
            self.tol.eps_eq
        } else {
            self.tol.eps_psd
        }
    }

    /// `a ≤ b` in the backend order.
    pub fn le(&self, a: &Effect, b: &Effect) -> Result<bool> {
        Ok(self.order_violation(a, b)? <= self.order_slack())
    }

    /// `a ⊥ b`: the complement of `b` dominates `a`.
    pub fn orthogonal(&self, a: &Effect, b: &Effect) -> Result<bool> {
        let b_prime = self.complement(b)?;
        self.le(a, &b_prime)
    }

    /* Algebraic operations ***************************************************/

    /// Orthogonal sum `a ⊕ b`.
    pub fn oplus(&self, a: &Effect, b: &Effect) -> Result<Effect> {
        let b_prime = self.complement(b)?;
        let violation = self.order_violation(a, &b_prime)?;
        if violation > self.order_slack() {
            return Err(CoseaError::NotOrthogonal { residual: violation });
        }
        Ok(self.clamped_sum(a, b))
    }

    fn clamped_sum(&self, a: &Effect, b: &Effect) -> Effect {
        match (&self.backend, &a.data, &b.data) {
            (Backend::Classical { .. }, EffectData::Classical(x), EffectData::Classical(y)) => {
                self.clamp_classical(x + y)
            }
            (Backend::Hilbertian { .. }, EffectData::Hilbertian(x), EffectData::Hilbertian(y)) => {
                self.clamp_hilbertian(x + y)
            }
            (
                Backend::DirectSum { parts },
                EffectData::DirectSum(xs),
                EffectData::DirectSum(ys),
            ) => Effect::direct_sum(
                parts.iter().zip(xs).zip(ys).map(|((p, x), y)| p.clamped_sum(x, y)).collect(),
            ),
            _ => unreachable!("validated shapes"),
        }
    }

    /// Complement `a′`, the unique effect with `a ⊕ a′ = 1`.
    pub fn complement(&self, a: &Effect) -> Result<Effect> {
        self.validate_effect(a)?;
        Ok(self.complement_unchecked(a))
    }

    fn complement_unchecked(&self, a: &Effect) -> Effect {
        match (&self.backend, &a.data) {
            (Backend::Classical { .. }, EffectData::Classical(v)) => {
                Effect::classical(v.map(|x| (1.0 - x).clamp(0.0, 1.0)))
            }
            (Backend::Hilbertian { dim, .. }, EffectData::Hilbertian(m)) => {
                Effect::hilbertian(CMat::identity(*dim, *dim) - m)
            }
            (Backend::DirectSum { parts }, EffectData::DirectSum(comps)) => Effect::direct_sum(
                parts.iter().zip(comps).map(|(p, c)| p.complement_unchecked(c)).collect(),
            ),
            _ => unreachable!("validated shapes"),
        }
    }

    /// Difference `b ⊖ c = (c ⊕ b′)′`, defined when `c ≤ b`.
    pub fn ominus(&self, b: &Effect, c: &Effect) -> Result<Effect> {
        let violation = self.order_violation(c, b)?;
        if violation > self.order_slack() {
            return Err(CoseaError::NotDominated { residual: violation });
        }
        let b_prime = self.complement_unchecked(b);
        let sum = self.clamped_sum(c, &b_prime);
        Ok(self.complement_unchecked(&sum))
    }

    /// Scalar product `λ a` for `λ ∈ [0, 1]`.
    pub fn scalar(&self, lambda: f64, a: &Effect) -> Result<Effect> {
        if !(0.0..=1.0).contains(&lambda) || lambda.is_nan() {
            return Err(CoseaError::ScalarOutOfRange(lambda));
        }
        self.validate_effect(a)?;
        Ok(self.scalar_unchecked(lambda, a))
    }

    fn scalar_unchecked(&self, lambda: f64, a: &Effect) -> Effect {
        match (&self.backend, &a.data) {
            (Backend::Classical { .. }, EffectData::Classical(v)) => Effect::classical(v * lambda),
            (Backend::Hilbertian { .. }, EffectData::Hilbertian(m)) => {
                Effect::hilbertian(m * C64::new(lambda, 0.0))
            }
            (Backend::DirectSum { parts }, EffectData::DirectSum(comps)) => Effect::direct_sum(
                parts.iter().zip(comps).map(|(p, c)| p.scalar_unchecked(lambda, c)).collect(),
            ),
            _ => unreachable!("validated shapes"),
        }
    }

    /// Sequential product `a ∘ b`: pointwise product, `A^{1/2} B A^{1/2}`,
    /// or componentwise.
    pub fn seq(&self, a: &Effect, b: &Effect) -> Result<Effect> {
        self.validate_pair(a, b)?;
        Ok(self.seq_unchecked(a, b))
    }

    pub(crate) fn seq_unchecked(&self, a: &Effect, b: &Effect) -> Effect {
        match (&self.backend, &a.data, &b.data) {
            (Backend::Classical { .. }, EffectData::Classical(x), EffectData::Classical(y)) => {
                Effect::classical(x.component_mul(y))
            }
            (Backend::Hilbertian { .. }, EffectData::Hilbertian(x), EffectData::Hilbertian(y)) => {
                let root = linalg::sqrt_psd(x);
                self.clamp_hilbertian(&root * y * &root)
            }
            (
                Backend::DirectSum { parts },
                EffectData::DirectSum(xs),
                EffectData::DirectSum(ys),
            ) => Effect::direct_sum(
                parts.iter().zip(xs).zip(ys).map(|((p, x), y)| p.seq_unchecked(x, y)).collect(),
            ),
            _ => unreachable!("validated shapes"),
        }
    }

    /// Residual of the commutation check: commutator norm for Hilbertian
    /// payloads, zero for classical ones, worst component for sums.
    pub fn commutation_residual(&self, a: &Effect, b: &Effect) -> Result<f64> {
        self.validate_pair(a, b)?;
        Ok(match (&self.backend, &a.data, &b.data) {
            (Backend::Classical { .. }, ..) => 0.0,
            (Backend::Hilbertian { .. }, EffectData::Hilbertian(x), EffectData::Hilbertian(y)) => {
                linalg::commutator_norm(x, y)
            }
            (
                Backend::DirectSum { parts },
                EffectData::DirectSum(xs),
                EffectData::DirectSum(ys),
            ) => {
                let mut worst = 0.0f64;
                for ((p, x), y) in parts.iter().zip(xs).zip(ys) {
                    worst = worst.max(p.commutation_residual(x, y)?);
                }
                worst
            }
            _ => unreachable!("validated shapes"),
        })
    }

    /// `a ∣ b`: the effects do not interfere.
    pub fn commutes(&self, a: &Effect, b: &Effect) -> Result<bool> {
        Ok(self.commutation_residual(a, b)? <= self.tol.eps_eq)
    }

    /// Definitional commutation check `a ∘ b = b ∘ a`, for cross-validating
    /// the commutator shortcut.
    pub fn commutes_via_seq(&self, a: &Effect, b: &Effect) -> Result<bool> {
        let ab = self.seq(a, b)?;
        let ba = self.seq(b, a)?;
        Ok(self.eq_effects(&ab, &ba))
    }

    /* Sharpness **************************************************************/

    /// Distance of the raw spectrum from `{0, 1}`.
    pub fn sharpness_residual(&self, a: &Effect) -> Result<f64> {
        self.validate_effect(a)?;
        Ok(a.spectrum_raw().iter().map(|&v| v.min(1.0 - v).abs()).fold(0.0, f64::max))
    }

    /// Sharp effects have spectrum in `{0, 1}`; equivalently `a ∘ a = a`.
    pub fn is_sharp(&self, a: &Effect) -> Result<bool> {
        Ok(self.sharpness_residual(a)? <= self.tol.delta_cluster)
    }

    /// Number of eigenvalues above the cluster threshold.
    pub fn rank(&self, a: &Effect) -> Result<usize> {
        self.validate_effect(a)?;
        Ok(a.spectrum_raw().iter().filter(|&&v| v > self.tol.delta_cluster).count())
    }

    /// One-dimensional sharp effects: sharp with rank one. In a direct sum
    /// exactly one component is nonzero and it is one-dimensional there.
    pub fn is_one_dimensional(&self, a: &Effect) -> Result<bool> {
        Ok(self.is_sharp(a)? && self.rank(a)? == 1)
    }

    /* Clamping ***************************************************************/

    fn clamp_classical(&self, v: DVector<f64>) -> Effect {
        let violation = v.iter().map(|&x| (-x).max(x - 1.0).max(0.0)).fold(0.0, f64::max);
        let mut e = Effect::classical(v.map(|x| x.clamp(0.0, 1.0)));
        e.clamped_by = violation;
        e
    }

    pub(crate) fn clamp_hilbertian(&self, m: CMat) -> Effect {
        let (values, vectors) = linalg::eigh(&m);
        let violation = linalg::interval_violation(&values);
        if violation == 0.0 {
            return Effect::hilbertian(linalg::hermitize(&m));
        }
        clamp_eigh(&values, &vectors, violation)
    }

    /* Spanning panel *********************************************************/

    /// Effects whose real span covers the whole backend: all point
    /// indicators (classical), rank-one projectors spanning the Hermitian
    /// matrices (Hilbertian), embedded panels of the summands (sums). Used
    /// as the default generating set of a full algebra.
    pub fn spanning_effect_panel(&self) -> Vec<Effect> {
        match &self.backend {
            Backend::Classical { outcomes } => (0..*outcomes)
                .map(|i| {
                    let mut v = DVector::zeros(*outcomes);
                    v[i] = 1.0;
                    Effect::classical(v)
                })
                .collect(),
            Backend::Hilbertian { dim, .. } => {
                let d = *dim;
                let mut panel = Vec::new();
                for i in 0..d {
                    let mut e = CVec::zeros(d);
                    e[i] = C64::new(1.0, 0.0);
                    panel.push(Effect::hilbertian(linalg::projector(&e)));
                }
                for i in 0..d {
                    for j in (i + 1)..d {
                        let mut plus = CVec::zeros(d);
                        plus[i] = C64::new(1.0, 0.0);
                        plus[j] = C64::new(1.0, 0.0);
                        panel.push(Effect::hilbertian(linalg::projector(&plus)));
                        let mut phase = CVec::zeros(d);
                        phase[i] = C64::new(1.0, 0.0);
                        phase[j] = C64::new(0.0, 1.0);
                        panel.push(Effect::hilbertian(linalg::projector(&phase)));
                    }
                }
                panel
            }
            Backend::DirectSum { parts } => {
                let mut panel = Vec::new();
                for (i, p) in parts.iter().enumerate() {
                    for e in p.spanning_effect_panel() {
                        let comps = parts
                            .iter()
                            .enumerate()
                            .map(|(j, q)| if j == i { e.clone() } else { q.zero() })
                            .collect();
                        panel.push(Effect::direct_sum(comps));
                    }
                }
                panel
            }
        }
    }
}

fn clamp_eigh(values: &[f64], vectors: &CMat, violation: f64) -> Effect {
    let clamped: Vec<f64> = values.iter().map(|&v| v.clamp(0.0, 1.0)).collect();
    let mut e = Effect::hilbertian(linalg::from_eigh(&clamped, vectors));
    e.clamped_by = violation;
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn diag2(a: f64, b: f64) -> CMat {
        CMat::from_diagonal(&CVec::from_vec(vec![c(a), c(b)]))
    }

    fn p_plus() -> CMat {
        // projector onto (e1 + e2)/√2
        CMat::from_row_slice(2, 2, &[c(0.5), c(0.5), c(0.5), c(0.5)])
    }

    fn p_e1() -> CMat {
        CMat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(0.0)])
    }

    #[test]
    fn oplus_identity_and_pointwise_sum() {
        let alg = Algebra::classical(2).unwrap();
        let zero = alg.zero();
        let a = alg.effect_from_vector(&dvector![0.3, 0.5]).unwrap();
        let b = alg.effect_from_vector(&dvector![0.4, 0.2]).unwrap();
        assert!(alg.eq_effects(&alg.oplus(&zero, &a).unwrap(), &a));
        let sum = alg.oplus(&a, &b).unwrap();
        assert!(alg.eq_effects(&sum, &alg.effect_from_vector(&dvector![0.7, 0.7]).unwrap()));
    }

    #[test]
    fn oplus_adds_diagonals() {
        let alg = Algebra::hilbertian(2).unwrap();
        let a = alg.effect_from_matrix(&diag2(0.5, 0.2)).unwrap();
        let b = alg.effect_from_matrix(&diag2(0.4, 0.1)).unwrap();
        let sum = alg.oplus(&a, &b).unwrap();
        let want = alg.effect_from_matrix(&diag2(0.9, 0.3)).unwrap();
        assert!(alg.eq_effects(&sum, &want));
    }

    #[test]
    fn oplus_rejects_nonorthogonal() {
        let alg = Algebra::hilbertian(2).unwrap();
        let a = alg.effect_from_matrix(&diag2(0.8, 0.2)).unwrap();
        let b = alg.effect_from_matrix(&diag2(0.5, 0.1)).unwrap();
        assert!(matches!(alg.oplus(&a, &b), Err(CoseaError::NotOrthogonal { .. })));
    }

    #[test]
    fn ominus_examples() {
        let alg = Algebra::hilbertian(2).unwrap();
        let b = alg.effect_from_matrix(&diag2(0.2, 0.9)).unwrap();
        assert!(alg.eq_effects(&alg.ominus(&b, &b).unwrap(), &alg.zero()));
        let diff = alg.ominus(&alg.unit(), &b).unwrap();
        assert!(alg.eq_effects(&diff, &alg.effect_from_matrix(&diag2(0.8, 0.1)).unwrap()));

        let cls = Algebra::classical(2).unwrap();
        let x = cls.effect_from_vector(&dvector![0.7, 0.7]).unwrap();
        let y = cls.effect_from_vector(&dvector![0.3, 0.5]).unwrap();
        let d = cls.ominus(&x, &y).unwrap();
        assert!(cls.eq_effects(&d, &cls.effect_from_vector(&dvector![0.4, 0.2]).unwrap()));
        assert!(matches!(cls.ominus(&y, &x), Err(CoseaError::NotDominated { .. })));
    }

    #[test]
    fn oplus_roundtrips_with_ominus() {
        let alg = Algebra::hilbertian(2).unwrap();
        let b = alg.effect_from_matrix(&p_plus()).unwrap();
        let c = alg.scalar(0.25, &b).unwrap();
        let diff = alg.ominus(&b, &c).unwrap();
        let back = alg.oplus(&c, &diff).unwrap();
        assert!(alg.eq_effects(&back, &b));
    }

    #[test]
    fn scalar_laws() {
        let alg = Algebra::hilbertian(2).unwrap();
        let a = alg.effect_from_matrix(&diag2(0.8, 0.4)).unwrap();
        assert!(alg.eq_effects(&alg.scalar(1.0, &a).unwrap(), &a));
        assert!(alg.eq_effects(&alg.scalar(0.0, &a).unwrap(), &alg.zero()));
        let half = alg.scalar(0.5, &a).unwrap();
        assert!(alg.eq_effects(&half, &alg.effect_from_matrix(&diag2(0.4, 0.2)).unwrap()));
        assert!(matches!(alg.scalar(1.5, &a), Err(CoseaError::ScalarOutOfRange(_))));
    }

    #[test]
    fn le_examples() {
        let alg = Algebra::hilbertian(2).unwrap();
        let a = alg.effect_from_matrix(&diag2(0.3, 0.3)).unwrap();
        let b = alg.effect_from_matrix(&diag2(0.3, 0.9)).unwrap();
        assert!(alg.le(&a, &alg.unit()).unwrap());
        assert!(alg.le(&a, &b).unwrap());
        // P(e1) ≤ P((e1+e2)/√2) fails: the difference has a negative eigenvalue
        let p = alg.effect_from_matrix(&p_e1()).unwrap();
        let q = alg.effect_from_matrix(&p_plus()).unwrap();
        assert!(!alg.le(&p, &q).unwrap());
        assert!(alg.order_violation(&p, &q).unwrap() > 0.2);
    }

    #[test]
    fn seq_examples() {
        let alg = Algebra::hilbertian(2).unwrap();
        let a = alg.effect_from_matrix(&diag2(0.25, 1.0)).unwrap();
        let b = alg.effect_from_matrix(&diag2(0.4, 0.8)).unwrap();
        // diagonal effects multiply eigenvalues pairwise
        let ab = alg.seq(&a, &b).unwrap();
        assert!(alg.eq_effects(&ab, &alg.effect_from_matrix(&diag2(0.1, 0.8)).unwrap()));
        assert!(alg.eq_effects(&alg.seq(&alg.unit(), &a).unwrap(), &a));
        // P(e1) ∘ P((e1+e2)/√2) = [[0.5, 0], [0, 0]]
        let p = alg.effect_from_matrix(&p_e1()).unwrap();
        let q = alg.effect_from_matrix(&p_plus()).unwrap();
        let pq = alg.seq(&p, &q).unwrap();
        let want = alg.effect_from_matrix(&diag2(0.5, 0.0)).unwrap();
        assert!(alg.eq_effects(&pq, &want));
    }

    #[test]
    fn commutes_examples() {
        let alg = Algebra::hilbertian(2).unwrap();
        let p = alg.effect_from_matrix(&p_e1()).unwrap();
        let q = alg.effect_from_matrix(&p_plus()).unwrap();
        assert!(alg.commutes(&p, &p).unwrap());
        assert!(alg.commutes(&alg.unit(), &q).unwrap());
        assert!(!alg.commutes(&p, &q).unwrap());
        // ‖[P(e1), P(+)]‖ = 0.5 for these projections
        let residual = alg.commutation_residual(&p, &q).unwrap();
        assert!((residual - 0.5).abs() < 1e-12);
        assert_eq!(alg.commutes(&p, &q).unwrap(), alg.commutes_via_seq(&p, &q).unwrap());
    }

    #[test]
    fn effect_validation() {
        let alg = Algebra::hilbertian(2).unwrap();
        assert!(alg.effect_from_matrix(&CMat::identity(2, 2)).is_ok());
        assert!(matches!(
            alg.effect_from_matrix(&diag2(1.5, 0.0)),
            Err(CoseaError::OutOfInterval { .. })
        ));
        let skew = CMat::from_row_slice(2, 2, &[c(0.5), C64::new(0.0, 0.4), c(0.0), c(0.5)]);
        assert!(matches!(alg.effect_from_matrix(&skew), Err(CoseaError::NotHermitian { .. })));
        // [[0.5, 0.25], [0.25, 0.5]] accepted with eigenvalues {0.75, 0.25}
        let m = CMat::from_row_slice(2, 2, &[c(0.5), c(0.25), c(0.25), c(0.5)]);
        let e = alg.effect_from_matrix(&m).unwrap();
        let spectrum = e.spectrum_raw();
        assert!((spectrum[0] - 0.25).abs() < 1e-12 && (spectrum[1] - 0.75).abs() < 1e-12);

        let cls = Algebra::classical(2).unwrap();
        assert!(cls.effect_from_vector(&dvector![0.0, 0.0]).is_ok());
        assert!(cls.effect_from_vector(&dvector![1.0, 1.0]).is_ok());
        assert!(matches!(
            cls.effect_from_vector(&dvector![0.2, 1.1]),
            Err(CoseaError::OutOfInterval { .. })
        ));
    }

    #[test]
    fn near_boundary_sum_is_clamped() {
        let alg = Algebra::hilbertian(2).unwrap();
        let a = alg.effect_from_matrix(&diag2(0.5, 0.1)).unwrap();
        let b = alg.effect_from_matrix(&diag2(0.5 + 5e-10, 0.2)).unwrap();
        let sum = alg.oplus(&a, &b).unwrap();
        assert!(sum.clamped_by > 0.0 && sum.clamped_by <= 1e-9);
        assert!(sum.spectrum_raw().iter().all(|&v| (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn sharpness_and_rank() {
        let alg = Algebra::hilbertian(3).unwrap();
        let m = CMat::from_diagonal(&CVec::from_vec(vec![c(1.0), c(0.0), c(1.0)]));
        let e = alg.effect_from_matrix(&m).unwrap();
        assert!(alg.is_sharp(&e).unwrap());
        assert!(!alg.is_one_dimensional(&e).unwrap());
        assert_eq!(alg.rank(&e).unwrap(), 2);

        let alg2 = Algebra::hilbertian(2).unwrap();
        let p = alg2.effect_from_matrix(&p_plus()).unwrap();
        assert!(alg2.is_one_dimensional(&p).unwrap());
        let fuzzy = alg2.effect_from_matrix(&diag2(0.5, 0.0)).unwrap();
        assert!(!alg2.is_sharp(&fuzzy).unwrap());
    }

    #[test]
    fn direct_sum_flattens_and_operates_componentwise() {
        let h2 = Algebra::hilbertian(2).unwrap();
        let h1 = Algebra::hilbertian(1).unwrap();
        let c1 = Algebra::classical(1).unwrap();
        let nested = Algebra::direct_sum(vec![
            Algebra::direct_sum(vec![h2.clone(), h1.clone()]).unwrap(),
            c1.clone(),
        ])
        .unwrap();
        assert_eq!(nested.parts().unwrap().len(), 3);
        assert_eq!(nested.total_dim(), 4);

        let ds = Algebra::direct_sum(vec![h2.clone(), c1.clone()]).unwrap();
        let a = ds
            .effect_from_components(vec![
                h2.effect_from_matrix(&diag2(0.5, 1.0)).unwrap(),
                c1.effect_from_vector(&dvector![0.2]).unwrap(),
            ])
            .unwrap();
        let b = ds
            .effect_from_components(vec![
                h2.effect_from_matrix(&diag2(1.0, 0.5)).unwrap(),
                c1.effect_from_vector(&dvector![0.5]).unwrap(),
            ])
            .unwrap();
        let ab = ds.seq(&a, &b).unwrap();
        let want = ds
            .effect_from_components(vec![
                h2.effect_from_matrix(&diag2(0.5, 0.5)).unwrap(),
                c1.effect_from_vector(&dvector![0.1]).unwrap(),
            ])
            .unwrap();
        assert!(ds.eq_effects(&ab, &want));

        let unit = ds.unit();
        assert!(ds
            .eq_effects(&unit, &ds.effect_from_components(vec![h2.unit(), c1.unit()]).unwrap()));
        let a_prime = ds.complement(&a).unwrap();
        let want_prime = ds
            .effect_from_components(vec![
                h2.effect_from_matrix(&diag2(0.5, 0.0)).unwrap(),
                c1.effect_from_vector(&dvector![0.8]).unwrap(),
            ])
            .unwrap();
        assert!(ds.eq_effects(&a_prime, &want_prime));

        // direct-sum order is componentwise
        assert!(ds.le(&ds.zero(), &a).unwrap());
        assert!(!ds.le(&a, &b).unwrap());

        // sharpness requires both components sharp
        let half_sharp = ds
            .effect_from_components(vec![
                h2.effect_from_matrix(&diag2(1.0, 0.0)).unwrap(),
                c1.effect_from_vector(&dvector![0.5]).unwrap(),
            ])
            .unwrap();
        assert!(!ds.is_sharp(&half_sharp).unwrap());
    }

    #[test]
    fn dimension_one_algebras_are_legal() {
        let alg = Algebra::hilbertian(1).unwrap();
        let half = alg.scalar(0.5, &alg.unit()).unwrap();
        assert!(alg
            .eq_effects(&alg.seq(&half, &half).unwrap(), &alg.scalar(0.25, &alg.unit()).unwrap()));
        let cls = Algebra::classical(1).unwrap();
        assert!(cls.is_one_dimensional(&cls.unit()).unwrap());
    }

    #[test]
    fn spanning_panel_has_full_dimension() {
        let alg = Algebra::hilbertian(3).unwrap();
        assert_eq!(alg.spanning_effect_panel().len(), 9);
    }
}
