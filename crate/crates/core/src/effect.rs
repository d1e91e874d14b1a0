//! Effects: the elements of an algebra.
//!
//! An effect is a probability vector (classical backend), a Hermitian matrix
//! inside the operator interval `[0, I]` (Hilbertian backend), or a tuple of
//! per-summand effects (direct sums). Construction goes through the
//! validators on [`crate::Algebra`]; the payload here only carries the data
//! and the distance arithmetic that is independent of order decisions.

use crate::linalg::{self, CMat};
use nalgebra::DVector;

/// Backend payload of an effect.
#[derive(Debug, Clone, PartialEq)]
pub enum EffectData {
    /// Entries in `[0, 1]`, one per outcome.
    Classical(DVector<f64>),
    /// Hermitian matrix with eigenvalues in `[0, 1]`.
    Hilbertian(CMat),
    /// One component per direct summand.
    DirectSum(Vec<Effect>),
}

/// An element of an effect algebra.
///
/// `clamped_by` records how far construction had to clamp the payload into
/// the legal interval (zero for inputs that were already inside). Equality
/// and all algebraic operations ignore it.
#[derive(Debug, Clone)]
pub struct Effect {
    pub data: EffectData,
    pub clamped_by: f64,
}

impl PartialEq for Effect {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Effect {
    pub fn classical(v: DVector<f64>) -> Self {
        Self { data: EffectData::Classical(v), clamped_by: 0.0 }
    }

    pub fn hilbertian(m: CMat) -> Self {
        Self { data: EffectData::Hilbertian(m), clamped_by: 0.0 }
    }

    pub fn direct_sum(components: Vec<Effect>) -> Self {
        let clamped_by = components.iter().map(|c| c.clamped_by).fold(0.0, f64::max);
        Self { data: EffectData::DirectSum(components), clamped_by }
    }

    /// Classical payload view.
    pub fn as_classical(&self) -> Option<&DVector<f64>> {
        match &self.data {
            EffectData::Classical(v) => Some(v),
            _ => None,
        }
    }

    /// Hilbertian payload view.
    pub fn as_hilbertian(&self) -> Option<&CMat> {
        match &self.data {
            EffectData::Hilbertian(m) => Some(m),
            _ => None,
        }
    }

    /// Direct-sum component view.
    pub fn as_components(&self) -> Option<&[Effect]> {
        match &self.data {
            EffectData::DirectSum(c) => Some(c),
            _ => None,
        }
    }

    /// Backend distance between payloads of identical shape: max-abs for
    /// classical, Frobenius for Hilbertian, max over direct-sum components.
    /// `None` when the shapes differ.
    pub fn distance(&self, other: &Effect) -> Option<f64> {
        match (&self.data, &other.data) {
            (EffectData::Classical(a), EffectData::Classical(b)) if a.len() == b.len() => {
                Some(a.iter().zip(b.iter()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
            }
            (EffectData::Hilbertian(a), EffectData::Hilbertian(b))
                if a.nrows() == b.nrows() =>
            {
                Some((a - b).norm())
            }
            (EffectData::DirectSum(a), EffectData::DirectSum(b)) if a.len() == b.len() => a
                .iter()
                .zip(b.iter())
                .map(|(x, y)| x.distance(y))
                .try_fold(0.0f64, |acc, d| d.map(|d| acc.max(d))),
            _ => None,
        }
    }

    /// Distance to the zero effect of the same shape.
    pub fn payload_norm(&self) -> f64 {
        match &self.data {
            EffectData::Classical(v) => v.iter().fold(0.0, |acc, x| acc.max(x.abs())),
            EffectData::Hilbertian(m) => m.norm(),
            EffectData::DirectSum(c) => c.iter().map(Effect::payload_norm).fold(0.0, f64::max),
        }
    }

    /// Raw (unclustered) spectrum: eigenvalues for Hilbertian payloads,
    /// sorted entries for classical ones, merged components for sums.
    pub fn spectrum_raw(&self) -> Vec<f64> {
        match &self.data {
            EffectData::Classical(v) => {
                let mut s: Vec<f64> = v.iter().copied().collect();
                s.sort_by(f64::total_cmp);
                s
            }
            EffectData::Hilbertian(m) => linalg::eigh(m).0,
            EffectData::DirectSum(c) => {
                let mut s: Vec<f64> = c.iter().flat_map(|x| x.spectrum_raw()).collect();
                s.sort_by(f64::total_cmp);
                s
            }
        }
    }
}
