//! Agreement Ratio and Jaccard similarity.
//!
//! The agreement ratio compares the lengths of consecutive agreement levels:
//!
//! ```text
//! γ = Σ_{i=2..n} y_i · |A|_i / |A|_{i-1}  /  Σ_{i=2..n} y_i,   y_i = i / n
//! ```
//!
//! where `|A|_i` is the measure of the region at agreement level `i`. A term
//! whose lower level has zero length contributes a ratio of zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzyset::{grid, MembershipFunction};
use crate::intervals::{level_lengths, tuple_length_oracle, IntervalCollection};

/// One weighted term of the ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaTerm {
    /// Weight `y_i = i / n`.
    pub level: f64,
    /// `|A|_i`.
    pub length: f64,
    /// `|A|_{i-1}`.
    pub lower_length: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaBreakdown {
    pub gamma: f64,
    /// Terms for `i = 2..=n`, lowest level first.
    pub terms: Vec<GammaTerm>,
    pub weight_sum: f64,
}

/// γ from level lengths, where `lengths[i - 1] = |A|_i` for `i = 1..=n`.
pub fn gamma_from_lengths(lengths: &[f64]) -> Result<GammaBreakdown> {
    let n = lengths.len();
    if n < 2 {
        return Err(Error::TooFewSources(n));
    }
    if lengths[0].is_nan() || lengths[0] <= 0.0 {
        return Err(Error::EmptySupport);
    }
    let terms: Vec<GammaTerm> = (2..=n)
        .map(|i| {
            let (length, lower_length) = (lengths[i - 1], lengths[i - 2]);
            let ratio = if lower_length > 0.0 {
                (length / lower_length).clamp(0.0, 1.0)
            } else {
                0.0
            };
            GammaTerm {
                level: i as f64 / n as f64,
                length,
                lower_length,
                ratio,
            }
        })
        .collect();
    let weight_sum: f64 = terms.iter().map(|t| t.level).sum();
    let weighted: f64 = terms.iter().map(|t| t.level * t.ratio).sum();
    Ok(GammaBreakdown {
        gamma: weighted / weight_sum,
        terms,
        weight_sum,
    })
}

/// Exact γ of the IAA set built from `collection`, using swept level lengths.
pub fn gamma_exact(collection: &IntervalCollection) -> Result<GammaBreakdown> {
    gamma_from_lengths(&level_lengths(collection))
}

/// γ from lengths obtained by enumerating every k-tuple intersection. Only
/// feasible for small collections; serves as a cross-check of [`gamma_exact`].
pub fn gamma_by_enumeration(collection: &IntervalCollection) -> Result<GammaBreakdown> {
    if collection.len() < 2 {
        return Err(Error::TooFewSources(collection.len()));
    }
    let lengths = (1..=collection.len())
        .map(|k| tuple_length_oracle(collection, k))
        .collect::<Result<Vec<_>>>()?;
    gamma_from_lengths(&lengths)
}

/// γ of an arbitrary membership function, with alpha levels `i / cuts`
/// standing in for the agreement levels. Step functions are cut exactly.
pub fn gamma_alpha(mf: &MembershipFunction, cuts: usize, samples: usize) -> Result<GammaBreakdown> {
    gamma_alpha_with(cuts, |alpha| mf.alpha_length(alpha, samples))
}

/// As [`gamma_alpha`], but every cut goes through the grid scan, step
/// functions included.
pub fn gamma_alpha_sampled(
    mf: &MembershipFunction,
    cuts: usize,
    samples: usize,
) -> Result<GammaBreakdown> {
    gamma_alpha_with(cuts, |alpha| mf.sampled_alpha_length(alpha, samples))
}

fn gamma_alpha_with(cuts: usize, length_at: impl Fn(f64) -> Result<f64>) -> Result<GammaBreakdown> {
    if cuts < 2 {
        return Err(Error::InvalidCuts(cuts));
    }
    let lengths = (1..=cuts)
        .map(|i| length_at(i as f64 / cuts as f64))
        .collect::<Result<Vec<_>>>()?;
    gamma_from_lengths(&lengths)
}

/// `Σ min(μ_a, μ_b) / Σ max(μ_a, μ_b)` over a grid spanning both windows.
pub fn jaccard(a: &MembershipFunction, b: &MembershipFunction, samples: usize) -> Result<f64> {
    if samples < 2 {
        return Err(Error::InvalidSamples(samples));
    }
    let (wa, wb) = (a.window(), b.window());
    let window = crate::intervals::Interval::new(wa.l().min(wb.l()), wa.r().max(wb.r()))?;
    let (mut meet, mut join) = (0.0, 0.0);
    for x in grid(window, samples) {
        let (ma, mb) = (a.mu(x), b.mu(x));
        meet += ma.min(mb);
        join += ma.max(mb);
    }
    if join <= 0.0 {
        return Err(Error::EmptySet);
    }
    Ok(meet / join)
}
