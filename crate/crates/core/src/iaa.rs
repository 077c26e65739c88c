//! Interval Agreement Approach: a fuzzy set whose membership at `x` is the
//! fraction of source intervals containing `x`.

use crate::fuzzyset::{MembershipFunction, StepFunction};
use crate::intervals::{Coverage, DisjointRegion, IntervalCollection};

/// Exact IAA fuzzy set together with the intervals it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct AgreementFs {
    fs: StepFunction,
    coverage: Coverage,
    source: IntervalCollection,
}

/// Builds the IAA set by sweeping the source endpoints; every level is a
/// coverage count divided by `n`.
pub fn build_iaa(collection: &IntervalCollection) -> AgreementFs {
    let coverage = Coverage::of(collection.intervals());
    let n = collection.len() as f64;
    let level = |c: &usize| *c as f64 / n;
    let fs = StepFunction::with_point_levels(
        coverage.breakpoints.clone(),
        coverage.cell_counts.iter().map(level).collect(),
        coverage.point_counts.iter().map(level).collect(),
    )
    .expect("coverage profile is a valid step function");
    AgreementFs {
        fs,
        coverage,
        source: collection.clone(),
    }
}

impl AgreementFs {
    pub fn n(&self) -> usize {
        self.source.len()
    }

    pub fn source(&self) -> &IntervalCollection {
        &self.source
    }

    pub fn step_function(&self) -> &StepFunction {
        &self.fs
    }

    pub fn membership(&self) -> MembershipFunction {
        self.fs.clone().into()
    }

    pub fn mu(&self, x: f64) -> f64 {
        self.fs.mu(x)
    }

    /// Number of source intervals containing `x`.
    pub fn count_at(&self, x: f64) -> usize {
        self.source.iter().filter(|iv| iv.contains(x)).count()
    }

    /// Region where at least `k` sources agree, i.e. the cut at `k / n`.
    pub fn agreement_region(&self, k: usize) -> DisjointRegion {
        self.coverage.at_least(k)
    }
}
