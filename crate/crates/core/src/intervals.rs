//! Closed crisp intervals and the regions built from them.
//!
//! The level-set machinery here works on a *coverage profile*: the sorted
//! distinct endpoints of a collection, the number of intervals containing
//! each endpoint, and the number of intervals covering each open cell between
//! consecutive endpoints. Every region with "at least k intervals" semantics
//! is read off that profile, so point overlaps show up as zero-width segments
//! and never contribute length.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the number of k-tuples [`tuple_length_oracle`] will enumerate.
pub const DEFAULT_TUPLE_LIMIT: u128 = 1_000_000;

/// A closed interval `[l, r]` with finite endpoints and `l <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct Interval {
    l: f64,
    r: f64,
}

impl Interval {
    pub fn new(l: f64, r: f64) -> Result<Self> {
        if !l.is_finite() || !r.is_finite() || l > r {
            return Err(Error::InvalidInterval { l, r });
        }
        Ok(Self { l, r })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn length(&self) -> f64 {
        self.r - self.l
    }

    pub fn contains(&self, x: f64) -> bool {
        self.l <= x && x <= self.r
    }

    /// `self ⊆ other`.
    pub fn is_within(&self, other: &Interval) -> bool {
        other.l <= self.l && self.r <= other.r
    }

    /// Closed intersection; touching intervals meet in a single point.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let l = self.l.max(other.l);
        let r = self.r.min(other.r);
        (l <= r).then_some(Interval { l, r })
    }

    pub fn translate(&self, offset: f64) -> Result<Interval> {
        Interval::new(self.l + offset, self.r + offset)
    }

    /// Multiplies both endpoints by a positive factor.
    pub fn scale(&self, factor: f64) -> Result<Interval> {
        if factor <= 0.0 || !factor.is_finite() {
            return Err(Error::InvalidDomain(format!(
                "scale factor must be positive and finite, got {factor}"
            )));
        }
        Interval::new(self.l * factor, self.r * factor)
    }
}

impl TryFrom<(f64, f64)> for Interval {
    type Error = Error;

    fn try_from((l, r): (f64, f64)) -> Result<Self> {
        Interval::new(l, r)
    }
}

impl From<Interval> for (f64, f64) {
    fn from(iv: Interval) -> Self {
        (iv.l, iv.r)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.l, self.r)
    }
}

/// The N responses for one (group, term) pair, kept in participant order.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalCollection {
    intervals: Vec<Interval>,
}

impl IntervalCollection {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptyCollection);
        }
        Ok(Self { intervals })
    }

    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        let intervals = pairs
            .iter()
            .map(|&(l, r)| Interval::new(l, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(intervals)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.intervals.iter()
    }

    /// Smallest interval containing every member.
    pub fn hull(&self) -> Interval {
        let l = self.iter().map(|iv| iv.l).fold(f64::INFINITY, f64::min);
        let r = self.iter().map(|iv| iv.r).fold(f64::NEG_INFINITY, f64::max);
        Interval { l, r }
    }

    pub fn translate(&self, offset: f64) -> Result<Self> {
        let intervals = self
            .iter()
            .map(|iv| iv.translate(offset))
            .collect::<Result<Vec<_>>>()?;
        Self::new(intervals)
    }

    pub fn scale(&self, factor: f64) -> Result<Self> {
        let intervals = self
            .iter()
            .map(|iv| iv.scale(factor))
            .collect::<Result<Vec<_>>>()?;
        Self::new(intervals)
    }
}

impl<'a> IntoIterator for &'a IntervalCollection {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.intervals.iter()
    }
}

/// A canonical union of closed segments: sorted, pairwise disjoint and not
/// touching (`a.r < b.l` for consecutive segments). Zero-width segments
/// represent isolated points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DisjointRegion {
    segments: Vec<Interval>,
}

impl DisjointRegion {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Normalizes an arbitrary bag of intervals, merging overlapping and
    /// touching members.
    pub fn from_intervals<I: IntoIterator<Item = Interval>>(intervals: I) -> Self {
        let mut sorted: Vec<Interval> = intervals.into_iter().collect();
        sorted.sort_by(|a, b| a.l.total_cmp(&b.l).then(a.r.total_cmp(&b.r)));
        let mut segments: Vec<Interval> = Vec::with_capacity(sorted.len());
        for iv in sorted {
            match segments.last_mut() {
                Some(last) if iv.l <= last.r => last.r = last.r.max(iv.r),
                _ => segments.push(iv),
            }
        }
        Self { segments }
    }

    pub fn segments(&self) -> &[Interval] {
        &self.segments
    }

    pub fn total_length(&self) -> f64 {
        self.segments.iter().map(Interval::length).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        // Segments are sorted, so the candidate is the last one starting at or before x.
        let idx = self.segments.partition_point(|s| s.l <= x);
        idx > 0 && self.segments[idx - 1].contains(x)
    }

    /// `self ⊆ other`. Each segment of a canonical region must fit inside a
    /// single segment of the other, since segments of `other` never touch.
    pub fn is_subset_of(&self, other: &DisjointRegion) -> bool {
        self.segments.iter().all(|s| {
            let idx = other.segments.partition_point(|o| o.l <= s.l);
            idx > 0 && s.is_within(&other.segments[idx - 1])
        })
    }
}

/// Coverage counts of a collection over its sorted distinct endpoints.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Coverage {
    /// Sorted distinct endpoints.
    pub breakpoints: Vec<f64>,
    /// Intervals containing `breakpoints[j]`.
    pub point_counts: Vec<usize>,
    /// Intervals covering the open cell `(breakpoints[j], breakpoints[j + 1])`.
    pub cell_counts: Vec<usize>,
}

impl Coverage {
    /// Endpoint sweep: each interval opens at its left endpoint and closes
    /// after its right endpoint, accumulated through difference arrays over
    /// the sorted distinct endpoints.
    pub fn of(intervals: &[Interval]) -> Self {
        let mut breakpoints: Vec<f64> = intervals.iter().flat_map(|iv| [iv.l, iv.r]).collect();
        breakpoints.sort_by(f64::total_cmp);
        breakpoints.dedup();

        let m = breakpoints.len();
        let index = |x: f64| {
            breakpoints
                .binary_search_by(|b| b.total_cmp(&x))
                .expect("endpoint is a breakpoint")
        };

        let mut point_delta = vec![0isize; m + 1];
        let mut cell_delta = vec![0isize; m];
        for iv in intervals {
            let (a, b) = (index(iv.l), index(iv.r));
            point_delta[a] += 1;
            point_delta[b + 1] -= 1;
            cell_delta[a] += 1;
            cell_delta[b] -= 1;
        }

        let running = |deltas: &[isize], len: usize| {
            deltas
                .iter()
                .take(len)
                .scan(0isize, |acc, d| {
                    *acc += d;
                    Some(*acc as usize)
                })
                .collect::<Vec<_>>()
        };
        let point_counts = running(&point_delta, m);
        let cell_counts = running(&cell_delta, m.saturating_sub(1));

        Self {
            breakpoints,
            point_counts,
            cell_counts,
        }
    }

    /// Closed region where the count reaches `k`.
    pub fn at_least(&self, k: usize) -> DisjointRegion {
        region_where(
            &self.breakpoints,
            &self.point_counts,
            &self.cell_counts,
            |c| c >= k,
        )
    }

    /// `lengths[k - 1]` is the measure of the region covered by at least `k`
    /// intervals, for `k = 1..=n`.
    pub fn level_lengths(&self, n: usize) -> Vec<f64> {
        let mut by_count = vec![0.0; n + 1];
        for (j, &c) in self.cell_counts.iter().enumerate() {
            by_count[c.min(n)] += self.breakpoints[j + 1] - self.breakpoints[j];
        }
        let mut lengths = vec![0.0; n];
        let mut acc = 0.0;
        for k in (1..=n).rev() {
            acc += by_count[k];
            lengths[k - 1] = acc;
        }
        lengths
    }
}

/// Collects the maximal runs of a step profile whose value satisfies `keep`.
///
/// The profile alternates point `j`, cell `j`, point `j + 1`, ... Point values
/// must dominate their adjacent cells, which makes every kept run closed.
pub(crate) fn region_where<T: Copy>(
    breakpoints: &[f64],
    point_values: &[T],
    cell_values: &[T],
    keep: impl Fn(T) -> bool,
) -> DisjointRegion {
    debug_assert_eq!(point_values.len(), breakpoints.len());
    debug_assert_eq!(cell_values.len(), breakpoints.len().saturating_sub(1));

    let mut segments = Vec::new();
    let mut run: Option<(f64, f64)> = None;
    for (j, &x) in breakpoints.iter().enumerate() {
        if keep(point_values[j]) {
            run = Some((run.map_or(x, |(start, _)| start), x));
        } else if let Some((l, r)) = run.take() {
            segments.push(Interval { l, r });
        }
        if let Some(&cell) = cell_values.get(j) {
            if keep(cell) {
                let next = breakpoints[j + 1];
                run = Some((run.map_or(x, |(start, _)| start), next));
            } else if let Some((l, r)) = run.take() {
                segments.push(Interval { l, r });
            }
        }
    }
    if let Some((l, r)) = run {
        segments.push(Interval { l, r });
    }
    DisjointRegion::from_intervals(segments)
}

/// Union of every interval in the collection (the lowest agreement level).
pub fn union_region(collection: &IntervalCollection) -> DisjointRegion {
    DisjointRegion::from_intervals(collection.iter().copied())
}

/// Entry `k - 1` is the closed region where at least `k` of the `n`
/// intervals overlap, for `k = 1..=n`.
pub fn level_sets(collection: &IntervalCollection) -> Vec<DisjointRegion> {
    let coverage = Coverage::of(collection.intervals());
    (1..=collection.len())
        .map(|k| coverage.at_least(k))
        .collect()
}

/// Lengths of [`level_sets`], computed straight from the coverage profile.
pub fn level_lengths(collection: &IntervalCollection) -> Vec<f64> {
    Coverage::of(collection.intervals()).level_lengths(collection.len())
}

/// Length of the union, over all `k`-tuples of the collection, of each
/// tuple's intersection. Brute-force enumeration of `C(n, k)` tuples; use
/// [`level_sets`] outside of tests.
pub fn tuple_length_oracle(collection: &IntervalCollection, k: usize) -> Result<f64> {
    tuple_length_oracle_with_limit(collection, k, DEFAULT_TUPLE_LIMIT)
}

pub fn tuple_length_oracle_with_limit(
    collection: &IntervalCollection,
    k: usize,
    limit: u128,
) -> Result<f64> {
    let n = collection.len();
    if k == 0 || k > n {
        return Err(Error::InvalidTupleSize { k, n });
    }
    let combinations = binomial(n, k);
    if combinations > limit {
        return Err(Error::CombinatorialLimit {
            k,
            combinations,
            limit,
        });
    }

    let ivs = collection.intervals();
    let mut pieces = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let meet = idx[1..]
            .iter()
            .try_fold(ivs[idx[0]], |acc, &i| acc.intersect(&ivs[i]));
        if let Some(piece) = meet {
            pieces.push(piece);
        }

        // Advance to the next combination in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            break;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
    Ok(DisjointRegion::from_intervals(pieces).total_length())
}

/// `C(n, k)`, saturating at `u128::MAX`.
fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(pairs: &[(f64, f64)]) -> IntervalCollection {
        IntervalCollection::from_pairs(pairs).unwrap()
    }

    fn lengths(c: &IntervalCollection) -> Vec<f64> {
        level_sets(c)
            .iter()
            .map(DisjointRegion::total_length)
            .collect()
    }

    #[test]
    fn make_interval() {
        let iv = Interval::new(2.0, 4.0).unwrap();
        assert_eq!((iv.l(), iv.r()), (2.0, 4.0));
        assert_eq!(Interval::new(3.0, 3.0).unwrap().length(), 0.0);
        assert_eq!(
            Interval::new(5.0, 1.0),
            Err(Error::InvalidInterval { l: 5.0, r: 1.0 })
        );
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn empty_collection_rejected() {
        assert_eq!(IntervalCollection::new(vec![]), Err(Error::EmptyCollection));
    }

    #[test]
    fn union_examples() {
        let u = union_region(&coll(&[(2.0, 5.0), (3.0, 5.0), (6.0, 8.0), (3.0, 7.0)]));
        assert_eq!(u.segments(), &[Interval::new(2.0, 8.0).unwrap()]);
        assert_eq!(u.total_length(), 6.0);

        let u = union_region(&coll(&[(1.0, 3.0), (3.5, 5.0)]));
        assert_eq!(u.segments().len(), 2);
        assert_eq!(u.total_length(), 3.5);

        assert_eq!(union_region(&coll(&[(2.0, 4.0)])).total_length(), 2.0);
    }

    #[test]
    fn touching_segments_merge() {
        let u = union_region(&coll(&[(1.0, 2.0), (2.0, 3.0)]));
        assert_eq!(u.segments(), &[Interval::new(1.0, 3.0).unwrap()]);
    }

    #[test]
    fn level_set_examples() {
        assert_eq!(
            lengths(&coll(&[(2.0, 5.0), (3.0, 5.0), (6.0, 8.0), (3.0, 7.0)])),
            vec![6.0, 3.0, 2.0, 0.0]
        );
        assert_eq!(
            lengths(&coll(&[(2.0, 5.0), (3.0, 5.0), (4.0, 6.0), (3.0, 7.0)])),
            vec![5.0, 3.0, 2.0, 1.0]
        );
        assert_eq!(lengths(&coll(&[(2.0, 4.0), (2.0, 4.0)])), vec![2.0, 2.0]);
    }

    #[test]
    fn level_two_of_non_convex_example_has_two_pieces() {
        let sets = level_sets(&coll(&[(2.0, 5.0), (3.0, 5.0), (6.0, 8.0), (3.0, 7.0)]));
        let segs: Vec<(f64, f64)> = sets[1].segments().iter().map(|&s| s.into()).collect();
        assert_eq!(segs, vec![(3.0, 5.0), (6.0, 7.0)]);
        let core: Vec<(f64, f64)> = sets[2].segments().iter().map(|&s| s.into()).collect();
        assert_eq!(core, vec![(3.0, 5.0)]);
    }

    #[test]
    fn point_overlap_has_no_length() {
        let sets = level_sets(&coll(&[(1.0, 2.0), (2.0, 3.0)]));
        assert_eq!(sets[1].segments(), &[Interval::new(2.0, 2.0).unwrap()]);
        assert_eq!(sets[1].total_length(), 0.0);
        assert_eq!(
            level_lengths(&coll(&[(1.0, 2.0), (2.0, 3.0)])),
            vec![2.0, 0.0]
        );
    }

    #[test]
    fn zero_width_intervals() {
        let c = coll(&[(3.0, 3.0), (1.0, 5.0), (3.0, 3.0)]);
        let sets = level_sets(&c);
        assert_eq!(sets[0].total_length(), 4.0);
        assert_eq!(sets[2].segments(), &[Interval::new(3.0, 3.0).unwrap()]);
        assert_eq!(lengths(&c), vec![4.0, 0.0, 0.0]);

        let points = coll(&[(3.0, 3.0), (3.0, 3.0)]);
        assert_eq!(level_lengths(&points), vec![0.0, 0.0]);
        assert!(level_sets(&points)[1].contains(3.0));
    }

    #[test]
    fn tuple_oracle_examples() {
        let d = coll(&[(2.0, 5.0), (3.0, 5.0), (6.0, 8.0), (3.0, 7.0)]);
        assert_eq!(tuple_length_oracle(&d, 3).unwrap(), 2.0);
        assert_eq!(
            tuple_length_oracle(&coll(&[(2.0, 4.0), (2.5, 3.5)]), 2).unwrap(),
            1.0
        );
        assert_eq!(
            tuple_length_oracle(&coll(&[(1.0, 3.0), (3.5, 5.0)]), 2).unwrap(),
            0.0
        );
    }

    #[test]
    fn tuple_oracle_bounds() {
        let c = coll(&[(0.0, 1.0); 30]);
        assert!(matches!(
            tuple_length_oracle(&c, 15),
            Err(Error::CombinatorialLimit { .. })
        ));
        assert_eq!(tuple_length_oracle(&c, 30).unwrap(), 1.0);
        assert!(matches!(
            tuple_length_oracle(&c, 0),
            Err(Error::InvalidTupleSize { .. })
        ));
        assert!(tuple_length_oracle_with_limit(&c, 2, 10).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(30, 15), 155_117_520);
        assert_eq!(binomial(6, 6), 1);
    }

    #[test]
    fn region_membership_and_subsets() {
        let a = DisjointRegion::from_intervals([
            Interval::new(0.0, 1.0).unwrap(),
            Interval::new(2.0, 3.0).unwrap(),
        ]);
        assert!(a.contains(2.5) && !a.contains(1.5) && a.contains(1.0));
        let b = DisjointRegion::from_intervals([Interval::new(2.2, 2.4).unwrap()]);
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(DisjointRegion::empty().is_subset_of(&b));
    }
}
