//! Type-1 membership functions, alpha-cuts and basic fuzzy-set attributes.
//!
//! Step functions are cut exactly from their breakpoints. Every other form is
//! cut by scanning a uniform grid: runs of grid points with `μ >= α` become
//! segments running from the first to the last point of the run.

use crate::error::{Error, Result};
use crate::intervals::{region_where, DisjointRegion, Interval};

/// Grid resolution used when the caller does not pick one.
pub const DEFAULT_SAMPLES: usize = 1001;

/// Half-width of the default Gaussian evaluation window, in standard deviations.
pub const GAUSSIAN_WINDOW_SIGMAS: f64 = 5.0;

/// `samples` evenly spaced points covering `window`, both endpoints included.
pub fn grid(window: Interval, samples: usize) -> Vec<f64> {
    let (l, r) = (window.l(), window.r());
    let last = samples.saturating_sub(1).max(1) as f64;
    (0..samples)
        .map(|i| {
            if i + 1 == samples {
                r
            } else {
                l + (r - l) * (i as f64) / last
            }
        })
        .collect()
}

fn check_level(value: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidMembership(format!(
            "{what} {value} is outside [0, 1]"
        )))
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

fn check_samples(samples: usize) -> Result<()> {
    if samples >= 2 {
        Ok(())
    } else {
        Err(Error::InvalidSamples(samples))
    }
}

/// Piecewise-constant membership over sorted breakpoints `x_0 < ... < x_m`.
///
/// Each open cell `(x_j, x_{j+1})` carries one level, and each breakpoint its
/// own level, which is never below the levels of its neighbouring cells. This
/// keeps alpha-cuts closed. Outside `[x_0, x_m]` membership is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    breakpoints: Vec<f64>,
    cell_levels: Vec<f64>,
    point_levels: Vec<f64>,
}

impl StepFunction {
    /// Breakpoint levels default to the larger of the adjacent cell levels.
    pub fn new(breakpoints: Vec<f64>, cell_levels: Vec<f64>) -> Result<Self> {
        let points = vec![0.0; breakpoints.len()];
        Self::with_point_levels(breakpoints, cell_levels, points)
    }

    /// Explicit breakpoint levels, raised where needed to dominate the
    /// adjacent cells.
    pub fn with_point_levels(
        breakpoints: Vec<f64>,
        cell_levels: Vec<f64>,
        mut point_levels: Vec<f64>,
    ) -> Result<Self> {
        let m = breakpoints.len();
        if m == 0 {
            return Err(Error::InvalidMembership("no breakpoints".into()));
        }
        if breakpoints.iter().any(|x| !x.is_finite())
            || breakpoints.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::InvalidMembership(
                "breakpoints must be finite and strictly increasing".into(),
            ));
        }
        if cell_levels.len() != m - 1 || point_levels.len() != m {
            return Err(Error::InvalidMembership(format!(
                "{m} breakpoints need {} cell levels and {m} point levels",
                m - 1
            )));
        }
        for &v in cell_levels.iter().chain(&point_levels) {
            check_level(v, "level")?;
        }
        for (j, level) in point_levels.iter_mut().enumerate() {
            let left = j.checked_sub(1).map_or(0.0, |i| cell_levels[i]);
            let right = cell_levels.get(j).copied().unwrap_or(0.0);
            *level = level.max(left).max(right);
        }
        Ok(Self {
            breakpoints,
            cell_levels,
            point_levels,
        })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn cell_levels(&self) -> &[f64] {
        &self.cell_levels
    }

    pub fn point_levels(&self) -> &[f64] {
        &self.point_levels
    }

    pub fn mu(&self, x: f64) -> f64 {
        match self.breakpoints.binary_search_by(|b| b.total_cmp(&x)) {
            Ok(j) => self.point_levels[j],
            Err(0) => 0.0,
            Err(j) if j == self.breakpoints.len() => 0.0,
            Err(j) => self.cell_levels[j - 1],
        }
    }

    pub fn window(&self) -> Interval {
        let first = self.breakpoints[0];
        let last = self.breakpoints[self.breakpoints.len() - 1];
        Interval::new(first, last).expect("breakpoints are sorted")
    }

    /// Exact closed cut `{x | μ(x) >= alpha}`.
    pub fn cut(&self, alpha: f64) -> DisjointRegion {
        region_where(
            &self.breakpoints,
            &self.point_levels,
            &self.cell_levels,
            |level| level >= alpha,
        )
    }

    pub fn height(&self) -> f64 {
        self.point_levels.iter().copied().fold(0.0, f64::max)
    }

    /// Measure of `{x | μ(x) > 0}`.
    pub fn support_length(&self) -> f64 {
        self.cell_levels
            .iter()
            .enumerate()
            .filter(|(_, &level)| level > 0.0)
            .map(|(j, _)| self.breakpoints[j + 1] - self.breakpoints[j])
            .sum()
    }
}

/// Linear interpolation between `(x, μ)` vertices, zero outside them.
/// Repeated abscissae encode vertical jumps; the larger value wins there.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    vertices: Vec<(f64, f64)>,
}

impl PiecewiseLinear {
    pub fn new(vertices: Vec<(f64, f64)>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidMembership("need at least 2 vertices".into()));
        }
        if vertices.iter().any(|(x, _)| !x.is_finite())
            || vertices.windows(2).any(|w| w[0].0 > w[1].0)
        {
            return Err(Error::InvalidMembership(
                "vertex abscissae must be finite and non-decreasing".into(),
            ));
        }
        if vertices[0].0 == vertices[vertices.len() - 1].0 {
            return Err(Error::InvalidMembership("vertices span no width".into()));
        }
        for &(_, mu) in &vertices {
            check_level(mu, "vertex membership")?;
        }
        Ok(Self { vertices })
    }

    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a <= b && b <= c) {
            return Err(Error::InvalidMembership(format!(
                "triangular({a}, {b}, {c}) needs a <= b <= c"
            )));
        }
        Self::new(vec![(a, 0.0), (b, 1.0), (c, 0.0)])
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if !(a <= b && b <= c && c <= d) {
            return Err(Error::InvalidMembership(format!(
                "trapezoidal({a}, {b}, {c}, {d}) needs a <= b <= c <= d"
            )));
        }
        Self::new(vec![(a, 0.0), (b, 1.0), (c, 1.0), (d, 0.0)])
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    pub fn mu(&self, x: f64) -> f64 {
        self.vertices
            .windows(2)
            .filter(|w| w[0].0 <= x && x <= w[1].0)
            .map(|w| {
                let ((x0, y0), (x1, y1)) = (w[0], w[1]);
                if x1 == x0 {
                    y0.max(y1)
                } else {
                    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
                }
            })
            .fold(0.0, f64::max)
    }

    pub fn window(&self) -> Interval {
        let first = self.vertices[0].0;
        let last = self.vertices[self.vertices.len() - 1].0;
        Interval::new(first, last).expect("vertices are sorted")
    }

    pub fn height(&self) -> f64 {
        self.vertices.iter().map(|v| v.1).fold(0.0, f64::max)
    }

    pub fn support_length(&self) -> f64 {
        self.vertices
            .windows(2)
            .filter(|w| w[0].1 > 0.0 || w[1].1 > 0.0)
            .map(|w| w[1].0 - w[0].0)
            .sum()
    }
}

/// Gaussian membership `exp(-(x - m)² / 2σ²)`, evaluated on
/// `[m - 5σ, m + 5σ]` clipped to an optional domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Gaussian {
    mean: f64,
    sigma: f64,
    domain: Option<Interval>,
    window: Interval,
}

impl Gaussian {
    pub fn new(mean: f64, sigma: f64, domain: Option<Interval>) -> Result<Self> {
        if !mean.is_finite() || !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidMembership(format!(
                "gaussian needs a finite mean and sigma > 0, got ({mean}, {sigma})"
            )));
        }
        let reach = GAUSSIAN_WINDOW_SIGMAS * sigma;
        let natural = Interval::new(mean - reach, mean + reach)?;
        let window = match domain {
            Some(d) => d.intersect(&natural),
            None => Some(natural),
        }
        .filter(|w| w.length() > 0.0)
        .ok_or_else(|| {
            Error::InvalidDomain(format!(
                "domain {} leaves no room for gaussian({mean}, {sigma})",
                domain.map_or_else(|| "-".to_string(), |d| d.to_string())
            ))
        })?;
        Ok(Self {
            mean,
            sigma,
            domain,
            window,
        })
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn domain(&self) -> Option<Interval> {
        self.domain
    }

    pub fn window(&self) -> Interval {
        self.window
    }

    pub fn mu(&self, x: f64) -> f64 {
        if !self.window.contains(x) {
            return 0.0;
        }
        let z = (x - self.mean) / self.sigma;
        (-0.5 * z * z).exp()
    }

    pub fn height(&self) -> f64 {
        let nearest = self.mean.clamp(self.window.l(), self.window.r());
        self.mu(nearest)
    }
}

/// Membership values on a uniform grid over `[lo, hi]`; lookups snap to
/// the nearest grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct Sampled {
    window: Interval,
    mu: Vec<f64>,
}

impl Sampled {
    pub fn new(window: Interval, mu: Vec<f64>) -> Result<Self> {
        if mu.len() < 2 {
            return Err(Error::InvalidSamples(mu.len()));
        }
        if window.length() <= 0.0 {
            return Err(Error::InvalidDomain(format!(
                "sample window {window} has no width"
            )));
        }
        for &v in &mu {
            check_level(v, "sample")?;
        }
        Ok(Self { window, mu })
    }

    /// Samples another membership function on `samples` grid points.
    pub fn from_fn(window: Interval, samples: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        check_samples(samples)?;
        Self::new(window, grid(window, samples).into_iter().map(f).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.mu
    }

    pub fn window(&self) -> Interval {
        self.window
    }

    pub fn mu(&self, x: f64) -> f64 {
        if !self.window.contains(x) {
            return 0.0;
        }
        let last = (self.mu.len() - 1) as f64;
        let pos = (x - self.window.l()) / self.window.length() * last;
        self.mu[(pos.round() as usize).min(self.mu.len() - 1)]
    }

    pub fn height(&self) -> f64 {
        self.mu.iter().copied().fold(0.0, f64::max)
    }

    fn smallest_positive(&self) -> Option<f64> {
        self.mu
            .iter()
            .copied()
            .filter(|&v| v > 0.0)
            .min_by(f64::total_cmp)
    }
}

/// A Type-1 membership function.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipFunction {
    PiecewiseConstant(StepFunction),
    PiecewiseLinear(PiecewiseLinear),
    Gaussian(Gaussian),
    Sampled(Sampled),
}

impl From<StepFunction> for MembershipFunction {
    fn from(f: StepFunction) -> Self {
        Self::PiecewiseConstant(f)
    }
}

impl From<PiecewiseLinear> for MembershipFunction {
    fn from(f: PiecewiseLinear) -> Self {
        Self::PiecewiseLinear(f)
    }
}

impl From<Gaussian> for MembershipFunction {
    fn from(f: Gaussian) -> Self {
        Self::Gaussian(f)
    }
}

impl From<Sampled> for MembershipFunction {
    fn from(f: Sampled) -> Self {
        Self::Sampled(f)
    }
}

/// `{x | μ(x) >= alpha}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaCut {
    pub alpha: f64,
    pub region: DisjointRegion,
}

impl AlphaCut {
    pub fn length(&self) -> f64 {
        self.region.total_length()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Attributes {
    pub height: f64,
    pub centroid: f64,
    pub support_length: f64,
    pub core_length: f64,
}

impl MembershipFunction {
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        PiecewiseLinear::triangular(a, b, c).map(Into::into)
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        PiecewiseLinear::trapezoidal(a, b, c, d).map(Into::into)
    }

    pub fn gaussian(mean: f64, sigma: f64, domain: Option<Interval>) -> Result<Self> {
        Gaussian::new(mean, sigma, domain).map(Into::into)
    }

    pub fn mu(&self, x: f64) -> f64 {
        match self {
            Self::PiecewiseConstant(f) => f.mu(x),
            Self::PiecewiseLinear(f) => f.mu(x),
            Self::Gaussian(f) => f.mu(x),
            Self::Sampled(f) => f.mu(x),
        }
    }

    /// Bounded region outside which membership is zero.
    pub fn window(&self) -> Interval {
        match self {
            Self::PiecewiseConstant(f) => f.window(),
            Self::PiecewiseLinear(f) => f.window(),
            Self::Gaussian(f) => f.window(),
            Self::Sampled(f) => f.window(),
        }
    }

    pub fn height(&self) -> f64 {
        match self {
            Self::PiecewiseConstant(f) => f.height(),
            Self::PiecewiseLinear(f) => f.height(),
            Self::Gaussian(f) => f.height(),
            Self::Sampled(f) => f.height(),
        }
    }

    /// Alpha-cut: exact for step functions, grid scan otherwise.
    pub fn alpha_cut(&self, alpha: f64, samples: usize) -> Result<AlphaCut> {
        match self {
            Self::PiecewiseConstant(f) => {
                check_alpha(alpha)?;
                Ok(AlphaCut {
                    alpha,
                    region: f.cut(alpha),
                })
            }
            _ => self.sampled_alpha_cut(alpha, self.window(), samples),
        }
    }

    pub fn alpha_length(&self, alpha: f64, samples: usize) -> Result<f64> {
        self.alpha_cut(alpha, samples).map(|cut| cut.length())
    }

    /// Grid-scan alpha-cut over `window`, for every form including step
    /// functions.
    ///
    /// A run opens at the first grid point with `μ >= alpha` and closes at the
    /// last grid point before μ drops below `alpha`, or at the final grid
    /// point if it is still open.
    pub fn sampled_alpha_cut(
        &self,
        alpha: f64,
        window: Interval,
        samples: usize,
    ) -> Result<AlphaCut> {
        check_alpha(alpha)?;
        check_samples(samples)?;
        let xs = grid(window, samples);
        let mut runs = Vec::new();
        let mut open: Option<f64> = None;
        for (i, &x) in xs.iter().enumerate() {
            if self.mu(x) < alpha {
                if let Some(l) = open.take() {
                    runs.push(Interval::new(l, xs[i - 1])?);
                }
            } else if open.is_none() {
                open = Some(x);
            }
        }
        if let Some(l) = open {
            runs.push(Interval::new(l, xs[xs.len() - 1])?);
        }
        Ok(AlphaCut {
            alpha,
            region: DisjointRegion::from_intervals(runs),
        })
    }

    pub fn sampled_alpha_length(&self, alpha: f64, samples: usize) -> Result<f64> {
        self.sampled_alpha_cut(alpha, self.window(), samples)
            .map(|cut| cut.length())
    }

    /// Measure of `{x | μ(x) > 0}`; on sampled data, the cut at the smallest
    /// positive stored value.
    pub fn support_length(&self, samples: usize) -> Result<f64> {
        match self {
            Self::PiecewiseConstant(f) => Ok(f.support_length()),
            Self::PiecewiseLinear(f) => Ok(f.support_length()),
            Self::Gaussian(f) => Ok(f.window().length()),
            Self::Sampled(f) => match f.smallest_positive() {
                Some(level) => self.alpha_length(level, samples),
                None => Ok(0.0),
            },
        }
    }

    /// Height, discrete centroid over the sampling grid, support and core lengths.
    pub fn attributes(&self, samples: usize) -> Result<Attributes> {
        check_samples(samples)?;
        let height = self.height();
        let (mut moment, mut mass) = (0.0, 0.0);
        for x in grid(self.window(), samples) {
            let mu = self.mu(x);
            moment += x * mu;
            mass += mu;
        }
        if height <= 0.0 || mass <= 0.0 {
            return Err(Error::EmptySet);
        }
        Ok(Attributes {
            height,
            centroid: moment / mass,
            support_length: self.support_length(samples)?,
            core_length: self.alpha_length(1.0, samples)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(l: f64, r: f64) -> Interval {
        Interval::new(l, r).unwrap()
    }

    fn fig5_step() -> MembershipFunction {
        StepFunction::new(vec![2.0, 2.5, 3.5, 4.0], vec![0.5, 1.0, 0.5])
            .unwrap()
            .into()
    }

    #[test]
    fn grid_hits_both_ends() {
        let g = grid(iv(0.0, 2.0), 1001);
        assert_eq!(g.len(), 1001);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[250], 0.5);
        assert_eq!(g[1000], 2.0);
    }

    #[test]
    fn step_function_validation() {
        assert!(StepFunction::new(vec![], vec![]).is_err());
        assert!(StepFunction::new(vec![1.0, 1.0], vec![0.5]).is_err());
        assert!(StepFunction::new(vec![1.0, 2.0], vec![1.5]).is_err());
        assert!(StepFunction::new(vec![1.0, 2.0], vec![]).is_err());
    }

    #[test]
    fn step_function_mu() {
        let f = fig5_step();
        assert_eq!(f.mu(3.0), 1.0);
        assert_eq!(f.mu(2.2), 0.5);
        assert_eq!(f.mu(2.5), 1.0);
        assert_eq!(f.mu(2.0), 0.5);
        assert_eq!(f.mu(1.9), 0.0);
        assert_eq!(f.mu(4.1), 0.0);
    }

    #[test]
    fn gaussian_mu_and_window() {
        let g = MembershipFunction::gaussian(5.0, 1.0, None).unwrap();
        assert_eq!(g.mu(5.0), 1.0);
        assert_eq!(g.window(), iv(0.0, 10.0));
        let clipped = Gaussian::new(5.0, 2.0, Some(iv(0.0, 10.0))).unwrap();
        assert_eq!(clipped.window(), iv(0.0, 10.0));
        assert_eq!(clipped.mu(-1.0), 0.0);
        assert!(Gaussian::new(5.0, 0.0, None).is_err());
        assert!(matches!(
            Gaussian::new(5.0, 1.0, Some(iv(20.0, 30.0))),
            Err(Error::InvalidDomain(_))
        ));
        let off_centre = Gaussian::new(5.0, 1.0, Some(iv(6.0, 8.0))).unwrap();
        assert!((off_centre.height() - (-0.5f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn triangular_and_trapezoidal() {
        let t = MembershipFunction::triangular(0.0, 1.0, 2.0).unwrap();
        assert_eq!(t.mu(0.5), 0.5);
        assert_eq!(t.mu(1.0), 1.0);
        assert_eq!(t.mu(1.5), 0.5);
        assert_eq!(t.mu(-0.1), 0.0);
        let z = MembershipFunction::trapezoidal(0.0, 1.0, 3.0, 4.0).unwrap();
        assert_eq!(z.mu(2.0), 1.0);
        assert_eq!(z.mu(3.5), 0.5);
        assert!(MembershipFunction::triangular(2.0, 1.0, 0.0).is_err());
        assert!(MembershipFunction::triangular(1.0, 1.0, 1.0).is_err());
        let right = MembershipFunction::triangular(0.0, 0.0, 2.0).unwrap();
        assert_eq!(right.mu(0.0), 1.0);
    }

    #[test]
    fn sampled_nearest_cell() {
        let s = Sampled::new(iv(0.0, 1.0), vec![0.0, 0.5, 1.0]).unwrap();
        assert_eq!(s.mu(0.2), 0.0);
        assert_eq!(s.mu(0.3), 0.5);
        assert_eq!(s.mu(0.9), 1.0);
        assert_eq!(s.mu(1.5), 0.0);
        assert!(Sampled::new(iv(0.0, 1.0), vec![0.5]).is_err());
        assert!(Sampled::new(iv(0.0, 1.0), vec![0.5, 1.2]).is_err());
    }

    #[test]
    fn gaussian_alpha_length_matches_closed_form() {
        let g = MembershipFunction::gaussian(5.0, 2.0, Some(iv(0.0, 10.0))).unwrap();
        let expected = 2.0 * 2.0 * (2.0 * 2f64.ln()).sqrt();
        let got = g.alpha_length(0.5, 1001).unwrap();
        // Runs close on grid points, so the estimate undershoots by under two cells.
        assert!(
            got <= expected && expected - got < 2.0 * 0.01,
            "{got} vs {expected}"
        );
        let fine = g.alpha_length(0.5, 100_001).unwrap();
        assert!((fine - expected).abs() < 2e-4);
    }

    #[test]
    fn alpha_cut_examples() {
        let pair = StepFunction::new(vec![2.0, 4.0], vec![1.0]).unwrap();
        let cut = MembershipFunction::from(pair).alpha_cut(1.0, 1001).unwrap();
        assert_eq!(cut.region.segments(), &[iv(2.0, 4.0)]);

        let t = MembershipFunction::triangular(0.0, 1.0, 2.0).unwrap();
        let cut = t.alpha_cut(0.5, 1001).unwrap();
        assert_eq!(cut.region.segments(), &[iv(0.5, 1.5)]);

        let disjoint = StepFunction::new(vec![1.0, 3.0, 3.5, 5.0], vec![0.5, 0.0, 0.5]).unwrap();
        let cut = MembershipFunction::from(disjoint)
            .alpha_cut(0.75, 1001)
            .unwrap();
        assert!(cut.region.is_empty());
    }

    #[test]
    fn alpha_above_height_is_empty() {
        let f = fig5_step();
        assert_eq!(f.alpha_length(1.0, 11).unwrap(), 1.0);
        let half = StepFunction::new(vec![0.0, 1.0], vec![0.5]).unwrap();
        let half = MembershipFunction::from(half);
        assert_eq!(half.alpha_length(0.500_001, 11).unwrap(), 0.0);
        let t = MembershipFunction::triangular(0.0, 1.0, 2.0).unwrap();
        assert_eq!(t.alpha_length(1.0, 1000).unwrap(), 0.0);
    }

    #[test]
    fn invalid_alpha_and_samples() {
        let t = MembershipFunction::triangular(0.0, 1.0, 2.0).unwrap();
        assert_eq!(t.alpha_length(0.0, 11), Err(Error::InvalidAlpha(0.0)));
        assert_eq!(t.alpha_length(1.5, 11), Err(Error::InvalidAlpha(1.5)));
        assert!(t.alpha_length(f64::NAN, 11).is_err());
        assert_eq!(t.alpha_length(0.5, 1), Err(Error::InvalidSamples(1)));
        assert!(fig5_step().alpha_length(0.0, 11).is_err());
    }

    #[test]
    fn algorithm_closes_runs_on_previous_sample() {
        // Two bumps; grid step 1, so each run ends on the last point inside it.
        let s = Sampled::new(iv(0.0, 6.0), vec![0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0]).unwrap();
        let mf = MembershipFunction::from(s);
        let cut = mf.alpha_cut(0.5, 7).unwrap();
        assert_eq!(
            cut.region.segments(),
            &[iv(1.0, 2.0), iv(4.0, 4.0), iv(6.0, 6.0)]
        );
        assert_eq!(cut.length(), 1.0);
    }

    #[test]
    fn sampled_path_on_step_function() {
        let f = fig5_step();
        let exact = f.alpha_length(1.0, 2).unwrap();
        let sampled = f.sampled_alpha_length(1.0, 2001).unwrap();
        assert_eq!(exact, 1.0);
        assert!((sampled - 1.0).abs() <= 2.0 * 2.0 / 2000.0);
    }

    #[test]
    fn attribute_examples() {
        let t = MembershipFunction::triangular(0.0, 1.0, 2.0).unwrap();
        let a = t.attributes(1001).unwrap();
        assert_eq!(a.height, 1.0);
        assert!((a.centroid - 1.0).abs() < 1e-12);
        assert_eq!(a.support_length, 2.0);
        assert_eq!(a.core_length, 0.0);

        let a = fig5_step().attributes(1001).unwrap();
        assert_eq!(a.height, 1.0);
        assert_eq!(a.core_length, 1.0);
        assert_eq!(a.support_length, 2.0);
        assert!((a.centroid - 3.0).abs() < 1e-12);

        let zero = Sampled::new(iv(0.0, 1.0), vec![0.0; 5]).unwrap();
        assert_eq!(
            MembershipFunction::from(zero).attributes(101),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn sampled_support_uses_smallest_positive_level() {
        let s = Sampled::new(iv(0.0, 4.0), vec![0.0, 0.2, 1.0, 0.2, 0.0]).unwrap();
        let mf = MembershipFunction::from(s);
        assert_eq!(mf.support_length(5).unwrap(), 2.0);
        let a = mf.attributes(5).unwrap();
        assert_eq!(a.core_length, 0.0);
        assert!((a.centroid - 2.0).abs() < 1e-12);
    }

    #[test]
    fn trapezoid_core_on_grid() {
        let z = MembershipFunction::trapezoidal(0.0, 1.0, 3.0, 4.0).unwrap();
        let a = z.attributes(401).unwrap();
        assert!((a.core_length - 2.0).abs() < 1e-9);
        assert_eq!(a.support_length, 4.0);
    }
}
