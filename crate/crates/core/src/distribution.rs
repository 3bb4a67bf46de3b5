//! The type III generalized half logistic distribution.

use libm::{exp, log, log1p, pow, sqrt};

use crate::quadrature::{self, Tolerance};
use crate::roots;
use crate::special::{self, BetaArgs};
use crate::{half_logistic::logistic_sigma, Error, Result};

use core::f64::consts::LN_2;

/// Largest supported shape parameter.
pub const MAX_SHAPE: f64 = 1e3;

/// Moment integrals are truncated where the analytic tail bound falls below this.
const MOMENT_TAIL: f64 = 1e-13;

/// The positive shape parameter `b`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Shape(f64);

impl Shape {
    pub fn new(b: f64) -> Result<Self> {
        if b > 0.0 && b <= MAX_SHAPE {
            Ok(Shape(b))
        } else {
            Err(Error::Domain("shape parameter must lie in (0, 1000]"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Mean, variance, skewness and (non-excess) kurtosis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
}

/// A member of the family, `f(x) = 2/B(b,b) · e^{bx} / (1 + eˣ)^{2b}` on `x ≥ 0`.
///
/// Immutable once built; `log_norm = ln 2 − ln B(b, b)` is cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ghl3 {
    shape: Shape,
    tol: Tolerance,
    log_norm: f64,
}

fn check_point(x: f64) -> Result<()> {
    if x >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain("x must be nonnegative"))
    }
}

impl Ghl3 {
    pub fn new(b: f64) -> Result<Self> {
        Self::with_tolerance(b, Tolerance::default())
    }

    pub fn with_tolerance(b: f64, tol: Tolerance) -> Result<Self> {
        let shape = Shape::new(b)?;
        let log_norm = LN_2 - special::log_beta(BetaArgs::new(b, b)?);
        Ok(Self { shape, tol, log_norm })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn b(&self) -> f64 {
        self.shape.0
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// `ln 2 − ln B(b, b)`.
    pub fn log_norm(&self) -> f64 {
        self.log_norm
    }

    fn beta_args(&self) -> BetaArgs {
        // Shape already validated the parameter.
        BetaArgs::new(self.b(), self.b()).expect("valid shape")
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        self.log_pdf(x).map(exp)
    }

    /// `log_norm + bx − 2b·ln(1 + eˣ)`, rearranged as
    /// `log_norm − bx − 2b·ln(1 + e^{−x})` so no intermediate overflows.
    pub fn log_pdf(&self, x: f64) -> Result<f64> {
        check_point(x)?;
        let b = self.b();
        Ok(self.log_norm - b * x - 2.0 * b * log1p(exp(-x)))
    }

    /// `2·I_{σ(−x)}(b, b)`, the upper tail in closed form.
    fn upper_tail(&self, x: f64) -> Result<f64> {
        let v = logistic_sigma(-x);
        let w = logistic_sigma(x);
        let tail = special::reg_inc_beta_split(self.beta_args(), v, w)?;
        Ok((2.0 * tail).min(1.0))
    }

    /// `F(x) = 2·I_{σ(x)}(b, b) − 1`, evaluated as `1 − 2·I_{σ(−x)}(b, b)`.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        check_point(x)?;
        if x == 0.0 {
            return Ok(0.0);
        }
        Ok(1.0 - self.upper_tail(x)?)
    }

    /// The cdf by adaptive quadrature of the density over `[0, x]`.
    pub fn cdf_quadrature(&self, x: f64) -> Result<f64> {
        check_point(x)?;
        let density = |t: f64| self.pdf(t).unwrap_or(0.0);
        let r = if x.is_finite() {
            quadrature::integrate_finite(density, 0.0, x, self.tol)?
        } else {
            quadrature::integrate_semi_infinite(density, 0.0, self.tol)?
        };
        Ok(r.value.clamp(0.0, 1.0))
    }

    pub fn survival(&self, x: f64) -> Result<f64> {
        check_point(x)?;
        if x == 0.0 {
            return Ok(1.0);
        }
        self.upper_tail(x)
    }

    /// `f(x) / (1 − F(x))`; tends to `b` as `x → ∞`.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        let s = self.survival(x)?;
        if s == 0.0 {
            return Err(Error::Overflow("survival underflows, hazard is not representable"));
        }
        let h = exp(self.log_pdf(x)? - log(s));
        if h.is_finite() {
            Ok(h)
        } else {
            Err(Error::Overflow("hazard is not representable"))
        }
    }

    /// `P(a1 < X < a2) = F(a2) − F(a1)`; `a2` may be `+∞`.
    pub fn interval_prob(&self, a1: f64, a2: f64) -> Result<f64> {
        check_point(a1)?;
        check_point(a2)?;
        if a1 > a2 {
            return Err(Error::Domain("interval lower end exceeds upper end"));
        }
        if a1 == a2 {
            return Ok(0.0);
        }
        Ok((self.survival(a1)? - self.survival(a2)?).max(0.0))
    }

    /// Point beyond which `∫ xⁿ f(x) dx` is below [`MOMENT_TAIL`], using
    /// `f(x) ≤ exp(log_norm − bx)` and `∫_T^∞ xⁿe^{−bx} ≤ 2Tⁿe^{−bT}/b` for `T ≥ 2n/b`.
    fn moment_cutoff(&self, n: u32) -> f64 {
        let b = self.b();
        let n = f64::from(n);
        let floor = (2.0 * n / b).max(1.0);
        let base = self.log_norm + LN_2 - log(b) - log(MOMENT_TAIL);
        let mut t = floor;
        for _ in 0..100 {
            let next = ((base + n * log(t)) / b).max(floor);
            if (next - t).abs() <= 1e-9 * t {
                t = next;
                break;
            }
            t = next;
        }
        t
    }

    /// Raw moment `E[Xⁿ]`.
    pub fn moment(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Ok(1.0);
        }
        let cutoff = self.moment_cutoff(n);
        let k = f64::from(n);
        let integrand = |x: f64| match self.log_pdf(x) {
            Ok(lp) => pow(x, k) * exp(lp),
            Err(_) => 0.0,
        };
        let r = quadrature::integrate_semi_infinite_to(integrand, 0.0, cutoff, self.tol)?;
        Ok(r.value)
    }

    pub fn summary_stats(&self) -> Result<SummaryStats> {
        let m1 = self.moment(1)?;
        let m2 = self.moment(2)?;
        let m3 = self.moment(3)?;
        let m4 = self.moment(4)?;
        let variance = m2 - m1 * m1;
        let third = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
        let fourth = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
        Ok(SummaryStats {
            mean: m1,
            variance,
            skewness: third / (variance * sqrt(variance)),
            kurtosis: fourth / (variance * variance),
        })
    }

    pub fn median(&self) -> Result<f64> {
        self.quantile(0.5)
    }

    /// The `x_p` with `F(x_p) = p`, for `p ∈ [0, 1)`.
    ///
    /// Solves `I_v(b, b) = (1 − p)/2` for `v = σ(−x_p)` and maps back with
    /// `x = ln((1 − v)/v)`; if the beta inversion fails, falls back to a
    /// bracketed root search on the cdf.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&p) {
            return Err(Error::Domain("quantile level must lie in [0, 1)"));
        }
        if p == 0.0 {
            return Ok(0.0);
        }
        let level = 0.5 * (1.0 - p);
        match special::inv_reg_inc_beta(self.beta_args(), level) {
            Ok(v) if v > 0.0 && v <= 0.5 => Ok(log1p((1.0 - 2.0 * v) / v)),
            _ => self.quantile_by_search(p),
        }
    }

    fn quantile_by_search(&self, p: f64) -> Result<f64> {
        let b = self.b();
        // S(x) ≤ 2e^{−bx} / (b·B(b,b)) bounds the bracket.
        let hi = ((self.log_norm - log(b) - log(1.0 - p)) / b).max(1.0) + 1.0;
        roots::brent(|x| self.cdf(x).unwrap_or(f64::NAN) - p, 0.0, hi, 1e-12, 200)
    }

    /// Always 0: the density is nonincreasing on `[0, ∞)`.
    pub fn mode(&self) -> f64 {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::half_logistic::{half_logistic_cdf, half_logistic_pdf, type3_logistic_pdf};
    use crate::quadrature::integrate_semi_infinite;
    use proptest::prelude::*;

    fn d(b: f64) -> Ghl3 {
        Ghl3::new(b).unwrap()
    }

    #[test]
    fn shape_validation() {
        for b in [0.0, -1.0, f64::NAN, f64::INFINITY, 1000.5] {
            assert!(Ghl3::new(b).is_err(), "b={b}");
        }
        assert!(Ghl3::new(1000.0).is_ok());
        assert!(Ghl3::new(1e-3).is_ok());
    }

    #[test]
    fn log_norm_is_recomputable() {
        for b in [0.3, 1.0, 4.5, 999.0] {
            let g = d(b);
            let again = LN_2 - special::log_beta(BetaArgs::new(b, b).unwrap());
            assert_eq!(g.log_norm(), again);
        }
    }

    #[test]
    fn pdf_examples() {
        assert!((d(1.0).pdf(0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((d(2.0).pdf(0.0).unwrap() - 0.75).abs() < 1e-14);
        assert!((d(1.0).pdf(1.0).unwrap() - half_logistic_pdf(1.0).unwrap()).abs() < 1e-15);
        assert!(d(2.0).pdf(-1.0).is_err());
    }

    #[test]
    fn log_pdf_examples() {
        assert!((d(1.0).log_pdf(0.0).unwrap() - 0.5_f64.ln()).abs() < 1e-15);
        let g = d(3.0);
        let rel = (g.log_pdf(2.0).unwrap().exp() / g.pdf(2.0).unwrap() - 1.0).abs();
        assert!(rel < 1e-12);
        let far = d(2.0).log_pdf(100.0).unwrap();
        assert!(far.is_finite() && far < 0.0);
        // asymptotically log_norm − b·x
        assert!((far - (d(2.0).log_norm() - 200.0)).abs() < 1e-12);
        assert_eq!(d(2.0).log_pdf(f64::INFINITY).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn cdf_examples() {
        assert!((d(2.0).cdf(1.0).unwrap() - 0.6439).abs() < 1e-4);
        assert!((d(3.0).cdf(1.0).unwrap() - 0.7510).abs() < 1e-4);
        assert!((d(1.0).cdf(3.0_f64.ln()).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(d(4.0).cdf(0.0).unwrap(), 0.0);
        assert_eq!(d(4.0).cdf(f64::INFINITY).unwrap(), 1.0);
        assert!(d(4.0).cdf(-0.5).is_err());
    }

    #[test]
    fn cdf_quadrature_examples() {
        assert!((d(2.0).cdf_quadrature(0.5).unwrap() - 0.3600).abs() < 1e-4);
        assert!((d(3.0).cdf_quadrature(2.0).unwrap() - 0.9719).abs() < 1e-4);
        assert_eq!(d(7.0).cdf_quadrature(0.0).unwrap(), 0.0);
        assert!((d(0.7).cdf_quadrature(f64::INFINITY).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn survival_and_hazard() {
        for x in [0.0, 0.3, 1.0, 4.0, 25.0] {
            let want = 2.0 / (f64::exp(x) + 1.0);
            assert!((d(1.0).survival(x).unwrap() - want).abs() < 1e-14);
        }
        assert!((d(1.0).hazard(0.0).unwrap() - 0.5).abs() < 1e-14);
        // b = 1: f/(1−F) = eˣ/(1+eˣ)
        for x in [0.5, 2.0, 10.0, 30.0] {
            assert!((d(1.0).hazard(x).unwrap() - logistic_sigma(x)).abs() < 1e-12);
        }
        assert!((d(2.0).survival(1.0).unwrap() - 0.3561).abs() < 1e-4);
        // hazard → b in the tail
        assert!((d(2.5).hazard(60.0).unwrap() - 2.5).abs() < 1e-9);
        assert!(matches!(d(2.0).hazard(1e4), Err(Error::Overflow(_))));
    }

    #[test]
    fn interval_prob_examples() {
        assert!((d(2.0).interval_prob(0.5, 1.0).unwrap() - 0.2839).abs() < 1e-4);
        assert_eq!(d(2.0).interval_prob(0.8, 0.8).unwrap(), 0.0);
        assert!((d(3.0).interval_prob(0.0, 40.0).unwrap() - 1.0).abs() < 1e-10);
        assert_eq!(d(3.0).interval_prob(0.0, f64::INFINITY).unwrap(), 1.0);
        assert!(d(3.0).interval_prob(1.0, 0.5).is_err());
    }

    #[test]
    fn moment_examples() {
        assert!((d(1.0).moment(1).unwrap() - 1.3863).abs() < 1e-4);
        assert!((d(2.0).moment(2).unwrap() - 1.2899).abs() < 1e-4);
        assert_eq!(d(3.3).moment(0).unwrap(), 1.0);
        // b = 1: E[X] = 2 ln 2, E[X²] = π²/3
        assert!((d(1.0).moment(1).unwrap() - 2.0 * LN_2).abs() < 1e-9);
        let pi2 = core::f64::consts::PI * core::f64::consts::PI;
        assert!((d(1.0).moment(2).unwrap() - pi2 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn moments_for_extreme_shapes() {
        // E[X] equals the axial integral of the survival function
        for b in [0.2, 50.0, 800.0] {
            let g = d(b);
            let by_survival = integrate_semi_infinite(|x| g.survival(x).unwrap(), 0.0, g.tolerance()).unwrap().value;
            let m1 = g.moment(1).unwrap();
            assert!((m1 - by_survival).abs() < 1e-8 * m1.max(1.0), "b={b}: {m1} vs {by_survival}");
        }
    }

    #[test]
    fn summary_stats_examples() {
        let s = d(1.0).summary_stats().unwrap();
        assert!((s.mean - 1.3863).abs() < 1e-4);
        assert!((s.variance - 1.3681).abs() < 1e-4);
        for b in 1..=10 {
            let s = d(f64::from(b)).summary_stats().unwrap();
            assert!(s.variance > 0.0);
            assert!(s.skewness > 0.0);
        }
    }

    #[test]
    fn median_examples() {
        assert!((d(1.0).median().unwrap() - 3.0_f64.ln()).abs() < 1e-12);
        // high-precision root of F(x) = 1/2
        assert!((d(2.0).median().unwrap() - 0.724_731_973_985_873_2).abs() < 1e-12);
        assert!((d(3.0).median().unwrap() - 0.577_812_186_278_590_1).abs() < 1e-12);
        assert!((d(5.0).median().unwrap() - 0.439_064_752_888_010_06).abs() < 1e-12);
        assert!((d(5.0).median().unwrap() - 0.43907).abs() < 1e-4);
        for b in [0.5, 1.0, 2.0, 9.0] {
            let g = d(b);
            assert!((g.cdf(g.median().unwrap()).unwrap() - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn quantile_examples() {
        let g = d(2.0);
        assert!((g.quantile(0.9072).unwrap() - 1.9).abs() < 5e-4);
        assert_eq!(g.quantile(0.0).unwrap(), 0.0);
        assert!(g.quantile(1.0).is_err());
        assert!(g.quantile(-0.1).is_err());
        assert!(g.quantile(f64::NAN).is_err());
    }

    #[test]
    fn quantile_search_fallback_agrees() {
        for b in [0.5, 2.0, 10.0] {
            let g = d(b);
            for p in [0.01, 0.5, 0.99] {
                let direct = g.quantile(p).unwrap();
                let searched = g.quantile_by_search(p).unwrap();
                assert!((direct - searched).abs() < 1e-10, "b={b} p={p}");
            }
        }
    }

    #[test]
    fn mode_is_zero() {
        for b in [0.5, 1.0, 2.0, 7.3] {
            assert_eq!(d(b).mode(), 0.0);
        }
    }

    #[test]
    fn normalization() {
        for b in [0.5, 1.0, 2.0, 3.0, 5.0, 10.0] {
            let g = d(b);
            let r = integrate_semi_infinite(|x| g.pdf(x).unwrap(), 0.0, g.tolerance()).unwrap();
            assert!((r.value - 1.0).abs() < 1e-9, "b={b}: {}", r.value);
        }
    }

    #[test]
    fn reduction_to_half_logistic() {
        let g = d(1.0);
        for i in 0..=600 {
            let x = i as f64 / 100.0;
            assert!((g.pdf(x).unwrap() - half_logistic_pdf(x).unwrap()).abs() < 1e-12);
            assert!((g.cdf(x).unwrap() - half_logistic_cdf(x).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn oracle_agreement_on_table_grid() {
        for b in [2.0, 3.0] {
            let g = d(b);
            for i in 0..60 {
                let x = i as f64 / 10.0;
                let diff = (g.cdf(x).unwrap() - g.cdf_quadrature(x).unwrap()).abs();
                assert!(diff <= 1e-9, "b={b} x={x}: {diff}");
            }
        }
    }

    #[test]
    fn quantile_round_trip_levels() {
        for b in [0.5, 1.0, 2.0, 5.0] {
            let g = d(b);
            for p in [0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99] {
                let x = g.quantile(p).unwrap();
                assert!((g.cdf(x).unwrap() - p).abs() <= 1e-9, "b={b} p={p}");
            }
        }
    }

    #[test]
    fn mean_decreases_with_shape() {
        let means: Vec<f64> = (1..=10).map(|b| d(f64::from(b)).moment(1).unwrap()).collect();
        assert!(means.windows(2).all(|w| w[1] < w[0]));
    }

    proptest! {
        #[test]
        fn folding(b in 0.05f64..200.0, x in 0.0f64..30.0) {
            let g = d(b);
            let folded = 2.0 * type3_logistic_pdf(x, g.shape()).unwrap();
            let pdf = g.pdf(x).unwrap();
            prop_assert!((pdf - folded).abs() <= 1e-12 * pdf.max(1.0));
        }

        #[test]
        fn density_nonincreasing(b in 0.05f64..500.0, x1 in 0.0f64..40.0, dx in 0.0f64..10.0) {
            let g = d(b);
            prop_assert!(g.pdf(x1).unwrap() >= g.pdf(x1 + dx).unwrap());
        }

        #[test]
        fn cdf_monotone(b in 0.05f64..500.0, x1 in 0.0f64..40.0, dx in 0.0f64..10.0) {
            let g = d(b);
            prop_assert!(g.cdf(x1).unwrap() <= g.cdf(x1 + dx).unwrap());
        }

        #[test]
        fn log_pdf_consistency(b in 0.05f64..1000.0, x in 0.0f64..500.0) {
            let g = d(b);
            let p = g.pdf(x).unwrap();
            if p > 1e-300 {
                let rel = (g.log_pdf(x).unwrap().exp() - p).abs() / p;
                prop_assert!(rel <= 1e-12);
            }
        }

        #[test]
        fn quantile_inverts_cdf(b in 0.1f64..100.0, p in 0.0f64..0.999_999) {
            let g = d(b);
            let x = g.quantile(p).unwrap();
            prop_assert!(x >= 0.0);
            prop_assert!((g.cdf(x).unwrap() - p).abs() <= 1e-9);
        }
    }
}
