//! Order statistics of a sample drawn from the family.
//!
//! Everything is expressed through the closed-form cdf, so no integral is
//! nested inside another.

use libm::{exp, log};

use crate::special::{log_beta, log_gamma, BetaArgs};
use crate::{Error, Ghl3, Result};

/// Rank `r` within a sample of size `n`, `1 ≤ r ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderIndex {
    r: u32,
    n: u32,
}

impl OrderIndex {
    pub fn new(r: u32, n: u32) -> Result<Self> {
        if r >= 1 && r <= n {
            Ok(Self { r, n })
        } else {
            Err(Error::Domain("order statistic index must satisfy 1 <= r <= n"))
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

fn check_size(n: u32) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::Domain("sample size must be at least 1"))
    }
}

/// `ln C(n, k)`.
fn ln_binomial(n: u32, k: u32) -> f64 {
    let lg = |v: u32| log_gamma(f64::from(v) + 1.0).expect("positive argument");
    lg(n) - lg(k) - lg(n - k)
}

/// `k·ln(v)` with the convention `0·ln 0 = 0`.
fn weighted_log(k: u32, v: f64) -> f64 {
    if k == 0 {
        0.0
    } else {
        f64::from(k) * log(v)
    }
}

/// Density of `X_{r:n}`: `F^{r−1}(1−F)^{n−r} f / B(r, n−r+1)`.
pub fn pdf_rth(d: &Ghl3, idx: OrderIndex, x: f64) -> Result<f64> {
    let log_f = d.log_pdf(x)?;
    let lower = d.cdf(x)?;
    let upper = d.survival(x)?;
    let coef = -log_beta(BetaArgs::new(f64::from(idx.r), f64::from(idx.n - idx.r + 1))?);
    let ln = coef + weighted_log(idx.r - 1, lower) + weighted_log(idx.n - idx.r, upper) + log_f;
    Ok(exp(ln))
}

/// Density of the sample maximum, `n·F^{n−1}·f`.
pub fn pdf_max(d: &Ghl3, n: u32, x: f64) -> Result<f64> {
    check_size(n)?;
    let ln = log(f64::from(n)) + weighted_log(n - 1, d.cdf(x)?) + d.log_pdf(x)?;
    Ok(exp(ln))
}

/// Density of the sample minimum, `n·(1−F)^{n−1}·f`.
pub fn pdf_min(d: &Ghl3, n: u32, x: f64) -> Result<f64> {
    check_size(n)?;
    let ln = log(f64::from(n)) + weighted_log(n - 1, d.survival(x)?) + d.log_pdf(x)?;
    Ok(exp(ln))
}

/// Cdf of `X_{r:n}`: `Σ_{j=r}^{n} C(n,j) F^j (1−F)^{n−j}`.
pub fn cdf_rth(d: &Ghl3, idx: OrderIndex, x: f64) -> Result<f64> {
    let lower = d.cdf(x)?;
    let upper = d.survival(x)?;
    if lower == 0.0 {
        return Ok(0.0);
    }
    if upper == 0.0 {
        return Ok(1.0);
    }
    let (ln_lower, ln_upper) = (log(lower), log(upper));
    let n = idx.n;
    let total: f64 =
        (idx.r..=n).map(|j| exp(ln_binomial(n, j) + f64::from(j) * ln_lower + f64::from(n - j) * ln_upper)).sum();
    Ok(total.min(1.0))
}
