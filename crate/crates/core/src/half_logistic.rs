//! The base distributions the family is built from: the standard half
//! logistic and the (unfolded) type III generalized logistic.

use libm::{exp, expm1, fabs, log1p};

use crate::distribution::Shape;
use crate::special::{log_beta, BetaArgs};
use crate::{Error, Result};

fn check_nonnegative(y: f64) -> Result<()> {
    if y >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain("argument must be nonnegative"))
    }
}

/// `eˣ / (1 + eˣ)`, evaluated without overflow for any finite `x`.
pub fn logistic_sigma(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + exp(-x))
    } else {
        let e = exp(x);
        e / (1.0 + e)
    }
}

/// Half logistic density `2eʸ / (1 + eʸ)²` on `y ≥ 0`.
pub fn half_logistic_pdf(y: f64) -> Result<f64> {
    check_nonnegative(y)?;
    let e = exp(-y);
    Ok(2.0 * e / ((1.0 + e) * (1.0 + e)))
}

/// Half logistic cdf `(eʸ − 1) / (eʸ + 1)`.
pub fn half_logistic_cdf(y: f64) -> Result<f64> {
    check_nonnegative(y)?;
    let e = exp(-y);
    Ok(-expm1(-y) / (1.0 + e))
}

/// Half logistic survival function `2 / (eʸ + 1)`.
pub fn half_logistic_survival(y: f64) -> Result<f64> {
    check_nonnegative(y)?;
    let e = exp(-y);
    Ok(2.0 * e / (1.0 + e))
}

/// Type III generalized logistic density `e^{by} / (B(b, b)(1 + eʸ)^{2b})`
/// on the whole real line. The density is even in `y`.
pub fn type3_logistic_pdf(y: f64, shape: Shape) -> Result<f64> {
    if y.is_nan() {
        return Err(Error::Domain("argument must not be NaN"));
    }
    let b = shape.value();
    let lb = log_beta(BetaArgs::new(b, b)?);
    let t = fabs(y);
    Ok(exp(-lb - b * t - 2.0 * b * log1p(exp(-t))))
}
