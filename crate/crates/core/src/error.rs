use core::fmt;

use crate::quadrature::QuadResult;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// An argument is outside the domain of the function.
    Domain(&'static str),
    /// Adaptive quadrature hit its subdivision cap; carries the best estimate.
    Quadrature(QuadResult),
    /// An iterative routine ran out of iterations.
    NoConvergence { routine: &'static str, best: f64 },
    /// The result is not representable as a finite `f64`.
    Overflow(&'static str),
}

impl Error {
    /// True for the numeric failures (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        !matches!(self, Error::Domain(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Quadrature(best) => write!(
                f,
                "quadrature did not converge: best estimate {} (error estimate {}, {} evaluations)",
                best.value, best.err_estimate, best.evaluations
            ),
            Error::NoConvergence { routine, best } => {
                write!(f, "{routine} did not converge (best estimate {best})")
            }
            Error::Overflow(what) => write!(f, "overflow: {what}"),
        }
    }
}

impl core::error::Error for Error {}
