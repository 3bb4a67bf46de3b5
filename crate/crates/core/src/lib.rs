//! The type III generalized half logistic distribution.
//!
//! The family is the fold of the symmetric type III generalized logistic
//! distribution onto `[0, ∞)`:
//!
//! ```text
//! f(x; b) = 2 / B(b, b) · e^{bx} / (1 + e^x)^{2b},   x ≥ 0, b > 0
//! ```
//!
//! `b = 1` recovers the standard half logistic distribution. The cdf has the
//! closed form `F(x) = 2·I_{σ(x)}(b, b) − 1` with `σ` the logistic function and
//! `I` the regularized incomplete beta function; a quadrature path is kept
//! alongside it as an independent check.
//!
//! The crate is `no_std` and only needs `alloc` (for the adaptive quadrature
//! work list and for sample buffers).
#![cfg_attr(not(test), no_std)]
#![allow(clippy::excessive_precision)]

extern crate alloc;

mod error;

pub mod distribution;
pub mod half_logistic;
pub mod ks;
pub mod order_stats;
pub mod quadrature;
pub mod roots;
pub mod sampling;
pub mod special;

pub use distribution::{Ghl3, Shape, SummaryStats};
pub use error::{Error, Result};
pub use order_stats::OrderIndex;
pub use quadrature::{QuadResult, Tolerance};
pub use sampling::RngStream;
