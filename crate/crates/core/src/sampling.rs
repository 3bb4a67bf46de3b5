//! Seeded inverse-transform sampling.
//!
//! Uniforms come from a counter-based generator: draw `k` of a stream is a
//! pure function of `(seed, k)`, so any position in a stream can be
//! reproduced without replaying the draws before it.

use alloc::vec::Vec;

use crate::order_stats::OrderIndex;
use crate::{Error, Ghl3, Result};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const TWO_POW_NEG_52: f64 = 1.0 / 4_503_599_627_370_496.0;

/// SplitMix64 output function.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A reproducible stream of uniforms on the open interval `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    counter: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, counter: 0 }
    }

    pub fn at(seed: u64, counter: u64) -> Self {
        Self { seed, counter }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of draws taken so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn next_u64(&mut self) -> u64 {
        let k = self.counter;
        self.counter = self.counter.wrapping_add(1);
        mix64(self.seed.wrapping_add(k.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
    }

    /// `(m + ½)·2⁻⁵²` for the top 52 bits `m` of the next word; never 0 or 1.
    pub fn next_uniform(&mut self) -> f64 {
        ((self.next_u64() >> 12) as f64 + 0.5) * TWO_POW_NEG_52
    }
}

/// `count` variates `quantile(U)` for successive uniforms of `stream`.
pub fn sample(d: &Ghl3, stream: &mut RngStream, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1"));
    }
    (0..count).map(|_| d.quantile(stream.next_uniform())).collect()
}

/// The `r`-th smallest of `n` fresh draws, repeated `batches` times.
///
/// Each batch consumes exactly `n` uniforms, so two calls with different `r`
/// from the same starting stream see the same batches.
pub fn sample_order_stat(d: &Ghl3, idx: OrderIndex, stream: &mut RngStream, batches: usize) -> Result<Vec<f64>> {
    if batches == 0 {
        return Err(Error::Domain("batch count must be at least 1"));
    }
    let n = idx.n() as usize;
    let rank = idx.r() as usize - 1;
    let mut buf = Vec::with_capacity(n);
    let mut out = Vec::with_capacity(batches);
    for _ in 0..batches {
        buf.clear();
        buf.extend((0..n).map(|_| stream.next_uniform()));
        // The quantile is increasing, so ranking the uniforms ranks the variates.
        let (_, u, _) = buf.select_nth_unstable_by(rank, f64::total_cmp);
        out.push(d.quantile(*u)?);
    }
    Ok(out)
}

/// One sample of size `n`, sorted ascending: all `n` order statistics of a batch.
pub fn sample_sorted_batch(d: &Ghl3, n: u32, stream: &mut RngStream) -> Result<Vec<f64>> {
    let mut v = sample(d, stream, n as usize)?;
    v.sort_unstable_by(f64::total_cmp);
    Ok(v)
}
