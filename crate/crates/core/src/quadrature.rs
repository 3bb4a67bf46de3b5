//! Adaptive Gauss–Kronrod (7/15) integration on finite and semi-infinite
//! intervals.
//!
//! Only interior nodes are sampled, so integrands that are singular or
//! undefined exactly at an endpoint are tolerated.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use libm::{fabs, pow};

use crate::{Error, Result};

/// Width of the first chunk used by [`integrate_semi_infinite`].
const FIRST_CHUNK: f64 = 50.0;
/// Chunk doublings before an integrand is declared non-decaying.
const MAX_CHUNKS: usize = 20;

/// Accuracy and effort budget for the numeric routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-10, max_subdivisions: 200 }
    }
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::Domain("absolute tolerance must be positive"));
        }
        if !(rel_tol > 0.0 && rel_tol.is_finite()) {
            return Err(Error::Domain("relative tolerance must be positive"));
        }
        if max_subdivisions == 0 {
            return Err(Error::Domain("at least one subdivision is required"));
        }
        Ok(Self { abs_tol, rel_tol, max_subdivisions })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_subdivisions(&self) -> usize {
        self.max_subdivisions
    }

    /// Error target for an integral whose current estimate is `value`.
    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * fabs(value))
    }
}

/// Outcome of an integration: the estimate, an error bound and the number
/// of integrand evaluations spent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
}

impl QuadResult {
    const EMPTY: QuadResult = QuadResult { value: 0.0, err_estimate: 0.0, evaluations: 0 };

    fn merge(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            evaluations: self.evaluations + other.evaluations,
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre node.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// One 15-point Kronrod evaluation with the embedded 7-point Gauss estimate,
/// using the QUADPACK error heuristic.
fn gauss_kronrod<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> Result<Segment> {
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = fabs(kronrod);

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let sum = f1 + f2;
        kronrod += WGK[j] * sum;
        resabs += WGK[j] * (fabs(f1) + fabs(f2));
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    if !kronrod.is_finite() {
        return Err(Error::Domain("integrand returned a non-finite value"));
    }

    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * fabs(fc - mean);
    for j in 0..7 {
        resasc += WGK[j] * (fabs(fv1[j] - mean) + fabs(fv2[j] - mean));
    }

    let scale = fabs(half);
    let value = kronrod * half;
    resabs *= scale;
    resasc *= scale;
    let mut err = fabs((kronrod - gauss) * half);
    if resasc != 0.0 && err != 0.0 {
        err = resasc * pow(200.0 * err / resasc, 1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Segment { lo, hi, value, err })
}

/// Integrate `f` over `[lo, hi]`.
///
/// Bisects the segment with the largest error estimate until the summed
/// estimate drops below `max(abs_tol, rel_tol·|value|)`. Exceeding the
/// subdivision budget returns [`Error::Quadrature`] with the best estimate.
/// An empty interval yields zero without evaluating `f`.
pub fn integrate_finite<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: Tolerance) -> Result<QuadResult> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::Domain("integration limits must be finite"));
    }
    if lo > hi {
        return Err(Error::Domain("lower integration limit exceeds the upper"));
    }
    if lo == hi {
        return Ok(QuadResult::EMPTY);
    }

    let first = gauss_kronrod(&mut f, lo, hi)?;
    let mut evaluations = 15;
    let mut value = first.value;
    let mut err = first.err;
    let mut heap = BinaryHeap::new();
    heap.push(first);

    let mut segments = 1;
    while err > tol.target(value) {
        if segments >= tol.max_subdivisions {
            return Err(Error::Quadrature(QuadResult { value, err_estimate: err, evaluations }));
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Segment cannot be split further in f64.
            return Err(Error::Quadrature(QuadResult { value, err_estimate: err, evaluations }));
        }
        let left = gauss_kronrod(&mut f, worst.lo, mid)?;
        let right = gauss_kronrod(&mut f, mid, worst.hi)?;
        evaluations += 30;
        segments += 1;

        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed the drift from incremental updates.
    let (value, err) = heap.iter().fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.err));
    Ok(QuadResult { value, err_estimate: err, evaluations })
}

/// Integrate an exponentially decaying `f` over `[lo, ∞)`.
///
/// Integrates `[lo, lo + 50]` and then appends chunks of doubling width until
/// a chunk contributes less than `abs_tol / 10`. An integrand that never
/// decays is reported as [`Error::Quadrature`].
pub fn integrate_semi_infinite<F: FnMut(f64) -> f64>(mut f: F, lo: f64, tol: Tolerance) -> Result<QuadResult> {
    if !lo.is_finite() {
        return Err(Error::Domain("lower integration limit must be finite"));
    }
    let mut start = lo;
    let mut width = FIRST_CHUNK;
    let mut total = integrate_finite(&mut f, start, start + width, tol)?;
    for _ in 0..MAX_CHUNKS {
        start += width;
        width *= 2.0;
        let chunk = integrate_finite(&mut f, start, start + width, tol)?;
        total = total.merge(chunk);
        if fabs(chunk.value) + chunk.err_estimate < 0.1 * tol.abs_tol {
            return Ok(total);
        }
    }
    Err(Error::Quadrature(total))
}

/// Integrate over `[lo, ∞)` by truncating at a caller-chosen `cutoff` beyond
/// which the integrand's tail is known to be negligible.
pub fn integrate_semi_infinite_to<F: FnMut(f64) -> f64>(
    f: F,
    lo: f64,
    cutoff: f64,
    tol: Tolerance,
) -> Result<QuadResult> {
    if cutoff.is_nan() || cutoff < lo {
        return Err(Error::Domain("truncation point must not precede the lower limit"));
    }
    integrate_finite(f, lo, cutoff, tol)
}
