//! Number formatting shared by the tables and the point commands.
//!
//! Fixed-point output rounds the exact binary value half-to-even (that is
//! what `{:.N}` does), so output is identical on every platform.

/// `v` with exactly `precision` decimals; never prints a negative zero.
pub fn fixed(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|c| c == b'0' || c == b'.') => rest.to_string(),
        _ => s,
    }
}

/// `v` with `digits` significant digits: positional notation for moderate
/// magnitudes, scientific otherwise.
pub fn significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 || !v.is_finite() {
        return format!("{}", if v == 0.0 { 0.0 } else { v });
    }
    let exponent = v.abs().log10().floor() as i32;
    if (-5..digits as i32).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        fixed(v, decimals)
    } else {
        format!("{:.*e}", digits - 1, v)
    }
}
