//! Log-gamma and digamma on the positive real axis.
//!
//! Both use upward recurrence to shift the argument into the asymptotic
//! region and a Bernoulli-number Stirling series there. This is accurate to
//! better than 1e-14 relative over the whole positive axis, which is what
//! the gamma-ratio products of the disequilibrium formulas need.

use crate::error::{QcxError, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

/// B_{2k} / (2k (2k-1)) for the Stirling series of ln Γ.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// B_{2k} / (2k) for the asymptotic series of ψ.
const DIGAMMA_ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(QcxError::InvalidArgument(format!(
            "log_gamma requires x > 0, got {x}"
        )));
    }
    Ok(ln_gamma_unchecked(x))
}

/// Internal unchecked variant; callers guarantee x > 0.
pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    let mut shift = 0.0;
    let mut z = x;
    while z < 12.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let mut series = 0.0;
    let inv2 = 1.0 / (z * z);
    let mut pow = 1.0 / z;
    for c in STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series + shift
}

/// Digamma function ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(QcxError::InvalidArgument(format!(
            "digamma requires x > 0, got {x}"
        )));
    }
    Ok(digamma_unchecked(x))
}

pub(crate) fn digamma_unchecked(x: f64) -> f64 {
    let mut acc = 0.0;
    let mut z = x;
    while z < 12.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut series = 0.0;
    let mut pow = inv2;
    for c in DIGAMMA_ASYMP {
        series -= c * pow;
        pow *= inv2;
    }
    acc + z.ln() - 0.5 / z + series
}

/// ln n! through the gamma function.
pub(crate) fn ln_factorial(n: u64) -> f64 {
    ln_gamma_unchecked(n as f64 + 1.0)
}
