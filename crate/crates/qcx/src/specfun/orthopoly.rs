//! Classical orthogonal polynomials: Hermite, Laguerre(α), Gegenbauer(λ).
//!
//! Evaluation is always by the three-term recurrence of the *classical*
//! polynomial with power-of-two rescaling (classical values overflow f64
//! near degree 150), followed by a log-space normalization constant for the
//! orthonormal convention. Explicit expansion coefficients exist separately
//! because the Bell-polynomial pipeline needs them; they are never used for
//! evaluation.

use crate::error::{QcxError, Result};
use crate::specfun::gamma::{ln_gamma_unchecked, ln_factorial};

/// Hard cap on polynomial degrees accepted anywhere in the crate.
pub const DEGREE_CAP: usize = 200;

const RESCALE_THRESHOLD: f64 = 1.3407807929942597e154; // 2^512
const RESCALE_FACTOR: f64 = 7.458340731200207e-155; // 2^-512
const RESCALE_EXP: i64 = 512;

/// Polynomial family together with its real parameter, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    /// Weight e^{-x²} on (-∞, ∞).
    Hermite,
    /// Weight x^α e^{-x} on [0, ∞); requires α > -1.
    Laguerre { alpha: f64 },
    /// Weight (1-x²)^{λ-1/2} on [-1, 1]; requires λ > -1/2, λ ≠ 0.
    Gegenbauer { lambda: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Textbook normalization (H_n, L_n^(α), C_n^(λ)).
    Classical,
    /// Unit L²(ω) norm.
    Orthonormal,
}

/// A fully specified polynomial: family, degree and normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoPolySpec {
    pub family: PolyFamily,
    pub degree: usize,
    pub normalization: Normalization,
}

impl OrthoPolySpec {
    pub fn new(family: PolyFamily, degree: usize, normalization: Normalization) -> Result<Self> {
        if degree > DEGREE_CAP {
            return Err(QcxError::DegreeCap {
                degree,
                cap: DEGREE_CAP,
            });
        }
        match family {
            PolyFamily::Laguerre { alpha } if !(alpha > -1.0) => {
                return Err(QcxError::InvalidArgument(format!(
                    "Laguerre requires alpha > -1, got {alpha}"
                )));
            }
            PolyFamily::Gegenbauer { lambda } if !(lambda > -0.5) || lambda == 0.0 => {
                return Err(QcxError::InvalidArgument(format!(
                    "Gegenbauer requires lambda > -1/2 and lambda != 0, got {lambda}"
                )));
            }
            _ => {}
        }
        Ok(Self {
            family,
            degree,
            normalization,
        })
    }

    /// Orthonormal Hermite H̃_n.
    pub fn hermite(degree: usize) -> Result<Self> {
        Self::new(PolyFamily::Hermite, degree, Normalization::Orthonormal)
    }

    /// Orthonormal Laguerre L̃_n^(α).
    pub fn laguerre(degree: usize, alpha: f64) -> Result<Self> {
        Self::new(
            PolyFamily::Laguerre { alpha },
            degree,
            Normalization::Orthonormal,
        )
    }

    /// Orthonormal Gegenbauer C̃_n^(λ).
    pub fn gegenbauer(degree: usize, lambda: f64) -> Result<Self> {
        Self::new(
            PolyFamily::Gegenbauer { lambda },
            degree,
            Normalization::Orthonormal,
        )
    }

    /// ln ω(x) for the family weight; -∞ outside the support.
    pub fn ln_weight(&self, x: f64) -> f64 {
        match self.family {
            PolyFamily::Hermite => -x * x,
            PolyFamily::Laguerre { alpha } => {
                if x < 0.0 {
                    f64::NEG_INFINITY
                } else if x == 0.0 {
                    if alpha == 0.0 {
                        0.0
                    } else if alpha > 0.0 {
                        f64::NEG_INFINITY
                    } else {
                        f64::INFINITY
                    }
                } else {
                    alpha * x.ln() - x
                }
            }
            PolyFamily::Gegenbauer { lambda } => {
                let s = 1.0 - x * x;
                if s <= 0.0 {
                    if lambda > 0.5 {
                        f64::NEG_INFINITY
                    } else if lambda == 0.5 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    (lambda - 0.5) * s.ln()
                }
            }
        }
    }

    /// ln of the classical L²(ω) norm h_n = ∫ ω p_n² dx.
    pub fn ln_norm(&self) -> f64 {
        let n = self.degree as f64;
        match self.family {
            PolyFamily::Hermite => {
                // h_n = 2^n n! √π
                n * std::f64::consts::LN_2
                    + ln_factorial(self.degree as u64)
                    + 0.5 * std::f64::consts::PI.ln()
            }
            PolyFamily::Laguerre { alpha } => {
                ln_gamma_unchecked(n + alpha + 1.0) - ln_factorial(self.degree as u64)
            }
            PolyFamily::Gegenbauer { lambda } => {
                // h_n = π 2^{1-2λ} Γ(n+2λ) / ((n+λ) Γ(λ)² n!)
                std::f64::consts::PI.ln() + (1.0 - 2.0 * lambda) * std::f64::consts::LN_2
                    + ln_abs_gamma(n + 2.0 * lambda)
                    - (n + lambda).ln()
                    - 2.0 * ln_abs_gamma(lambda)
                    - ln_factorial(self.degree as u64)
            }
        }
    }
}

/// ln |Γ(x)| for any non-pole real x (reflection below zero).
fn ln_abs_gamma(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma_unchecked(x)
    } else {
        let s = (std::f64::consts::PI * x).sin().abs();
        std::f64::consts::PI.ln() - s.ln() - ln_gamma_unchecked(1.0 - x)
    }
}

/// Classical polynomial value in scaled form: p = value · 2^exp2,
/// with derivative carried alongside under the same scale.
#[derive(Debug, Clone, Copy)]
struct Scaled {
    p: f64,
    dp: f64,
    exp2: i64,
}

/// Classical recurrence with rescaling; returns value and derivative of the
/// classical polynomial at x in scaled form.
fn eval_classical_scaled(family: PolyFamily, degree: usize, x: f64) -> Scaled {
    let (mut pm, mut dpm); // degree k-1
    let (mut pc, mut dpc); // degree k
    let mut exp2: i64 = 0;

    match family {
        PolyFamily::Hermite => {
            pm = 1.0;
            dpm = 0.0;
            pc = 2.0 * x;
            dpc = 2.0;
        }
        PolyFamily::Laguerre { alpha } => {
            pm = 1.0;
            dpm = 0.0;
            pc = 1.0 + alpha - x;
            dpc = -1.0;
        }
        PolyFamily::Gegenbauer { lambda } => {
            pm = 1.0;
            dpm = 0.0;
            pc = 2.0 * lambda * x;
            dpc = 2.0 * lambda;
        }
    }
    if degree == 0 {
        return Scaled {
            p: pm,
            dp: dpm,
            exp2,
        };
    }
    for k in 1..degree {
        let kf = k as f64;
        let (pn, dpn) = match family {
            PolyFamily::Hermite => (
                2.0 * x * pc - 2.0 * kf * pm,
                2.0 * pc + 2.0 * x * dpc - 2.0 * kf * dpm,
            ),
            PolyFamily::Laguerre { alpha } => {
                let a = 2.0 * kf + alpha + 1.0 - x;
                let b = kf + alpha;
                (
                    (a * pc - b * pm) / (kf + 1.0),
                    (a * dpc - pc - b * dpm) / (kf + 1.0),
                )
            }
            PolyFamily::Gegenbauer { lambda } => {
                let a = 2.0 * (kf + lambda);
                let b = kf + 2.0 * lambda - 1.0;
                (
                    (a * x * pc - b * pm) / (kf + 1.0),
                    (a * (pc + x * dpc) - b * dpm) / (kf + 1.0),
                )
            }
        };
        pm = pc;
        dpm = dpc;
        pc = pn;
        dpc = dpn;
        let mag = pm.abs().max(pc.abs()).max(dpm.abs()).max(dpc.abs());
        if mag > RESCALE_THRESHOLD {
            pm *= RESCALE_FACTOR;
            pc *= RESCALE_FACTOR;
            dpm *= RESCALE_FACTOR;
            dpc *= RESCALE_FACTOR;
            exp2 += RESCALE_EXP;
        }
    }
    Scaled {
        p: pc,
        dp: dpc,
        exp2,
    }
}

/// Polynomial value at x in the spec's normalization, by three-term
/// recurrence. Overflows to ±∞ only if the true value does.
pub fn eval_poly(spec: &OrthoPolySpec, x: f64) -> Result<f64> {
    validate(spec)?;
    let s = eval_classical_scaled(spec.family, spec.degree, x);
    let ln_scale = match spec.normalization {
        Normalization::Classical => s.exp2 as f64 * std::f64::consts::LN_2,
        Normalization::Orthonormal => {
            s.exp2 as f64 * std::f64::consts::LN_2 - 0.5 * spec.ln_norm()
        }
    };
    Ok(s.p * ln_scale.exp())
}

/// (ln |p(x)|, sign) with sign ∈ {-1, 0, 1}; stable for any degree ≤ cap.
pub fn eval_poly_ln(spec: &OrthoPolySpec, x: f64) -> Result<(f64, f64)> {
    validate(spec)?;
    let s = eval_classical_scaled(spec.family, spec.degree, x);
    let ln_norm_half = match spec.normalization {
        Normalization::Classical => 0.0,
        Normalization::Orthonormal => 0.5 * spec.ln_norm(),
    };
    if s.p == 0.0 {
        return Ok((f64::NEG_INFINITY, 0.0));
    }
    Ok((
        s.p.abs().ln() + s.exp2 as f64 * std::f64::consts::LN_2 - ln_norm_half,
        s.p.signum(),
    ))
}

/// Value and first derivative at x, both in the spec's normalization.
pub fn eval_poly_with_deriv(spec: &OrthoPolySpec, x: f64) -> Result<(f64, f64)> {
    validate(spec)?;
    let s = eval_classical_scaled(spec.family, spec.degree, x);
    let ln_scale = match spec.normalization {
        Normalization::Classical => s.exp2 as f64 * std::f64::consts::LN_2,
        Normalization::Orthonormal => {
            s.exp2 as f64 * std::f64::consts::LN_2 - 0.5 * spec.ln_norm()
        }
    };
    let scale = ln_scale.exp();
    Ok((s.p * scale, s.dp * scale))
}

fn validate(spec: &OrthoPolySpec) -> Result<()> {
    // Re-run the constructor checks so hand-built specs are caught too.
    OrthoPolySpec::new(spec.family, spec.degree, spec.normalization).map(|_| ())
}

/// Expansion coefficients (ln |c|, sign) of the orthonormal Hermite H̃_n,
/// index k = power of x. Parity-mismatched entries carry sign 0.
fn hermite_coeffs_ln(n: usize) -> Result<Vec<(f64, f64)>> {
    if n > DEGREE_CAP {
        return Err(QcxError::DegreeCap {
            degree: n,
            cap: DEGREE_CAP,
        });
    }
    let ln_norm_half = 0.5
        * (n as f64 * std::f64::consts::LN_2
            + ln_factorial(n as u64)
            + 0.5 * std::f64::consts::PI.ln());
    let mut out = vec![(f64::NEG_INFINITY, 0.0); n + 1];
    let mut k = n as i64;
    while k >= 0 {
        let l = k as usize;
        let m = (n - l) / 2; // (n-l)/2, parity guaranteed by the stride
        let ln_c = ln_factorial(n as u64) + l as f64 * std::f64::consts::LN_2
            - ln_factorial(m as u64)
            - ln_factorial(l as u64)
            - ln_norm_half;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        out[l] = (ln_c, sign);
        k -= 2;
    }
    Ok(out)
}

/// Coefficients c_0..c_n of the orthonormal Hermite polynomial H̃_n.
///
/// Entries with parity opposite to n are exactly 0.
pub fn hermite_coeffs(n: usize) -> Result<Vec<f64>> {
    Ok(hermite_coeffs_ln(n)?
        .into_iter()
        .map(|(ln, s)| s * ln.exp())
        .collect())
}

/// Expansion coefficients (ln |c|, sign) of the orthonormal Laguerre L̃_n^(α).
fn laguerre_coeffs_ln(n: usize, alpha: f64) -> Result<Vec<(f64, f64)>> {
    if n > DEGREE_CAP {
        return Err(QcxError::DegreeCap {
            degree: n,
            cap: DEGREE_CAP,
        });
    }
    if !(alpha > -1.0) {
        return Err(QcxError::InvalidArgument(format!(
            "Laguerre requires alpha > -1, got {alpha}"
        )));
    }
    let nf = n as f64;
    let pref = 0.5 * (ln_gamma_unchecked(nf + alpha + 1.0) - ln_factorial(n as u64));
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let ln_binom =
            ln_factorial(n as u64) - ln_factorial(k as u64) - ln_factorial((n - k) as u64);
        let ln_c = pref + ln_binom - ln_gamma_unchecked(alpha + k as f64 + 1.0);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        out.push((ln_c, sign));
    }
    Ok(out)
}

/// Coefficients c_0..c_n of the orthonormal Laguerre polynomial L̃_n^(α);
/// the sign of c_k is (-1)^k.
pub fn laguerre_coeffs(n: usize, alpha: f64) -> Result<Vec<f64>> {
    Ok(laguerre_coeffs_ln(n, alpha)?
        .into_iter()
        .map(|(ln, s)| s * ln.exp())
        .collect())
}

/// The n real zeros of the polynomial, ascending.
///
/// Interlacing bisection: zeros of degree k+1 are bracketed by those of
/// degree k, walked up from degree 1. Only signs of the scaled classical
/// recurrence are needed, so this is overflow-free at any supported degree.
pub fn poly_zeros(spec: &OrthoPolySpec) -> Result<Vec<f64>> {
    validate(spec)?;
    let n = spec.degree;
    if n == 0 {
        return Ok(Vec::new());
    }
    let (lo, hi) = zero_bounds(spec.family, n);
    let sign_at = |deg: usize, x: f64| -> f64 {
        let s = eval_classical_scaled(spec.family, deg, x);
        s.p.signum()
    };

    // Degree 1 zero is explicit for every classical family: p_1(x) = a(x - r).
    let mut zeros = vec![match spec.family {
        PolyFamily::Hermite => 0.0,
        PolyFamily::Laguerre { alpha } => 1.0 + alpha,
        PolyFamily::Gegenbauer { .. } => 0.0,
    }];

    for deg in 2..=n {
        let mut brackets = Vec::with_capacity(zeros.len() + 2);
        brackets.push(lo);
        brackets.extend_from_slice(&zeros);
        brackets.push(hi);
        let mut next = Vec::with_capacity(deg);
        for w in brackets.windows(2) {
            let (mut a, mut b) = (w[0], w[1]);
            let fa = sign_at(deg, a);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                let fm = sign_at(deg, mid);
                if fm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if fm == fa {
                    a = mid;
                } else {
                    b = mid;
                }
                if (b - a).abs() <= 1e-15 * mid.abs().max(1.0) {
                    break;
                }
            }
            next.push(0.5 * (a + b));
        }
        zeros = next;
    }
    Ok(zeros)
}

fn zero_bounds(family: PolyFamily, n: usize) -> (f64, f64) {
    match family {
        PolyFamily::Hermite => {
            let b = (2.0 * n as f64 + 2.0).sqrt() + 1.0;
            (-b, b)
        }
        PolyFamily::Laguerre { alpha } => (0.0, 4.0 * n as f64 + 2.0 * alpha.max(0.0) + 4.0),
        PolyFamily::Gegenbauer { .. } => (-1.0, 1.0),
    }
}
