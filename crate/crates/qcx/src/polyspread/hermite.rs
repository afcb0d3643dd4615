//! Spreading measures of the orthonormal Hermite polynomials H̃_n.

use super::{BoundParams, Method, SpreadingReport};
use crate::error::{QcxError, Result};
use crate::quadrature::{
    entropic_integral_e, Density1D, FisherInfo, Interval, QuadConfig, TailDecay,
};
use crate::specfun::{
    eval_poly_ln, ln_gamma_unchecked, poly_zeros, OrthoPolySpec, PolyFamily, DEGREE_CAP,
};

/// Product n·q above which the Bell route hands over to quadrature.
pub const BELL_CAP: usize = 60;

/// ⟨x^k⟩ of the Rakhmanov density of H̃_n: a terminating hypergeometric
/// sum, exactly 0 for odd k.
pub fn hermite_moment(n: usize, k: u32) -> Result<f64> {
    if n > DEGREE_CAP {
        return Err(QcxError::DegreeCap {
            degree: n,
            cap: DEGREE_CAP,
        });
    }
    if k % 2 == 1 {
        return Ok(0.0);
    }
    let half = (k / 2) as usize;
    // 2F1(-n, -k/2; 1; 2): all terms positive, ratio recurrence
    let mut term = 1.0_f64;
    let mut total = 1.0_f64;
    for j in 0..n.min(half) {
        let jf = j as f64;
        term *= (n as f64 - jf) * (half as f64 - jf) * 2.0 / ((jf + 1.0) * (jf + 1.0));
        total += term;
    }
    let kf = k as f64;
    let pref = (ln_gamma_unchecked(kf + 1.0)
        - kf * std::f64::consts::LN_2
        - ln_gamma_unchecked(kf / 2.0 + 1.0))
    .exp();
    Ok(pref * total)
}

fn rakhmanov_density(n: usize) -> Result<Density1D> {
    let spec = OrthoPolySpec::hermite(n)?;
    let zeros = poly_zeros(&spec)?;
    Ok(Density1D::new(
        move |x: f64| {
            let (ln_p, s) = eval_poly_ln(&spec, x).expect("validated spec");
            if s == 0.0 {
                return 0.0;
            }
            (2.0 * ln_p - x * x).exp()
        },
        Interval::FullLine,
        zeros,
        TailDecay::Gaussian,
    ))
}

fn rakhmanov_power_integral(n: usize, q: f64, config: &QuadConfig) -> Result<f64> {
    let spec = OrthoPolySpec::hermite(n)?;
    let zeros = poly_zeros(&spec)?;
    let d = rakhmanov_density(n)?;
    // ∫ ρ^q with the same truncation machinery as the measure engine
    let f = move |x: f64| {
        let (ln_p, s) = eval_poly_ln(&spec, x).expect("validated spec");
        if s == 0.0 {
            return 0.0;
        }
        (q * (2.0 * ln_p - x * x)).exp()
    };
    let win = crate::quadrature::density_window(&d, config)?;
    crate::quadrature::integrate_window(&f, &win, &zeros, config, "Hermite entropic moment")
}

/// W_q of the Rakhmanov density of H̃_n.
///
/// The Bell route (integer q ≥ 1, n·q ≤ 60) sums the exact combinatorial
/// expansion in log-sign space; quadrature integrates ρ^q directly and also
/// serves non-integer q.
pub fn hermite_entropic_moment(n: usize, q: f64, method: Method) -> Result<f64> {
    hermite_entropic_moment_cfg(n, q, method, &QuadConfig::default())
}

pub(crate) fn hermite_entropic_moment_cfg(
    n: usize,
    q: f64,
    method: Method,
    config: &QuadConfig,
) -> Result<f64> {
    if !(q > 0.0) {
        return Err(QcxError::InvalidArgument(format!(
            "entropic moment order must be positive, got {q}"
        )));
    }
    match method {
        Method::Bell => {
            let qi = integer_order(q)?;
            if n * qi > BELL_CAP {
                return Err(QcxError::MethodCap(format!(
                    "Bell route limited to n·q <= {BELL_CAP}, got {}",
                    n * qi
                )));
            }
            hermite_entropic_moment_bell(n, qi)
        }
        Method::Quadrature => rakhmanov_power_integral(n, q, config),
        other => Err(QcxError::InvalidArgument(format!(
            "Hermite entropic moments support Bell or Quadrature, not {other:?}"
        ))),
    }
}

fn integer_order(q: f64) -> Result<usize> {
    let r = q.round();
    if (q - r).abs() > 1e-9 || r < 1.0 {
        return Err(QcxError::InvalidArgument(format!(
            "the combinatorial routes require integer q >= 1, got {q}"
        )));
    }
    Ok(r as usize)
}

/// Combinatorial evaluation of W_q: Σ_j Γ(j+1/2) q^{-(j+1/2)} A_{2j} with A
/// the expansion coefficients of [H̃_n]^{2q}. The rational part (integer
/// power coefficients and factorial weights) is carried exactly because the
/// alternating sum cancels more digits than doubles hold; the positive
/// normalization prefactor is applied in log space.
fn hermite_entropic_moment_bell(n: usize, q: usize) -> Result<f64> {
    let (ln_sum, sign) = super::exact::hermite_wq_rational(n, q);
    if sign <= 0.0 {
        return Err(QcxError::InvalidArgument(format!(
            "combinatorial sum for W_{q}[H̃_{n}] is not positive"
        )));
    }
    let nf = n as f64;
    let qf = q as f64;
    // W = Σ · √π q^{-1/2} (2^n n! √π)^{-q}
    let ln_w = ln_sum + 0.5 * std::f64::consts::PI.ln() - 0.5 * qf.ln()
        - qf * (nf * std::f64::consts::LN_2
            + ln_gamma_unchecked(nf + 1.0)
            + 0.5 * std::f64::consts::PI.ln());
    Ok(ln_w.exp())
}

/// Rényi length L_q^R = W_q^{-1/(q-1)} via the Bell route, integer q ≥ 2.
pub fn hermite_renyi_length(n: usize, q: usize) -> Result<f64> {
    if q < 2 {
        return Err(QcxError::InvalidArgument(
            "Rényi length needs q >= 2 on the combinatorial route".into(),
        ));
    }
    let wq = hermite_entropic_moment(n, q as f64, Method::Bell)?;
    Ok(wq.powf(-1.0 / (q as f64 - 1.0)))
}

/// Shannon length N = exp S of the Rakhmanov density:
/// S = n + 1/2 - ∫ e^{-x²} H̃_n² ln H̃_n², the log integral by zero-split
/// quadrature.
pub fn hermite_shannon_length(n: usize, config: &QuadConfig) -> Result<f64> {
    Ok(hermite_shannon_entropy(n, config)?.exp())
}

pub(crate) fn hermite_shannon_entropy(n: usize, config: &QuadConfig) -> Result<f64> {
    let spec = OrthoPolySpec::hermite(n)?;
    let e0 = entropic_integral_e(&spec, 0, config)?;
    Ok(n as f64 + 0.5 - e0)
}

/// Large-n Shannon length asymptotic π√(2n)/e.
pub fn hermite_shannon_asymptotic(n: usize) -> f64 {
    std::f64::consts::PI * (2.0 * n as f64).sqrt() / std::f64::consts::E
}

/// Variational upper bound c_{k,n} on the Shannon length from the prior
/// e^{-x^k}; k even. Saturates at (n, k) = (0, 2) where the prior is the
/// density itself.
pub fn hermite_shannon_bound(n: usize, k: u32) -> Result<f64> {
    if k == 0 || k % 2 == 1 || k > 40 {
        return Err(QcxError::InvalidArgument(format!(
            "bound parameter k must be even and in [2, 40], got {k}"
        )));
    }
    let kf = k as f64;
    let moment = hermite_moment(n, k)?;
    let a_k = 2.0 / kf * (std::f64::consts::E * kf).powf(1.0 / kf)
        * ln_gamma_unchecked(1.0 / kf).exp();
    Ok(a_k * moment.powf(1.0 / kf))
}

/// Best (k, c_{k,n}) over the even grid k ∈ [2, 40].
pub fn hermite_shannon_bound_opt(n: usize) -> Result<(u32, f64)> {
    let mut best = (2u32, hermite_shannon_bound(n, 2)?);
    for k in (4..=40u32).step_by(2) {
        let c = hermite_shannon_bound(n, k)?;
        if c < best.1 {
            best = (k, c);
        }
    }
    Ok(best)
}

/// Fisher information and Fisher length: F = 4n + 2, δx = (4n+2)^{-1/2}.
pub fn hermite_fisher(n: usize) -> (f64, f64) {
    let f = 4.0 * n as f64 + 2.0;
    (f, f.powf(-0.5))
}

/// Quadrature Fisher of the Rakhmanov density with the analytic derivative
/// ρ' = e^{-x²} p (2p' - 2xp); the independent check of the 4n+2 closed
/// form.
pub fn hermite_fisher_quadrature(n: usize, config: &QuadConfig) -> Result<f64> {
    let spec = OrthoPolySpec::hermite(n)?;
    let zeros = poly_zeros(&spec)?;
    let f = move |x: f64| {
        let (p, dp) = crate::specfun::eval_poly_with_deriv(&spec, x).expect("validated");
        let w = (-x * x).exp();
        let num = 2.0 * dp - 2.0 * x * p;
        w * num * num
    };
    let d = rakhmanov_density(n)?;
    let win = crate::quadrature::density_window(&d, config)?;
    crate::quadrature::integrate_window(&f, &win, &zeros, config, "Hermite Fisher information")
}

/// Assemble the full spreading report of H̃_n for the given Rényi orders.
pub fn hermite_report(n: usize, q_list: &[u32], config: &QuadConfig) -> Result<SpreadingReport> {
    let moments: Vec<(u32, f64)> = (0..=4u32)
        .map(|k| hermite_moment(n, k).map(|v| (k, v)))
        .collect::<Result<_>>()?;
    let std_dev = (n as f64 + 0.5).sqrt();

    let mut entropic = Vec::with_capacity(q_list.len());
    let mut renyi = Vec::with_capacity(q_list.len());
    let mut entropic_method = Method::Bell;
    for &q in q_list {
        let (wq, m) = if n * q as usize <= BELL_CAP {
            (
                hermite_entropic_moment_cfg(n, q as f64, Method::Bell, config)?,
                Method::Bell,
            )
        } else {
            (
                hermite_entropic_moment_cfg(n, q as f64, Method::Quadrature, config)?,
                Method::Quadrature,
            )
        };
        entropic_method = m;
        entropic.push((q, wq));
        if q >= 2 {
            renyi.push((q, wq.powf(-1.0 / (q as f64 - 1.0))));
        }
    }

    let shannon_entropy = hermite_shannon_entropy(n, config)?;
    let (k_opt, c_opt) = hermite_shannon_bound_opt(n)?;
    let (fisher, fisher_length) = hermite_fisher(n);

    Ok(SpreadingReport {
        family: PolyFamily::Hermite,
        degree: n,
        moments,
        std_dev,
        entropic_moments: entropic,
        entropic_method,
        renyi_lengths: renyi,
        shannon_entropy,
        shannon_length: shannon_entropy.exp(),
        shannon_asymptotic: hermite_shannon_asymptotic(n),
        shannon_bounds: vec![(BoundParams::HermiteK(k_opt), c_opt)],
        fisher_info: FisherInfo::Finite(fisher),
        fisher_length,
    })
}

/// Direct -∫ρ ln ρ through the measure engine; the independent check of
/// the moment/E-integral decomposition.
pub fn hermite_shannon_direct(n: usize, config: &QuadConfig) -> Result<f64> {
    let d = rakhmanov_density(n)?;
    let m = crate::quadrature::density_measures(&d, &[], config)?;
    Ok(m.shannon)
}
