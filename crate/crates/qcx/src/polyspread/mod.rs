//! Direct spreading measures of Hermite and Laguerre polynomials: ordinary
//! moments, entropic moments (Bell, Lauricella and quadrature routes),
//! Rényi/Onicescu/Shannon/Fisher lengths, variational Shannon bounds with
//! optimizers, asymptotics, and the Shannon-vs-stddev fits.

mod exact;
mod hermite;
mod laguerre;

pub use hermite::{
    hermite_entropic_moment, hermite_fisher, hermite_fisher_quadrature, hermite_moment,
    hermite_renyi_length, hermite_report, hermite_shannon_bound, hermite_shannon_bound_opt,
    hermite_shannon_direct, hermite_shannon_length,
};
pub use laguerre::{
    laguerre_density_measures, laguerre_entropic_moment, laguerre_fisher, laguerre_moment,
    laguerre_renyi_length, laguerre_report, laguerre_shannon_bound, laguerre_shannon_bound_opt,
    laguerre_shannon_bound_opt_m0, laguerre_shannon_length,
};

use crate::error::{QcxError, Result};
use crate::quadrature::{FisherInfo, QuadConfig};
use crate::specfun::PolyFamily;

/// Route used to produce a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Bell,
    Lauricella,
    Quadrature,
}

/// Parameters of one variational Shannon-length bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundParams {
    /// Gaussian-family prior e^{-x^k}, k even.
    HermiteK(u32),
    /// Gamma-family prior x^m e^{-a x^b}.
    LaguerreBM { b: f64, m: f64 },
}

/// All spreading measures of one Rakhmanov density, with per-field method
/// provenance.
#[derive(Debug, Clone)]
pub struct SpreadingReport {
    pub family: PolyFamily,
    pub degree: usize,
    /// (k, ⟨x^k⟩)
    pub moments: Vec<(u32, f64)>,
    pub std_dev: f64,
    /// (q, W_q)
    pub entropic_moments: Vec<(u32, f64)>,
    pub entropic_method: Method,
    /// (q, L_q^R)
    pub renyi_lengths: Vec<(u32, f64)>,
    pub shannon_entropy: f64,
    pub shannon_length: f64,
    /// Large-n closed-form approximation to the Shannon length.
    pub shannon_asymptotic: f64,
    pub shannon_bounds: Vec<(BoundParams, f64)>,
    pub fisher_info: FisherInfo,
    /// 0 when the Fisher information diverges.
    pub fisher_length: f64,
}

/// Rescale a report to the harmonic-oscillator density
/// ρ^HO(x) = √λ ρ(√λ x): every direct length picks up λ^{-1/2}, the
/// entropy shifts by -ln √λ, Fisher information scales by λ, ⟨x^k⟩ by
/// λ^{-k/2} and W_q by λ^{(q-1)/2}.
pub fn oscillator_rescale(report: &SpreadingReport, lambda: f64) -> Result<SpreadingReport> {
    if !(lambda > 0.0) {
        return Err(QcxError::InvalidArgument(format!(
            "oscillator rescale needs lambda > 0, got {lambda}"
        )));
    }
    let len_scale = lambda.powf(-0.5);
    let mut out = report.clone();
    out.moments = report
        .moments
        .iter()
        .map(|&(k, v)| (k, v * lambda.powf(-(k as f64) / 2.0)))
        .collect();
    out.std_dev = report.std_dev * len_scale;
    out.entropic_moments = report
        .entropic_moments
        .iter()
        .map(|&(q, w)| (q, w * lambda.powf((q as f64 - 1.0) / 2.0)))
        .collect();
    out.renyi_lengths = report
        .renyi_lengths
        .iter()
        .map(|&(q, l)| (q, l * len_scale))
        .collect();
    out.shannon_entropy = report.shannon_entropy - 0.5 * lambda.ln();
    out.shannon_length = report.shannon_length * len_scale;
    out.shannon_asymptotic = report.shannon_asymptotic * len_scale;
    out.shannon_bounds = report
        .shannon_bounds
        .iter()
        .map(|&(p, b)| (p, b * len_scale))
        .collect();
    out.fisher_info = match report.fisher_info {
        FisherInfo::Finite(f) => FisherInfo::Finite(f * lambda),
        FisherInfo::Divergent => FisherInfo::Divergent,
    };
    out.fisher_length = report.fisher_length * len_scale;
    Ok(out)
}

/// Ordinary least squares of the Shannon length against the standard
/// deviation over a degree range; returns (slope, intercept, correlation).
pub fn fit_shannon_vs_stddev(
    family: PolyFamily,
    n_range: std::ops::RangeInclusive<usize>,
    config: &QuadConfig,
) -> Result<(f64, f64, f64)> {
    let degrees: Vec<usize> = n_range.collect();
    if degrees.len() < 3 {
        return Err(QcxError::InvalidArgument(
            "fit needs at least 3 degree points".into(),
        ));
    }
    let mut xs = Vec::with_capacity(degrees.len());
    let mut ys = Vec::with_capacity(degrees.len());
    for &n in &degrees {
        match family {
            PolyFamily::Hermite => {
                xs.push((n as f64 + 0.5).sqrt());
                ys.push(hermite_shannon_length(n, config)?);
            }
            PolyFamily::Laguerre { alpha } => {
                xs.push(laguerre::laguerre_stddev(n, alpha)?);
                ys.push(laguerre_shannon_length(n, alpha, config)?.0);
            }
            PolyFamily::Gegenbauer { .. } => {
                return Err(QcxError::InvalidArgument(
                    "Shannon-vs-stddev fits cover Hermite and Laguerre only".into(),
                ));
            }
        }
    }
    Ok(ols(&xs, &ys))
}

fn ols(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r = sxy / (sxx * syy).sqrt();
    (slope, intercept, r)
}

pub use laguerre::laguerre_stddev;
