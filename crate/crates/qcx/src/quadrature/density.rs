//! Generic measure engine over callable 1D probability densities.

use std::sync::Arc;

use super::{decay_rate, golden_max, integrate_split, Interval, QuadConfig};
use crate::error::{QcxError, Result};

/// Tail behaviour hint; selects the analytic truncation-error bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailDecay {
    Exponential,
    Gaussian,
    Rational,
}

type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A probability density with enough structure for reliable quadrature:
/// support, interior zeros (split points) and a tail-decay hint.
///
/// Evaluators must be stateless so a density can be shared across workers.
#[derive(Clone)]
pub struct Density1D {
    evaluator: Evaluator,
    derivative: Option<Evaluator>,
    support: Interval,
    singular_points: Vec<f64>,
    tail_decay: TailDecay,
}

impl Density1D {
    pub fn new(
        evaluator: impl Fn(f64) -> f64 + Send + Sync + 'static,
        support: Interval,
        mut singular_points: Vec<f64>,
        tail_decay: TailDecay,
    ) -> Self {
        singular_points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Self {
            evaluator: Arc::new(evaluator),
            derivative: None,
            support,
            singular_points,
            tail_decay,
        }
    }

    /// Attach an analytic derivative (used by the Fisher integrand instead
    /// of finite differences).
    pub fn with_derivative(
        mut self,
        derivative: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.derivative = Some(Arc::new(derivative));
        self
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.evaluator)(x)
    }

    pub fn support(&self) -> Interval {
        self.support
    }

    pub fn singular_points(&self) -> &[f64] {
        &self.singular_points
    }

    pub fn tail_decay(&self) -> TailDecay {
        self.tail_decay
    }
}

/// Fisher information of a density: finite or analytically divergent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FisherInfo {
    Finite(f64),
    Divergent,
}

impl FisherInfo {
    pub fn value(&self) -> Option<f64> {
        match self {
            FisherInfo::Finite(v) => Some(*v),
            FisherInfo::Divergent => None,
        }
    }
}

/// Bundle of measures computed from one density. Rényi/Tsallis entries are
/// (q, value) pairs in the caller's q order.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureSet {
    pub variance: f64,
    pub mean: f64,
    pub shannon: f64,
    pub shannon_power: f64,
    pub fisher: FisherInfo,
    pub disequilibrium: f64,
    pub renyi: Vec<(f64, f64)>,
    pub tsallis: Vec<(f64, f64)>,
    /// Norm found by the lazy normalization check.
    pub norm: f64,
}

/// Effective finite integration window for a density: tails are cut where
/// the density falls below `tail_cutoff_ratio` times its peak, the peak
/// being located by golden section over the last finite panel.
pub(crate) struct Window {
    pub lo: f64,
    pub hi: f64,
    /// Analytic bound on the truncated tail mass.
    pub tail_bound: f64,
}

pub(crate) fn truncate_envelope(
    f: &dyn Fn(f64) -> f64,
    support: Interval,
    splits: &[f64],
    decay: TailDecay,
    cutoff_ratio: f64,
    what: &str,
) -> Result<Window> {
    match support {
        Interval::Finite(a, b) => Ok(Window {
            lo: a,
            hi: b,
            tail_bound: 0.0,
        }),
        Interval::HalfInfinite(a) => {
            let (hi, _, bound) = cut_upper(f, a, splits, decay, cutoff_ratio, what)?;
            Ok(Window {
                lo: a,
                hi,
                tail_bound: bound,
            })
        }
        Interval::FullLine => {
            let (hi, _, bound_r) = cut_upper(f, 0.0, splits, decay, cutoff_ratio, what)?;
            let neg: Vec<f64> = splits.iter().rev().map(|&s| -s).collect();
            let fr = |x: f64| f(-x);
            let (hi_n, _, bound_l) = cut_upper(&fr, 0.0, &neg, decay, cutoff_ratio, what)?;
            Ok(Window {
                lo: -hi_n,
                hi,
                tail_bound: bound_r + bound_l,
            })
        }
    }
}

fn sample_peak(f: &dyn Fn(f64) -> f64, a: f64, b: f64, splits: &[f64]) -> f64 {
    let mut edges = vec![a];
    edges.extend(splits.iter().copied().filter(|&s| s > a && s < b));
    edges.push(b);
    let mut peak = 0.0_f64;
    for w in edges.windows(2) {
        for k in 1..8 {
            let x = w[0] + (w[1] - w[0]) * k as f64 / 8.0;
            peak = peak.max(f(x));
        }
    }
    peak
}

fn cut_upper(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    splits: &[f64],
    decay: TailDecay,
    cutoff_ratio: f64,
    what: &str,
) -> Result<(f64, f64, f64)> {
    let last_split = splits.last().copied().unwrap_or(a);
    let scale = (last_split - a).abs().max(1.0);

    // Locate the peak of the last lobe; everything beyond it is monotone
    // within each decay class, so doubling finds the cut safely.
    let mut probe = last_split + 0.5 * scale;
    let mut best = f(probe);
    for _ in 0..200 {
        let next = last_split + 2.0 * (probe - last_split);
        let v = f(next);
        if v < best && v < best * 0.5 {
            break;
        }
        best = best.max(v);
        probe = next;
        if !probe.is_finite() {
            return Err(QcxError::NonConvergent {
                what: format!("{what}: tail peak search diverged"),
                partial: 0.0,
                error_estimate: f64::INFINITY,
            });
        }
    }
    let (_, lobe_peak) = golden_max(&|x| f(x), last_split, probe * 2.0 - last_split);
    let peak = sample_peak(f, a, probe.max(last_split + scale), splits).max(lobe_peak);

    let threshold = cutoff_ratio * peak;
    let mut hi = probe.max(last_split + scale);
    let mut steps = 0;
    while f(hi) > threshold {
        hi = a + (hi - a) * 1.5;
        steps += 1;
        if steps > 600 || !hi.is_finite() {
            return Err(QcxError::NonConvergent {
                what: format!("{what}: tail of density does not fall below cutoff"),
                partial: 0.0,
                error_estimate: f64::INFINITY,
            });
        }
    }

    let rate = decay_rate(&|x| f(x), hi, scale);
    let fh = f(hi).max(0.0);
    let tail_bound = match decay {
        TailDecay::Exponential | TailDecay::Gaussian => fh / rate.max(1e-300),
        TailDecay::Rational => {
            let k = rate * hi.abs().max(scale);
            if k > 1.0 {
                fh * hi.abs().max(scale) / (k - 1.0)
            } else {
                fh * hi.abs().max(scale)
            }
        }
    };
    Ok((hi, peak, tail_bound))
}

/// Compute all Appendix-style measures of a density by quadrature.
///
/// `q_list` entries must be positive and ≠ 1. The density is checked for
/// unit normalization on first use (1e-6); Fisher divergence is detected
/// from the boundary exponents and reported as a flag rather than an error.
pub fn density_measures(
    d: &Density1D,
    q_list: &[f64],
    config: &QuadConfig,
) -> Result<MeasureSet> {
    let config = config.validated()?;
    for &q in q_list {
        if !(q > 0.0) || q == 1.0 {
            return Err(QcxError::InvalidArgument(format!(
                "Rényi/Tsallis order must be > 0 and != 1, got {q}"
            )));
        }
    }
    let f = d.evaluator.clone();
    let win = truncate_envelope(
        &|x| (f)(x),
        d.support,
        &d.singular_points,
        d.tail_decay,
        config.tail_cutoff_ratio,
        "density",
    )?;
    let splits = &d.singular_points;

    let run = |g: &dyn Fn(f64) -> f64, what: &str| -> Result<f64> {
        integrate_split(&g, win.lo, win.hi, splits, &config, what).map(|(v, _)| v)
    };

    let norm = run(&|x| f(x), "density normalization")?;
    if (norm - 1.0).abs() > 1e-6 + win.tail_bound {
        return Err(QcxError::InvalidArgument(format!(
            "density is not normalized: ∫ρ = {norm:.9}"
        )));
    }

    let mean = run(&|x| x * f(x), "first moment")?;
    let second = run(&|x| x * x * f(x), "second moment")?;
    let variance = (second - mean * mean).max(0.0);

    let shannon = run(
        &|x| {
            let v = f(x);
            if v > 0.0 {
                -v * v.ln()
            } else {
                0.0
            }
        },
        "Shannon entropy",
    )?;

    let disequilibrium = run(&|x| f(x) * f(x), "disequilibrium")?;

    let mut renyi = Vec::with_capacity(q_list.len());
    let mut tsallis = Vec::with_capacity(q_list.len());
    for &q in q_list {
        let wq = run(
            &|x| {
                let v = f(x);
                if v > 0.0 {
                    (q * v.ln()).exp()
                } else {
                    0.0
                }
            },
            "entropic moment",
        )?;
        renyi.push((q, wq.ln() / (1.0 - q)));
        tsallis.push((q, (1.0 - wq) / (q - 1.0)));
    }

    let sigma = variance.sqrt().max(1e-12);
    let fisher = if fisher_diverges(d, &win, sigma) {
        FisherInfo::Divergent
    } else {
        let deriv = d.derivative.clone();
        let h = 1e-5 * sigma;
        let integrand = move |x: f64| {
            let v = f(x);
            if v <= 0.0 {
                return 0.0;
            }
            let dv = match &deriv {
                Some(g) => (g)(x),
                None => ((f)(x + h) - (f)(x - h)) / (2.0 * h),
            };
            dv * dv / v
        };
        FisherInfo::Finite(run(&integrand, "Fisher information")?)
    };

    Ok(MeasureSet {
        variance,
        mean,
        shannon,
        shannon_power: shannon.exp(),
        fisher,
        disequilibrium,
        renyi,
        tsallis,
        norm,
    })
}

/// Boundary-exponent test: if ρ ~ |x-edge|^β at a support edge with
/// 0 < β ≤ 1 or β < 0, the Fisher integral ∫ρ'²/ρ diverges there.
/// Interior zeros of smooth densities are quadratic and always integrable.
fn fisher_diverges(d: &Density1D, win: &Window, sigma: f64) -> bool {
    let edges: Vec<f64> = match d.support {
        Interval::Finite(a, b) => vec![a, b],
        Interval::HalfInfinite(a) => vec![a],
        Interval::FullLine => vec![],
    };
    for edge in edges {
        let inward = if (edge - win.lo).abs() < (edge - win.hi).abs() {
            1.0
        } else {
            -1.0
        };
        let eps = 1e-7 * sigma.max(1e-6);
        let f1 = d.eval(edge + inward * eps);
        let f2 = d.eval(edge + inward * 10.0 * eps);
        if f1 <= 0.0 || f2 <= 0.0 {
            continue;
        }
        let beta = (f2.ln() - f1.ln()) / 10f64.ln();
        if beta.abs() > 1e-3 && beta < 1.0 + 1e-3 {
            return true;
        }
    }
    false
}
