//! Spreading measures of the orthonormal Laguerre polynomials L̃_n^(α).

use super::{BoundParams, Method, SpreadingReport};
use crate::error::{QcxError, Result};
use crate::quadrature::{
    density_measures, density_window, entropic_integral_e, integrate_window, Density1D,
    FisherInfo, Interval, QuadConfig, TailDecay,
};
use crate::specfun::{
    digamma_unchecked, eval_poly_ln, ln_gamma_unchecked, poly_zeros, OrthoPolySpec, PolyFamily,
    DEGREE_CAP,
};

use super::hermite::BELL_CAP;

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > -1.0) {
        return Err(QcxError::InvalidArgument(format!(
            "Laguerre requires alpha > -1, got {alpha}"
        )));
    }
    Ok(())
}

/// ⟨x^k⟩ of the Rakhmanov density of L̃_n^(α): the double-binomial finite
/// sum, all terms positive.
pub fn laguerre_moment(n: usize, alpha: f64, k: u32) -> Result<f64> {
    check_alpha(alpha)?;
    if n > DEGREE_CAP {
        return Err(QcxError::DegreeCap {
            degree: n,
            cap: DEGREE_CAP,
        });
    }
    let kf = k as f64;
    let ln_pref = ln_gamma_unchecked(n as f64 + 1.0) + ln_gamma_unchecked(kf + alpha + 1.0)
        - ln_gamma_unchecked(n as f64 + alpha + 1.0);
    let mut sum = 0.0_f64;
    for r in 0..=n {
        let d = n - r; // lower index of binom(k, n-r); zero when d > k
        if d as u32 > k {
            continue;
        }
        let ln_binom_k = ln_gamma_unchecked(kf + 1.0)
            - ln_gamma_unchecked(d as f64 + 1.0)
            - ln_gamma_unchecked(kf - d as f64 + 1.0);
        let ln_binom_ar = ln_gamma_unchecked(kf + alpha + r as f64 + 1.0)
            - ln_gamma_unchecked(r as f64 + 1.0)
            - ln_gamma_unchecked(kf + alpha + 1.0);
        sum += (ln_pref + 2.0 * ln_binom_k + ln_binom_ar).exp();
    }
    Ok(sum)
}

/// Standard deviation √(2n² + 2(α+1)n + α + 1).
pub fn laguerre_stddev(n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let nf = n as f64;
    Ok((2.0 * nf * nf + 2.0 * (alpha + 1.0) * nf + alpha + 1.0).sqrt())
}

/// Fisher information of the Rakhmanov density and its length:
/// F = 4n+1 at α = 0, ((2n+1)α+1)/(α²-1) for α > 1, divergent (δx = 0)
/// for α ∈ (-1, 1], α ≠ 0.
pub fn laguerre_fisher(n: usize, alpha: f64) -> Result<(FisherInfo, f64)> {
    check_alpha(alpha)?;
    let nf = n as f64;
    if alpha == 0.0 {
        let f = 4.0 * nf + 1.0;
        Ok((FisherInfo::Finite(f), f.powf(-0.5)))
    } else if alpha > 1.0 {
        let f = ((2.0 * nf + 1.0) * alpha + 1.0) / (alpha * alpha - 1.0);
        Ok((FisherInfo::Finite(f), f.powf(-0.5)))
    } else {
        Ok((FisherInfo::Divergent, 0.0))
    }
}

fn rakhmanov_density(n: usize, alpha: f64) -> Result<Density1D> {
    let spec = OrthoPolySpec::laguerre(n, alpha)?;
    let zeros = poly_zeros(&spec)?;
    Ok(Density1D::new(
        move |x: f64| {
            if x <= 0.0 {
                return 0.0;
            }
            let (ln_p, s) = eval_poly_ln(&spec, x).expect("validated spec");
            if s == 0.0 {
                return 0.0;
            }
            (2.0 * ln_p + alpha * x.ln() - x).exp()
        },
        Interval::HalfInfinite(0.0),
        zeros,
        TailDecay::Exponential,
    ))
}

fn rakhmanov_power_integral(n: usize, alpha: f64, q: f64, config: &QuadConfig) -> Result<f64> {
    let spec = OrthoPolySpec::laguerre(n, alpha)?;
    let zeros = poly_zeros(&spec)?;
    let d = rakhmanov_density(n, alpha)?;
    let f = move |x: f64| {
        if x <= 0.0 {
            return 0.0;
        }
        let (ln_p, s) = eval_poly_ln(&spec, x).expect("validated spec");
        if s == 0.0 {
            return 0.0;
        }
        (q * (2.0 * ln_p + alpha * x.ln() - x)).exp()
    };
    let win = density_window(&d, config)?;
    integrate_window(&f, &win, &zeros, config, "Laguerre entropic moment")
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

/// W_q of the Rakhmanov density of L̃_n^(α) by the chosen route.
///
/// All applicable routes agree within 1e-9; the Lauricella route is
/// restricted to n ≤ 3, q ≤ 3 where its 2q-fold nested sums stay exact.
pub fn laguerre_entropic_moment(n: usize, alpha: f64, q: f64, method: Method) -> Result<f64> {
    laguerre_entropic_moment_cfg(n, alpha, q, method, &QuadConfig::default())
}

pub(crate) fn laguerre_entropic_moment_cfg(
    n: usize,
    alpha: f64,
    q: f64,
    method: Method,
    config: &QuadConfig,
) -> Result<f64> {
    check_alpha(alpha)?;
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
            laguerre_entropic_moment_bell(n, alpha, qi)
        }
        Method::Lauricella => {
            let qi = integer_order(q)?;
            if n > 3 || qi > 3 {
                return Err(QcxError::MethodCap(
                    "Lauricella route limited to n <= 3 and q <= 3".into(),
                ));
            }
            laguerre_entropic_moment_lauricella(n, alpha, qi)
        }
        Method::Quadrature => rakhmanov_power_integral(n, alpha, q, config),
        Method::ClosedForm => Err(QcxError::InvalidArgument(
            "no closed form for Laguerre entropic moments; use bell, lauricella or quadrature"
                .into(),
        )),
    }
}

/// Combinatorial route: Σ_k Γ(αq+k+1) q^{-(αq+k+1)} A_k with A the
/// expansion coefficients of [L̃_n^(α)]^{2q}. Factoring Γ(αq+k+1) as
/// Γ(αq+1)(αq+1)_k leaves an exactly rational alternating sum (α enters as
/// the dyadic rational the caller passed) and a positive log-space
/// prefactor.
fn laguerre_entropic_moment_bell(n: usize, alpha: f64, q: usize) -> Result<f64> {
    let (ln_sum, sign) = super::exact::laguerre_wq_rational(n, alpha, q);
    if sign <= 0.0 {
        return Err(QcxError::InvalidArgument(format!(
            "combinatorial sum for W_{q}[L̃_{n}^({alpha})] is not positive"
        )));
    }
    let nf = n as f64;
    let qf = q as f64;
    // W = Σ · Γ(αq+1) q^{-(αq+1)} / (Γ(n+α+1)^q n!^q)
    let ln_w = ln_sum + ln_gamma_unchecked(alpha * qf + 1.0)
        - (alpha * qf + 1.0) * qf.ln()
        - qf * ln_gamma_unchecked(nf + alpha + 1.0)
        - qf * ln_gamma_unchecked(nf + 1.0);
    Ok(ln_w.exp())
}

/// Lauricella route: W_q = [n!/Γ(α+n+1)]^q q^{-αq-1} Θ_0, where Θ_0
/// collapses to 2q terminating nested sums because its last numerator
/// parameter vanishes, pinning the final index to zero. The nested sums and
/// the binomial power are exact rationals; gamma prefactors are log-space.
fn laguerre_entropic_moment_lauricella(n: usize, alpha: f64, q: usize) -> Result<f64> {
    let (ln_sum, sign) = super::exact::laguerre_wq_lauricella_rational(n, alpha, q);
    if sign <= 0.0 {
        return Err(QcxError::InvalidArgument(format!(
            "Lauricella sum for W_{q}[L̃_{n}^({alpha})] is not positive"
        )));
    }
    let nf = n as f64;
    let qf = q as f64;
    let ln_w = ln_sum
        + qf * (ln_gamma_unchecked(nf + 1.0) - ln_gamma_unchecked(nf + alpha + 1.0))
        - (alpha * qf + 1.0) * qf.ln()
        + ln_gamma_unchecked(alpha * qf + 1.0);
    Ok(ln_w.exp())
}

/// Rényi length W_q^{-1/(q-1)}, integer q ≥ 2 on the Bell route.
pub fn laguerre_renyi_length(n: usize, alpha: f64, q: usize) -> Result<f64> {
    if q < 2 {
        return Err(QcxError::InvalidArgument(
            "Rényi length needs q >= 2 on the combinatorial route".into(),
        ));
    }
    let wq = laguerre_entropic_moment(n, alpha, q as f64, Method::Bell)?;
    Ok(wq.powf(-1.0 / (q as f64 - 1.0)))
}

/// Shannon length with its decomposition S = E_n + J_n:
/// J_n = 2n + α + 1 - α ψ(α+n+1) is closed-form, E_n comes from zero-split
/// quadrature. Returns (N, E_n, J_n).
pub fn laguerre_shannon_length(
    n: usize,
    alpha: f64,
    config: &QuadConfig,
) -> Result<(f64, f64, f64)> {
    check_alpha(alpha)?;
    let spec = OrthoPolySpec::laguerre(n, alpha)?;
    let e_part = -entropic_integral_e(&spec, 0, config)?;
    let nf = n as f64;
    let j_part = 2.0 * nf + alpha + 1.0 - alpha * digamma_unchecked(alpha + nf + 1.0);
    let s = e_part + j_part;
    Ok((s.exp(), e_part, j_part))
}

/// Large-n Shannon length asymptotic 2π n^{α+1} e^{-αψ(α+n+1)-1}.
pub fn laguerre_shannon_asymptotic(n: usize, alpha: f64) -> f64 {
    2.0 * std::f64::consts::PI
        * (n as f64).powf(alpha + 1.0)
        * (-alpha * digamma_unchecked(alpha + n as f64 + 1.0) - 1.0).exp()
}

/// ⟨ln x⟩ of the Rakhmanov density by quadrature (no closed form is used).
pub(crate) fn laguerre_log_moment(n: usize, alpha: f64, config: &QuadConfig) -> Result<f64> {
    let spec = OrthoPolySpec::laguerre(n, alpha)?;
    let zeros = poly_zeros(&spec)?;
    let d = rakhmanov_density(n, alpha)?;
    let f = move |x: f64| {
        if x <= 0.0 {
            return 0.0;
        }
        let (ln_p, s) = eval_poly_ln(&spec, x).expect("validated spec");
        if s == 0.0 {
            return 0.0;
        }
        (2.0 * ln_p + alpha * x.ln() - x).exp() * x.ln()
    };
    let win = density_window(&d, config)?;
    integrate_window(&f, &win, &zeros, config, "Laguerre log moment")
}

/// Variational bound on the Shannon length from the prior x^m e^{-a x^b}
/// with β = (1+m)/b. The m ≠ 0 member needs ⟨ln x⟩, computed by quadrature.
pub fn laguerre_shannon_bound(
    n: usize,
    alpha: f64,
    b: f64,
    m: f64,
    config: &QuadConfig,
) -> Result<f64> {
    check_alpha(alpha)?;
    if !(b > 0.0) || !(m > -1.0) {
        return Err(QcxError::InvalidArgument(format!(
            "bound needs b > 0 and m > -1, got (b, m) = ({b}, {m})"
        )));
    }
    let log_moment = if m == 0.0 {
        0.0
    } else {
        laguerre_log_moment(n, alpha, config)?
    };
    let xb = moment_real_power(n, alpha, b, config)?;
    Ok(bound_value(b, m, xb, log_moment))
}

fn bound_value(b: f64, m: f64, xb: f64, log_moment: f64) -> f64 {
    let beta = (1.0 + m) / b;
    (ln_gamma_unchecked(beta) + beta + beta * xb.ln() - beta * beta.ln() - b.ln()
        - m * log_moment)
        .exp()
}

fn moment_real_power(n: usize, alpha: f64, b: f64, config: &QuadConfig) -> Result<f64> {
    if b.fract() == 0.0 && b >= 0.0 && b <= u32::MAX as f64 {
        laguerre_moment(n, alpha, b as u32)
    } else {
        let spec = OrthoPolySpec::laguerre(n, alpha)?;
        let zeros = poly_zeros(&spec)?;
        let d = rakhmanov_density(n, alpha)?;
        let f = move |x: f64| {
            if x <= 0.0 {
                return 0.0;
            }
            let (ln_p, s) = eval_poly_ln(&spec, x).expect("validated spec");
            if s == 0.0 {
                return 0.0;
            }
            (2.0 * ln_p + alpha * x.ln() - x + b * x.ln()).exp()
        };
        let win = density_window(&d, config)?;
        integrate_window(&f, &win, &zeros, config, "Laguerre power moment")
    }
}

/// Best m = 0 bound over integer b ∈ [1, 40]; reproduces the b_opt tables.
pub fn laguerre_shannon_bound_opt_m0(
    n: usize,
    alpha: f64,
    config: &QuadConfig,
) -> Result<(u32, f64)> {
    let mut best: Option<(u32, f64)> = None;
    for b in 1..=40u32 {
        let v = laguerre_shannon_bound(n, alpha, b as f64, 0.0, config)?;
        if best.map_or(true, |(_, bv)| v < bv) {
            best = Some((b, v));
        }
    }
    Ok(best.expect("non-empty search grid"))
}

/// Best (b, m) bound: integer b ∈ [1, 40], m on the grid [-0.9, 6] with
/// step 0.001 refined by golden section. Returns ((b, m), bound).
pub fn laguerre_shannon_bound_opt(
    n: usize,
    alpha: f64,
    config: &QuadConfig,
) -> Result<((u32, f64), f64)> {
    let log_moment = laguerre_log_moment(n, alpha, config)?;
    let mut best: Option<((u32, f64), f64)> = None;
    for b in 1..=40u32 {
        let bf = b as f64;
        let xb = moment_real_power(n, alpha, bf, config)?;
        let eval = |m: f64| bound_value(bf, m, xb, log_moment);

        // coarse grid
        let mut gm = -0.9;
        let mut gv = eval(gm);
        let steps = ((6.0_f64 - (-0.9)) / 0.001).round() as usize;
        for i in 1..=steps {
            let m = -0.9 + 0.001 * i as f64;
            let v = eval(m);
            if v < gv {
                gv = v;
                gm = m;
            }
        }
        // golden refinement around the winning grid point
        let (lo, hi) = ((gm - 0.001).max(-0.9), (gm + 0.001).min(6.0));
        let (m_ref, v_neg) = crate::quadrature::golden_max(&|m| -eval(m), lo, hi);
        let (m_fin, v_fin) = if -v_neg < gv { (m_ref, -v_neg) } else { (gm, gv) };
        if best.map_or(true, |(_, bv)| v_fin < bv) {
            best = Some(((b, m_fin), v_fin));
        }
    }
    Ok(best.expect("non-empty search grid"))
}

/// Full spreading report of L̃_n^(α).
pub fn laguerre_report(
    n: usize,
    alpha: f64,
    q_list: &[u32],
    config: &QuadConfig,
) -> Result<SpreadingReport> {
    let moments: Vec<(u32, f64)> = (0..=4u32)
        .map(|k| laguerre_moment(n, alpha, k).map(|v| (k, v)))
        .collect::<Result<_>>()?;
    let std_dev = laguerre_stddev(n, alpha)?;

    let mut entropic = Vec::with_capacity(q_list.len());
    let mut renyi = Vec::with_capacity(q_list.len());
    let mut entropic_method = Method::Bell;
    for &q in q_list {
        let (wq, m) = if n * q as usize <= BELL_CAP {
            (
                laguerre_entropic_moment_cfg(n, alpha, q as f64, Method::Bell, config)?,
                Method::Bell,
            )
        } else {
            (
                laguerre_entropic_moment_cfg(n, alpha, q as f64, Method::Quadrature, config)?,
                Method::Quadrature,
            )
        };
        entropic_method = m;
        entropic.push((q, wq));
        if q >= 2 {
            renyi.push((q, wq.powf(-1.0 / (q as f64 - 1.0))));
        }
    }

    let (shannon_length, e_part, j_part) = laguerre_shannon_length(n, alpha, config)?;
    let ((b_opt, m_opt), bound) = laguerre_shannon_bound_opt(n, alpha, config)?;
    let (fisher_info, fisher_length) = laguerre_fisher(n, alpha)?;

    Ok(SpreadingReport {
        family: PolyFamily::Laguerre { alpha },
        degree: n,
        moments,
        std_dev,
        entropic_moments: entropic,
        entropic_method,
        renyi_lengths: renyi,
        shannon_entropy: e_part + j_part,
        shannon_length,
        shannon_asymptotic: laguerre_shannon_asymptotic(n, alpha),
        shannon_bounds: vec![(
            BoundParams::LaguerreBM {
                b: b_opt as f64,
                m: m_opt,
            },
            bound,
        )],
        fisher_info,
        fisher_length,
    })
}

/// Direct quadrature measures of the Rakhmanov density (the generic
/// engine's view of the same density; Onicescu and entropy cross-checks).
pub fn laguerre_density_measures(
    n: usize,
    alpha: f64,
    q_list: &[f64],
    config: &QuadConfig,
) -> Result<crate::quadrature::MeasureSet> {
    density_measures(&rakhmanov_density(n, alpha)?, q_list, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn moment_examples() {
        // n = 0: Γ(k+α+1)/Γ(α+1); (α=0, k=1) -> 1
        assert_relative_eq!(laguerre_moment(0, 0.0, 1).unwrap(), 1.0, max_relative = 1e-13);
        assert_relative_eq!(laguerre_moment(5, 2.5, 0).unwrap(), 1.0, max_relative = 1e-13);
        // n=1, α=0, k=1 -> 3 (quadrature oracle value of ∫x(1-x)²e^{-x})
        assert_relative_eq!(laguerre_moment(1, 0.0, 1).unwrap(), 3.0, max_relative = 1e-13);
        assert!(laguerre_moment(1, -1.0, 1).is_err());
    }

    #[test]
    fn stddev_values() {
        assert_relative_eq!(laguerre_stddev(0, 0.0).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(
            laguerre_stddev(1, 0.0).unwrap(),
            5.0_f64.sqrt(),
            max_relative = 1e-14
        );
        // Gamma(6) variance oracle: shape 6 exponential has variance 6
        assert_relative_eq!(
            laguerre_stddev(0, 5.0).unwrap(),
            6.0_f64.sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn fisher_case_table() {
        let (f, dx) = laguerre_fisher(0, 0.0).unwrap();
        assert_eq!(f, FisherInfo::Finite(1.0));
        assert_relative_eq!(dx, 1.0, max_relative = 1e-14);
        let (f, dx) = laguerre_fisher(0, 2.0).unwrap();
        assert_eq!(f, FisherInfo::Finite(1.0));
        assert_relative_eq!(dx, 1.0, max_relative = 1e-14);
        let (f, dx) = laguerre_fisher(3, 0.5).unwrap();
        assert_eq!(f, FisherInfo::Divergent);
        assert_eq!(dx, 0.0);
        let (f, _) = laguerre_fisher(3, 1.0).unwrap();
        assert_eq!(f, FisherInfo::Divergent);
    }

    #[test]
    fn entropic_moment_closed_form_n0() {
        // W_q[ρ_{0,α}] = Γ(αq+1)/(Γ(α+1)^q q^{αq+1})
        for &alpha in &[0.0, 1.0, 5.0] {
            for q in 2..=3usize {
                let qf = q as f64;
                let expect = (ln_gamma_unchecked(alpha * qf + 1.0)
                    - qf * ln_gamma_unchecked(alpha + 1.0)
                    - (alpha * qf + 1.0) * qf.ln())
                .exp();
                for method in [Method::Bell, Method::Lauricella] {
                    let w = laguerre_entropic_moment(0, alpha, qf, method).unwrap();
                    assert_relative_eq!(w, expect, max_relative = 1e-11);
                }
            }
        }
        // (α=0, q=2) -> 1/2
        assert_relative_eq!(
            laguerre_entropic_moment(0, 0.0, 2.0, Method::Bell).unwrap(),
            0.5,
            max_relative = 1e-12
        );
    }

    #[test]
    fn three_routes_agree() {
        for n in 0..=3usize {
            for &alpha in &[0.0, 1.0, 5.0] {
                for q in 2..=3usize {
                    let bell =
                        laguerre_entropic_moment(n, alpha, q as f64, Method::Bell).unwrap();
                    let laur =
                        laguerre_entropic_moment(n, alpha, q as f64, Method::Lauricella).unwrap();
                    let quad =
                        laguerre_entropic_moment(n, alpha, q as f64, Method::Quadrature).unwrap();
                    assert_abs_diff_eq!(bell, laur, epsilon = 1e-9 * bell.max(1.0));
                    assert_abs_diff_eq!(bell, quad, epsilon = 1e-9 * bell.max(1.0));
                }
            }
        }
    }

    #[test]
    fn route_caps() {
        match laguerre_entropic_moment(4, 0.0, 3.0, Method::Lauricella) {
            Err(QcxError::MethodCap(_)) => {}
            other => panic!("expected MethodCap, got {other:?}"),
        }
        match laguerre_entropic_moment(31, 0.0, 2.0, Method::Bell) {
            Err(QcxError::MethodCap(_)) => {}
            other => panic!("expected MethodCap, got {other:?}"),
        }
    }

    #[test]
    fn renyi_lengths() {
        // (0, 0, 2): reciprocal of W_2 = 1/2
        assert_relative_eq!(
            laguerre_renyi_length(0, 0.0, 2).unwrap(),
            2.0,
            max_relative = 1e-12
        );
        // Onicescu value from the measure engine
        let m = laguerre_density_measures(2, 1.0, &[2.0], &cfg()).unwrap();
        let l2 = laguerre_renyi_length(2, 1.0, 2).unwrap();
        assert_abs_diff_eq!(l2, 1.0 / m.disequilibrium, epsilon = 1e-8 * l2);
    }

    #[test]
    fn shannon_decomposition() {
        // (0, 0): S = 1, N = e
        let (n_len, e, j) = laguerre_shannon_length(0, 0.0, &cfg()).unwrap();
        assert_relative_eq!(n_len, std::f64::consts::E, max_relative = 1e-9);
        assert_abs_diff_eq!(e, 0.0, epsilon = 1e-9);
        assert_relative_eq!(j, 1.0, max_relative = 1e-12);
        // (0, 5): J = 6 - 5ψ(6)
        let (_, _, j) = laguerre_shannon_length(0, 5.0, &cfg()).unwrap();
        assert_relative_eq!(
            j,
            6.0 - 5.0 * digamma_unchecked(6.0),
            max_relative = 1e-12
        );
        // decomposition matches the direct measure-engine entropy
        for (n, alpha) in [(2usize, 0.0), (4, 1.0), (3, 5.0)] {
            let (_, e, j) = laguerre_shannon_length(n, alpha, &cfg()).unwrap();
            let direct = laguerre_density_measures(n, alpha, &[], &cfg()).unwrap();
            assert_abs_diff_eq!(e + j, direct.shannon, epsilon = 1e-7);
        }
    }

    #[test]
    fn bound_saturation_at_n0() {
        // n=0, α=0, (b,m) = (1,0): bound = e = N exactly
        let b = laguerre_shannon_bound(0, 0.0, 1.0, 0.0, &cfg()).unwrap();
        assert_relative_eq!(b, std::f64::consts::E, max_relative = 1e-12);
        // n=0, α=5: saturating pair is (b, m) = (1, 5)
        let ((b_opt, m_opt), bound) = laguerre_shannon_bound_opt(0, 5.0, &cfg()).unwrap();
        assert_eq!(b_opt, 1);
        assert_abs_diff_eq!(m_opt, 5.0, epsilon = 0.005);
        let (n_len, _, _) = laguerre_shannon_length(0, 5.0, &cfg()).unwrap();
        assert_relative_eq!(bound, n_len, max_relative = 1e-6);
        assert!(laguerre_shannon_bound(1, 0.0, 0.0, 0.0, &cfg()).is_err());
        assert!(laguerre_shannon_bound(1, 0.0, 2.0, -1.0, &cfg()).is_err());
    }
}
