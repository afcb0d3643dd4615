//! Entropic integrals E_i of orthonormal polynomials.
//!
//! E_i(ỹ_n) = ∫ x^i ω(x) ỹ_n²(x) ln ỹ_n²(x) dx in the sign-free
//! convention; the entropy decompositions that consume these integrals fix
//! the sign against direct quadrature of -∫ρ ln ρ (they subtract them).

use super::density::{truncate_envelope, TailDecay};
use super::{integrate_split, Interval, QuadConfig};
use crate::error::{QcxError, Result};
use crate::specfun::{eval_poly_ln, poly_zeros, Normalization, OrthoPolySpec, PolyFamily};

fn family_support(family: PolyFamily) -> (Interval, TailDecay) {
    match family {
        PolyFamily::Hermite => (Interval::FullLine, TailDecay::Gaussian),
        PolyFamily::Laguerre { .. } => (Interval::HalfInfinite(0.0), TailDecay::Exponential),
        PolyFamily::Gegenbauer { .. } => (Interval::Finite(-1.0, 1.0), TailDecay::Rational),
    }
}

fn check_spec(spec: &OrthoPolySpec, weight_power: u8) -> Result<()> {
    if spec.normalization != Normalization::Orthonormal {
        return Err(QcxError::InvalidArgument(
            "entropic integrals are defined for orthonormal polynomials".into(),
        ));
    }
    match (weight_power, spec.family) {
        (0, _) => Ok(()),
        (1, PolyFamily::Laguerre { .. }) => Ok(()),
        (1, _) => Err(QcxError::InvalidArgument(
            "weight power 1 is only defined for the Laguerre family".into(),
        )),
        _ => Err(QcxError::InvalidArgument(
            "weight power must be 0 or 1".into(),
        )),
    }
}

fn integrand(spec: &OrthoPolySpec, weight_power: u8, x: f64) -> f64 {
    let (ln_p, sign) = eval_poly_ln(spec, x).expect("spec validated");
    if sign == 0.0 {
        return 0.0; // the ρ ln ρ limit at an exact polynomial zero
    }
    let ln_w = spec.ln_weight(x);
    if ln_w == f64::NEG_INFINITY {
        return 0.0;
    }
    let mut ln_env = ln_w + 2.0 * ln_p;
    if weight_power == 1 {
        if x <= 0.0 {
            return 0.0;
        }
        ln_env += x.ln();
    }
    ln_env.exp() * (2.0 * ln_p)
}

/// Weighted envelope |x|^i ω(x) ỹ² used for tail truncation.
fn envelope(spec: &OrthoPolySpec, weight_power: u8, x: f64) -> f64 {
    let (ln_p, sign) = eval_poly_ln(spec, x).expect("spec validated");
    if sign == 0.0 {
        return 0.0;
    }
    let ln_w = spec.ln_weight(x);
    if ln_w == f64::NEG_INFINITY {
        return 0.0;
    }
    let mut ln_env = ln_w + 2.0 * ln_p;
    if weight_power == 1 {
        if x == 0.0 {
            return 0.0;
        }
        ln_env += x.abs().ln();
    }
    ln_env.exp()
}

/// E_i of an orthonormal polynomial, split at its real zeros.
pub fn entropic_integral_e(
    spec: &OrthoPolySpec,
    weight_power: u8,
    config: &QuadConfig,
) -> Result<f64> {
    check_spec(spec, weight_power)?;
    let config = config.validated()?;
    let zeros = poly_zeros(spec)?;
    let (support, decay) = family_support(spec.family);
    let win = truncate_envelope(
        &|x| envelope(spec, weight_power, x),
        support,
        &zeros,
        decay,
        config.tail_cutoff_ratio,
        "entropic integral",
    )?;
    let f = |x: f64| integrand(spec, weight_power, x);
    let (value, _) = integrate_split(
        &f,
        win.lo,
        win.hi,
        &zeros,
        &config,
        "entropic integral E",
    )?;
    Ok(value)
}

/// Same integral by plain adaptive bisection with no knowledge of the
/// polynomial zeros. Exists as the independent second route; the two
/// strategies must agree to 1e-8.
pub fn entropic_integral_e_uniform(
    spec: &OrthoPolySpec,
    weight_power: u8,
    config: &QuadConfig,
) -> Result<f64> {
    check_spec(spec, weight_power)?;
    let config = config.validated()?;
    let zeros = poly_zeros(spec)?;
    let (support, decay) = family_support(spec.family);
    let win = truncate_envelope(
        &|x| envelope(spec, weight_power, x),
        support,
        &zeros,
        decay,
        config.tail_cutoff_ratio,
        "entropic integral",
    )?;
    let f = |x: f64| integrand(spec, weight_power, x);
    let (value, _) = integrate_split(&f, win.lo, win.hi, &[], &config, "entropic integral E")?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::OrthoPolySpec;
    use approx::assert_abs_diff_eq;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn degree_zero_gegenbauer() {
        // C̃_0^(1/2) = 1/√2 on [-1,1]: E_0 = ∫ (1/2) ln(1/2) = ln(1/2)
        let spec = OrthoPolySpec::gegenbauer(0, 0.5).unwrap();
        let e0 = entropic_integral_e(&spec, 0, &cfg()).unwrap();
        assert_abs_diff_eq!(e0, 0.5_f64.ln(), epsilon = 1e-9);
    }

    #[test]
    fn degree_zero_laguerre_e1() {
        // L̃_0^(0) = 1: ln ỹ² = 0 so E_1 = 0
        let spec = OrthoPolySpec::laguerre(0, 0.0).unwrap();
        let e1 = entropic_integral_e(&spec, 1, &cfg()).unwrap();
        assert_abs_diff_eq!(e1, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn weight_power_one_rejected_outside_laguerre() {
        let spec = OrthoPolySpec::hermite(2).unwrap();
        assert!(entropic_integral_e(&spec, 1, &cfg()).is_err());
    }

    #[test]
    fn classical_normalization_rejected() {
        let spec = OrthoPolySpec::new(
            crate::specfun::PolyFamily::Hermite,
            2,
            crate::specfun::Normalization::Classical,
        )
        .unwrap();
        assert!(entropic_integral_e(&spec, 0, &cfg()).is_err());
    }

    #[test]
    fn strategies_agree() {
        // zero-split GL panels vs uniform adaptive bisection, all families;
        // 1e-8 *absolute* agreement on E_1 values of order 10² needs a
        // correspondingly tight relative tolerance on both routes.
        let tight = QuadConfig {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            ..QuadConfig::default()
        };
        for n in [0usize, 1, 3, 7, 12, 20] {
            let h = OrthoPolySpec::hermite(n).unwrap();
            let a = entropic_integral_e(&h, 0, &tight).unwrap();
            let b = entropic_integral_e_uniform(&h, 0, &tight).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-8);

            let l = OrthoPolySpec::laguerre(n, 1.0).unwrap();
            let a = entropic_integral_e(&l, 1, &tight).unwrap();
            let b = entropic_integral_e_uniform(&l, 1, &tight).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-8);

            let g = OrthoPolySpec::gegenbauer(n, 1.5).unwrap();
            let a = entropic_integral_e(&g, 0, &tight).unwrap();
            let b = entropic_integral_e_uniform(&g, 0, &tight).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-8);
        }
    }

    #[test]
    fn assembled_ground_state_shannon() {
        // 3D hydrogenic ground state, Z = 1: the decomposition built from
        // E_1(L̃_0^(1)) and E_0(C̃_0^(1/2)) must give S = 3 + ln π.
        let e1 = entropic_integral_e(&OrthoPolySpec::laguerre(0, 1.0).unwrap(), 1, &cfg()).unwrap();
        let e0 =
            entropic_integral_e(&OrthoPolySpec::gegenbauer(0, 0.5).unwrap(), 0, &cfg()).unwrap();
        // A(1,0,0) = ln(π/2) + 3; E-terms enter with a minus sign.
        let a = (std::f64::consts::PI / 2.0).ln() + 3.0;
        let s = a - 0.5 * e1 - e0;
        assert_abs_diff_eq!(s, 3.0 + std::f64::consts::PI.ln(), epsilon = 1e-8);
    }
}
