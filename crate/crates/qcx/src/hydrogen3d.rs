//! Measures and complexities of 3D hydrogenic orbitals (n, l, m, Z):
//! closed forms for energy, variance, Fisher information, ⟨r⟩ and the
//! disequilibrium, the decomposed Shannon entropy, the three composite
//! complexities and their variational upper bounds. Every closed form has a
//! quadrature cross-check in the test suite.

use crate::error::{QcxError, Result};
use crate::quadrature::{entropic_integral_e, integrate, Interval, QuadConfig};
use crate::specfun::{
    digamma_unchecked, eval_poly_with_deriv, ln_gamma_unchecked, wigner3j, OrthoPolySpec,
    Wigner3jArgs,
};

/// Quantum numbers and nuclear charge of a bound hydrogenic state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orbital3D {
    pub z: f64,
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

impl Orbital3D {
    pub fn new(z: f64, n: u32, l: u32, m: i32) -> Result<Self> {
        if !(z > 0.0) {
            return Err(QcxError::InvalidArgument(format!(
                "nuclear charge must be positive, got {z}"
            )));
        }
        if n < 1 || l > n - 1 || m.unsigned_abs() > l {
            return Err(QcxError::InvalidArgument(format!(
                "invalid quantum numbers (n, l, m) = ({n}, {l}, {m})"
            )));
        }
        Ok(Self { z, n, l, m })
    }

    fn radial_degree(&self) -> usize {
        (self.n - 1 - self.l) as usize
    }

    fn m_abs(&self) -> u32 {
        self.m.unsigned_abs()
    }

    /// Orthonormal Laguerre factor L̃_{n-l-1}^(2l+1) of the radial function.
    fn laguerre_spec(&self) -> OrthoPolySpec {
        OrthoPolySpec::laguerre(self.radial_degree(), 2.0 * self.l as f64 + 1.0)
            .expect("valid orbital implies valid spec")
    }

    /// Orthonormal Gegenbauer factor C̃_{l-|m|}^(|m|+1/2) of the harmonic.
    fn gegenbauer_spec(&self) -> OrthoPolySpec {
        OrthoPolySpec::gegenbauer((self.l - self.m_abs()) as usize, self.m_abs() as f64 + 0.5)
            .expect("valid orbital implies valid spec")
    }

    /// Energy eigenvalue -Z²/(2n²).
    pub fn energy(&self) -> f64 {
        -self.z * self.z / (2.0 * (self.n * self.n) as f64)
    }

    /// Squared radial wavefunction R²_{n,l}(r).
    pub fn radial_sq(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let n = self.n as f64;
        let rt = 2.0 * self.z * r / n; // r̃ = 2Zr/n
        let alpha = 2.0 * self.l as f64 + 1.0;
        let (p, _) = eval_poly_with_deriv(&self.laguerre_spec(), rt).expect("valid spec");
        let w_over_rt = ((alpha - 1.0) * rt.ln() - rt).exp(); // ω_{2l+1}(r̃)/r̃
        (4.0 * self.z.powi(3) / n.powi(4)) * w_over_rt * p * p
    }

    /// Radial probability density D_{n,l}(r) = R² r², normalized to 1 in r.
    pub fn radial_density(&self, r: f64) -> f64 {
        self.radial_sq(r) * r * r
    }

    /// |Y_{l,m}(θ, ·)|² (φ-independent).
    pub fn angular_sq(&self, theta: f64) -> f64 {
        let ct = theta.cos();
        let st = theta.sin().abs();
        let (p, _) = eval_poly_with_deriv(&self.gegenbauer_spec(), ct).expect("valid spec");
        let ma = self.m_abs() as i32;
        p * p * st.powi(2 * ma) / (2.0 * std::f64::consts::PI)
    }

    /// Angular probability density Θ_{l,m}(θ) = |Y|² sin θ, normalized so
    /// that ∫ Θ dθ dφ = 1 with the azimuthal 2π factor.
    pub fn angular_density(&self, theta: f64) -> f64 {
        self.angular_sq(theta) * theta.sin()
    }

    /// Full position density ρ(r, θ) = R²(r) |Y(θ)|².
    pub fn density(&self, r: f64, theta: f64) -> f64 {
        self.radial_sq(r) * self.angular_sq(theta)
    }

    /// Variance V = [n²(n²+2) - l²(l+1)²]/(4Z²).
    pub fn variance(&self) -> f64 {
        let n2 = (self.n * self.n) as f64;
        let l = self.l as f64;
        (n2 * (n2 + 2.0) - l * l * (l + 1.0) * (l + 1.0)) / (4.0 * self.z * self.z)
    }

    /// Fisher information I = (4Z²/n³)(n - |m|); l-independent.
    pub fn fisher(&self) -> f64 {
        let n = self.n as f64;
        4.0 * self.z * self.z / n.powi(3) * (n - self.m_abs() as f64)
    }

    /// Radial expectation value ⟨r⟩ = [3n² - l(l+1)]/(2Z).
    pub fn r_expectation(&self) -> f64 {
        let n = self.n as f64;
        let l = self.l as f64;
        (3.0 * n * n - l * (l + 1.0)) / (2.0 * self.z)
    }

    /// Disequilibrium ⟨ρ⟩ = Z³ D(n,l,m), returned as
    /// (total, radial part, angular part); gamma products in log space.
    pub fn disequilibrium(&self) -> (f64, f64, f64) {
        let radial = self.z.powi(3) * self.diseq_radial_scaled();
        let angular = self.diseq_angular();
        (radial * angular, radial, angular)
    }

    /// ⟨ρ⟩_R / Z³ = 2^{2-4n}/n⁵ Σ_k C(2n_r-2k, n_r-k)² (2k)!/(k!)²
    /// Γ(4l+2k+3)/Γ²(2l+k+2).
    fn diseq_radial_scaled(&self) -> f64 {
        let n = self.n as f64;
        let l = self.l as f64;
        let nr = self.radial_degree();
        let ln_pref = (2.0 - 4.0 * n) * std::f64::consts::LN_2 - 5.0 * n.ln();
        let mut sum = 0.0;
        for k in 0..=nr {
            let kf = k as f64;
            let ln_binom = ln_gamma_unchecked(2.0 * (nr - k) as f64 + 1.0)
                - 2.0 * ln_gamma_unchecked((nr - k) as f64 + 1.0);
            let ln_fac = ln_gamma_unchecked(2.0 * kf + 1.0) - 2.0 * ln_gamma_unchecked(kf + 1.0);
            let ln_gammas = ln_gamma_unchecked(4.0 * l + 2.0 * kf + 3.0)
                - 2.0 * ln_gamma_unchecked(2.0 * l + kf + 2.0);
            sum += (ln_pref + 2.0 * ln_binom + ln_fac + ln_gammas).exp();
        }
        sum
    }

    /// ⟨ρ⟩_Y = Σ_{l' even} (2l+1)²(2l'+1)/(4π) 3j(l,l,l';0,0,0)²
    /// 3j(l,l,l';m,m,-2m)²; odd l' vanish and are skipped.
    fn diseq_angular(&self) -> f64 {
        let l = self.l;
        let m = self.m;
        let hat2 = (2.0 * l as f64 + 1.0).powi(2) / (4.0 * std::f64::consts::PI);
        let mut sum = 0.0;
        for lp in (0..=2 * l).step_by(2) {
            let w0 = wigner3j(Wigner3jArgs::new(l, l, lp, 0, 0, 0));
            let wm = wigner3j(Wigner3jArgs::new(l, l, lp, m, m, -2 * m));
            sum += hat2 * (2.0 * lp as f64 + 1.0) * w0 * w0 * wm * wm;
        }
        sum
    }

    /// Shannon entropy decomposition (S, S_R, S_Y): digamma constants plus
    /// the entropic E-integrals of the Laguerre and Gegenbauer factors. The
    /// sign-free integrals enter with a minus, the convention fixed against
    /// direct quadrature of -∫ρ ln ρ.
    pub fn shannon(&self, config: &QuadConfig) -> Result<(f64, f64, f64)> {
        let n = self.n as f64;
        let e1 = entropic_integral_e(&self.laguerre_spec(), 1, config)?;
        let e0 = entropic_integral_e(&self.gegenbauer_spec(), 0, config)?;
        let s_r = self.a1_constant() - e1 / (2.0 * n) - 3.0 * self.z.ln();
        let s_y = self.a2_constant() - e0;
        Ok((s_r + s_y, s_r, s_y))
    }

    /// A_1(n,l) = ln(n⁴/4) + [3n² - l(l+1)]/n - 2l[(2n-2l-1)/(2n) + ψ(n+l+1)].
    fn a1_constant(&self) -> f64 {
        let n = self.n as f64;
        let l = self.l as f64;
        (n.powi(4) / 4.0).ln() + (3.0 * n * n - l * (l + 1.0)) / n
            - 2.0 * l * ((2.0 * n - 2.0 * l - 1.0) / (2.0 * n) + digamma_unchecked(n + l + 1.0))
    }

    /// A_2(l,m) = ln(2^{2|m|+1} π) - 2|m|[ψ(l+|m|+1) - ψ(l+1/2) - 1/(2l+1)].
    fn a2_constant(&self) -> f64 {
        let l = self.l as f64;
        let ma = self.m_abs() as f64;
        (2.0 * ma + 1.0) * std::f64::consts::LN_2 + std::f64::consts::PI.ln()
            - 2.0 * ma
                * (digamma_unchecked(l + ma + 1.0)
                    - digamma_unchecked(l + 0.5)
                    - 1.0 / (2.0 * l + 1.0))
    }

    /// C_CR = I·V = (n-|m|)/n³ [n²(n²+2) - l²(l+1)²], explicit in the
    /// quantum numbers.
    pub fn cramer_rao(&self) -> f64 {
        self.fisher() * self.variance()
    }

    /// Composite complexities (C_CR, C_FS, C_SC); all three Z-invariant.
    pub fn complexities(&self, config: &QuadConfig) -> Result<(f64, f64, f64)> {
        let c_cr = self.cramer_rao();
        let (s, _, _) = self.shannon(config)?;
        let j = (2.0 * s / 3.0).exp() / (2.0 * std::f64::consts::PI * std::f64::consts::E);
        let c_fs = self.fisher() * j;
        let (diseq, _, _) = self.disequilibrium();
        let c_sc = diseq * s.exp();
        Ok((c_cr, c_fs, c_sc))
    }

    /// Upper bounds and accuracy ratios (B_FS, B_SC, ξ_FS, ξ_SC); both
    /// bounds saturate at the ground state.
    pub fn complexity_bounds(&self, config: &QuadConfig) -> Result<(f64, f64, f64, f64)> {
        let n = self.n as f64;
        let l = self.l as f64;
        let poly = 3.0 * n * n - l * (l + 1.0);
        let e = std::f64::consts::E;
        let pi = std::f64::consts::PI;
        let b_fs = 2.0 * e / (9.0 * pi.powf(1.0 / 3.0)) * (n - self.m_abs() as f64) / n.powi(3)
            * poly
            * poly;
        let d = self.disequilibrium().0 / self.z.powi(3);
        let b_sc = pi * e.powi(3) / 27.0 * poly.powi(3) * d;
        let (_, c_fs, c_sc) = self.complexities(config)?;
        Ok((b_fs, b_sc, (b_fs - c_fs) / c_fs, (b_sc - c_sc) / c_sc))
    }

    /// Direct quadrature of -∫ρ ln ρ d³r as an iterated (r, θ) integral,
    /// radial inner part in the Z-independent scaled radius; the oracle for
    /// the decomposition.
    pub fn shannon_direct(&self, config: &QuadConfig) -> Result<f64> {
        let orb = *self;
        let scale = orb.n as f64 / (2.0 * orb.z); // r = scale · r̃
        let inner_cfg = QuadConfig {
            abs_tol: config.abs_tol * 1e-2,
            rel_tol: config.rel_tol * 1e-2,
            ..*config
        };
        let outer = |theta: f64| -> f64 {
            let g = orb.angular_sq(theta);
            if g <= 0.0 {
                return 0.0;
            }
            let inner = integrate(
                |rt: f64| {
                    let r = scale * rt;
                    let f = orb.radial_sq(r);
                    if f <= 0.0 {
                        return 0.0;
                    }
                    let rho = f * g;
                    -rho * rho.ln() * r * r * scale
                },
                Interval::HalfInfinite(0.0),
                &inner_cfg,
            )
            .expect("inner radial integral");
            inner.0 * theta.sin() * 2.0 * std::f64::consts::PI
        };
        let (s, _) = integrate(outer, Interval::Finite(0.0, std::f64::consts::PI), config)?;
        Ok(s)
    }

    /// Fisher information by quadrature of |∇ρ|²/ρ over the axially
    /// symmetric density (azimuthal factor 2π): the exact radial/angular
    /// separation of the 2D integral, each factor one adaptive integral.
    pub fn fisher_quadrature(&self, config: &QuadConfig) -> Result<f64> {
        let orb = *self;
        let scale = orb.n as f64 / (2.0 * orb.z);
        let h_r = 1e-6 * scale;
        let radial = integrate(
            |r: f64| {
                let f = orb.radial_sq(r);
                if f <= 0.0 {
                    return 0.0;
                }
                let df = (orb.radial_sq(r + h_r) - orb.radial_sq(r - h_r)) / (2.0 * h_r);
                df * df / f * r * r
            },
            Interval::HalfInfinite(0.0),
            config,
        )?
        .0;
        let inv_r2 = integrate(
            |r: f64| orb.radial_sq(r),
            Interval::HalfInfinite(0.0),
            config,
        )?
        .0;
        let h_t = 1e-7;
        let angular = integrate(
            |theta: f64| {
                let g = orb.angular_sq(theta);
                if g <= 0.0 {
                    return 0.0;
                }
                let dg = (orb.angular_sq(theta + h_t) - orb.angular_sq(theta - h_t)) / (2.0 * h_t);
                dg * dg / g * theta.sin() * 2.0 * std::f64::consts::PI
            },
            Interval::Finite(1e-9, std::f64::consts::PI - 1e-9),
            config,
        )?
        .0;
        Ok(radial + inv_r2 * angular)
    }
}

/// Entropy of a spherical harmonic, S[Y_lm] = A_2(l,m) - E_0; the angular
/// part shared by the Schrödinger and Klein-Gordon densities.
pub fn spherical_harmonic_entropy(l: u32, m: i32, config: &QuadConfig) -> Result<f64> {
    let orb = Orbital3D::new(1.0, l + 1, l, m)?;
    let e0 = entropic_integral_e(&orb.gegenbauer_spec(), 0, config)?;
    Ok(orb.a2_constant() - e0)
}

/// Angular disequilibrium ∫|Y_lm|⁴ dΩ.
pub fn spherical_harmonic_diseq(l: u32, m: i32) -> Result<f64> {
    let orb = Orbital3D::new(1.0, l + 1, l, m)?;
    Ok(orb.diseq_angular())
}

/// Angular Fisher integral 2π ∫ (g'²/g) sin θ dθ over g = |Y_lm|²; the
/// angular half of the separable |∇ρ|²/ρ quadrature.
pub(crate) fn angular_fisher(l: u32, m: i32, config: &QuadConfig) -> Result<f64> {
    if l == 0 {
        return Ok(0.0);
    }
    let orb = Orbital3D::new(1.0, l + 1, l, m)?;
    let h_t = 1e-7;
    let (v, _) = integrate(
        move |theta: f64| {
            let g = orb.angular_sq(theta);
            if g <= 0.0 {
                return 0.0;
            }
            let dg = (orb.angular_sq(theta + h_t) - orb.angular_sq(theta - h_t)) / (2.0 * h_t);
            dg * dg / g * theta.sin() * 2.0 * std::f64::consts::PI
        },
        Interval::Finite(1e-9, std::f64::consts::PI - 1e-9),
        config,
    )?;
    Ok(v)
}

/// Bundle of every measure of one orbital.
#[derive(Debug, Clone)]
pub struct HydroMeasures {
    pub energy: f64,
    pub variance: f64,
    pub fisher: f64,
    pub r_mean: f64,
    pub shannon: f64,
    pub shannon_radial: f64,
    pub shannon_angular: f64,
    pub disequilibrium: f64,
    pub diseq_radial: f64,
    pub diseq_angular: f64,
    pub c_cr: f64,
    pub c_fs: f64,
    pub c_sc: f64,
    pub b_fs: f64,
    pub b_sc: f64,
    pub xi_fs: f64,
    pub xi_sc: f64,
}

/// Assemble all measures of an orbital in one pass.
pub fn hydro_measures(orb: &Orbital3D, config: &QuadConfig) -> Result<HydroMeasures> {
    let (s, s_r, s_y) = orb.shannon(config)?;
    let (d, d_r, d_y) = orb.disequilibrium();
    let (c_cr, c_fs, c_sc) = orb.complexities(config)?;
    let (b_fs, b_sc, xi_fs, xi_sc) = orb.complexity_bounds(config)?;
    Ok(HydroMeasures {
        energy: orb.energy(),
        variance: orb.variance(),
        fisher: orb.fisher(),
        r_mean: orb.r_expectation(),
        shannon: s,
        shannon_radial: s_r,
        shannon_angular: s_y,
        disequilibrium: d,
        diseq_radial: d_r,
        diseq_angular: d_y,
        c_cr,
        c_fs,
        c_sc,
        b_fs,
        b_sc,
        xi_fs,
        xi_sc,
    })
}
