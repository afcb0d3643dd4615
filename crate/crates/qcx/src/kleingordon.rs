//! Klein-Gordon Coulomb bound states (pionic atoms): eigenvalues, the
//! Lorentz-invariant charge density, radial moments and the Heisenberg
//! measure (general route plus circular closed forms), Shannon and Fisher
//! measures by quadrature, the Fisher-Shannon and LMC complexities, and
//! the ratios against the mass-scaled Schrödinger reference.
//!
//! Everything runs in atomic units (ℏ = m_e = e = 1, c = 1/α) with the
//! particle mass explicit; all radial integrals are taken in the
//! dimensionless s = βr variable so grids never see the tiny physical
//! length scale of a heavy particle.

use crate::error::{QcxError, Result};
use crate::hydrogen3d::{
    spherical_harmonic_diseq, spherical_harmonic_entropy, Orbital3D,
};
use crate::polyspread::Method;
use crate::quadrature::{integrate, FisherInfo, Interval, QuadConfig};
use crate::specfun::{eval_poly_ln, eval_poly_with_deriv, ln_gamma_unchecked, poly_zeros, OrthoPolySpec};

/// CODATA fine-structure constant.
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

/// π⁻ mass in atomic units (electron masses).
pub const PION_MASS: f64 = 273.132_054;

const PI: f64 = std::f64::consts::PI;
const E: f64 = std::f64::consts::E;

/// A Klein-Gordon Coulomb bound state of a spinless particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KGOrbital {
    pub z: f64,
    pub n: u32,
    pub l: u32,
    pub m: i32,
    /// Particle mass m₀ in atomic units; defaults to the pion mass.
    pub mass: f64,
}

impl KGOrbital {
    /// Pionic state with the default π⁻ mass.
    pub fn pionic(z: f64, n: u32, l: u32, m: i32) -> Result<Self> {
        Self::new(z, n, l, m, PION_MASS)
    }

    pub fn new(z: f64, n: u32, l: u32, m: i32, mass: f64) -> Result<Self> {
        if !(z > 0.0) || !(mass > 0.0) {
            return Err(QcxError::InvalidArgument(format!(
                "charge and mass must be positive, got Z={z}, m0={mass}"
            )));
        }
        if n < 1 || l > n - 1 || m.unsigned_abs() > l {
            return Err(QcxError::InvalidArgument(format!(
                "invalid quantum numbers (n, l, m) = ({n}, {l}, {m})"
            )));
        }
        let orb = Self { z, n, l, m, mass };
        // the construction fails when γ ≥ l + 1/2 (complex l')
        orb.derived()?;
        Ok(orb)
    }

    /// γ = Zα
    pub fn gamma_coupling(&self) -> f64 {
        self.z * FINE_STRUCTURE
    }

    /// ℏc in atomic units, = 1/α.
    fn hbar_c(&self) -> f64 {
        1.0 / FINE_STRUCTURE
    }

    /// All derived state quantities; fails for supercritical γ ≥ l + 1/2.
    pub fn derived(&self) -> Result<KGDerived> {
        let gamma = self.gamma_coupling();
        let lh = self.l as f64 + 0.5;
        let disc = lh * lh - gamma * gamma;
        if disc <= 0.0 {
            return Err(QcxError::InvalidArgument(format!(
                "supercritical coupling: γ = {gamma} >= l + 1/2 = {lh}"
            )));
        }
        let l_prime = disc.sqrt() - 0.5;
        let nu = self.n as f64 - self.l as f64 + l_prime; // n - l + l'
        let x = gamma / nu;
        let m0c2 = self.mass / (FINE_STRUCTURE * FINE_STRUCTURE);
        let epsilon = m0c2 / (1.0 + x * x).sqrt();
        // 1 - (ε/m₀c²)² = x²/(1+x²) exactly; the naive difference loses
        // ~γ⁻² digits in the weak-coupling regime
        let beta = 2.0 * FINE_STRUCTURE * m0c2 * x / (1.0 + x * x).sqrt();
        // 𝒩² = m₀c² γ/(ℏc) / ((n+l'-l)² + γ²)
        let norm_sq = m0c2 * gamma * FINE_STRUCTURE / (nu * nu + gamma * gamma);
        Ok(KGDerived {
            l_prime,
            epsilon,
            beta,
            norm_sq,
        })
    }

    fn laguerre_spec(&self, l_prime: f64) -> OrthoPolySpec {
        OrthoPolySpec::laguerre((self.n - 1 - self.l) as usize, 2.0 * l_prime + 1.0)
            .expect("valid orbital")
    }

    /// u²(s) with the charge normalization constant folded in.
    fn u_sq(&self, der: &KGDerived, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        let spec = self.laguerre_spec(der.l_prime);
        let (ln_p, sg) = eval_poly_ln(&spec, s).expect("valid spec");
        if sg == 0.0 {
            return 0.0;
        }
        (der.norm_sq.ln() + (2.0 * der.l_prime + 2.0) * s.ln() - s + 2.0 * ln_p).exp()
    }

    /// Normalized 1D radial charge density in s = βr:
    /// d_s(s) = (ε/β + γℏc/s) u²(s) / (m₀c²).
    fn charge_density_s(&self, der: &KGDerived, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        let m0c2 = self.mass / (FINE_STRUCTURE * FINE_STRUCTURE);
        (der.epsilon / der.beta + self.gamma_coupling() * self.hbar_c() / s) * self.u_sq(der, s)
            / m0c2
    }

    /// Lorentz-invariant radial charge density d(r), normalized to 1 in r.
    pub fn charge_density(&self, r: f64) -> f64 {
        let der = self.derived().expect("validated at construction");
        der.beta * self.charge_density_s(&der, der.beta * r)
    }

    /// 𝓘_{nl}(k) = ∫ x^{2l'+k+2} e^{-x} [L̃]² dx by its finite sum; the
    /// k = -1 case collapses to the orthonormality integral.
    pub fn i_integral(&self, k: i32) -> Result<f64> {
        if k < -1 {
            return Err(QcxError::InvalidArgument(
                "I integral needs k >= -1".into(),
            ));
        }
        let der = self.derived()?;
        Ok(i_integral_raw(
            self.n,
            self.l,
            der.l_prime,
            k,
        ))
    }

    /// ⟨r^k⟩ = 𝒩²/(m₀c² β^k) [ε/β 𝓘(k) + γℏc 𝓘(k-1)].
    pub fn r_moment(&self, k: u32) -> Result<f64> {
        let der = self.derived()?;
        let m0c2 = self.mass / (FINE_STRUCTURE * FINE_STRUCTURE);
        let ik = i_integral_raw(self.n, self.l, der.l_prime, k as i32);
        let ikm1 = i_integral_raw(self.n, self.l, der.l_prime, k as i32 - 1);
        Ok(der.norm_sq / m0c2 / der.beta.powi(k as i32)
            * (der.epsilon / der.beta * ik + self.gamma_coupling() * self.hbar_c() * ikm1))
    }

    /// Heisenberg measure σ² = ⟨r²⟩ - ⟨r⟩².
    pub fn variance(&self) -> Result<f64> {
        Ok(self.r_moment(2)? - self.r_moment(1)?.powi(2))
    }

    /// Radial charge entropy -∫ d(r) ln(d(r)/r²) dr by quadrature in s,
    /// split at the Laguerre zeros.
    fn shannon_radial(&self, config: &QuadConfig) -> Result<f64> {
        let der = self.derived()?;
        let spec = self.laguerre_spec(der.l_prime);
        let zeros = poly_zeros(&spec)?;
        let beta = der.beta;
        let me = *self;
        let d = der.clone();
        let f = move |s: f64| {
            let v = me.charge_density_s(&d, s);
            if v <= 0.0 {
                return 0.0;
            }
            -v * (v / (s * s)).ln()
        };
        let env = crate::quadrature::Density1D::new(
            move |s| me.charge_density_s(&der, s),
            Interval::HalfInfinite(0.0),
            zeros.clone(),
            crate::quadrature::TailDecay::Exponential,
        );
        let win = crate::quadrature::density_window(&env, config)?;
        let v = crate::quadrature::integrate_window(&f, &win, &zeros, config, "KG radial entropy")?;
        Ok(v - 3.0 * beta.ln())
    }

    /// Shannon entropy and entropic power (S, N) of the charge density;
    /// the angular part is the spherical-harmonic entropy shared with the
    /// Schrödinger case.
    pub fn shannon(&self, config: &QuadConfig) -> Result<(f64, f64)> {
        let s = self.shannon_radial(config)? + spherical_harmonic_entropy(self.l, self.m, config)?;
        let n = (2.0 * s / 3.0).exp() / (2.0 * PI * E);
        Ok((s, n))
    }

    /// Disequilibrium ⟨ρ⟩ = β³ ∫ (d_s/s)² ds · ∫|Y|⁴dΩ.
    ///
    /// The radial integral is a finite gamma sum: the integrand is
    /// (a + b/s)² u⁴/s² = 𝒩⁴ e^{-2s} [L̃⁴](s) (a s^{4l'+2+k} + …), and each
    /// power integrates to Γ(p+1)/2^{p+1}. Near the critical coupling the
    /// boundary exponent 4l' approaches -1 and adaptive quadrature stalls
    /// on the (still integrable) singularity; the sum has no such trouble
    /// and shows the l' = -1/4 divergence as an explicit gamma pole.
    pub fn disequilibrium(&self, _config: &QuadConfig) -> Result<f64> {
        let der = self.derived()?;
        if der.l_prime <= -0.25 {
            return Err(QcxError::InvalidArgument(format!(
                "KG disequilibrium diverges for l' = {} <= -1/4",
                der.l_prime
            )));
        }
        Ok(der.beta.powi(3)
            * self.diseq_radial_gamma_sum(&der)?
            * spherical_harmonic_diseq(self.l, self.m)?)
    }

    /// ∫ (d_s/s)² ds as Σ_k q_k [a² G(4l'+2+k) + 2ab G(4l'+1+k) + b² G(4l'+k)]
    /// with G(p) = Γ(p+1)/2^{p+1} and q the coefficients of L̃⁴.
    fn diseq_radial_gamma_sum(&self, der: &KGDerived) -> Result<f64> {
        let m0c2 = self.mass / (FINE_STRUCTURE * FINE_STRUCTURE);
        let a = der.epsilon / der.beta;
        let b = self.gamma_coupling() * self.hbar_c();
        let coeffs = crate::specfun::laguerre_coeffs(
            (self.n - 1 - self.l) as usize,
            2.0 * der.l_prime + 1.0,
        )?;
        let sq = convolve_f64(&coeffs, &coeffs);
        let quartic = convolve_f64(&sq, &sq);
        let g = |p: f64| (ln_gamma_unchecked(p + 1.0) - (p + 1.0) * std::f64::consts::LN_2).exp();
        let mut sum = 0.0;
        for (k, &q) in quartic.iter().enumerate() {
            let p = 4.0 * der.l_prime + 2.0 + k as f64;
            sum += q * (a * a * g(p) + 2.0 * a * b * g(p - 1.0) + b * b * g(p - 2.0));
        }
        Ok(sum * (der.norm_sq / m0c2).powi(2))
    }

    /// Fisher information of the charge density. For l = 0 the small-r
    /// exponent 2l' - 1 of the density makes ∫|∇ρ|²/ρ diverge at the
    /// origin, so S states are flagged analytically, never integrated.
    pub fn fisher(&self, config: &QuadConfig) -> Result<FisherInfo> {
        if self.l == 0 {
            return Ok(FisherInfo::Divergent);
        }
        let der = self.derived()?;
        let beta = der.beta;
        let me = *self;
        let f = move |s: f64| me.radial_factor_with_deriv(&der, s);
        let i = fisher_axial_scaled(&f, beta, self.l, self.m, config)?;
        Ok(FisherInfo::Finite(i))
    }

    /// (f_s, f_s') of the 3D radial charge factor f_s = d_s/s², analytic
    /// through the Laguerre derivative.
    fn radial_factor_with_deriv(&self, der: &KGDerived, s: f64) -> (f64, f64) {
        if s <= 0.0 {
            return (0.0, 0.0);
        }
        let m0c2 = self.mass / (FINE_STRUCTURE * FINE_STRUCTURE);
        let spec = self.laguerre_spec(der.l_prime);
        let (p, dp) = eval_poly_with_deriv(&spec, s).expect("valid spec");
        let a = der.epsilon / der.beta;
        let b = self.gamma_coupling() * self.hbar_c();
        let tl = 2.0 * der.l_prime;
        // f_s = C e^{-s} p² (a s^{2l'} + b s^{2l'-1}), C = 𝒩²/m₀c²
        let c = der.norm_sq / m0c2;
        let pow = (tl * s.ln()).exp();
        let poly = a * pow + b * pow / s;
        let dpoly = a * tl * pow / s + b * (tl - 1.0) * pow / (s * s);
        let f = c * (-s).exp() * p * p * poly;
        let df = c * (-s).exp() * (2.0 * p * dp * poly + p * p * (dpoly - poly));
        (f, df)
    }

    /// Probability-normalized |ψ|² radial factor (the non-Lorentz-invariant
    /// density), used as the fallback for l = 0 complexity ratios and by
    /// the normalization-contrast diagnostic.
    fn nli_factor_with_deriv(&self, der: &KGDerived, a_norm: f64, s: f64) -> (f64, f64) {
        if s <= 0.0 {
            return (0.0, 0.0);
        }
        let spec = self.laguerre_spec(der.l_prime);
        let (p, dp) = eval_poly_with_deriv(&spec, s).expect("valid spec");
        let tl = 2.0 * der.l_prime;
        let c = der.norm_sq / a_norm;
        let pow = (tl * s.ln()).exp();
        // p_s(s)/s² with p_s = u²/A; u² carries 𝒩²
        let f = c * pow * (-s).exp() * p * p;
        let df = c * (-s).exp() * (tl * pow / s * p * p - pow * p * p + 2.0 * pow * p * dp);
        (f, df)
    }

    /// ∫ |ψ|² d³r = ∫ u²(r) dr: the probability norm carried by the
    /// non-Lorentz-invariant density under the charge normalization
    /// constant (the rest-frame contrast of the normalization diagnostic;
    /// the LI density integrates to 1, this does not).
    pub fn nli_norm(&self, config: &QuadConfig) -> Result<f64> {
        let der = self.derived()?;
        let beta = der.beta;
        let me = *self;
        let (v, _) = integrate(
            move |s: f64| me.u_sq(&der, s),
            Interval::HalfInfinite(0.0),
            config,
        )?;
        Ok(v / beta)
    }
}

/// Derived single-state quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct KGDerived {
    /// Effective angular momentum l' = √((l+1/2)² - γ²) - 1/2.
    pub l_prime: f64,
    /// Relativistic energy ε (rest energy included).
    pub epsilon: f64,
    /// Inverse length scale β; s = βr.
    pub beta: f64,
    /// Charge normalization constant 𝒩².
    pub norm_sq: f64,
}

fn convolve_f64(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// 𝓘_{nl}(k) by the finite sum with log-gamma terms.
fn i_integral_raw(n: u32, l: u32, l_prime: f64, k: i32) -> f64 {
    let nr = (n - 1 - l) as i64; // n - l - 1
    let kk = k as i64;
    let ln_pref =
        ln_gamma_unchecked(nr as f64 + 1.0) - ln_gamma_unchecked(nr as f64 + 2.0 * l_prime + 2.0);
    let j_lo = (nr - kk - 1).max(0);
    let mut sum = 0.0;
    for j in j_lo..=nr {
        let i = nr - j; // lower index of binom(k+1, ·)
        if i > kk + 1 {
            continue;
        }
        let ln_binom = ln_gamma_unchecked(kk as f64 + 2.0)
            - ln_gamma_unchecked(i as f64 + 1.0)
            - ln_gamma_unchecked((kk + 1 - i) as f64 + 1.0);
        let ln_term = 2.0 * ln_binom
            + ln_gamma_unchecked(2.0 * l_prime + kk as f64 + j as f64 + 3.0)
            - ln_gamma_unchecked(j as f64 + 1.0);
        sum += (ln_pref + ln_term).exp();
    }
    sum
}

/// Circular-state closed forms for ⟨r⟩, ⟨r²⟩ and σ².
pub fn circular_moments(orb: &KGOrbital) -> Result<(f64, f64, f64)> {
    if orb.l != orb.n - 1 {
        return Err(QcxError::InvalidArgument(
            "circular closed forms need l = n - 1".into(),
        ));
    }
    let der = orb.derived()?;
    let lp = der.l_prime;
    let gamma = orb.gamma_coupling();
    let hc = 1.0 / FINE_STRUCTURE;
    let m0c2 = orb.mass / (FINE_STRUCTURE * FINE_STRUCTURE);
    let x = gamma / (lp + 1.0);
    let r1 = hc / (4.0 * m0c2) / (gamma * (1.0 + x * x).sqrt())
        * ((2.0 * lp + 2.0) * (2.0 * lp + 3.0) + 4.0 * gamma * gamma);
    let r2 = (hc / m0c2).powi(2) / (2.0 * gamma * gamma)
        * (lp + 1.0)
        * (2.0 * lp + 3.0)
        * ((lp + 1.0) * (lp + 2.0) + gamma * gamma);
    let var = (hc / m0c2).powi(2) * (lp + 1.0) / (4.0 * gamma * gamma)
        * ((lp + 1.0) * (2.0 * lp + 3.0) * ((lp + 1.0) * (lp + 1.0) + 2.0 * gamma * gamma)
            + 2.0 * gamma.powi(4))
        / ((lp + 1.0) * (lp + 1.0) + gamma * gamma);
    Ok((r1, r2, var))
}

/// Separable Fisher quadrature |∇ρ|²/ρ with azimuthal factor 2π, taken in
/// a scaled radial variable: r = s/b, the caller passes (f_s, f_s') of the
/// 3D radial factor with f(r) = b³ f_s(br).
fn fisher_axial_scaled<F>(
    radial: &F,
    b: f64,
    l: u32,
    m: i32,
    config: &QuadConfig,
) -> Result<f64>
where
    F: Fn(f64) -> (f64, f64),
{
    let (i_rad, _) = integrate(
        |s: f64| {
            let (f, df) = radial(s);
            if f <= 0.0 {
                return 0.0;
            }
            df * df / f * s * s
        },
        Interval::HalfInfinite(0.0),
        config,
    )?;
    let (inv_r2, _) = integrate(
        |s: f64| radial(s).0,
        Interval::HalfInfinite(0.0),
        config,
    )?;
    let ang = crate::hydrogen3d::angular_fisher(l, m, config)?;
    Ok(b * b * (i_rad + inv_r2 * ang))
}

/// The separable-quadrature Fisher pipeline applied to a Schrödinger
/// density: the validation route against the closed-form value carried by
/// [`Orbital3D::fisher`].
pub fn schroedinger_fisher_pipeline(orb: &Orbital3D, config: &QuadConfig) -> Result<f64> {
    let sch = *orb;
    let b = 2.0 * sch.z / sch.n as f64; // r = s/b
    let f = move |s: f64| {
        if s <= 0.0 {
            return (0.0, 0.0);
        }
        let h = 1e-6 * s;
        let b3 = b * b * b;
        let fv = sch.radial_sq(s / b) / b3;
        let fp = (sch.radial_sq((s + h) / b) - sch.radial_sq((s - h) / b)) / (2.0 * h) / b3;
        (fv, fp)
    };
    fisher_axial_scaled(&f, b, sch.l, sch.m, config)
}

/// Complexity bundle of a KG state against its mass-scaled Schrödinger
/// reference.
#[derive(Debug, Clone)]
pub struct KGComplexities {
    /// Fisher-Shannon of the LI charge density; divergent when l = 0.
    pub c_fs: FisherInfo,
    /// LMC of the LI charge density; divergent at l = 0 once l' ≤ -1/4.
    pub c_sc: FisherInfo,
    pub zeta_fs: f64,
    pub zeta_sc: f64,
    /// Quadrature on the LI density for l ≥ 1; the |ψ|²-based fallback at
    /// l = 0 where the LI Fisher (and for strong coupling the LI
    /// disequilibrium) diverges at the origin, as the reference curves
    /// require a finite value for every Z.
    pub zeta_method: Method,
}

/// Schrödinger reference: the 3D hydrogenic formulas at effective charge
/// m₀Z, since the unit-mass closed forms carry the length scale 1/Z.
pub fn schroedinger_reference(orb: &KGOrbital) -> Result<Orbital3D> {
    Orbital3D::new(orb.mass * orb.z, orb.n, orb.l, orb.m)
}

/// Fisher-Shannon and LMC complexities plus the relativistic-effect ratios
/// ζ = 1 - C_Sch/C_KG.
pub fn kg_complexities(orb: &KGOrbital, config: &QuadConfig) -> Result<KGComplexities> {
    let sch = schroedinger_reference(orb)?;
    let (s_sch, _, _) = sch.shannon(config)?;
    let j_sch = (2.0 * s_sch / 3.0).exp() / (2.0 * PI * E);
    let c_fs_sch = sch.fisher() * j_sch;
    let c_sc_sch = sch.disequilibrium().0 * s_sch.exp();

    let der = orb.derived()?;
    if orb.l >= 1 {
        let (s, _) = orb.shannon(config)?;
        let j = (2.0 * s / 3.0).exp() / (2.0 * PI * E);
        let fisher = match orb.fisher(config)? {
            FisherInfo::Finite(f) => f,
            FisherInfo::Divergent => unreachable!("l >= 1 Fisher is finite"),
        };
        let c_fs = fisher * j;
        let c_sc = orb.disequilibrium(config)? * s.exp();
        Ok(KGComplexities {
            c_fs: FisherInfo::Finite(c_fs),
            c_sc: FisherInfo::Finite(c_sc),
            zeta_fs: 1.0 - c_fs_sch / c_fs,
            zeta_sc: 1.0 - c_sc_sch / c_sc,
            zeta_method: Method::Quadrature,
        })
    } else {
        // l = 0: LI complexities flagged; ζ from the |ψ|² fallback
        let me = *orb;
        let a_norm = integrate(
            {
                let d = der.clone();
                move |s: f64| me.u_sq(&d, s)
            },
            Interval::HalfInfinite(0.0),
            config,
        )?
        .0;
        // NLI entropy: -∫ p_s ln(β³ p_s/s²) ds + S_Y
        let spec = orb.laguerre_spec(der.l_prime);
        let zeros = poly_zeros(&spec)?;
        let d2 = der.clone();
        let ent = crate::quadrature::Density1D::new(
            move |s: f64| me.u_sq(&d2, s) / a_norm,
            Interval::HalfInfinite(0.0),
            zeros.clone(),
            crate::quadrature::TailDecay::Exponential,
        );
        let win = crate::quadrature::density_window(&ent, config)?;
        let d3 = der.clone();
        let s_rad = crate::quadrature::integrate_window(
            &move |s: f64| {
                let v = me.u_sq(&d3, s) / a_norm;
                if v <= 0.0 {
                    return 0.0;
                }
                -v * (v / (s * s)).ln()
            },
            &win,
            &zeros,
            config,
            "KG NLI entropy",
        )? - 3.0 * der.beta.ln();
        let s_nli = s_rad + spherical_harmonic_entropy(orb.l, orb.m, config)?;
        let j_nli = (2.0 * s_nli / 3.0).exp() / (2.0 * PI * E);
        let d4 = der.clone();
        let fisher_nli = fisher_axial_scaled(
            &move |s: f64| me.nli_factor_with_deriv(&d4, a_norm, s),
            der.beta,
            orb.l,
            orb.m,
            config,
        )?;
        let d5 = der.clone();
        let diseq_rad = crate::quadrature::integrate_window(
            &move |s: f64| {
                let v = me.u_sq(&d5, s) / a_norm / s;
                v * v
            },
            &win,
            &zeros,
            config,
            "KG NLI disequilibrium",
        )?;
        let diseq_nli =
            der.beta.powi(3) * diseq_rad * spherical_harmonic_diseq(orb.l, orb.m)?;
        let c_fs_nli = fisher_nli * j_nli;
        let c_sc_nli = diseq_nli * s_nli.exp();
        // LI C_SC still converges while l' > -1/4
        let c_sc_li = if der.l_prime > -0.25 {
            let (s, _) = orb.shannon(config)?;
            FisherInfo::Finite(orb.disequilibrium(config)? * s.exp())
        } else {
            FisherInfo::Divergent
        };
        Ok(KGComplexities {
            c_fs: FisherInfo::Divergent,
            c_sc: c_sc_li,
            zeta_fs: 1.0 - c_fs_sch / c_fs_nli,
            zeta_sc: 1.0 - c_sc_sch / c_sc_nli,
            zeta_method: Method::ClosedForm,
        })
    }
}

/// Full per-state report with the Schrödinger counterparts and ratios.
#[derive(Debug, Clone)]
pub struct KGReport {
    pub moments: Vec<(u32, f64)>,
    pub centroid: f64,
    pub variance: f64,
    pub shannon: f64,
    pub shannon_power: f64,
    pub fisher: FisherInfo,
    pub complexities: KGComplexities,
    pub sch_centroid: f64,
    pub sch_variance: f64,
    pub sch_shannon_power: f64,
    pub sch_fisher: f64,
    pub centroid_ratio: f64,
    pub variance_ratio: f64,
    pub shannon_power_ratio: f64,
    /// I_Sch/I_KG where the KG Fisher is finite.
    pub fisher_ratio: Option<f64>,
}

pub fn kg_report(orb: &KGOrbital, config: &QuadConfig) -> Result<KGReport> {
    let moments: Vec<(u32, f64)> = (0..=2u32)
        .map(|k| orb.r_moment(k).map(|v| (k, v)))
        .collect::<Result<_>>()?;
    let centroid = orb.r_moment(1)?;
    let variance = orb.variance()?;
    let (shannon, shannon_power) = orb.shannon(config)?;
    let fisher = orb.fisher(config)?;
    let complexities = kg_complexities(orb, config)?;

    let sch = schroedinger_reference(orb)?;
    let (s_sch, _, _) = sch.shannon(config)?;
    let sch_shannon_power = (2.0 * s_sch / 3.0).exp() / (2.0 * PI * E);
    let sch_centroid = sch.r_expectation();
    let sch_variance = sch.variance();
    let sch_fisher = sch.fisher();

    Ok(KGReport {
        moments,
        centroid,
        variance,
        shannon,
        shannon_power,
        fisher,
        complexities,
        sch_centroid,
        sch_variance,
        sch_shannon_power,
        sch_fisher,
        centroid_ratio: centroid / sch_centroid,
        variance_ratio: variance / sch_variance,
        shannon_power_ratio: shannon_power / sch_shannon_power,
        fisher_ratio: fisher.value().map(|f| sch_fisher / f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn construction_and_supercritical() {
        assert!(KGOrbital::pionic(68.0, 1, 0, 0).is_ok());
        // γ = Zα ≥ 1/2 makes l = 0 supercritical: Z = 69 is beyond it
        assert!(KGOrbital::pionic(69.0, 1, 0, 0).is_err());
        // but l = 1 states still exist there
        assert!(KGOrbital::pionic(69.0, 2, 1, 0).is_ok());
        assert!(KGOrbital::pionic(68.0, 1, 1, 0).is_err());
    }

    #[test]
    fn derived_identities() {
        // ε/β = ℏc (n + l' - l)/(2γ) to 1e-12, Z = 68, all (n,l) ≤ (4,3)
        for n in 1..=4u32 {
            for l in 0..n {
                let orb = KGOrbital::pionic(68.0, n, l, 0).unwrap();
                let der = orb.derived().unwrap();
                let lhs = der.epsilon / der.beta;
                let rhs = (n as f64 - l as f64 + der.l_prime)
                    / (2.0 * orb.gamma_coupling() * FINE_STRUCTURE);
                assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
            }
        }
        // Z = 68 ground state: ε/m₀c² ≈ 0.749 (pinned regression)
        let orb = KGOrbital::pionic(68.0, 1, 0, 0).unwrap();
        let der = orb.derived().unwrap();
        let m0c2 = PION_MASS / (FINE_STRUCTURE * FINE_STRUCTURE);
        assert_abs_diff_eq!(der.epsilon / m0c2, 0.74925, epsilon = 1e-4);
    }

    #[test]
    fn weak_coupling_expansion() {
        // γ → 0: l' → l and ε → m₀c²(1 - γ²/(2n²)) to O(γ⁴)
        let orb = KGOrbital::new(0.01, 2, 1, 0, 1.0).unwrap();
        let der = orb.derived().unwrap();
        let g = orb.gamma_coupling();
        assert_abs_diff_eq!(der.l_prime, 1.0, epsilon = 1e-4);
        let m0c2 = 1.0 / (FINE_STRUCTURE * FINE_STRUCTURE);
        let expect = m0c2 * (1.0 - g * g / 8.0);
        assert_relative_eq!(der.epsilon, expect, max_relative = 1e-9);
    }

    #[test]
    fn charge_normalization() {
        for (z, n, l) in [(1.0, 1u32, 0u32), (30.0, 3, 1), (68.0, 4, 3), (68.0, 2, 0)] {
            let orb = KGOrbital::pionic(z, n, l, 0).unwrap();
            let der = orb.derived().unwrap();
            let (norm, _) = integrate(
                |s: f64| orb.charge_density_s(&der, s),
                Interval::HalfInfinite(0.0),
                &cfg(),
            )
            .unwrap();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-10);
            // moment route agrees: ⟨r⁰⟩ = 1
            assert_abs_diff_eq!(orb.r_moment(0).unwrap(), 1.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn i_integral_values() {
        // 𝓘(0) = 2(n + l' - l); circular 𝓘(1) = (2l'+2)(2l'+3)
        for (n, l) in [(1u32, 0u32), (2, 0), (3, 1), (4, 3)] {
            let orb = KGOrbital::pionic(50.0, n, l, 0).unwrap();
            let der = orb.derived().unwrap();
            let i0 = orb.i_integral(0).unwrap();
            assert_relative_eq!(
                i0,
                2.0 * (n as f64 - l as f64 + der.l_prime),
                max_relative = 1e-12
            );
            if l == n - 1 {
                let i1 = orb.i_integral(1).unwrap();
                assert_relative_eq!(
                    i1,
                    (2.0 * der.l_prime + 2.0) * (2.0 * der.l_prime + 3.0),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn i_integral_vs_quadrature() {
        for (n, l) in [(2u32, 0u32), (3, 1), (4, 1)] {
            let orb = KGOrbital::pionic(40.0, n, l, 0).unwrap();
            let der = orb.derived().unwrap();
            let spec = orb.laguerre_spec(der.l_prime);
            for k in 0..=3i32 {
                let closed = orb.i_integral(k).unwrap();
                let (quad, _) = integrate(
                    |x: f64| {
                        if x <= 0.0 {
                            return 0.0;
                        }
                        let (ln_p, s) = eval_poly_ln(&spec, x).unwrap();
                        if s == 0.0 {
                            return 0.0;
                        }
                        ((2.0 * der.l_prime + k as f64 + 2.0) * x.ln() - x + 2.0 * ln_p).exp()
                    },
                    Interval::HalfInfinite(0.0),
                    &cfg(),
                )
                .unwrap();
                assert_relative_eq!(closed, quad, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn circular_closed_forms_match_general_route() {
        for n in 1..=4u32 {
            let orb = KGOrbital::pionic(68.0, n, n - 1, 0).unwrap();
            let (r1, r2, var) = circular_moments(&orb).unwrap();
            assert_relative_eq!(r1, orb.r_moment(1).unwrap(), max_relative = 1e-10);
            assert_relative_eq!(r2, orb.r_moment(2).unwrap(), max_relative = 1e-10);
            assert_relative_eq!(var, orb.variance().unwrap(), max_relative = 1e-10);
        }
        assert!(circular_moments(&KGOrbital::pionic(68.0, 3, 1, 0).unwrap()).is_err());
    }

    #[test]
    fn m_independence_of_radial_quantities() {
        for m in 0..=2i32 {
            let orb = KGOrbital::pionic(68.0, 4, 2, m).unwrap();
            let base = KGOrbital::pionic(68.0, 4, 2, 0).unwrap();
            assert_relative_eq!(
                orb.r_moment(1).unwrap(),
                base.r_moment(1).unwrap(),
                max_relative = 1e-14
            );
            assert_relative_eq!(
                orb.variance().unwrap(),
                base.variance().unwrap(),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn nonrelativistic_limit() {
        // Z = 0.1, unit mass: KG/Schrödinger ratios within 1e-3 of 1
        for (n, l) in [(1u32, 0u32), (2, 1), (3, 2)] {
            let orb = KGOrbital::new(0.1, n, l, 0, 1.0).unwrap();
            let report = kg_report(&orb, &cfg()).unwrap();
            assert_abs_diff_eq!(report.centroid_ratio, 1.0, epsilon = 1e-3);
            assert_abs_diff_eq!(report.variance_ratio, 1.0, epsilon = 1e-3);
            assert_abs_diff_eq!(report.shannon_power_ratio, 1.0, epsilon = 1e-3);
        }
        // 1S density: sup-norm distance to the mass-scaled Schrödinger
        // radial density < 1e-3 (relative to the peak)
        let orb = KGOrbital::new(0.1, 1, 0, 0, 1.0).unwrap();
        let sch = schroedinger_reference(&orb).unwrap();
        let peak = sch.radial_density(1.0 / (0.1));
        let mut sup = 0.0_f64;
        for i in 1..400 {
            let r = i as f64 * 0.25;
            sup = sup.max((orb.charge_density(r) - sch.radial_density(r)).abs());
        }
        assert!(sup / peak < 1e-3, "sup-norm {sup}, peak {peak}");
    }

    #[test]
    fn relativistic_compression() {
        // Z = 68 pionic 1S: KG density exceeds Schrödinger near the origin,
        // centroid and variance ratios below 1
        let orb = KGOrbital::pionic(68.0, 1, 0, 0).unwrap();
        let sch = schroedinger_reference(&orb).unwrap();
        let scale = 1.0 / (PION_MASS * 68.0);
        assert!(orb.charge_density(0.05 * scale) > sch.radial_density(0.05 * scale));
        let report = kg_report(&orb, &cfg()).unwrap();
        assert!(report.centroid_ratio < 1.0);
        assert!(report.variance_ratio < 1.0);
        assert!(report.shannon_power_ratio < 1.0);
    }

    #[test]
    fn fisher_flag_and_validation() {
        let s_state = KGOrbital::pionic(68.0, 2, 0, 0).unwrap();
        assert_eq!(s_state.fisher(&cfg()).unwrap(), FisherInfo::Divergent);

        // pipeline vs the closed form on Schrödinger densities (unit mass)
        for (n, l, m) in [(2u32, 1u32, 0i32), (3, 2, 1), (3, 1, 1)] {
            let sch = Orbital3D::new(1.0, n, l, m).unwrap();
            let quad = schroedinger_fisher_pipeline(&sch, &cfg()).unwrap();
            assert_abs_diff_eq!(quad, sch.fisher(), epsilon = 1e-6 * sch.fisher().max(1.0));
        }
    }

    #[test]
    fn fisher_ratio_below_one() {
        // Z = 68, (2,1): I_Sch/I_KG < 1
        let orb = KGOrbital::pionic(68.0, 2, 1, 0).unwrap();
        let report = kg_report(&orb, &cfg()).unwrap();
        let ratio = report.fisher_ratio.unwrap();
        assert!(ratio < 1.0 && ratio > 0.0, "ratio {ratio}");
    }

    #[test]
    fn schroedinger_branch_entropy() {
        // the mass-scaled reference reproduces S = 3 + ln π - 3 ln(m₀ Z)
        let orb = KGOrbital::new(2.0, 1, 0, 0, 5.0).unwrap();
        let sch = schroedinger_reference(&orb).unwrap();
        let (s, _, _) = sch.shannon(&cfg()).unwrap();
        assert_abs_diff_eq!(
            s,
            3.0 + PI.ln() - 3.0 * (10.0_f64).ln(),
            epsilon = 1e-8
        );
    }

    #[test]
    fn zeta_ranges_and_ordering() {
        // ζ ∈ [0, 1) for a sample grid; gs ζ_SC < ζ_FS at Z = 68
        for z in [1.0, 30.0, 68.0] {
            for (n, l) in [(1u32, 0u32), (2, 1), (3, 2)] {
                let orb = KGOrbital::pionic(z, n, l, 0).unwrap();
                let c = kg_complexities(&orb, &cfg()).unwrap();
                assert!(
                    c.zeta_fs >= -1e-6 && c.zeta_fs < 1.0,
                    "zeta_fs {} at Z={z} ({n},{l})",
                    c.zeta_fs
                );
                assert!(
                    c.zeta_sc >= -1e-6 && c.zeta_sc < 1.0,
                    "zeta_sc {} at Z={z} ({n},{l})",
                    c.zeta_sc
                );
            }
        }
        let gs = KGOrbital::pionic(68.0, 1, 0, 0).unwrap();
        let c = kg_complexities(&gs, &cfg()).unwrap();
        assert!(c.zeta_sc < c.zeta_fs);
        assert_eq!(c.c_fs, FisherInfo::Divergent);
        // at Z = 68 the gs l' < -1/4, so the LI disequilibrium diverges too
        assert_eq!(c.c_sc, FisherInfo::Divergent);
    }

    #[test]
    fn zeta_fs_vanishes_nonrelativistically() {
        let orb = KGOrbital::new(0.1, 1, 0, 0, 1.0).unwrap();
        let c = kg_complexities(&orb, &cfg()).unwrap();
        assert_abs_diff_eq!(c.zeta_fs, 0.0, epsilon = 1e-2);
        let orb68 = KGOrbital::pionic(68.0, 1, 0, 0).unwrap();
        let c68 = kg_complexities(&orb68, &cfg()).unwrap();
        assert!(c68.zeta_fs > c.zeta_fs);
    }

    #[test]
    fn disequilibrium_gamma_sum_matches_quadrature() {
        // direct quadrature of β³∫(d_s/s)²ds · ∫|Y|⁴dΩ at couplings where
        // the boundary exponent is harmless
        for (z, n, l) in [(10.0, 1u32, 0u32), (30.0, 2, 1), (40.0, 3, 2)] {
            let orb = KGOrbital::pionic(z, n, l, 0).unwrap();
            let der = orb.derived().unwrap();
            let closed = orb.disequilibrium(&cfg()).unwrap();
            let (radial, _) = integrate(
                |s: f64| {
                    let v = orb.charge_density_s(&der, s) / s;
                    v * v
                },
                Interval::HalfInfinite(0.0),
                &cfg(),
            )
            .unwrap();
            let quad = der.beta.powi(3) * radial * spherical_harmonic_diseq(l, 0).unwrap();
            assert_relative_eq!(closed, quad, max_relative = 1e-8);
        }
        // the l' = -1/4 pole is reported as an error, not a hang
        let deep = KGOrbital::pionic(68.0, 1, 0, 0).unwrap();
        assert!(deep.disequilibrium(&cfg()).is_err());
    }

    #[test]
    fn nli_norm_contrast() {
        // the |ψ|² norm under the LI normalization constant is not 1 for
        // relativistic coupling, and tends to 1 as Z → 0
        let strong = KGOrbital::pionic(68.0, 1, 0, 0).unwrap();
        let weak = KGOrbital::new(0.1, 1, 0, 0, 1.0).unwrap();
        let n_strong = strong.nli_norm(&cfg()).unwrap();
        let n_weak = weak.nli_norm(&cfg()).unwrap();
        assert!((n_strong - 1.0).abs() > 0.05);
        assert_abs_diff_eq!(n_weak, 1.0, epsilon = 1e-4);
    }
}
