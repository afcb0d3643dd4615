//! LMC shape complexity of D-dimensional hydrogenic states in position and
//! momentum space: the generic quadrature pipeline (K1, K2, K3 radial and
//! angular integrals plus entropy decompositions), the ground/circular
//! closed forms, and the dimensional / Rydberg asymptotics.
//!
//! The hyperspherical product structure keeps everything one-dimensional:
//! K2 and the angular entropy factor into independent per-angle Gegenbauer
//! integrals, and the momentum radial integrals are mapped to [-1, 1] where
//! the integrand is a Gegenbauer quartic against a smooth weight.

use crate::error::{QcxError, Result};
use crate::polyspread::Method;
use crate::quadrature::{
    density_window, entropic_integral_e, integrate_split, integrate_window, Density1D, Interval,
    QuadConfig, TailDecay,
};
use crate::specfun::{
    digamma_unchecked, eval_poly_ln, eval_poly_with_deriv, ln_gamma_unchecked, poly_zeros,
    OrthoPolySpec,
};

const PI: f64 = std::f64::consts::PI;
const E: f64 = std::f64::consts::E;
const LN_2: f64 = std::f64::consts::LN_2;

/// A D-dimensional hydrogenic state: dimension, charge, principal quantum
/// number and the hyperangular momenta μ_1 ≥ μ_2 ≥ … ≥ |μ_{D-1}|.
#[derive(Debug, Clone, PartialEq)]
pub struct DOrbital {
    pub d: u32,
    pub z: f64,
    pub n: u32,
    pub mu: Vec<i32>,
}

impl DOrbital {
    pub fn new(d: u32, z: f64, n: u32, mu: Vec<i32>) -> Result<Self> {
        if d < 2 {
            return Err(QcxError::InvalidArgument(format!(
                "dimension must be an integer >= 2, got {d}"
            )));
        }
        if !(z > 0.0) {
            return Err(QcxError::InvalidArgument(format!(
                "nuclear charge must be positive, got {z}"
            )));
        }
        if n < 1 {
            return Err(QcxError::InvalidArgument("principal number n >= 1".into()));
        }
        if mu.len() != (d - 1) as usize {
            return Err(QcxError::InvalidArgument(format!(
                "need D-1 = {} hyperangular numbers, got {}",
                d - 1,
                mu.len()
            )));
        }
        for (i, &m) in mu.iter().enumerate() {
            let is_last = i + 1 == mu.len();
            if !is_last && m < 0 {
                return Err(QcxError::InvalidArgument(format!(
                    "only the last hyperangular number may be negative: {mu:?}"
                )));
            }
            if i > 0 {
                let cur = if is_last { m.abs() } else { m };
                if mu[i - 1] < cur {
                    return Err(QcxError::InvalidArgument(format!(
                        "hyperangular momenta must decrease: {mu:?}"
                    )));
                }
            }
        }
        let l = mu[0].unsigned_abs();
        if l > n - 1 {
            return Err(QcxError::InvalidArgument(format!(
                "l = {} exceeds n-1 = {}",
                l,
                n - 1
            )));
        }
        Ok(Self { d, z, n, mu })
    }

    /// Ground state: n = 1, all μ = 0.
    pub fn ground(d: u32, z: f64) -> Result<Self> {
        Self::new(d, z, 1, vec![0; (d - 1) as usize])
    }

    /// Circular state: μ_i = n-1 for every i.
    pub fn circular(d: u32, z: f64, n: u32) -> Result<Self> {
        Self::new(d, z, n, vec![n as i32 - 1; (d - 1) as usize])
    }

    pub fn l(&self) -> u32 {
        self.mu[0].unsigned_abs()
    }

    /// η = n + (D-3)/2
    pub fn eta(&self) -> f64 {
        self.n as f64 + (self.d as f64 - 3.0) / 2.0
    }

    /// 𝓛 = l + (D-3)/2
    pub fn grand_l(&self) -> f64 {
        self.l() as f64 + (self.d as f64 - 3.0) / 2.0
    }

    fn is_ground(&self) -> bool {
        self.n == 1 && self.mu.iter().all(|&m| m == 0)
    }

    fn is_circular(&self) -> bool {
        self.mu.iter().all(|&m| m == self.n as i32 - 1)
    }

    fn radial_degree(&self) -> usize {
        (self.n - 1 - self.l()) as usize
    }

    /// Radial Laguerre factor L̃_{n-l-1}^(2𝓛+1); the parameter 2l+D-2 is an
    /// integer for every integer D.
    fn laguerre_spec(&self) -> OrthoPolySpec {
        OrthoPolySpec::laguerre(self.radial_degree(), 2.0 * self.grand_l() + 1.0)
            .expect("valid orbital")
    }

    /// Momentum Gegenbauer factor C̃_{η-𝓛-1}^(𝓛+1).
    fn momentum_spec(&self) -> OrthoPolySpec {
        OrthoPolySpec::gegenbauer(self.radial_degree(), self.grand_l() + 1.0)
            .expect("valid orbital")
    }

    /// Per-angle Gegenbauer factors of the hyperspherical harmonic:
    /// (spec of degree μ_j - μ_{j+1} and parameter α_j + μ_{j+1}, μ_{j+1})
    /// for j = 1..D-2, with |m| in the last slot.
    fn angular_factors(&self) -> Vec<(OrthoPolySpec, u32)> {
        let d = self.d as usize;
        let mut out = Vec::with_capacity(d.saturating_sub(2));
        for j in 1..=(d - 2) {
            let mu_j = self.mu[j - 1].unsigned_abs();
            let mu_next = self.mu[j].unsigned_abs();
            let alpha_j = (self.d as f64 - j as f64 - 1.0) / 2.0;
            let spec =
                OrthoPolySpec::gegenbauer((mu_j - mu_next) as usize, alpha_j + mu_next as f64)
                    .expect("valid orbital");
            out.push((spec, mu_next));
        }
        out
    }

    /// Energy eigenvalue -Z²/(2η²); reduces to the 3D value at D = 3.
    pub fn energy(&self) -> f64 {
        -self.z * self.z / (2.0 * self.eta() * self.eta())
    }

    /// λ = η/(2Z), the radial length scale.
    fn lambda(&self) -> f64 {
        self.eta() / (2.0 * self.z)
    }

    /// Squared radial function R²(r) = λ^{-D}/(2η) · r̂^{2l} e^{-r̂} L̃²(r̂).
    pub fn radial_sq(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let rt = r / self.lambda();
        let (p, _) = eval_poly_with_deriv(&self.laguerre_spec(), rt).expect("valid spec");
        let ln_pref = -(self.d as f64) * self.lambda().ln() - (2.0 * self.eta()).ln();
        (ln_pref + 2.0 * self.l() as f64 * rt.ln() - rt).exp() * p * p
    }

    /// |𝒴|² over the polar angles (φ-independent).
    pub fn hyperangular_sq(&self, angles: &[f64]) -> f64 {
        assert_eq!(angles.len(), (self.d - 2) as usize, "need D-2 polar angles");
        let mut acc = 1.0 / (2.0 * PI);
        for ((spec, mu_next), &theta) in self.angular_factors().iter().zip(angles) {
            let (p, _) = eval_poly_with_deriv(spec, theta.cos()).expect("valid spec");
            acc *= p * p * theta.sin().abs().powi(2 * *mu_next as i32);
        }
        acc
    }

    /// Position density ρ(r, θ_1..θ_{D-2}).
    pub fn position_density(&self, r: f64, angles: &[f64]) -> f64 {
        self.radial_sq(r) * self.hyperangular_sq(angles)
    }

    /// Squared momentum radial factor M²(p).
    pub fn momentum_radial_sq(&self, p: f64) -> f64 {
        if p < 0.0 {
            return 0.0;
        }
        let u = self.eta() * p / self.z;
        let y = (1.0 - u * u) / (1.0 + u * u);
        let gl = self.grand_l();
        let (c, _) = eval_poly_with_deriv(&self.momentum_spec(), y).expect("valid spec");
        let ln_pref = (2.0 * gl + 4.0) * LN_2 + self.d as f64 * (self.eta() / self.z).ln();
        let ln_u = if u > 0.0 {
            2.0 * self.l() as f64 * u.ln()
        } else if self.l() == 0 {
            0.0
        } else {
            return 0.0;
        };
        (ln_pref + ln_u - (2.0 * gl + 4.0) * (1.0 + u * u).ln()).exp() * c * c
    }

    /// Momentum density γ(p, θ_1..θ_{D-2}).
    pub fn momentum_density(&self, p: f64, angles: &[f64]) -> f64 {
        self.momentum_radial_sq(p) * self.hyperangular_sq(angles)
    }

    /// K1 = ∫ x^{4l+D-1} e^{-2x} L̃⁴ dx, the radial piece of ∫ρ² d^D r in
    /// the scaled radius (the definitional ∫ r^{D-1} R⁴ dr divided by its
    /// 2^{D-2} Z^D / η^{D+2} prefactor).
    pub fn k1(&self, config: &QuadConfig) -> Result<f64> {
        let spec = self.laguerre_spec();
        let zeros = poly_zeros(&spec)?;
        let power = 4.0 * self.l() as f64 + self.d as f64 - 1.0;
        let integrand = move |x: f64| {
            if x <= 0.0 {
                return 0.0;
            }
            let (ln_p, s) = eval_poly_ln(&spec, x).expect("valid spec");
            if s == 0.0 {
                return 0.0;
            }
            (power * x.ln() - 2.0 * x + 4.0 * ln_p).exp()
        };
        let env = Density1D::new(
            integrand,
            Interval::HalfInfinite(0.0),
            zeros.clone(),
            TailDecay::Exponential,
        );
        let win = density_window(&env, config)?;
        integrate_window(&|x| env.eval(x), &win, &zeros, config, "K1 radial integral")
    }

    /// K2 = (1/2π) ∏_j ∫ C̃_j⁴(t) (1-t²)^{2μ_{j+1}+α_j-1/2} dt, the
    /// hyperangular quartic integral.
    pub fn k2(&self, config: &QuadConfig) -> Result<f64> {
        let mut acc = 1.0 / (2.0 * PI);
        for (j, (spec, mu_next)) in self.angular_factors().into_iter().enumerate() {
            let alpha_j = (self.d as f64 - (j + 1) as f64 - 1.0) / 2.0;
            let expo = 2.0 * mu_next as f64 + alpha_j - 0.5;
            let zeros = poly_zeros(&spec)?;
            let f = move |t: f64| {
                let s = 1.0 - t * t;
                if s <= 0.0 {
                    return 0.0;
                }
                let (ln_p, sg) = eval_poly_ln(&spec, t).expect("valid spec");
                if sg == 0.0 {
                    return 0.0;
                }
                (4.0 * ln_p + expo * s.ln()).exp()
            };
            let (v, _) = integrate_split(&f, -1.0, 1.0, &zeros, config, "K2 angular integral")?;
            acc *= v;
        }
        Ok(acc)
    }

    /// K3 via the y = (1-u²)/(1+u²) substitution:
    /// 2^{-4𝓛-8} ∫ (1-y)^{2l+D/2-1} (1+y)^{2l+3D/2+1} C̃⁴(y) dy.
    pub fn k3(&self, config: &QuadConfig) -> Result<f64> {
        let spec = self.momentum_spec();
        let zeros = poly_zeros(&spec)?;
        let gl = self.grand_l();
        let l = self.l() as f64;
        let d = self.d as f64;
        let e_minus = 2.0 * l + d / 2.0 - 1.0;
        let e_plus = 2.0 * l + 1.5 * d + 1.0;
        let f = move |y: f64| {
            let (a, b) = (1.0 - y, 1.0 + y);
            if a <= 0.0 || b <= 0.0 {
                return 0.0;
            }
            let (ln_p, s) = eval_poly_ln(&spec, y).expect("valid spec");
            if s == 0.0 {
                return 0.0;
            }
            ((-4.0 * gl - 8.0) * LN_2 + e_minus * a.ln() + e_plus * b.ln() + 4.0 * ln_p).exp()
        };
        let (v, _) = integrate_split(&f, -1.0, 1.0, &zeros, config, "K3 momentum integral")?;
        Ok(v)
    }

    /// Position disequilibrium by quadrature:
    /// (⟨ρ⟩, K1, K2) with ⟨ρ⟩ = 2^{D-2} Z^D / η^{D+2} · K1 · K2.
    pub fn disequilibrium_position(&self, config: &QuadConfig) -> Result<(f64, f64, f64)> {
        let k1 = self.k1(config)?;
        let k2 = self.k2(config)?;
        let d = self.d as f64;
        let pref = ((d - 2.0) * LN_2 + d * self.z.ln() - (d + 2.0) * self.eta().ln()).exp();
        Ok((pref * k1 * k2, k1, k2))
    }

    /// Momentum disequilibrium by quadrature:
    /// (⟨γ⟩, K3, K2) with ⟨γ⟩ = 2^{4𝓛+8} η^D / Z^D · K3 · K2.
    pub fn disequilibrium_momentum(&self, config: &QuadConfig) -> Result<(f64, f64, f64)> {
        let k3 = self.k3(config)?;
        let k2 = self.k2(config)?;
        let d = self.d as f64;
        let pref = ((4.0 * self.grand_l() + 8.0) * LN_2 + d * (self.eta().ln() - self.z.ln()))
            .exp();
        Ok((pref * k3 * k2, k3, k2))
    }

    /// A(n,l,D) of the radial position entropy.
    fn a_constant(&self) -> f64 {
        let eta = self.eta();
        let gl = self.grand_l();
        let l = self.l() as f64;
        let d = self.d as f64;
        -2.0 * l * ((2.0 * eta - 2.0 * gl - 1.0) / (2.0 * eta) + digamma_unchecked(eta + gl + 1.0))
            + (3.0 * eta * eta - gl * (gl + 1.0)) / eta
            - ((d - 1.0) * LN_2 - (d + 1.0) * eta.ln())
    }

    /// B(l,{μ},D) of the hyperangular entropy.
    fn b_constant(&self) -> f64 {
        let mut b = (2.0 * PI).ln();
        for (j, (_, mu_next)) in self.angular_factors().into_iter().enumerate() {
            let alpha_j = (self.d as f64 - (j + 1) as f64 - 1.0) / 2.0;
            let mu_j = self.mu[j].unsigned_abs() as f64;
            let mn = mu_next as f64;
            b -= 2.0
                * mn
                * (digamma_unchecked(2.0 * alpha_j + mu_j + mn)
                    - digamma_unchecked(alpha_j + mu_j)
                    - LN_2
                    - 1.0 / (2.0 * (alpha_j + mu_j)));
        }
        b
    }

    /// F(n,l,D) of the radial momentum entropy. At η = 1/2 (the D = 2
    /// ground state) the ratio 2η(2𝓛+1)/(4η²-1) is 0/0; there
    /// 2𝓛+1 = 2η-1 cancels, leaving 2η/(2η+1).
    fn f_constant(&self) -> f64 {
        let eta = self.eta();
        let gl = self.grand_l();
        let d = self.d as f64;
        let ratio = if (4.0 * eta * eta - 1.0).abs() < 1e-9 {
            2.0 * eta / (2.0 * eta + 1.0)
        } else {
            2.0 * eta * (2.0 * gl + 1.0) / (4.0 * eta * eta - 1.0)
        };
        -(d * eta.ln() - (2.0 * gl + 4.0) * LN_2)
            - (2.0 * gl + 4.0) * (digamma_unchecked(eta + gl + 1.0) - digamma_unchecked(eta))
            + (gl + 2.0) / eta
            - (d + 1.0) * (1.0 - ratio)
    }

    /// Hyperangular entropy S[𝒴] = B(l,{μ},D) - Σ_j E_0[C̃_j].
    pub fn shannon_angular(&self, config: &QuadConfig) -> Result<f64> {
        let mut s = self.b_constant();
        for (spec, _) in self.angular_factors() {
            s -= entropic_integral_e(&spec, 0, config)?;
        }
        Ok(s)
    }

    /// Position entropy (S, S_R, S_Y): the digamma constants plus numeric
    /// E-integrals, sign-free E entering with a minus.
    pub fn shannon_position(&self, config: &QuadConfig) -> Result<(f64, f64, f64)> {
        let e1 = entropic_integral_e(&self.laguerre_spec(), 1, config)?;
        let s_r = self.a_constant() - e1 / (2.0 * self.eta()) - self.d as f64 * self.z.ln();
        let s_y = self.shannon_angular(config)?;
        Ok((s_r + s_y, s_r, s_y))
    }

    /// Momentum entropy (S, radial part, S_Y).
    pub fn shannon_momentum(&self, config: &QuadConfig) -> Result<(f64, f64, f64)> {
        let e0 = entropic_integral_e(&self.momentum_spec(), 0, config)?;
        let s_m = self.f_constant() - e0 + self.d as f64 * self.z.ln();
        let s_y = self.shannon_angular(config)?;
        Ok((s_m + s_y, s_m, s_y))
    }

    /// Position LMC complexity ⟨ρ⟩ e^{S[ρ]}; the ground/circular closed
    /// forms short-circuit the quadrature pipeline with a closed-form tag.
    pub fn lmc_position(&self, config: &QuadConfig) -> Result<(f64, Method)> {
        if self.is_ground() {
            return Ok((gs_position_lmc(self.d), Method::ClosedForm));
        }
        if self.is_circular() {
            return Ok((circular_position_lmc(self.d, self.n), Method::ClosedForm));
        }
        self.lmc_position_quadrature(config)
            .map(|v| (v, Method::Quadrature))
    }

    /// Momentum LMC complexity ⟨γ⟩ e^{S[γ]} with the same closed-form
    /// short-circuit.
    pub fn lmc_momentum(&self, config: &QuadConfig) -> Result<(f64, Method)> {
        if self.is_ground() {
            return Ok((gs_momentum_lmc(self.d), Method::ClosedForm));
        }
        if self.is_circular() {
            return Ok((circular_momentum_lmc(self.d, self.n), Method::ClosedForm));
        }
        self.lmc_momentum_quadrature(config)
            .map(|v| (v, Method::Quadrature))
    }

    /// Full quadrature route for C[ρ]; closed forms never consulted.
    pub fn lmc_position_quadrature(&self, config: &QuadConfig) -> Result<f64> {
        let (diseq, _, _) = self.disequilibrium_position(config)?;
        let (s, _, _) = self.shannon_position(config)?;
        Ok(diseq * s.exp())
    }

    /// Full quadrature route for C[γ].
    pub fn lmc_momentum_quadrature(&self, config: &QuadConfig) -> Result<f64> {
        let (diseq, _, _) = self.disequilibrium_momentum(config)?;
        let (s, _, _) = self.shannon_momentum(config)?;
        Ok(diseq * s.exp())
    }
}

/// Both-space complexity bundle of one state.
#[derive(Debug, Clone)]
pub struct DualComplexity {
    pub position: SpaceComplexity,
    pub momentum: SpaceComplexity,
}

#[derive(Debug, Clone)]
pub struct SpaceComplexity {
    pub complexity: f64,
    pub disequilibrium: f64,
    pub shannon: f64,
    /// K1 (position) or K3 (momentum)
    pub k_radial: f64,
    pub k_angular: f64,
    pub method: Method,
}

/// Evaluate position and momentum complexities with all their parts.
pub fn dual_complexity(orb: &DOrbital, config: &QuadConfig) -> Result<DualComplexity> {
    let (dp, k1, k2) = orb.disequilibrium_position(config)?;
    let (sp, _, _) = orb.shannon_position(config)?;
    let (cp, method_p) = orb.lmc_position(config)?;
    let (dm, k3, _) = orb.disequilibrium_momentum(config)?;
    let (sm, _, _) = orb.shannon_momentum(config)?;
    let (cm, method_m) = orb.lmc_momentum(config)?;
    Ok(DualComplexity {
        position: SpaceComplexity {
            complexity: cp,
            disequilibrium: dp,
            shannon: sp,
            k_radial: k1,
            k_angular: k2,
            method: method_p,
        },
        momentum: SpaceComplexity {
            complexity: cm,
            disequilibrium: dm,
            shannon: sm,
            k_radial: k3,
            k_angular: k2,
            method: method_m,
        },
    })
}

// --- ground-state closed forms ---

/// ⟨ρ_gs⟩ = Z^D / ((D-1)^D π^{(D-1)/2} Γ((D+1)/2))
pub fn gs_position_diseq(d: u32, z: f64) -> f64 {
    let df = d as f64;
    (df * z.ln()
        - df * (df - 1.0).ln()
        - (df - 1.0) / 2.0 * PI.ln()
        - ln_gamma_unchecked((df + 1.0) / 2.0))
    .exp()
}

/// S[ρ_gs] = ln((D-1)^D 2^{-D} π^{(D-1)/2} Γ((D+1)/2)) + D - D ln Z
pub fn gs_position_shannon(d: u32, z: f64) -> f64 {
    let df = d as f64;
    df * (df - 1.0).ln() - df * LN_2
        + (df - 1.0) / 2.0 * PI.ln()
        + ln_gamma_unchecked((df + 1.0) / 2.0)
        + df
        - df * z.ln()
}

/// C[ρ_gs] = (e/2)^D
pub fn gs_position_lmc(d: u32) -> f64 {
    (E / 2.0).powi(d as i32)
}

/// ⟨γ_gs⟩ = ((2D-2)/Z)^D π^{-(D+2)/2} Γ²((D+1)/2) Γ(2+3D/2) / Γ(2D+2)
pub fn gs_momentum_diseq(d: u32, z: f64) -> f64 {
    let df = d as f64;
    (df * ((2.0 * df - 2.0).ln() - z.ln()) - (df + 2.0) / 2.0 * PI.ln()
        + 2.0 * ln_gamma_unchecked((df + 1.0) / 2.0)
        + ln_gamma_unchecked(2.0 + 1.5 * df)
        - ln_gamma_unchecked(2.0 * df + 2.0))
    .exp()
}

/// S[γ_gs] per the (D+1)[ψ(D+1) - ψ(D/2+1)] closed form.
pub fn gs_momentum_shannon(d: u32, z: f64) -> f64 {
    let df = d as f64;
    (df + 1.0) / 2.0 * PI.ln() - df * (df - 1.0).ln() - ln_gamma_unchecked((df + 1.0) / 2.0)
        + (df + 1.0) * (digamma_unchecked(df + 1.0) - digamma_unchecked(df / 2.0 + 1.0))
        + df * z.ln()
}

/// C[γ_gs] (Z-free).
pub fn gs_momentum_lmc(d: u32) -> f64 {
    let df = d as f64;
    (df * LN_2 + ln_gamma_unchecked((df + 1.0) / 2.0) + ln_gamma_unchecked(2.0 + 1.5 * df)
        - 0.5 * PI.ln()
        - ln_gamma_unchecked(2.0 * df + 2.0)
        + (df + 1.0) * (digamma_unchecked(df + 1.0) - digamma_unchecked((df + 2.0) / 2.0)))
    .exp()
}

/// Ground-state position density closed form (isotropic exponential).
pub fn gs_position_density(d: u32, z: f64, r: f64) -> f64 {
    let df = d as f64;
    (df * (2.0 * z / (df - 1.0)).ln()
        - (df - 1.0) / 2.0 * PI.ln()
        - ln_gamma_unchecked((df + 1.0) / 2.0)
        - 4.0 * z * r / (df - 1.0))
    .exp()
}

/// Ground-state momentum density closed form (Lorentzian-type profile);
/// the prefactor ((D-1)/2)^D Γ(D+1)/(Z^D π^{D/2} Γ(D/2+1)) is fixed by
/// unit normalization and reduces to the familiar 8/(π²Z³) at D = 3.
pub fn gs_momentum_density(d: u32, z: f64, p: f64) -> f64 {
    let df = d as f64;
    let pt = p / z;
    (df * (((df - 1.0) / 2.0).ln() - z.ln()) + ln_gamma_unchecked(df + 1.0)
        - df / 2.0 * PI.ln()
        - ln_gamma_unchecked(df / 2.0 + 1.0))
    .exp()
        / (1.0 + (df - 1.0) * (df - 1.0) / 4.0 * pt * pt).powi(d as i32 + 1)
}

// --- circular-state closed forms ---

/// ⟨ρ_cs⟩ closed form.
pub fn circular_position_diseq(d: u32, n: u32, z: f64) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    (df * z.ln() + ln_gamma_unchecked(nf - 0.5) + ln_gamma_unchecked(2.0 * nf + (df - 3.0) / 2.0)
        - (2.0 * nf - 2.0) * LN_2
        - df / 2.0 * PI.ln()
        - df * (2.0 * nf + df - 3.0).ln()
        - ln_gamma_unchecked(nf)
        - 2.0 * ln_gamma_unchecked(nf + (df - 1.0) / 2.0))
    .exp()
}

/// S[ρ_cs] closed form.
pub fn circular_position_shannon(d: u32, n: u32, z: f64) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    2.0 * nf + df - 2.0
        - (nf - 1.0) * (digamma_unchecked(nf) + digamma_unchecked(nf + (df - 1.0) / 2.0))
        - df * LN_2
        + df * (2.0 * nf + df - 3.0).ln()
        + (df - 1.0) / 2.0 * PI.ln()
        + ln_gamma_unchecked(nf)
        + ln_gamma_unchecked(nf + (df - 1.0) / 2.0)
        - df * z.ln()
}

/// C[ρ_cs] closed form.
pub fn circular_position_lmc(d: u32, n: u32) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    (ln_gamma_unchecked(nf - 0.5) + ln_gamma_unchecked(2.0 * nf + (df - 3.0) / 2.0)
        - (2.0 * nf + df - 2.0) * LN_2
        - 0.5 * PI.ln()
        - ln_gamma_unchecked(nf + (df - 1.0) / 2.0)
        + 2.0 * nf
        + df
        - 2.0
        - (nf - 1.0) * (digamma_unchecked(nf) + digamma_unchecked(nf + (df - 1.0) / 2.0)))
    .exp()
}

/// ⟨γ_cs⟩ closed form.
pub fn circular_momentum_diseq(d: u32, n: u32, z: f64) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    ((4.0 * nf + df - 4.0) * LN_2 + df * (2.0 * nf + df - 3.0).ln()
        + 2.0 * ln_gamma_unchecked(nf + (df - 1.0) / 2.0)
        + ln_gamma_unchecked(2.0 * nf - 1.0)
        + ln_gamma_unchecked(2.0 * nf + 1.5 * df)
        - df * z.ln()
        - (df + 2.0) / 2.0 * PI.ln()
        - 2.0 * ln_gamma_unchecked(nf)
        - ln_gamma_unchecked(4.0 * nf + 2.0 * df - 2.0))
    .exp()
}

/// The digamma constant A(n,D) of the circular momentum entropy.
fn circular_momentum_a(d: u32, n: u32) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    (2.0 * nf + df - 1.0) / (2.0 * nf + df - 3.0) - (df + 1.0) / (2.0 * nf + df - 2.0)
        - (nf - 1.0) * digamma_unchecked(nf)
        - (df + 1.0) / 2.0 * digamma_unchecked(nf + (df - 2.0) / 2.0)
        + (nf + (df - 1.0) / 2.0) * digamma_unchecked(nf + (df - 3.0) / 2.0)
}

/// S[γ_cs] closed form.
pub fn circular_momentum_shannon(d: u32, n: u32, z: f64) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    circular_momentum_a(d, n)
        + (df + 1.0) * LN_2
        + df * z.ln()
        + (df + 1.0) / 2.0 * PI.ln()
        + ln_gamma_unchecked(nf)
        - df * (2.0 * nf + df - 3.0).ln()
        - ln_gamma_unchecked(nf + (df - 1.0) / 2.0)
}

/// C[γ_cs] closed form.
pub fn circular_momentum_lmc(d: u32, n: u32) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    ((4.0 * nf + 2.0 * df - 3.0) * LN_2 + ln_gamma_unchecked(nf + (df - 1.0) / 2.0)
        + ln_gamma_unchecked(2.0 * nf - 1.0)
        + ln_gamma_unchecked(2.0 * nf + 1.5 * df)
        - 0.5 * PI.ln()
        - ln_gamma_unchecked(nf)
        - ln_gamma_unchecked(4.0 * nf + 2.0 * df - 2.0)
        + circular_momentum_a(d, n))
    .exp()
}

// --- asymptotics ---

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    Ground,
    Circular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticRegime {
    /// D → ∞ pseudoclassical limit
    LargeD,
    /// n → ∞ Rydberg limit
    Rydberg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Position,
    Momentum,
}

/// Asymptotic complexity values: the large-D and Rydberg limits of the
/// ground/circular closed forms.
pub fn asymptotics_d(
    kind: StateKind,
    regime: AsymptoticRegime,
    space: Space,
    d: u32,
    n: u32,
) -> f64 {
    let df = d as f64;
    let nf = n as f64;
    match (kind, regime, space) {
        // the ground-state position complexity is exactly (e/2)^D
        (StateKind::Ground, _, Space::Position) => (E / 2.0).powi(d as i32),
        (StateKind::Ground, AsymptoticRegime::LargeD, Space::Momentum) => {
            // 3^{3(D+1)/2} / (2^{2D+3/2} √e): the n = 1 case of the
            // circular large-D form, to which the exact value converges
            (1.5 * (df + 1.0) * 3.0_f64.ln() - (2.0 * df + 1.5) * LN_2 - 0.5).exp()
        }
        (StateKind::Ground, AsymptoticRegime::Rydberg, Space::Momentum) => gs_momentum_lmc(d),
        (StateKind::Circular, AsymptoticRegime::LargeD, Space::Position) => {
            ((df + 2.0 * nf - 2.0) * (1.0 - LN_2)
                + (1.0 - nf) * digamma_unchecked(nf)
                + ln_gamma_unchecked(nf - 0.5)
                - 0.5 * PI.ln())
            .exp()
        }
        (StateKind::Circular, AsymptoticRegime::Rydberg, _) => (E / 2.0).powf((df - 1.0) / 2.0),
        (StateKind::Circular, AsymptoticRegime::LargeD, Space::Momentum) => {
            (df * (1.5 * 3.0_f64.ln() - 2.0 * LN_2)
                + (2.0 * nf - 0.5) * 3.0_f64.ln()
                + ln_gamma_unchecked(2.0 * nf - 1.0)
                - (4.0 * nf - 2.5) * LN_2
                - ln_gamma_unchecked(nf)
                + (1.0 - nf) * digamma_unchecked(nf)
                - 0.5)
                .exp()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hydrogen3d::Orbital3D;
    use crate::quadrature::integrate;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn validation() {
        assert!(DOrbital::new(1, 1.0, 1, vec![]).is_err());
        assert!(DOrbital::new(3, 1.0, 1, vec![0]).is_err()); // wrong μ count
        assert!(DOrbital::new(4, 1.0, 3, vec![1, 2, 0]).is_err()); // not decreasing
        assert!(DOrbital::new(3, 1.0, 2, vec![2, 0]).is_err()); // l > n-1
        assert!(DOrbital::new(4, 1.0, 3, vec![2, 1, -1]).is_ok());
    }

    #[test]
    fn energy_reductions() {
        // D = 3 reduces to -Z²/(2n²)
        let o = DOrbital::new(3, 2.0, 3, vec![1, 0]).unwrap();
        assert_relative_eq!(o.energy(), -4.0 / 18.0, max_relative = 1e-14);
        // (D=5, n=1): η = 2 -> -1/8
        let o = DOrbital::ground(5, 1.0).unwrap();
        assert_relative_eq!(o.energy(), -0.125, max_relative = 1e-14);
        // gs energy = -2 (Z/(D-1))²
        for d in 2..=8u32 {
            let o = DOrbital::ground(d, 1.3).unwrap();
            let expect = -2.0 * (1.3 / (d as f64 - 1.0)).powi(2);
            assert_relative_eq!(o.energy(), expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn densities_normalized_by_iterated_quadrature() {
        for (d, n, mu) in [
            (2u32, 2u32, vec![1]),
            (3, 2, vec![1, 0]),
            (4, 3, vec![2, 1, 1]),
            (5, 3, vec![2, 2, 1, 0]),
        ] {
            let orb = DOrbital::new(d, 1.4, n, mu).unwrap();
            let (nr, _) = integrate(
                |r| orb.radial_sq(r) * r.powi(d as i32 - 1),
                Interval::HalfInfinite(0.0),
                &cfg(),
            )
            .unwrap();
            assert_abs_diff_eq!(nr, 1.0, epsilon = 1e-7);
            let (np, _) = integrate(
                |p| orb.momentum_radial_sq(p) * p.powi(d as i32 - 1),
                Interval::HalfInfinite(0.0),
                &cfg(),
            )
            .unwrap();
            assert_abs_diff_eq!(np, 1.0, epsilon = 1e-7);
            // per-angle factors of |𝒴|² each normalize against sin^{2α_j}
            for (j, (spec, mu_next)) in orb.angular_factors().into_iter().enumerate() {
                let alpha_j = (d as f64 - (j + 1) as f64 - 1.0) / 2.0;
                let (na, _) = integrate(
                    move |t: f64| {
                        let s = 1.0 - t * t;
                        if s <= 0.0 {
                            return 0.0;
                        }
                        let (p, _) = eval_poly_with_deriv(&spec, t).unwrap();
                        p * p * s.powf(mu_next as f64 + alpha_j - 0.5)
                    },
                    Interval::Finite(-1.0, 1.0),
                    &cfg(),
                )
                .unwrap();
                assert_abs_diff_eq!(na, 1.0, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn d3_slice_matches_hydrogen3d() {
        for (n, l, m) in [(1u32, 0u32, 0i32), (2, 1, 1), (3, 2, 0)] {
            let d3 = DOrbital::new(3, 1.7, n, vec![l as i32, m]).unwrap();
            let o3 = Orbital3D::new(1.7, n, l, m).unwrap();
            for r in [0.3, 1.0, 4.2] {
                for theta in [0.4, 1.2, 2.8] {
                    let a = d3.position_density(r, &[theta]);
                    let b = o3.density(r, theta);
                    assert_relative_eq!(a, b, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn gs_densities_match_closed_forms() {
        for d in 2..=6u32 {
            let orb = DOrbital::ground(d, 1.2).unwrap();
            let angles = vec![std::f64::consts::FRAC_PI_2; (d - 2) as usize];
            for r in [0.2, 1.0, 3.0] {
                assert_relative_eq!(
                    orb.position_density(r, &angles),
                    gs_position_density(d, 1.2, r),
                    max_relative = 1e-10
                );
            }
            for p in [0.1, 0.9, 2.5] {
                assert_relative_eq!(
                    orb.momentum_density(p, &angles),
                    gs_momentum_density(d, 1.2, p),
                    max_relative = 1e-9
                );
            }
        }
    }

    #[test]
    fn gs_closed_forms_vs_quadrature() {
        for d in 2..=6u32 {
            let orb = DOrbital::ground(d, 1.0).unwrap();
            let (diseq, _, _) = orb.disequilibrium_position(&cfg()).unwrap();
            assert_relative_eq!(diseq, gs_position_diseq(d, 1.0), max_relative = 1e-8);
            let (s, _, _) = orb.shannon_position(&cfg()).unwrap();
            assert_abs_diff_eq!(s, gs_position_shannon(d, 1.0), epsilon = 1e-8);
            let (dm, _, _) = orb.disequilibrium_momentum(&cfg()).unwrap();
            assert_relative_eq!(dm, gs_momentum_diseq(d, 1.0), max_relative = 1e-8);
            let (sm, _, _) = orb.shannon_momentum(&cfg()).unwrap();
            assert_abs_diff_eq!(sm, gs_momentum_shannon(d, 1.0), epsilon = 1e-8);
            let c = orb.lmc_position_quadrature(&cfg()).unwrap();
            assert_relative_eq!(c, gs_position_lmc(d), max_relative = 1e-7);
            let cm = orb.lmc_momentum_quadrature(&cfg()).unwrap();
            assert_relative_eq!(cm, gs_momentum_lmc(d), max_relative = 1e-7);
        }
    }

    #[test]
    fn gs_momentum_values() {
        // D = 2, 3, 4 -> 1.7926, 2.3545, 3.0799
        assert_abs_diff_eq!(gs_momentum_lmc(2), 1.7926, epsilon = 5e-4);
        assert_abs_diff_eq!(gs_momentum_lmc(3), 2.3545, epsilon = 5e-4);
        assert_abs_diff_eq!(gs_momentum_lmc(4), 3.0799, epsilon = 5e-4);
        // exact forms: 2e^{3/2}/5 and 66 e^{-10/3}
        assert_relative_eq!(
            gs_momentum_lmc(2),
            2.0 * E.powf(1.5) / 5.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            gs_momentum_lmc(3),
            66.0 * (-10.0_f64 / 3.0).exp(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn circular_reduces_to_gs_at_n1() {
        for d in 2..=10u32 {
            assert_relative_eq!(
                circular_position_lmc(d, 1),
                gs_position_lmc(d),
                max_relative = 1e-12
            );
            assert_relative_eq!(
                circular_momentum_lmc(d, 1),
                gs_momentum_lmc(d),
                max_relative = 1e-12
            );
            assert_relative_eq!(
                circular_position_diseq(d, 1, 1.3),
                gs_position_diseq(d, 1.3),
                max_relative = 1e-12
            );
            assert_relative_eq!(
                circular_momentum_diseq(d, 1, 0.7),
                gs_momentum_diseq(d, 0.7),
                max_relative = 1e-12
            );
            assert_abs_diff_eq!(
                circular_position_shannon(d, 1, 2.0),
                gs_position_shannon(d, 2.0),
                epsilon = 1e-11
            );
            assert_abs_diff_eq!(
                circular_momentum_shannon(d, 1, 2.0),
                gs_momentum_shannon(d, 2.0),
                epsilon = 1e-11
            );
        }
    }

    #[test]
    fn circular_closed_forms_vs_quadrature() {
        for d in [2u32, 3, 4] {
            for n in [2u32, 3] {
                let orb = DOrbital::circular(d, 1.0, n).unwrap();
                let (diseq, _, _) = orb.disequilibrium_position(&cfg()).unwrap();
                assert_relative_eq!(
                    diseq,
                    circular_position_diseq(d, n, 1.0),
                    max_relative = 1e-8
                );
                let (dm, _, _) = orb.disequilibrium_momentum(&cfg()).unwrap();
                assert_relative_eq!(
                    dm,
                    circular_momentum_diseq(d, n, 1.0),
                    max_relative = 1e-8
                );
                let (s, _, _) = orb.shannon_position(&cfg()).unwrap();
                assert_abs_diff_eq!(s, circular_position_shannon(d, n, 1.0), epsilon = 1e-8);
                let (sm, _, _) = orb.shannon_momentum(&cfg()).unwrap();
                assert_abs_diff_eq!(sm, circular_momentum_shannon(d, n, 1.0), epsilon = 1e-8);
                let c = orb.lmc_position_quadrature(&cfg()).unwrap();
                assert_relative_eq!(c, circular_position_lmc(d, n), max_relative = 1e-7);
                let cm = orb.lmc_momentum_quadrature(&cfg()).unwrap();
                assert_relative_eq!(cm, circular_momentum_lmc(d, n), max_relative = 1e-7);
            }
        }
    }

    #[test]
    fn entropy_decomposition_matches_direct_quadrature_generic_states() {
        // states with mixed hyperangular momenta exercise every term of
        // the B(l,{μ},D) constant; the oracle is the direct definitional
        // entropy, radial and per-angle pieces integrated numerically
        for (d, n, mu) in [(4u32, 3u32, vec![1, 1, 0]), (5, 3, vec![2, 1, 1, -1]), (4, 2, vec![1, 0, 0])] {
            let orb = DOrbital::new(d, 1.3, n, mu).unwrap();
            let cfg = cfg();

            // radial: -∫ r^{D-1} R² ln R² dr
            let o = orb.clone();
            let (s_rad_direct, _) = integrate(
                move |r: f64| {
                    let f = o.radial_sq(r);
                    if f <= 0.0 {
                        return 0.0;
                    }
                    -r.powi(o.d as i32 - 1) * f * f.ln()
                },
                Interval::HalfInfinite(0.0),
                &cfg,
            )
            .unwrap();
            let (_, s_rad, s_ang) = orb.shannon_position(&cfg).unwrap();
            assert_abs_diff_eq!(s_rad, s_rad_direct, epsilon = 1e-7);

            // angular: ln 2π - Σ_j ∫ f_j (ln C̃_j² + μ_{j+1} ln(1-t²)) dt
            let mut s_ang_direct = (2.0 * PI).ln();
            for (j, (spec, mu_next)) in orb.angular_factors().into_iter().enumerate() {
                let alpha_j = (d as f64 - (j + 1) as f64 - 1.0) / 2.0;
                let lam = alpha_j + mu_next as f64;
                let (v, _) = integrate(
                    move |t: f64| {
                        let w = 1.0 - t * t;
                        if w <= 0.0 {
                            return 0.0;
                        }
                        let (p, _) = eval_poly_with_deriv(&spec, t).unwrap();
                        if p == 0.0 {
                            return 0.0;
                        }
                        let f = p * p * w.powf(lam - 0.5);
                        f * ((p * p).ln() + mu_next as f64 * w.ln())
                    },
                    Interval::Finite(-1.0, 1.0),
                    &cfg,
                )
                .unwrap();
                s_ang_direct -= v;
            }
            assert_abs_diff_eq!(s_ang, s_ang_direct, epsilon = 1e-7);

            // momentum radial: -∫ p^{D-1} M² ln M² dp
            let o = orb.clone();
            let (s_mom_direct, _) = integrate(
                move |p: f64| {
                    let f = o.momentum_radial_sq(p);
                    if f <= 0.0 {
                        return 0.0;
                    }
                    -p.powi(o.d as i32 - 1) * f * f.ln()
                },
                Interval::HalfInfinite(0.0),
                &cfg,
            )
            .unwrap();
            let (_, s_mom, _) = orb.shannon_momentum(&cfg).unwrap();
            assert_abs_diff_eq!(s_mom, s_mom_direct, epsilon = 1e-7);
        }
    }

    #[test]
    fn z_invariance() {
        let orb_a = DOrbital::new(4, 0.5, 3, vec![1, 1, 0]).unwrap();
        let orb_b = DOrbital::new(4, 10.0, 3, vec![1, 1, 0]).unwrap();
        let ca = orb_a.lmc_position_quadrature(&cfg()).unwrap();
        let cb = orb_b.lmc_position_quadrature(&cfg()).unwrap();
        assert_abs_diff_eq!(ca, cb, epsilon = 1e-9 * ca);
        let ma = orb_a.lmc_momentum_quadrature(&cfg()).unwrap();
        let mb = orb_b.lmc_momentum_quadrature(&cfg()).unwrap();
        assert_abs_diff_eq!(ma, mb, epsilon = 1e-9 * ma);
    }

    #[test]
    fn uncertainty_product_and_monotonicity() {
        for d in [2u32, 5] {
            let mut prev = f64::INFINITY;
            for n in 1..=3u32 {
                let c = circular_position_lmc(d, n);
                let cm = circular_momentum_lmc(d, n);
                assert!(c * cm >= E / 2.0 - 1e-12, "uncertainty product at D={d} n={n}");
                assert!(c < prev, "C[rho_cs] must decrease with n at D={d}");
                prev = c;
            }
        }
    }

    #[test]
    fn asymptotic_values() {
        // Rydberg circular limits are (e/2)^{(D-1)/2} in both spaces
        for d in [3u32, 7] {
            let v = asymptotics_d(
                StateKind::Circular,
                AsymptoticRegime::Rydberg,
                Space::Position,
                d,
                50,
            );
            assert_relative_eq!(
                v,
                (E / 2.0).powf((d as f64 - 1.0) / 2.0),
                max_relative = 1e-13
            );
            let vm = asymptotics_d(
                StateKind::Circular,
                AsymptoticRegime::Rydberg,
                Space::Momentum,
                d,
                50,
            );
            assert_relative_eq!(vm, v, max_relative = 1e-13);
        }
        // gs momentum at D = 200: exact value within 5% of the large-D form
        let exact = gs_momentum_lmc(200);
        let asym = asymptotics_d(
            StateKind::Ground,
            AsymptoticRegime::LargeD,
            Space::Momentum,
            200,
            1,
        );
        assert!(
            (exact - asym).abs() / exact < 0.05,
            "exact {exact} vs asymptotic {asym}"
        );
    }

    #[test]
    fn dual_complexity_tags() {
        let gs = DOrbital::ground(3, 1.0).unwrap();
        let dc = dual_complexity(&gs, &cfg()).unwrap();
        assert_eq!(dc.position.method, Method::ClosedForm);
        assert_relative_eq!(
            dc.position.complexity,
            (E / 2.0).powi(3),
            max_relative = 1e-12
        );
        let generic = DOrbital::new(3, 1.0, 3, vec![1, 0]).unwrap();
        let dcg = dual_complexity(&generic, &cfg()).unwrap();
        assert_eq!(dcg.position.method, Method::Quadrature);
        assert!(dcg.position.complexity * dcg.momentum.complexity >= E / 2.0);
    }
}
