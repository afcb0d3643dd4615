//! Row builders: every subcommand target produces one named CSV row per
//! parameter point, and the sweep machinery selects columns from them.

use std::collections::BTreeMap;

use qcx::hydrod::{dual_complexity, DOrbital};
use qcx::hydrogen3d::{hydro_measures, Orbital3D};
use qcx::kleingordon::{kg_report, KGOrbital, PION_MASS};
use qcx::polyspread::{
    hermite_fisher, hermite_moment, hermite_report, laguerre_report, BoundParams, Method,
};
use qcx::quadrature::{FisherInfo, QuadConfig};
use qcx::QcxError;

use crate::output::Cell;

pub type Row = Vec<(&'static str, Cell)>;

/// Parameter bag: every target reads what it needs and rejects unknowns.
#[derive(Debug, Clone, Default)]
pub struct Params(pub BTreeMap<String, f64>);

impl Params {
    pub fn get(&self, key: &str) -> Option<f64> {
        self.0.get(key).copied()
    }

    fn require(&self, key: &str) -> Result<f64, String> {
        self.get(key)
            .ok_or_else(|| format!("missing parameter '{key}'"))
    }

    fn require_u32(&self, key: &str) -> Result<u32, String> {
        let v = self.require(key)?;
        if v < 0.0 || v.fract() != 0.0 {
            return Err(format!("parameter '{key}' must be a non-negative integer"));
        }
        Ok(v as u32)
    }

    fn require_i32(&self, key: &str) -> Result<i32, String> {
        let v = self.require(key)?;
        if v.fract() != 0.0 {
            return Err(format!("parameter '{key}' must be an integer"));
        }
        Ok(v as i32)
    }
}

pub fn fisher_cell(f: &FisherInfo) -> Cell {
    match f {
        FisherInfo::Finite(v) => Cell::Num(*v),
        FisherInfo::Divergent => Cell::Text("divergent".into()),
    }
}

fn method_cell(m: Method) -> Cell {
    Cell::Text(
        match m {
            Method::ClosedForm => "closed-form",
            Method::Bell => "bell",
            Method::Lauricella => "lauricella",
            Method::Quadrature => "quadrature",
        }
        .into(),
    )
}

/// Errors keep their numeric/argument distinction for the exit code.
pub enum RowError {
    Argument(String),
    Numerical(QcxError),
}

impl From<QcxError> for RowError {
    fn from(e: QcxError) -> Self {
        match e {
            QcxError::NonConvergent { .. } => RowError::Numerical(e),
            other => RowError::Argument(other.to_string()),
        }
    }
}

impl From<String> for RowError {
    fn from(s: String) -> Self {
        RowError::Argument(s)
    }
}

pub fn hydrogen_row(p: &Params, config: &QuadConfig) -> Result<Row, RowError> {
    let z = p.get("Z").unwrap_or(1.0);
    let n = p.require_u32("n")?;
    let l = p.require_u32("l")?;
    let m = p.require_i32("m")?;
    let orb = Orbital3D::new(z, n, l, m).map_err(RowError::from)?;
    let meas = hydro_measures(&orb, config).map_err(RowError::from)?;
    let gs = Orbital3D::new(z, 1, 0, 0).expect("ground state");
    let (g_cr, g_fs, g_sc) = gs.complexities(config).map_err(RowError::from)?;
    Ok(vec![
        ("n", Cell::Int(n as i64)),
        ("l", Cell::Int(l as i64)),
        ("m", Cell::Int(m as i64)),
        ("Z", Cell::Num(z)),
        ("energy", Cell::Num(meas.energy)),
        ("variance", Cell::Num(meas.variance)),
        ("fisher", Cell::Num(meas.fisher)),
        ("r_mean", Cell::Num(meas.r_mean)),
        ("shannon", Cell::Num(meas.shannon)),
        ("shannon_radial", Cell::Num(meas.shannon_radial)),
        ("shannon_angular", Cell::Num(meas.shannon_angular)),
        ("diseq", Cell::Num(meas.disequilibrium)),
        ("c_cr", Cell::Num(meas.c_cr)),
        ("c_fs", Cell::Num(meas.c_fs)),
        ("c_sc", Cell::Num(meas.c_sc)),
        ("b_fs", Cell::Num(meas.b_fs)),
        ("b_sc", Cell::Num(meas.b_sc)),
        ("xi_fs", Cell::Num(meas.xi_fs)),
        ("xi_sc", Cell::Num(meas.xi_sc)),
        ("zeta_cr", Cell::Num(meas.c_cr / g_cr)),
        ("zeta_fs", Cell::Num(meas.c_fs / g_fs)),
        ("zeta_sc", Cell::Num(meas.c_sc / g_sc)),
    ])
}

pub fn hydrod_row(p: &Params, config: &QuadConfig) -> Result<Row, RowError> {
    let d = p.require_u32("D")?;
    let z = p.get("Z").unwrap_or(1.0);
    let n = p.require_u32("n")?;
    // μ values come in as mu1..mu{D-1}; the ground/circular shortcuts fill
    // them when the caller sets kind=0/1.
    let orb = match p.get("kind") {
        Some(k) if k == 0.0 => DOrbital::ground(d, z).map_err(RowError::from)?,
        Some(k) if k == 1.0 => DOrbital::circular(d, z, n).map_err(RowError::from)?,
        _ => {
            let mut mu = Vec::new();
            for j in 1..d {
                mu.push(p.require_i32(&format!("mu{j}"))?);
            }
            DOrbital::new(d, z, n, mu).map_err(RowError::from)?
        }
    };
    let dc = dual_complexity(&orb, config).map_err(RowError::from)?;
    Ok(vec![
        ("D", Cell::Int(d as i64)),
        ("Z", Cell::Num(z)),
        ("n", Cell::Int(n as i64)),
        ("l", Cell::Int(orb.l() as i64)),
        ("c_pos", Cell::Num(dc.position.complexity)),
        ("c_mom", Cell::Num(dc.momentum.complexity)),
        ("diseq_pos", Cell::Num(dc.position.disequilibrium)),
        ("diseq_mom", Cell::Num(dc.momentum.disequilibrium)),
        ("shannon_pos", Cell::Num(dc.position.shannon)),
        ("shannon_mom", Cell::Num(dc.momentum.shannon)),
        ("k1", Cell::Num(dc.position.k_radial)),
        ("k2", Cell::Num(dc.position.k_angular)),
        ("k3", Cell::Num(dc.momentum.k_radial)),
        ("uncertainty_product", Cell::Num(dc.position.complexity * dc.momentum.complexity)),
        ("method_pos", method_cell(dc.position.method)),
        ("method_mom", method_cell(dc.momentum.method)),
    ])
}

pub fn kleingordon_row(p: &Params, config: &QuadConfig) -> Result<Row, RowError> {
    let z = p.require("Z")?;
    let n = p.require_u32("n")?;
    let l = p.require_u32("l")?;
    let m = p.require_i32("m")?;
    let mass = p.get("mass").unwrap_or(PION_MASS);
    let orb = KGOrbital::new(z, n, l, m, mass).map_err(RowError::from)?;
    let der = orb.derived().map_err(RowError::from)?;
    let rep = kg_report(&orb, config).map_err(RowError::from)?;
    Ok(vec![
        ("Z", Cell::Num(z)),
        ("n", Cell::Int(n as i64)),
        ("l", Cell::Int(l as i64)),
        ("m", Cell::Int(m as i64)),
        ("mass", Cell::Num(mass)),
        ("l_prime", Cell::Num(der.l_prime)),
        ("epsilon", Cell::Num(der.epsilon)),
        ("centroid", Cell::Num(rep.centroid)),
        ("variance", Cell::Num(rep.variance)),
        ("shannon", Cell::Num(rep.shannon)),
        ("shannon_power", Cell::Num(rep.shannon_power)),
        ("fisher", fisher_cell(&rep.fisher)),
        ("c_fs", fisher_cell(&rep.complexities.c_fs)),
        ("c_sc", fisher_cell(&rep.complexities.c_sc)),
        ("centroid_ratio", Cell::Num(rep.centroid_ratio)),
        ("variance_ratio", Cell::Num(rep.variance_ratio)),
        ("shannon_power_ratio", Cell::Num(rep.shannon_power_ratio)),
        (
            "fisher_ratio",
            rep.fisher_ratio.map_or(Cell::Empty, Cell::Num),
        ),
        ("zeta_fs", Cell::Num(rep.complexities.zeta_fs)),
        ("zeta_sc", Cell::Num(rep.complexities.zeta_sc)),
    ])
}

pub fn polylen_hermite_row(p: &Params, config: &QuadConfig) -> Result<Row, RowError> {
    let n = p.require_u32("n")? as usize;
    let q = p.get("q").unwrap_or(2.0);
    if q < 2.0 || q.fract() != 0.0 {
        return Err(RowError::Argument(
            "q must be an integer >= 2 for the report row".into(),
        ));
    }
    let rep = hermite_report(n, &[q as u32], config).map_err(RowError::from)?;
    let (k_opt, c_opt) = match rep.shannon_bounds.first() {
        Some((BoundParams::HermiteK(k), c)) => (*k, *c),
        _ => unreachable!("hermite report always carries its bound"),
    };
    let (fisher, flen) = hermite_fisher(n);
    Ok(vec![
        ("n", Cell::Int(n as i64)),
        ("q", Cell::Num(q)),
        ("std_dev", Cell::Num(rep.std_dev)),
        ("w_q", Cell::Num(rep.entropic_moments[0].1)),
        ("renyi_length", Cell::Num(rep.renyi_lengths[0].1)),
        ("shannon_length", Cell::Num(rep.shannon_length)),
        ("shannon_asymptotic", Cell::Num(rep.shannon_asymptotic)),
        ("k_opt", Cell::Int(k_opt as i64)),
        ("bound_opt", Cell::Num(c_opt)),
        ("fisher", Cell::Num(fisher)),
        ("fisher_length", Cell::Num(flen)),
        ("x2_moment", Cell::Num(hermite_moment(n, 2).map_err(RowError::from)?)),
        ("method", method_cell(rep.entropic_method)),
    ])
}

pub fn polylen_laguerre_row(p: &Params, config: &QuadConfig) -> Result<Row, RowError> {
    let n = p.require_u32("n")? as usize;
    let alpha = p.get("alpha").unwrap_or(0.0);
    let q = p.get("q").unwrap_or(2.0);
    if q < 2.0 || q.fract() != 0.0 {
        return Err(RowError::Argument(
            "q must be an integer >= 2 for the report row".into(),
        ));
    }
    let rep = laguerre_report(n, alpha, &[q as u32], config).map_err(RowError::from)?;
    let ((b_opt, m_opt), bound) = match rep.shannon_bounds.first() {
        Some((BoundParams::LaguerreBM { b, m }, c)) => ((*b, *m), *c),
        _ => unreachable!("laguerre report always carries its bound"),
    };
    Ok(vec![
        ("n", Cell::Int(n as i64)),
        ("alpha", Cell::Num(alpha)),
        ("q", Cell::Num(q)),
        ("std_dev", Cell::Num(rep.std_dev)),
        ("w_q", Cell::Num(rep.entropic_moments[0].1)),
        ("renyi_length", Cell::Num(rep.renyi_lengths[0].1)),
        ("shannon_length", Cell::Num(rep.shannon_length)),
        ("shannon_asymptotic", Cell::Num(rep.shannon_asymptotic)),
        ("b_opt", Cell::Num(b_opt)),
        ("m_opt", Cell::Num(m_opt)),
        ("bound_opt", Cell::Num(bound)),
        ("fisher", fisher_cell(&rep.fisher_info)),
        ("fisher_length", Cell::Num(rep.fisher_length)),
        ("method", method_cell(rep.entropic_method)),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Hydrogen,
    Hydrod,
    KleinGordon,
    PolylenHermite,
    PolylenLaguerre,
}

impl Target {
    pub fn parse(name: &str) -> Result<Self, String> {
        match name {
            "hydrogen" => Ok(Target::Hydrogen),
            "hydrod" => Ok(Target::Hydrod),
            "kleingordon" => Ok(Target::KleinGordon),
            "polylen-hermite" => Ok(Target::PolylenHermite),
            "polylen-laguerre" => Ok(Target::PolylenLaguerre),
            other => Err(format!(
                "unknown sweep target '{other}' (expected hydrogen, hydrod, kleingordon, polylen-hermite or polylen-laguerre)"
            )),
        }
    }

    pub fn build_row(&self, p: &Params, config: &QuadConfig) -> Result<Row, RowError> {
        match self {
            Target::Hydrogen => hydrogen_row(p, config),
            Target::Hydrod => hydrod_row(p, config),
            Target::KleinGordon => kleingordon_row(p, config),
            Target::PolylenHermite => polylen_hermite_row(p, config),
            Target::PolylenLaguerre => polylen_laguerre_row(p, config),
        }
    }
}
