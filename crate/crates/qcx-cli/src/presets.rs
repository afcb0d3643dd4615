//! Named presets bundling the reference figure/table parameters, so a
//! reproduction is one command. Every preset is a deterministic table:
//! rows are computed by a bounded pool and reduced in axis order.

use qcx::hydrod;
use qcx::hydrogen3d::Orbital3D;
use qcx::kleingordon::{kg_report, KGOrbital};
use qcx::polyspread::{
    hermite_report, hermite_shannon_bound_opt, laguerre_report, laguerre_shannon_bound_opt,
    laguerre_shannon_bound_opt_m0,
};
use qcx::quadrature::QuadConfig;
use rayon::prelude::*;

use crate::output::Cell;
use crate::rows::RowError;

pub struct PresetTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

pub const PRESET_NAMES: &[&str] = &[
    "fig-1.1",
    "fig-1.4",
    "fig-1.5",
    "table-1.1",
    "fig-2.1",
    "fig-2.3",
    "fig-3.3",
    "fig-3.4",
    "fig-3.5",
    "fig-3.6",
    "fig-3.7",
    "fig-3.8",
    "fig-3.9",
    "fig-3.10",
    "fig-3.11",
    "fig-3.12",
    "fig-3.13",
    "fig-3.14",
    "fig-3.15",
    "table-4.1",
    "table-4.2",
    "table-4.3",
    "table-4.4",
    "table-4.5",
    "fig-4.1",
    "fig-4.2",
    "fig-4.3",
    "fig-4.4",
    "fig-4.5",
    "fig-4.6",
    "fig-4.7",
    "fig-4.8",
    "fig-4.9",
];

fn axis_cell(v: f64) -> Cell {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        Cell::Int(v as i64)
    } else {
        Cell::Num(v)
    }
}

/// Parallel table builder: the row function sees one axis value and
/// returns the non-axis cells; reduction is in axis order.
fn build<F>(
    axis: &str,
    values: Vec<f64>,
    columns: &[&str],
    workers: usize,
    row_fn: F,
) -> Result<PresetTable, RowError>
where
    F: Fn(f64) -> Result<Vec<Cell>, RowError> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| RowError::Argument(format!("worker pool: {e}")))?;
    let results: Vec<Result<Vec<Cell>, RowError>> =
        pool.install(|| values.par_iter().map(|&v| row_fn(v)).collect());
    let mut rows = Vec::with_capacity(values.len());
    for (v, res) in values.iter().zip(results) {
        let mut row = vec![axis_cell(*v)];
        row.extend(res?);
        rows.push(row);
    }
    let mut header = vec![axis.to_string()];
    header.extend(columns.iter().map(|s| s.to_string()));
    Ok(PresetTable { header, rows })
}

fn irange(a: i64, b: i64) -> Vec<f64> {
    (a..=b).map(|v| v as f64).collect()
}

fn frange(a: f64, b: f64, step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut k = 0;
    loop {
        let v = a + step * k as f64;
        if v > b + 1e-9 {
            break;
        }
        out.push(v);
        k += 1;
    }
    out
}

pub fn run_preset(
    name: &str,
    config: &QuadConfig,
    workers: usize,
) -> Result<PresetTable, RowError> {
    match name {
        "fig-1.1" => {
            let gs = Orbital3D::new(1.0, 1, 0, 0).expect("gs");
            let (g_cr, g_fs, g_sc) = gs.complexities(config)?;
            build(
                "n",
                irange(1, 10),
                &["zeta_fs", "zeta_cr", "zeta_sc", "c_fs", "c_cr", "c_sc", "shannon"],
                workers,
                |n| {
                    let orb = Orbital3D::new(1.0, n as u32, 0, 0)?;
                    let (c_cr, c_fs, c_sc) = orb.complexities(config)?;
                    let (s, _, _) = orb.shannon(config)?;
                    Ok(vec![
                        Cell::Num(c_fs / g_fs),
                        Cell::Num(c_cr / g_cr),
                        Cell::Num(c_sc / g_sc),
                        Cell::Num(c_fs),
                        Cell::Num(c_cr),
                        Cell::Num(c_sc),
                        Cell::Num(s),
                    ])
                },
            )
        }
        "fig-1.4" => {
            let gs = Orbital3D::new(1.0, 1, 0, 0).expect("gs");
            let (g_cr, g_fs, g_sc) = gs.complexities(config)?;
            build(
                "m",
                irange(0, 17),
                &["zeta_fs", "zeta_cr", "zeta_sc"],
                workers,
                |m| {
                    let orb = Orbital3D::new(1.0, 20, 17, m as i32)?;
                    let (c_cr, c_fs, c_sc) = orb.complexities(config)?;
                    Ok(vec![
                        Cell::Num(c_fs / g_fs),
                        Cell::Num(c_cr / g_cr),
                        Cell::Num(c_sc / g_sc),
                    ])
                },
            )
        }
        "fig-1.5" => {
            let gs = Orbital3D::new(1.0, 1, 0, 0).expect("gs");
            let (g_cr, g_fs, g_sc) = gs.complexities(config)?;
            build(
                "l",
                irange(1, 19),
                &["zeta_fs", "zeta_cr", "zeta_sc"],
                workers,
                |l| {
                    let orb = Orbital3D::new(1.0, 20, l as u32, 1)?;
                    let (c_cr, c_fs, c_sc) = orb.complexities(config)?;
                    Ok(vec![
                        Cell::Num(c_fs / g_fs),
                        Cell::Num(c_cr / g_cr),
                        Cell::Num(c_sc / g_sc),
                    ])
                },
            )
        }
        "table-1.1" => {
            // quadratic fits ζ_FS = a n² + b n + c of the gs-relative
            // Fisher-Shannon measure for (n,0,0) and (n,3,1), n up to 20
            let gs = Orbital3D::new(1.0, 1, 0, 0).expect("gs");
            let (_, g_fs, _) = gs.complexities(config)?;
            let mut rows = Vec::new();
            for (label, l, m, n_lo) in [("ns", 0u32, 0i32, 1i64), ("n31", 3, 1, 4)] {
                let ns: Vec<f64> = (n_lo..=20).map(|v| v as f64).collect();
                let mut cs = Vec::new();
                for &n in &ns {
                    let orb = Orbital3D::new(1.0, n as u32, l, m)?;
                    let (_, c_fs, _) = orb.complexities(config)?;
                    cs.push(c_fs / g_fs);
                }
                let (a, b, c, r) = quadratic_fit(&ns, &cs);
                rows.push(vec![
                    Cell::Text(label.to_string()),
                    Cell::Num(a),
                    Cell::Num(b),
                    Cell::Num(c),
                    Cell::Num(r),
                ]);
            }
            Ok(PresetTable {
                header: vec![
                    "state".into(),
                    "a".into(),
                    "b".into(),
                    "c".into(),
                    "r".into(),
                ],
                rows,
            })
        }
        "fig-2.1" => build(
            "D",
            irange(2, 10),
            &["c_pos_n1", "c_pos_n2", "c_pos_n3", "c_mom_n1", "c_mom_n2", "c_mom_n3"],
            workers,
            |d| {
                let d = d as u32;
                Ok(vec![
                    Cell::Num(hydrod::circular_position_lmc(d, 1)),
                    Cell::Num(hydrod::circular_position_lmc(d, 2)),
                    Cell::Num(hydrod::circular_position_lmc(d, 3)),
                    Cell::Num(hydrod::circular_momentum_lmc(d, 1)),
                    Cell::Num(hydrod::circular_momentum_lmc(d, 2)),
                    Cell::Num(hydrod::circular_momentum_lmc(d, 3)),
                ])
            },
        ),
        "fig-2.3" => build(
            "n",
            irange(1, 15),
            &["c_pos_d2", "c_pos_d5", "c_pos_d15"],
            workers,
            |n| {
                let n = n as u32;
                Ok(vec![
                    Cell::Num(hydrod::circular_position_lmc(2, n)),
                    Cell::Num(hydrod::circular_position_lmc(5, n)),
                    Cell::Num(hydrod::circular_position_lmc(15, n)),
                ])
            },
        ),
        "fig-3.3" => build(
            "n",
            irange(1, 8),
            &[
                "centroid_ratio_s",
                "variance_ratio_s",
                "centroid_ratio_circ",
                "variance_ratio_circ",
            ],
            workers,
            |n| {
                let n = n as u32;
                let s = moment_ratios(68.0, n, 0)?;
                let c = moment_ratios(68.0, n, n - 1)?;
                Ok(vec![
                    Cell::Num(s.0),
                    Cell::Num(s.1),
                    Cell::Num(c.0),
                    Cell::Num(c.1),
                ])
            },
        ),
        "fig-3.4" => build(
            "l",
            irange(0, 7),
            &["centroid_ratio", "variance_ratio"],
            workers,
            |l| {
                let (c, v) = moment_ratios(68.0, 8, l as u32)?;
                Ok(vec![Cell::Num(c), Cell::Num(v)])
            },
        ),
        "fig-3.5" => build(
            "Z",
            frange(2.0, 68.0, 2.0),
            &[
                "centroid_ratio_1s",
                "variance_ratio_1s",
                "centroid_ratio_2s",
                "variance_ratio_2s",
                "centroid_ratio_2p",
                "variance_ratio_2p",
            ],
            workers,
            |z| {
                let s1 = moment_ratios(z, 1, 0)?;
                let s2 = moment_ratios(z, 2, 0)?;
                let p2 = moment_ratios(z, 2, 1)?;
                Ok(vec![
                    Cell::Num(s1.0),
                    Cell::Num(s1.1),
                    Cell::Num(s2.0),
                    Cell::Num(s2.1),
                    Cell::Num(p2.0),
                    Cell::Num(p2.1),
                ])
            },
        ),
        "fig-3.6" => build(
            "n",
            irange(1, 8),
            &["shannon_ratio_s", "shannon_ratio_circ"],
            workers,
            |n| {
                let n = n as u32;
                let s = kg_report(&KGOrbital::pionic(68.0, n, 0, 0)?, config)?;
                let c = kg_report(&KGOrbital::pionic(68.0, n, n - 1, 0)?, config)?;
                Ok(vec![
                    Cell::Num(s.shannon_power_ratio),
                    Cell::Num(c.shannon_power_ratio),
                ])
            },
        ),
        "fig-3.7" => build(
            "n",
            irange(2, 8),
            &["fisher_ratio_p", "fisher_ratio_circ"],
            workers,
            |n| {
                let n = n as u32;
                let p = kg_report(&KGOrbital::pionic(68.0, n, 1, 0)?, config)?;
                let c = kg_report(&KGOrbital::pionic(68.0, n, n - 1, 0)?, config)?;
                Ok(vec![
                    p.fisher_ratio.map_or(Cell::Empty, Cell::Num),
                    c.fisher_ratio.map_or(Cell::Empty, Cell::Num),
                ])
            },
        ),
        "fig-3.8" => build(
            "l",
            irange(0, 7),
            &["shannon_ratio", "fisher_ratio"],
            workers,
            |l| {
                let rep = kg_report(&KGOrbital::pionic(68.0, 8, l as u32, 0)?, config)?;
                Ok(vec![
                    Cell::Num(rep.shannon_power_ratio),
                    rep.fisher_ratio.map_or(Cell::Empty, Cell::Num),
                ])
            },
        ),
        "fig-3.9" => build(
            "m",
            irange(0, 7),
            &["fisher_ratio"],
            workers,
            |m| {
                let rep = kg_report(&KGOrbital::pionic(68.0, 8, 7, m as i32)?, config)?;
                Ok(vec![rep.fisher_ratio.map_or(Cell::Empty, Cell::Num)])
            },
        ),
        "fig-3.10" => build(
            "Z",
            frange(2.0, 68.0, 2.0),
            &["zeta_fs"],
            workers,
            |z| {
                let rep = kg_report(&KGOrbital::pionic(z, 1, 0, 0)?, config)?;
                Ok(vec![Cell::Num(rep.complexities.zeta_fs)])
            },
        ),
        "fig-3.11" => build(
            "n",
            irange(1, 6),
            &["zeta_fs_z10", "zeta_fs_z30", "zeta_fs_z50", "zeta_fs_z68"],
            workers,
            |n| {
                let mut out = Vec::new();
                for z in [10.0, 30.0, 50.0, 68.0] {
                    let rep = kg_report(&KGOrbital::pionic(z, n as u32, 0, 0)?, config)?;
                    out.push(Cell::Num(rep.complexities.zeta_fs));
                }
                Ok(out)
            },
        ),
        "fig-3.12" => build(
            "l",
            irange(0, 5),
            &["zeta_fs_z68", "zeta_fs_z30"],
            workers,
            |l| {
                let a = kg_report(&KGOrbital::pionic(68.0, 6, l as u32, 0)?, config)?;
                let b = kg_report(&KGOrbital::pionic(30.0, 6, l as u32, 0)?, config)?;
                Ok(vec![
                    Cell::Num(a.complexities.zeta_fs),
                    Cell::Num(b.complexities.zeta_fs),
                ])
            },
        ),
        "fig-3.13" => build(
            "Z",
            frange(2.0, 68.0, 2.0),
            &["zeta_sc"],
            workers,
            |z| {
                let rep = kg_report(&KGOrbital::pionic(z, 1, 0, 0)?, config)?;
                Ok(vec![Cell::Num(rep.complexities.zeta_sc)])
            },
        ),
        "fig-3.14" => build(
            "n",
            irange(1, 6),
            &["zeta_sc_z1", "zeta_sc_z30", "zeta_sc_z50", "zeta_sc_z68"],
            workers,
            |n| {
                let mut out = Vec::new();
                for z in [1.0, 30.0, 50.0, 68.0] {
                    let rep = kg_report(&KGOrbital::pionic(z, n as u32, 0, 0)?, config)?;
                    out.push(Cell::Num(rep.complexities.zeta_sc));
                }
                Ok(out)
            },
        ),
        "fig-3.15" => build(
            "l",
            irange(0, 5),
            &["zeta_sc_z68", "zeta_sc_z30"],
            workers,
            |l| {
                let a = kg_report(&KGOrbital::pionic(68.0, 6, l as u32, 0)?, config)?;
                let b = kg_report(&KGOrbital::pionic(30.0, 6, l as u32, 0)?, config)?;
                Ok(vec![
                    Cell::Num(a.complexities.zeta_sc),
                    Cell::Num(b.complexities.zeta_sc),
                ])
            },
        ),
        "table-4.1" => build(
            "n",
            irange(0, 12),
            &["k_opt", "c_kn"],
            workers,
            |n| {
                let (k, c) = hermite_shannon_bound_opt(n as usize)?;
                Ok(vec![Cell::Int(k as i64), Cell::Num(c)])
            },
        ),
        "table-4.2" => build("n", irange(0, 10), &["b_opt", "bound"], workers, |n| {
            let (b, v) = laguerre_shannon_bound_opt_m0(n as usize, 0.0, config)?;
            Ok(vec![Cell::Int(b as i64), Cell::Num(v)])
        }),
        "table-4.3" => build(
            "n",
            irange(0, 10),
            &["b_opt", "m_opt", "bound"],
            workers,
            |n| {
                let ((b, m), v) = laguerre_shannon_bound_opt(n as usize, 0.0, config)?;
                Ok(vec![Cell::Int(b as i64), Cell::Num(m), Cell::Num(v)])
            },
        ),
        "table-4.4" => build("n", irange(0, 10), &["b_opt", "bound"], workers, |n| {
            let (b, v) = laguerre_shannon_bound_opt_m0(n as usize, 5.0, config)?;
            Ok(vec![Cell::Int(b as i64), Cell::Num(v)])
        }),
        "table-4.5" => build(
            "n",
            irange(0, 10),
            &["b_opt", "m_opt", "bound"],
            workers,
            |n| {
                let ((b, m), v) = laguerre_shannon_bound_opt(n as usize, 5.0, config)?;
                Ok(vec![Cell::Int(b as i64), Cell::Num(m), Cell::Num(v)])
            },
        ),
        "fig-4.1" | "fig-4.3" => {
            // Rényi lengths q = 2..5 vs degree (fig-4.3 adds the standard
            // deviation as its abscissa)
            let with_std = name == "fig-4.3";
            let mut values = irange(0, 10);
            values.extend(frange(20.0, 100.0, 10.0));
            let cols: &[&str] = if with_std {
                &["std_dev", "l2", "l3", "l4", "l5"]
            } else {
                &["l2", "l3", "l4", "l5"]
            };
            build("n", values, cols, workers, |n| {
                let rep = hermite_report(n as usize, &[2, 3, 4, 5], config)?;
                let mut out = Vec::new();
                if with_std {
                    out.push(Cell::Num(rep.std_dev));
                }
                for &(_, l) in &rep.renyi_lengths {
                    out.push(Cell::Num(l));
                }
                Ok(out)
            })
        }
        "fig-4.2" => {
            let mut values = irange(0, 10);
            values.extend(frange(20.0, 100.0, 10.0));
            build(
                "n",
                values,
                &["shannon_length", "bound_opt"],
                workers,
                |n| {
                    let n = n as usize;
                    let s = qcx::polyspread::hermite_shannon_length(n, config)?;
                    let (_, c) = hermite_shannon_bound_opt(n)?;
                    Ok(vec![Cell::Num(s), Cell::Num(c)])
                },
            )
        }
        "fig-4.4" => {
            let mut values = irange(0, 10);
            values.extend(frange(20.0, 100.0, 10.0));
            build(
                "n",
                values,
                &["std_dev", "shannon_length"],
                workers,
                |n| {
                    let n = n as usize;
                    let s = qcx::polyspread::hermite_shannon_length(n, config)?;
                    Ok(vec![Cell::Num((n as f64 + 0.5).sqrt()), Cell::Num(s)])
                },
            )
        }
        "fig-4.5" | "fig-4.6" => {
            let alpha = if name == "fig-4.5" { 0.0 } else { 5.0 };
            build(
                "n",
                irange(0, 10),
                &["shannon_length", "bound_m0", "bound_bm"],
                workers,
                move |n| {
                    let n = n as usize;
                    let (len, _, _) = qcx::polyspread::laguerre_shannon_length(n, alpha, config)?;
                    let (_, b0) = laguerre_shannon_bound_opt_m0(n, alpha, config)?;
                    let (_, bb) = laguerre_shannon_bound_opt(n, alpha, config)?;
                    Ok(vec![Cell::Num(len), Cell::Num(b0), Cell::Num(bb)])
                },
            )
        }
        "fig-4.7" | "fig-4.8" => {
            let alpha = if name == "fig-4.7" { 0.0 } else { 5.0 };
            build(
                "n",
                irange(0, 10),
                &["std_dev", "fisher_length", "onicescu_length", "shannon_length"],
                workers,
                move |n| {
                    let rep = laguerre_report(n as usize, alpha, &[2], config)?;
                    Ok(vec![
                        Cell::Num(rep.std_dev),
                        Cell::Num(rep.fisher_length),
                        Cell::Num(rep.renyi_lengths[0].1),
                        Cell::Num(rep.shannon_length),
                    ])
                },
            )
        }
        "fig-4.9" => build(
            "n",
            irange(0, 20),
            &["std_dev_a0", "shannon_a0", "std_dev_a5", "shannon_a5"],
            workers,
            |n| {
                let n = n as usize;
                let (n0, _, _) = qcx::polyspread::laguerre_shannon_length(n, 0.0, config)?;
                let (n5, _, _) = qcx::polyspread::laguerre_shannon_length(n, 5.0, config)?;
                Ok(vec![
                    Cell::Num(qcx::polyspread::laguerre_stddev(n, 0.0)?),
                    Cell::Num(n0),
                    Cell::Num(qcx::polyspread::laguerre_stddev(n, 5.0)?),
                    Cell::Num(n5),
                ])
            },
        ),
        other => Err(RowError::Argument(format!(
            "unknown preset '{other}'; available: {}",
            PRESET_NAMES.join(", ")
        ))),
    }
}

/// KG/Schrödinger centroid and variance ratios from the closed moment
/// routes (no quadrature needed).
fn moment_ratios(z: f64, n: u32, l: u32) -> Result<(f64, f64), RowError> {
    let orb = KGOrbital::pionic(z, n, l, 0)?;
    let sch = qcx::kleingordon::schroedinger_reference(&orb)?;
    let centroid = orb.r_moment(1)? / sch.r_expectation();
    let variance = orb.variance()? / sch.variance();
    Ok((centroid, variance))
}

/// Least squares of y = a x² + b x + c plus the correlation of the fit.
fn quadratic_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64, f64) {
    let n = xs.len() as f64;
    let (mut s1, mut s2, mut s3, mut s4) = (0.0, 0.0, 0.0, 0.0);
    let (mut sy, mut sxy, mut sx2y) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        s1 += x;
        s2 += x * x;
        s3 += x * x * x;
        s4 += x * x * x * x;
        sy += y;
        sxy += x * y;
        sx2y += x * x * y;
    }
    // normal equations for [a, b, c]
    let m = [[s4, s3, s2], [s3, s2, s1], [s2, s1, n]];
    let rhs = [sx2y, sxy, sy];
    let sol = solve3(m, rhs);
    let (a, b, c) = (sol[0], sol[1], sol[2]);
    let mean = sy / n;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let f = a * x * x + b * x + c;
        ss_res += (y - f) * (y - f);
        ss_tot += (y - mean) * (y - mean);
    }
    let r = (1.0 - ss_res / ss_tot).max(0.0).sqrt();
    (a, b, c, r)
}

fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> [f64; 3] {
    for i in 0..3 {
        let piv = (i..3)
            .max_by(|&r, &s| m[r][i].abs().partial_cmp(&m[s][i].abs()).unwrap())
            .unwrap();
        m.swap(i, piv);
        b.swap(i, piv);
        for r in (i + 1)..3 {
            let f = m[r][i] / m[i][i];
            for c in i..3 {
                m[r][c] -= f * m[i][c];
            }
            b[r] -= f * b[i];
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let mut acc = b[i];
        for c in (i + 1)..3 {
            acc -= m[i][c] * x[c];
        }
        x[i] = acc / m[i][i];
    }
    x
}
