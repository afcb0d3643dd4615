//! Parameter sweeps: one row per axis value, computed by a bounded worker
//! pool and written in axis order, so the output bytes never depend on the
//! worker count.

use qcx::quadrature::QuadConfig;
use rayon::prelude::*;

use crate::output::Cell;
use crate::rows::{Params, Row, RowError, Target};

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub target: Target,
    pub axis: String,
    pub values: Vec<f64>,
    pub fixed: Params,
    /// Requested column names; empty means all of the target's columns.
    pub columns: Vec<String>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.values.is_empty() {
            return Err("sweep needs at least one axis value".into());
        }
        if self.fixed.0.contains_key(&self.axis) {
            return Err(format!(
                "axis variable '{}' also appears among the fixed parameters",
                self.axis
            ));
        }
        Ok(())
    }
}

/// Parse "a:b" / "a:b:step" inclusive ranges or comma lists.
pub fn parse_values(text: &str) -> Result<Vec<f64>, String> {
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(format!("range must be start:end[:step], got '{text}'"));
        }
        let start: f64 = parts[0]
            .parse()
            .map_err(|_| format!("bad range start '{}'", parts[0]))?;
        let end: f64 = parts[1]
            .parse()
            .map_err(|_| format!("bad range end '{}'", parts[1]))?;
        let step: f64 = if parts.len() == 3 {
            parts[2]
                .parse()
                .map_err(|_| format!("bad range step '{}'", parts[2]))?
        } else {
            1.0
        };
        if step <= 0.0 || end < start {
            return Err(format!("range '{text}' must ascend with positive step"));
        }
        let mut out = Vec::new();
        let mut k = 0usize;
        loop {
            let v = start + step * k as f64;
            if v > end + 1e-9 * step {
                break;
            }
            out.push(v);
            k += 1;
        }
        Ok(out)
    } else {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("bad value '{s}'"))
            })
            .collect()
    }
}

pub struct SweepOutput {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// The first failure, if any; earlier rows are still emitted.
    pub failure: Option<(f64, RowError)>,
}

/// Run the sweep on `workers` threads; rows are reduced in axis order.
pub fn run_sweep(
    spec: &SweepSpec,
    config: &QuadConfig,
    workers: usize,
) -> Result<SweepOutput, String> {
    spec.validate()?;
    let mut values = spec.values.clone();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite axis values"));

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| format!("worker pool: {e}"))?;

    let results: Vec<Result<Row, RowError>> = pool.install(|| {
        values
            .par_iter()
            .map(|&v| {
                let mut p = spec.fixed.clone();
                p.0.insert(spec.axis.clone(), v);
                spec.target.build_row(&p, config)
            })
            .collect()
    });

    // header from the first successful row (or the requested columns)
    let full_header: Vec<String> = match results.iter().find_map(|r| r.as_ref().ok()) {
        Some(row) => row.iter().map(|(k, _)| k.to_string()).collect(),
        None => Vec::new(),
    };
    let selected: Vec<String> = if spec.columns.is_empty() {
        full_header.clone()
    } else {
        for c in &spec.columns {
            if !full_header.iter().any(|h| h == c) && !full_header.is_empty() {
                return Err(format!(
                    "unknown column '{c}'; available: {}",
                    full_header.join(", ")
                ));
            }
        }
        spec.columns.clone()
    };

    let mut rows = Vec::new();
    let mut failure = None;
    for (v, res) in values.iter().zip(results) {
        match res {
            Ok(row) => {
                let cells: Vec<Cell> = selected
                    .iter()
                    .map(|c| {
                        row.iter()
                            .find(|(k, _)| k == c)
                            .map(|(_, cell)| cell.clone())
                            .unwrap_or(Cell::Empty)
                    })
                    .collect();
                rows.push(cells);
            }
            Err(e) => {
                failure = Some((*v, e));
                break;
            }
        }
    }
    Ok(SweepOutput {
        header: selected,
        rows,
        failure,
    })
}
