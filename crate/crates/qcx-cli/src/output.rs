//! CSV emission: UTF-8, comma separators, '.' decimal separator, LF line
//! endings, significant-digit formatting, optional gnuplot script.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

/// Where rows go and how numbers are printed.
#[derive(Debug, Clone)]
pub struct OutputSpec {
    pub destination: Option<PathBuf>,
    pub precision: usize,
    pub emit_plot_script: bool,
}

impl OutputSpec {
    pub fn validate(&self) -> Result<(), String> {
        if !(4..=17).contains(&self.precision) {
            return Err(format!(
                "precision must be within [4, 17], got {}",
                self.precision
            ));
        }
        Ok(())
    }
}

/// One CSV cell: numeric, integral, text or empty.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self, precision: usize) -> String {
        match self {
            Cell::Num(x) => format_sig(*x, precision),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

/// %g-style significant-digit formatting with trailing zeros stripped;
/// deterministic for identical inputs.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let digits = digits.max(1);
    let mag = x.abs().log10().floor() as i32;
    let s = if mag < -4 || mag >= digits as i32 {
        let raw = format!("{:.*e}", digits - 1, x);
        strip_mantissa_zeros(&raw)
    } else {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        let raw = format!("{:.*}", decimals, x);
        strip_trailing_zeros(&raw)
    };
    s
}

fn strip_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

fn strip_mantissa_zeros(s: &str) -> String {
    match s.split_once('e') {
        Some((mant, exp)) => format!("{}e{}", strip_trailing_zeros(mant), exp),
        None => s.to_string(),
    }
}

/// Write a header plus rows to the destination; optionally emit a gnuplot
/// script next to a file destination.
pub fn write_table(
    spec: &OutputSpec,
    header: &[String],
    rows: &[Vec<Cell>],
) -> std::io::Result<()> {
    let mut body = String::new();
    body.push_str(&header.join(","));
    body.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|c| c.render(spec.precision)).collect();
        body.push_str(&line.join(","));
        body.push('\n');
    }
    match &spec.destination {
        Some(path) => {
            fs::write(path, body.as_bytes())?;
            if spec.emit_plot_script {
                let script = gnuplot_script(path, header);
                fs::write(path.with_extension("gp"), script.as_bytes())?;
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
        }
    }
    Ok(())
}

/// A generic gnuplot script plotting every column against the first.
fn gnuplot_script(csv: &std::path::Path, header: &[String]) -> String {
    let name = csv.file_name().unwrap_or_default().to_string_lossy();
    let mut s = String::new();
    s.push_str("set datafile separator \",\"\n");
    s.push_str("set key autotitle columnhead outside\n");
    s.push_str(&format!("set xlabel \"{}\"\n", header.first().map(String::as_str).unwrap_or("x")));
    s.push_str("plot ");
    let plots: Vec<String> = (2..=header.len())
        .map(|i| format!("\"{name}\" using 1:{i} with linespoints"))
        .collect();
    s.push_str(&plots.join(", \\\n     "));
    s.push('\n');
    s
}
