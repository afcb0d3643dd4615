//! Multivariable (partial) Bell polynomials and integer powers of
//! polynomials.
//!
//! B_{m,l}(x_1, …, x_{m-l+1}) = Σ m!/(j_1!⋯j_{m-l+1}!) ∏ (x_i/i!)^{j_i},
//! summed over all multi-indices with Σ j_i = l and Σ i·j_i = m. The p-th
//! power of a degree-n polynomial expands through these sums, which is what
//! turns entropic moments of Hermite/Laguerre densities into finite
//! combinatorics.
//!
//! Factorial-weighted arguments overflow doubles long before the degrees
//! this crate needs, so every partition term is assembled in log space with
//! its sign; the plain-f64 entry points convert at the boundary.

use crate::error::{QcxError, Result};
use crate::specfun::ln_factorial;

/// All partitions of m into exactly l parts, as multiplicity tuples
/// (j_1, …, j_{m-l+1}) with Σ j_i = l and Σ i·j_i = m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSet {
    pub m: usize,
    pub l: usize,
    pub indices: Vec<Vec<usize>>,
}

/// Enumerate the partition multi-indices of B_{m,l}. Complete and
/// duplicate-free; errors for l < 1 or l > m.
pub fn enumerate_partitions(m: usize, l: usize) -> Result<PartitionSet> {
    if l < 1 || l > m {
        return Err(QcxError::InvalidArgument(format!(
            "enumerate_partitions requires 1 <= l <= m, got m={m} l={l}"
        )));
    }
    let width = m - l + 1;
    let mut indices = Vec::new();
    let mut current = vec![0usize; width];
    visit_partitions(width, m, l, &mut current, &mut |j: &[usize]| {
        indices.push(j.to_vec())
    });
    Ok(PartitionSet { m, l, indices })
}

/// Recursive descent over part sizes, largest first, with feasibility
/// pruning: after fixing the multiplicities of sizes > v, the residue must
/// admit a partition into the remaining count of parts of size ≤ v.
fn visit_partitions(
    v: usize,
    m_rem: usize,
    l_rem: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if v == 1 {
        if m_rem == l_rem {
            current[0] = l_rem;
            f(current);
            current[0] = 0;
        }
        return;
    }
    let j_max = (m_rem / v).min(l_rem);
    for j in (0..=j_max).rev() {
        let m_next = m_rem - j * v;
        let l_next = l_rem - j;
        if m_next < l_next || m_next > l_next * (v - 1) {
            // size-1..v-1 parts cannot absorb the residue
            if !(l_next == 0 && m_next == 0) {
                continue;
            }
        }
        if l_next == 0 {
            if m_next == 0 {
                current[v - 1] = j;
                f(current);
                current[v - 1] = 0;
            }
            continue;
        }
        current[v - 1] = j;
        visit_partitions(v - 1, m_next, l_next, current, f);
        current[v - 1] = 0;
    }
}

/// Number of partitions of m into exactly l parts (recurrence
/// p(m,l) = p(m-1,l-1) + p(m-l,l)); used to validate enumeration.
pub fn partition_count(m: usize, l: usize) -> u64 {
    if l == 0 {
        return u64::from(m == 0);
    }
    if l > m {
        return 0;
    }
    let mut table = vec![vec![0u64; l + 1]; m + 1];
    table[0][0] = 1;
    for mm in 1..=m {
        for ll in 1..=l.min(mm) {
            table[mm][ll] = table[mm - 1][ll - 1]
                + if mm >= ll { table[mm - ll][ll] } else { 0 };
        }
    }
    table[m][l]
}

/// Signed log-space accumulator: Σ s_i e^{a_i} kept as (ln |Σ|, sign).
#[derive(Debug, Clone, Copy)]
pub(crate) struct SignedLogSum {
    scale: f64,
    acc: f64,
}

impl SignedLogSum {
    pub(crate) fn new() -> Self {
        Self {
            scale: f64::NEG_INFINITY,
            acc: 0.0,
        }
    }

    pub(crate) fn add(&mut self, ln_abs: f64, sign: f64) {
        if sign == 0.0 || ln_abs == f64::NEG_INFINITY {
            return;
        }
        if self.scale == f64::NEG_INFINITY {
            self.scale = ln_abs;
            self.acc = sign;
            return;
        }
        if ln_abs > self.scale {
            self.acc = self.acc * (self.scale - ln_abs).exp() + sign;
            self.scale = ln_abs;
        } else {
            self.acc += sign * (ln_abs - self.scale).exp();
        }
    }

    /// (ln |value|, sign)
    pub(crate) fn ln_sign(&self) -> (f64, f64) {
        if self.acc == 0.0 || self.scale == f64::NEG_INFINITY {
            (f64::NEG_INFINITY, 0.0)
        } else {
            (self.scale + self.acc.abs().ln(), self.acc.signum())
        }
    }
}

/// B_{m,l} over log-sign arguments; the workhorse behind both public
/// routes. args[i] = (ln |x_{i+1}|, sign).
pub(crate) fn bell_partial_ln(m: usize, l: usize, args: &[(f64, f64)]) -> Result<(f64, f64)> {
    if l < 1 || l > m {
        return Err(QcxError::InvalidArgument(format!(
            "bell_partial requires 1 <= l <= m, got m={m} l={l}"
        )));
    }
    let width = m - l + 1;
    if args.len() < width {
        return Err(QcxError::InvalidArgument(format!(
            "bell_partial needs {width} arguments for (m,l)=({m},{l}), got {}",
            args.len()
        )));
    }
    let ln_m_fact = ln_factorial(m as u64);
    let mut sum = SignedLogSum::new();
    let mut current = vec![0usize; width];
    visit_partitions(width, m, l, &mut current, &mut |j: &[usize]| {
        let mut ln_term = ln_m_fact;
        let mut sign = 1.0_f64;
        for (i, &ji) in j.iter().enumerate() {
            if ji == 0 {
                continue;
            }
            let (ln_x, s_x) = args[i];
            if s_x == 0.0 {
                sign = 0.0;
                break;
            }
            ln_term += ji as f64 * (ln_x - ln_factorial((i + 1) as u64));
            ln_term -= ln_factorial(ji as u64);
            if s_x < 0.0 && ji % 2 == 1 {
                sign = -sign;
            }
        }
        if sign != 0.0 {
            sum.add(ln_term, sign);
        }
    });
    Ok(sum.ln_sign())
}

/// Partial Bell polynomial B_{m,l}(args).
///
/// Small arguments sum with Neumaier compensation; once any |argument|
/// exceeds 1e100 every partition term is formed in log space instead,
/// because factorial-weighted coefficient vectors overflow plain doubles.
pub fn bell_partial(m: usize, l: usize, args: &[f64]) -> Result<f64> {
    if l < 1 || l > m {
        return Err(QcxError::InvalidArgument(format!(
            "bell_partial requires 1 <= l <= m, got m={m} l={l}"
        )));
    }
    let width = m - l + 1;
    if args.len() < width {
        return Err(QcxError::InvalidArgument(format!(
            "bell_partial needs {width} arguments for (m,l)=({m},{l}), got {}",
            args.len()
        )));
    }
    if args.iter().take(width).any(|a| a.abs() > 1e100) {
        let ln_args: Vec<(f64, f64)> = args
            .iter()
            .map(|&a| {
                if a == 0.0 {
                    (f64::NEG_INFINITY, 0.0)
                } else {
                    (a.abs().ln(), a.signum())
                }
            })
            .collect();
        let (ln, s) = bell_partial_ln(m, l, &ln_args)?;
        return Ok(s * ln.exp());
    }

    let m_fact = factorial_f64(m);
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut current = vec![0usize; width];
    visit_partitions(width, m, l, &mut current, &mut |j: &[usize]| {
        let mut term = m_fact;
        for (i, &ji) in j.iter().enumerate() {
            if ji == 0 {
                continue;
            }
            let base = args[i] / factorial_f64(i + 1);
            term *= base.powi(ji as i32) / factorial_f64(ji);
        }
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    });
    Ok(sum)
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Coefficients of [Σ c_k x^k]^p for p ≥ 1, length n·p + 1.
///
/// Coefficient k is p!/(k+p)! · B_{k+p,p}(c_0, 2!c_1, …, (k+1)!c_k), with
/// c_i = 0 beyond the input degree.
pub fn poly_power_coeffs(coeffs: &[f64], p: usize) -> Result<Vec<f64>> {
    if coeffs.is_empty() {
        return Err(QcxError::InvalidArgument(
            "poly_power_coeffs needs a non-empty coefficient list".into(),
        ));
    }
    if p < 1 {
        return Err(QcxError::InvalidArgument(
            "poly_power_coeffs requires p >= 1".into(),
        ));
    }
    let ln_coeffs: Vec<(f64, f64)> = coeffs
        .iter()
        .map(|&c| {
            if c == 0.0 {
                (f64::NEG_INFINITY, 0.0)
            } else {
                (c.abs().ln(), c.signum())
            }
        })
        .collect();
    Ok(poly_power_coeffs_ln(&ln_coeffs, p)?
        .into_iter()
        .map(|(ln, s)| s * ln.exp())
        .collect())
}

/// Log-sign variant of [`poly_power_coeffs`]; this is the form the entropic
/// moment pipeline consumes, where plain doubles would overflow.
pub(crate) fn poly_power_coeffs_ln(
    coeffs: &[(f64, f64)],
    p: usize,
) -> Result<Vec<(f64, f64)>> {
    if coeffs.is_empty() {
        return Err(QcxError::InvalidArgument(
            "poly_power_coeffs needs a non-empty coefficient list".into(),
        ));
    }
    if p < 1 {
        return Err(QcxError::InvalidArgument(
            "poly_power_coeffs requires p >= 1".into(),
        ));
    }
    let n = coeffs.len() - 1;
    let mut out = Vec::with_capacity(n * p + 1);
    for k in 0..=(n * p) {
        // Bell arguments x_i = i! c_{i-1}, zero-padded past degree n.
        let width = k + 1;
        let mut args = Vec::with_capacity(width);
        for i in 1..=width {
            if i - 1 <= n {
                let (ln_c, s) = coeffs[i - 1];
                args.push((ln_c + ln_factorial(i as u64), s));
            } else {
                args.push((f64::NEG_INFINITY, 0.0));
            }
        }
        let (ln_bell, s_bell) = bell_partial_ln(k + p, p, &args)?;
        let ln_coeff =
            ln_bell + ln_factorial(p as u64) - ln_factorial((k + p) as u64);
        out.push((ln_coeff, s_bell));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use num::{BigRational, FromPrimitive, One, Zero};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn partition_examples() {
        let p = enumerate_partitions(2, 2).unwrap();
        assert_eq!(p.indices, vec![vec![2]]);
        let p = enumerate_partitions(3, 2).unwrap();
        assert_eq!(p.indices, vec![vec![1, 1]]);
        let p = enumerate_partitions(6, 3).unwrap();
        assert_eq!(p.indices.len(), 3); // 4+1+1, 3+2+1, 2+2+2
        assert!(enumerate_partitions(3, 4).is_err());
        assert!(enumerate_partitions(3, 0).is_err());
    }

    #[test]
    fn partition_enumeration_matches_counting_recurrence() {
        for m in 1..=30usize {
            for l in 1..=m {
                let enumerated = enumerate_partitions(m, l).unwrap();
                assert_eq!(
                    enumerated.indices.len() as u64,
                    partition_count(m, l),
                    "count mismatch at ({m},{l})"
                );
                // every tuple satisfies both constraints, no duplicates
                let mut seen = std::collections::HashSet::new();
                for j in &enumerated.indices {
                    assert_eq!(j.iter().sum::<usize>(), l);
                    assert_eq!(
                        j.iter().enumerate().map(|(i, &ji)| (i + 1) * ji).sum::<usize>(),
                        m
                    );
                    assert!(seen.insert(j.clone()));
                }
            }
        }
    }

    #[test]
    fn bell_basic_identities() {
        // B_{n,n} = x_1^n
        assert_abs_diff_eq!(bell_partial(3, 3, &[2.0]).unwrap(), 8.0, epsilon = 1e-12);
        // B_{n,1} = x_n
        assert_abs_diff_eq!(
            bell_partial(2, 1, &[5.0, 7.0]).unwrap(),
            7.0,
            epsilon = 1e-12
        );
        // B_{4,2}(1,2,0) = 3 x_2² + 4 x_1 x_3 = 12
        assert_abs_diff_eq!(
            bell_partial(4, 2, &[1.0, 2.0, 0.0]).unwrap(),
            12.0,
            epsilon = 1e-12
        );
        assert!(bell_partial(4, 2, &[1.0]).is_err());
    }

    /// Exact rational Bell evaluation; the oracle for the floating path.
    fn bell_exact(m: usize, l: usize, args: &[BigRational]) -> BigRational {
        let parts = enumerate_partitions(m, l).unwrap();
        let fact = |k: usize| -> BigRational {
            BigRational::from_u64((1..=k as u64).product::<u64>().max(1)).unwrap()
        };
        let mut total = BigRational::zero();
        for j in &parts.indices {
            let mut term = fact(m);
            for (i, &ji) in j.iter().enumerate() {
                if ji == 0 {
                    continue;
                }
                let mut base = args[i].clone() / fact(i + 1);
                let mut pw = BigRational::one();
                for _ in 0..ji {
                    pw *= base.clone();
                }
                base = pw;
                term *= base / fact(ji);
            }
            total += term;
        }
        total
    }

    #[test]
    fn bell_matches_exact_rational_oracle() {
        let mut rng = StdRng::seed_from_u64(42);
        for m in 2..=12usize {
            for l in 1..=m {
                let width = m - l + 1;
                let ints: Vec<i64> = (0..width).map(|_| rng.gen_range(-6..=6)).collect();
                let args: Vec<f64> = ints.iter().map(|&v| v as f64).collect();
                let rats: Vec<BigRational> = ints
                    .iter()
                    .map(|&v| BigRational::from_i64(v).unwrap())
                    .collect();
                let exact = bell_exact(m, l, &rats);
                let approx_val = bell_partial(m, l, &args).unwrap();
                let exact_f = exact.numer().to_string().parse::<f64>().unwrap()
                    / exact.denom().to_string().parse::<f64>().unwrap();
                if exact_f == 0.0 {
                    assert!(approx_val.abs() < 1e-8, "({m},{l}): {approx_val}");
                } else {
                    assert_relative_eq!(approx_val, exact_f, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn bell_homogeneity() {
        // B_{m,l}(t x_1, t² x_2, …) = t^m B_{m,l}(x_1, x_2, …)
        let mut rng = StdRng::seed_from_u64(7);
        for m in 2..=10usize {
            for l in 1..=m {
                let width = m - l + 1;
                let args: Vec<f64> = (0..width).map(|_| rng.gen_range(-2.0..2.0)).collect();
                let t: f64 = rng.gen_range(0.3..1.9);
                let scaled: Vec<f64> = args
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| t.powi(i as i32 + 1) * x)
                    .collect();
                let lhs = bell_partial(m, l, &scaled).unwrap();
                let rhs = t.powi(m as i32) * bell_partial(m, l, &args).unwrap();
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-9 * rhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn bell_log_route_consistent_with_plain() {
        let args = [1.5, -0.7, 2.2, 0.0, 3.1];
        for m in 2..=5usize {
            for l in 1..=(m - 1) {
                let plain = bell_partial(m, l, &args[..(m - l + 1)]).unwrap();
                let ln_args: Vec<(f64, f64)> = args[..(m - l + 1)]
                    .iter()
                    .map(|&a| {
                        if a == 0.0 {
                            (f64::NEG_INFINITY, 0.0)
                        } else {
                            (a.abs().ln(), a.signum())
                        }
                    })
                    .collect();
                let (ln, s) = bell_partial_ln(m, l, &ln_args).unwrap();
                let via_log = s * ln.exp();
                assert_abs_diff_eq!(plain, via_log, epsilon = 1e-10 * plain.abs().max(1.0));
            }
        }
        // arguments past the 1e100 switch: homogeneous scaling x_i -> t^i x_i
        // keeps B_{m,l} representable while the plain route would overflow.
        let t: f64 = 1e60;
        let scaled: Vec<f64> = args[..4]
            .iter()
            .enumerate()
            .map(|(i, &x)| t.powi(i as i32 + 1) * x)
            .collect();
        let b = bell_partial(5, 2, &scaled).unwrap();
        let reference = bell_partial(5, 2, &args[..4]).unwrap();
        // B_{5,2}(t x_1, …) = t^5 B_{5,2}(x_1, …); compare in log space
        assert_abs_diff_eq!(
            b.abs().ln(),
            reference.abs().ln() + 5.0 * t.ln(),
            epsilon = 1e-10
        );
        assert_eq!(b.signum(), reference.signum());
    }

    fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn poly_power_examples() {
        // identity power
        let c = [0.5, -1.0, 2.0];
        let p1 = poly_power_coeffs(&c, 1).unwrap();
        for (a, b) in c.iter().zip(&p1) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
        // (1+x)² = 1 + 2x + x²
        let sq = poly_power_coeffs(&[1.0, 1.0], 2).unwrap();
        assert_abs_diff_eq!(sq[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sq[1], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sq[2], 1.0, epsilon = 1e-12);
        assert!(poly_power_coeffs(&[], 2).is_err());
    }

    #[test]
    fn poly_power_matches_convolution() {
        let mut rng = StdRng::seed_from_u64(99);
        for n in 1..=6usize {
            for p in 1..=6usize {
                let coeffs: Vec<f64> = (0..=n).map(|_| rng.gen_range(-1.5..1.5)).collect();
                let bell_route = poly_power_coeffs(&coeffs, p).unwrap();
                let mut conv = vec![1.0];
                for _ in 0..p {
                    conv = convolve(&conv, &coeffs);
                }
                assert_eq!(bell_route.len(), conv.len());
                for (k, (a, b)) in bell_route.iter().zip(&conv).enumerate() {
                    let scale = b.abs().max(1e-12);
                    assert!(
                        (a - b).abs() / scale < 1e-10,
                        "n={n} p={p} k={k}: bell {a} vs conv {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn hermite_square_matches_convolution() {
        let coeffs = crate::specfun::hermite_coeffs(2).unwrap();
        let bell_route = poly_power_coeffs(&coeffs, 2).unwrap();
        let conv = convolve(&coeffs, &coeffs);
        for (a, b) in bell_route.iter().zip(&conv) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }
}
