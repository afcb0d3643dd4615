//! Exact-rational cores of the combinatorial entropic-moment routes.
//!
//! The alternating sums behind W_q cancel ten or more digits in floating
//! point at the degrees the route must cover, so the rational part of each
//! route (integer power coefficients, Pochhammer weights, the terminating
//! Lauricella sums) is carried in exact arithmetic; only the manifestly
//! positive gamma-function prefactors are exponentiated in log space.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// ln |x| of a big integer without overflowing f64.
fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 900 {
        return x.abs().to_f64().expect("fits f64 range").ln();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().expect("64-bit mantissa").ln() + shift as f64 * std::f64::consts::LN_2
}

/// (ln |r|, sign) of a big rational.
pub(crate) fn ln_rational(r: &BigRational) -> (f64, f64) {
    if r.is_zero() {
        return (f64::NEG_INFINITY, 0.0);
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    (ln_bigint(r.numer()) - ln_bigint(r.denom()), sign)
}

pub(crate) fn big_factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

fn convolve(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact coefficients of P(x)^p by binary exponentiation.
pub(crate) fn poly_power_exact(coeffs: &[BigRational], p: usize) -> Vec<BigRational> {
    assert!(p >= 1);
    let mut base = coeffs.to_vec();
    let mut result: Option<Vec<BigRational>> = None;
    let mut e = p;
    loop {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => convolve(&r, &base),
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = convolve(&base, &base);
    }
    result.expect("p >= 1")
}

/// Integer coefficients of the classical Hermite polynomial H_n.
pub(crate) fn hermite_classical_coeffs(n: usize) -> Vec<BigRational> {
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    if n == 0 {
        return prev.into_iter().map(BigRational::from).collect();
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(2)];
    for k in 1..n {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2 * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= 2 * k * c;
        }
        prev = cur;
        cur = next;
    }
    cur.into_iter().map(BigRational::from).collect()
}

/// Exact coefficients of n!·L_n^(α)(x); the k-th is
/// (-1)^k C(n,k) ∏_{i=k+1}^n (α+i), a polynomial in the (dyadic) α.
pub(crate) fn laguerre_scaled_coeffs(n: usize, alpha: &BigRational) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let binom = big_factorial(n) / (big_factorial(k) * big_factorial(n - k));
        let mut prod = BigRational::from(binom);
        for i in (k + 1)..=n {
            prod *= alpha + BigRational::from(BigInt::from(i));
        }
        if k % 2 == 1 {
            prod = -prod;
        }
        out.push(prod);
    }
    out
}

/// Rational part of the Hermite W_q: Σ_j G_{2j} (2j)!/(4^j j! q^j) over the
/// integer coefficients G of [H_n]^{2q}. Returns (ln, sign).
pub(crate) fn hermite_wq_rational(n: usize, q: usize) -> (f64, f64) {
    let powers = poly_power_exact(&hermite_classical_coeffs(n), 2 * q);
    let mut sum = BigRational::zero();
    let mut weight = BigRational::one(); // (2j)!/(4^j j! q^j) at j
    for j in 0..=(n * q) {
        if j > 0 {
            // ratio (2j)(2j-1)/(4 j q)
            let num = BigInt::from(2 * j) * BigInt::from(2 * j - 1);
            let den = BigInt::from(4usize) * BigInt::from(j) * BigInt::from(q);
            weight *= BigRational::new(num, den);
        }
        sum += &powers[2 * j] * &weight;
    }
    ln_rational(&sum)
}

/// Rational part of the Laguerre W_q: Σ_k B_k (αq+1)_k q^{-k} over the
/// coefficients B of [n! L_n^(α)]^{2q}. Returns (ln, sign).
pub(crate) fn laguerre_wq_rational(n: usize, alpha: f64, q: usize) -> (f64, f64) {
    let alpha_r = BigRational::from_float(alpha).expect("finite alpha");
    let powers = poly_power_exact(&laguerre_scaled_coeffs(n, &alpha_r), 2 * q);
    let aq: BigRational = &alpha_r * BigRational::from(BigInt::from(q));
    let mut sum = BigRational::zero();
    let mut weight = BigRational::one(); // (αq+1)_k / q^k
    for (k, b) in powers.iter().enumerate() {
        if k > 0 {
            let factor = (&aq + BigRational::from(BigInt::from(k)))
                / BigRational::from(BigInt::from(q));
            weight *= factor;
        }
        sum += b * &weight;
    }
    ln_rational(&sum)
}

/// Exact C(n+α, n)^{2q} · F_A for the Lauricella route: the multivariable
/// series over 2q indices, each pinned to 0..n by the (-n) numerator
/// parameters; the (2q+1)-th index is already pinned to zero by its
/// vanishing parameter and does not appear. Returns (ln, sign).
pub(crate) fn laguerre_wq_lauricella_rational(n: usize, alpha: f64, q: usize) -> (f64, f64) {
    let alpha_r = BigRational::from_float(alpha).expect("finite alpha");
    let aq1: BigRational = &alpha_r * BigRational::from(BigInt::from(q)) + BigRational::one();
    let fa = fa_rec(n, &alpha_r, q, 2 * q, &aq1, &BigRational::one());

    // C(n+α, n) = (α+1)_n / n!
    let mut poch = BigRational::one();
    for i in 1..=n {
        poch *= &alpha_r + BigRational::from(BigInt::from(i));
    }
    let binom = poch / BigRational::from(big_factorial(n));
    let mut binom_pow = BigRational::one();
    for _ in 0..(2 * q) {
        binom_pow *= &binom;
    }
    ln_rational(&(binom_pow * fa))
}

fn fa_rec(
    n: usize,
    alpha: &BigRational,
    q: usize,
    levels: usize,
    a_arg: &BigRational,
    a_poch: &BigRational,
) -> BigRational {
    if levels == 0 {
        return a_poch.clone();
    }
    let mut total = BigRational::zero();
    let mut term = BigRational::one();
    let mut a_run = a_poch.clone();
    let mut a_cur = a_arg.clone();
    for m in 0..=n {
        if m > 0 {
            let mf = m - 1;
            // (-n)_m / ((α+1)_m m!) q^{-m}, updated one step
            let num = -BigRational::from(BigInt::from(n - mf));
            let den = (alpha + BigRational::from(BigInt::from(mf + 1)))
                * BigRational::from(BigInt::from(mf + 1))
                * BigRational::from(BigInt::from(q));
            term *= num / den;
            a_run *= &a_cur;
            a_cur += BigRational::one();
        }
        total += &term * fa_rec(n, alpha, q, levels - 1, &a_cur, &a_run);
    }
    total
}
