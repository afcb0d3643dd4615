//! Special functions: classical orthogonal polynomials, log-gamma, digamma
//! and Wigner 3j symbols. Everything here is pure and reentrant.

mod gamma;
mod orthopoly;
mod wigner;

pub use gamma::{digamma, log_gamma};
pub(crate) use gamma::{digamma_unchecked, ln_factorial, ln_gamma_unchecked};
pub use orthopoly::{
    eval_poly, eval_poly_ln, eval_poly_with_deriv, hermite_coeffs, laguerre_coeffs, poly_zeros,
    Normalization, OrthoPolySpec, PolyFamily, DEGREE_CAP,
};
pub use wigner::{wigner3j, Wigner3jArgs};
