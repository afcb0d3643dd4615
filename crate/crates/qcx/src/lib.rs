//! Spreading measures and composite complexities of quantum densities.
//!
//! The crate computes information-theoretic quantities (variance, Shannon,
//! Rényi, Fisher, disequilibrium) and the composite Cramer-Rao,
//! Fisher-Shannon and LMC complexities for
//!
//! * 3-dimensional hydrogenic orbitals ([`hydrogen3d`]),
//! * D-dimensional hydrogenic states in position and momentum space
//!   ([`hydrod`]),
//! * Klein-Gordon (pionic) Coulomb bound states ([`kleingordon`]),
//! * Rakhmanov densities of Hermite and Laguerre polynomials
//!   ([`polyspread`]).
//!
//! Every closed form is backed by an adaptive-quadrature pipeline
//! ([`quadrature`]) so the two routes can be cross-validated. The
//! lower layers provide stable orthogonal-polynomial and gamma-function
//! evaluation ([`specfun`]) and the multivariable Bell-polynomial
//! machinery for integer powers of polynomials ([`bellpoly`]).

pub mod bellpoly;
pub mod error;
pub mod hydrod;
pub mod hydrogen3d;
pub mod kleingordon;
pub mod polyspread;
pub mod quadrature;
pub mod specfun;

pub use error::QcxError;
