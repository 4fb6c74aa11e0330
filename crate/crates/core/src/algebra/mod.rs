//! Exact algebra: integers, rationals, sparse multivariate polynomials,
//! polynomials in the auxiliary root `ω`, and dense matrices with
//! division-free determinants.

mod matrix;
mod numbers;
mod omega;
mod poly;

pub use matrix::{Matrix, Ring, DET_LIMIT};
pub use numbers::{binom, factorial, rat, Integer, Rational};
pub use omega::{omega_congruent_zero, OmegaPoly, OmegaRoles, OMEGA_MAX_DEGREE};
pub use poly::{MultiPoly, Var, NVARS, VAR_NAMES};
