//! Exact enumeration and generating-function machinery for alternating sign
//! matrices (ASMs), descending plane partitions (DPPs) and the objects that
//! connect them: six-vertex configurations, nonintersecting lattice paths,
//! determinant formulas and oscillating tableaux.
//!
//! All arithmetic is exact. Polynomials live in [`MultiPoly`] over the fixed
//! variable order `(x, y, z, w, q)`; see [`Var`].

pub mod algebra;
pub mod asm;
pub mod dpp;
pub mod formulas;
pub mod matrices;
pub mod oscillating;
pub mod paths;
pub mod six_vertex;
pub mod verify;

mod error;

pub use algebra::{
    binom, factorial, omega_congruent_zero, rat, Integer, Matrix, MultiPoly, OmegaPoly,
    OmegaRoles, Rational, Ring, Var, NVARS,
};
pub use asm::{Asm, AsmStats};
pub use dpp::{Dpp, DppStats};
pub use error::{Error, Result};
pub use oscillating::{OscTab, Partition};
pub use paths::{LatticePath, NilpPrimeSet, NilpSet, Step};
pub use six_vertex::{IkPoint, SixVertexConfig, VertexCounts, VertexType};

/// Largest order accepted by the exhaustive enumerators.
///
/// ASM(7) and DPP(7) have 218348 elements each; order 8 has almost 30 million.
pub const ENUM_LIMIT: usize = 7;

pub(crate) fn check_enum_limit(what: &'static str, n: usize) -> Result<()> {
    if n > ENUM_LIMIT {
        return Err(Error::TooLarge { what, n, limit: ENUM_LIMIT });
    }
    Ok(())
}
