//! Polynomials of degree at most 2 in the auxiliary root `ω` of
//! `y ω^2 + (1 - x - y) ω + x`, with [`MultiPoly`] coefficients.

use super::numbers::Rational;
use super::poly::{MultiPoly, Var};
use crate::error::{Error, Result};

pub const OMEGA_MAX_DEGREE: usize = 2;

/// `d0 + d1 ω + d2 ω^2`; trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPoly {
    arity: usize,
    coeffs: Vec<MultiPoly>,
}

impl OmegaPoly {
    pub fn from_coeffs(arity: usize, coeffs: Vec<MultiPoly>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.arity() != arity) {
            return Err(Error::ArityMismatch(arity, c.arity()));
        }
        let mut p = OmegaPoly { arity, coeffs };
        p.trim();
        if p.coeffs.len() > OMEGA_MAX_DEGREE + 1 {
            return Err(Error::OmegaDegree(p.coeffs.len() - 1));
        }
        Ok(p)
    }

    pub fn constant(c: MultiPoly) -> Self {
        let arity = c.arity();
        let mut p = OmegaPoly { arity, coeffs: vec![c] };
        p.trim();
        p
    }

    /// `ω` itself.
    pub fn omega(arity: usize) -> Self {
        OmegaPoly { arity, coeffs: vec![MultiPoly::zero(arity), MultiPoly::one(arity)] }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `ω`; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `ω^k`.
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(self.arity))
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, MultiPoly::try_add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, MultiPoly::try_sub)
    }

    fn zip(&self, other: &Self, f: fn(&MultiPoly, &MultiPoly) -> Result<MultiPoly>) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| f(&self.coeff(k), &other.coeff(k))).collect::<Result<_>>()?;
        Self::from_coeffs(self.arity, coeffs)
    }

    /// Product; fails if the result has `ω`-degree above 2.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::from_coeffs(self.arity, vec![])?);
        }
        let mut out = vec![MultiPoly::zero(self.arity); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(self.arity, out)
    }

    pub fn neg(&self) -> Self {
        OmegaPoly { arity: self.arity, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Multiplies every coefficient by a polynomial.
    pub fn scale(&self, p: &MultiPoly) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.try_mul(p)).collect::<Result<_>>()?;
        Self::from_coeffs(self.arity, coeffs)
    }

    /// Evaluates at a numeric `ω` and a rational point.
    pub fn eval(&self, omega: &Rational, point: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::from_integer(0.into());
        for c in self.coeffs.iter().rev() {
            acc = acc * omega + c.eval(point)?;
        }
        Ok(acc)
    }
}

/// Which variables play the roles of `x` and `y` in the defining relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaRoles {
    pub x: Var,
    pub y: Var,
}

impl Default for OmegaRoles {
    fn default() -> Self {
        OmegaRoles { x: Var::X, y: Var::Y }
    }
}

/// Whether `d` is a multiple of `y ω^2 + (1 - x - y) ω + x` over the fraction
/// field of the coefficient ring, i.e. `y d0 = x d2` and `y d1 = (1-x-y) d2`.
pub fn omega_congruent_zero(d: &OmegaPoly, roles: OmegaRoles) -> bool {
    let a = d.arity();
    let x = MultiPoly::var(a, roles.x.index());
    let y = MultiPoly::var(a, roles.y.index());
    let one_x_y = &(&MultiPoly::one(a) - &x) - &y;
    let (d0, d1, d2) = (d.coeff(0), d.coeff(1), d.coeff(2));
    &y * &d0 == &x * &d2 && &y * &d1 == &one_x_y * &d2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::NVARS;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn defining() -> OmegaPoly {
        OmegaPoly::from_coeffs(NVARS, vec![p("x"), p("1 - x - y"), p("y")]).unwrap()
    }

    #[test]
    fn relation_is_congruent_to_zero() {
        assert!(omega_congruent_zero(&defining(), OmegaRoles::default()));
        let twice = defining().scale(&p("3z")).unwrap();
        assert!(omega_congruent_zero(&twice, OmegaRoles::default()));
        assert!(omega_congruent_zero(&OmegaPoly::constant(MultiPoly::zero(NVARS)), OmegaRoles::default()));
    }

    #[test]
    fn nonmultiples_are_rejected() {
        assert!(!omega_congruent_zero(&OmegaPoly::omega(NVARS), OmegaRoles::default()));
        let off = defining().try_add(&OmegaPoly::constant(p("1"))).unwrap();
        assert!(!omega_congruent_zero(&off, OmegaRoles::default()));
    }

    #[test]
    fn degree_cap() {
        let w = OmegaPoly::omega(NVARS);
        let w2 = w.try_mul(&w).unwrap();
        assert_eq!(w2.degree(), 2);
        assert_eq!(w2.try_mul(&w), Err(Error::OmegaDegree(3)));
        assert!(OmegaPoly::from_coeffs(NVARS, vec![p("1"), p("0"), p("0"), p("0")]).is_ok());
    }
}
