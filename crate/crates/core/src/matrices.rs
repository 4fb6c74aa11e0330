//! The determinant formulas: matrix builders, the identities relating them,
//! and `Z(n; x, y, z)` as a determinant.
//!
//! All matrices are indexed from 0. Polynomial entries use the global
//! variables; entries involving `ω` are [`OmegaPoly`] values.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{binom, omega_congruent_zero, Matrix, MultiPoly, OmegaPoly, OmegaRoles, Rational, Var, NVARS};
use crate::error::{Error, Result};
use crate::paths::path_weight_sum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixName {
    MAsm,
    MDpp,
    MBar,
    MBarW,
    MPrime,
    MDoublePrime,
    S,
    B,
    L,
}

impl MatrixName {
    pub const ALL: [MatrixName; 9] = [
        Self::MAsm,
        Self::MDpp,
        Self::MBar,
        Self::MBarW,
        Self::MPrime,
        Self::MDoublePrime,
        Self::S,
        Self::B,
        Self::L,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::MAsm => "m-asm",
            Self::MDpp => "m-dpp",
            Self::MBar => "m-bar",
            Self::MBarW => "m-bar-w",
            Self::MPrime => "m-prime",
            Self::MDoublePrime => "m-double-prime",
            Self::S => "s",
            Self::B => "b",
            Self::L => "l",
        }
    }
}

impl fmt::Display for MatrixName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown matrix {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BuiltMatrix {
    Poly(Matrix<MultiPoly>),
    Omega(Matrix<OmegaPoly>),
}

/// Builds a named matrix. `L` is built as `L(x, y)`.
pub fn build(name: MatrixName, n: usize, refined: bool) -> Result<BuiltMatrix> {
    Ok(match name {
        MatrixName::MAsm => BuiltMatrix::Omega(m_asm(n, refined)?),
        MatrixName::MDpp => BuiltMatrix::Omega(m_dpp(n, refined)?),
        MatrixName::MBar => BuiltMatrix::Poly(m_bar(n, refined)?),
        MatrixName::MBarW => BuiltMatrix::Poly(m_bar_w(n, refined)?),
        MatrixName::MPrime => BuiltMatrix::Poly(m_prime(n, refined)?),
        MatrixName::MDoublePrime => BuiltMatrix::Poly(m_double_prime(n, refined)?),
        MatrixName::S => BuiltMatrix::Poly(shift(n)),
        MatrixName::B => BuiltMatrix::Poly(b_matrix(n)?),
        MatrixName::L => BuiltMatrix::Poly(l_matrix(n, &Var::X.poly(), &Var::Y.poly())?),
    })
}

fn term(c: crate::Integer, ex: i64, ey: i64, ez: i64) -> MultiPoly {
    MultiPoly::xyz(c, ex as u32, ey as u32, ez as u32)
}

fn delta(i: usize, j: usize) -> MultiPoly {
    MultiPoly::constant(NVARS, i64::from(i == j))
}

fn omega() -> OmegaPoly {
    OmegaPoly::omega(NVARS)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    Ok(())
}

/// `S_ij = δ_{i, j+1}`.
pub fn shift(n: usize) -> Matrix<MultiPoly> {
    Matrix::from_fn(n, n, NVARS, |i, j| delta(i, j + 1)).expect("full arity")
}

/// `Σ_k C(i,k) C(j,k) x^k y^(i-k)`, or its refined form in the last column.
fn asm_sum(i: usize, j: usize, n: usize, refined: bool) -> MultiPoly {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let mut p = MultiPoly::zero(NVARS);
    if refined && j == n - 1 {
        for k in 0..=i {
            for l in 0..=k {
                p = &p + &term(binom(i, k) * binom(n - l - 2, k - l), k, i - k, l + 1);
            }
        }
    } else {
        for k in 0..=i.min(j) {
            p = &p + &term(binom(i, k) * binom(j, k), k, i - k, 0);
        }
    }
    p
}

/// `(1 - ω) δ_ij + ω Σ_k C(i,k) C(j,k) x^k y^(i-k)`, with the refined last
/// column `ω Σ_k Σ_l C(i,k) C(n-l-2, k-l) x^k y^(i-k) z^(l+1)`.
pub fn m_asm(n: usize, refined: bool) -> Result<Matrix<OmegaPoly>> {
    check_order(n)?;
    let one_minus_omega = OmegaPoly::constant(MultiPoly::one(NVARS)).try_sub(&omega())?;
    let mut m = Matrix::zeros(n, n, NVARS);
    for i in 0..n {
        for j in 0..n {
            let mut e = omega().scale(&asm_sum(i, j, n, refined))?;
            if i == j {
                e = e.try_add(&one_minus_omega)?;
            }
            m.set(i, j, e)?;
        }
    }
    Ok(m)
}

/// `-δ_{i,j+1} + c Σ_k C(i-1, i-k) C(j+1, k) x^k y^(i-k)` with `c = w` when
/// `weighted` and `c = 1` otherwise; refined last column as for the path sums.
fn m_bar_impl(n: usize, refined: bool, weighted: bool) -> Result<Matrix<MultiPoly>> {
    check_order(n)?;
    let w = Var::W.poly();
    let mut m = Matrix::zeros(n, n, NVARS);
    for i in 0..n {
        for j in 0..n {
            let mut p = path_weight_sum(i, j, n, refined)?;
            if weighted {
                p = &p * &w;
            }
            m.set(i, j, &p - &delta(i, j + 1))?;
        }
    }
    Ok(m)
}

pub fn m_bar(n: usize, refined: bool) -> Result<Matrix<MultiPoly>> {
    m_bar_impl(n, refined, false)
}

pub fn m_bar_w(n: usize, refined: bool) -> Result<Matrix<MultiPoly>> {
    m_bar_impl(n, refined, true)
}

/// [`m_bar`] with its refined last column multiplied by `1 + ω(z - 1)`.
pub fn m_dpp(n: usize, refined: bool) -> Result<Matrix<OmegaPoly>> {
    let bar = m_bar(n, refined)?;
    let factor = omega_factor()?;
    let mut m = bar.map(NVARS, |p| Ok(OmegaPoly::constant(p.clone())))?;
    if refined {
        for i in 0..n {
            m.set(i, n - 1, factor.scale(bar.get(i, n - 1))?)?;
        }
    }
    Ok(m)
}

/// `1 + ω(z - 1)`.
pub fn omega_factor() -> Result<OmegaPoly> {
    let z_minus_1 = &Var::Z.poly() - &MultiPoly::one(NVARS);
    OmegaPoly::from_coeffs(NVARS, vec![MultiPoly::one(NVARS), z_minus_1])
}

/// `δ_ij + Σ_{k<i} Σ_{l ≤ min(j,k)} C(j,l) C(k,l) x^(l+1) y^(k-l)`, with the
/// refined last column
/// `δ_{i,n-1} + Σ_{k<i} Σ_{l≤k} Σ_{m≤l} C(n-m-2, l-m) C(k,l) x^(l+1) y^(k-l) z^(m+1)`.
pub fn m_prime(n: usize, refined: bool) -> Result<Matrix<MultiPoly>> {
    check_order(n)?;
    let ni = n as i64;
    Matrix::from_fn(n, n, NVARS, |i, j| {
        let (ii, jj) = (i as i64, j as i64);
        let mut p = delta(i, j);
        for k in 0..ii {
            if refined && j == n - 1 {
                for l in 0..=k {
                    for m in 0..=l {
                        p = &p + &term(binom(ni - m - 2, l - m) * binom(k, l), l + 1, k - l, m + 1);
                    }
                }
            } else {
                for l in 0..=jj.min(k) {
                    p = &p + &term(binom(jj, l) * binom(k, l), l + 1, k - l, 0);
                }
            }
        }
        p
    })
}

/// `C(j+1, i) x^i - C(i-1, i-j-1) (-y)^(i-j-1)`, with the refined last
/// column `Σ_k C(n-k-1, i-k) x^i z^k`.
pub fn m_double_prime(n: usize, refined: bool) -> Result<Matrix<MultiPoly>> {
    check_order(n)?;
    let ni = n as i64;
    Matrix::from_fn(n, n, NVARS, |i, j| {
        let (ii, jj) = (i as i64, j as i64);
        if refined && j == n - 1 {
            (0..=ii).fold(MultiPoly::zero(NVARS), |acc, k| &acc + &term(binom(ni - k - 1, ii - k), ii, 0, k))
        } else {
            let e = ii - jj - 1;
            let mut p = term(binom(jj + 1, ii), ii, 0, 0);
            if e >= 0 {
                let sign = if e % 2 == 0 { 1 } else { -1 };
                p = &p - &term(binom(ii - 1, e) * sign, 0, e, 0);
            }
            p
        }
    })
}

/// `B(y)_ij = C(i-1, i-j) y^(i-j)`.
pub fn b_matrix(n: usize) -> Result<Matrix<MultiPoly>> {
    check_order(n)?;
    Matrix::from_fn(n, n, NVARS, |i, j| {
        if j > i {
            MultiPoly::zero(NVARS)
        } else {
            term(binom(i as i64 - 1, (i - j) as i64), 0, (i - j) as i64, 0)
        }
    })
}

/// `L(α, β)_ij = C(i, j) α^i β^j` over polynomials.
pub fn l_matrix(n: usize, alpha: &MultiPoly, beta: &MultiPoly) -> Result<Matrix<MultiPoly>> {
    let a = alpha.arity();
    let m = Matrix::from_fn(n, n, a, |i, j| {
        (&alpha.pow(i as u32) * &beta.pow(j as u32)).scale(&binom(i as i64, j as i64))
    })?;
    Ok(m)
}

/// `L(α, β)` at rational arguments.
pub fn l_matrix_rat(n: usize, alpha: &Rational, beta: &Rational) -> Matrix<Rational> {
    use num_traits::Pow;
    Matrix::from_fn(n, n, 0, |i, j| {
        Rational::from_integer(binom(i as i64, j as i64)) * Pow::pow(alpha, i as u32) * Pow::pow(beta, j as u32)
    })
    .expect("rationals have arity 0")
}

/// `Z(n; x, y, z) = det M̄(n)`, refined.
pub fn genfunc_det(n: usize) -> Result<MultiPoly> {
    m_bar(n, true)?.det()
}

/// `Σ_D w^(rows+1) x^ν y^μ z^ρ` over DPP(n), as `det M̄_w(n)`.
pub fn genfunc_det_w(n: usize) -> Result<MultiPoly> {
    m_bar_w(n, true)?.det()
}

fn omega_matrix(m: &Matrix<MultiPoly>) -> Result<Matrix<OmegaPoly>> {
    m.map(NVARS, |p| Ok(OmegaPoly::constant(p.clone())))
}

/// Entries of `(I + (x - ωy - 1)S) M_ASM - M_DPP (I + (ω - 1)Sᵗ)`.
pub fn omega_relation_difference(asm: &Matrix<OmegaPoly>, dpp: &Matrix<OmegaPoly>) -> Result<Matrix<OmegaPoly>> {
    let n = asm.rows();
    let one = OmegaPoly::constant(MultiPoly::one(NVARS));
    let x_minus_1 = &Var::X.poly() - &MultiPoly::one(NVARS);
    let left_coeff = OmegaPoly::from_coeffs(NVARS, vec![x_minus_1, -Var::Y.poly()])?;
    let right_coeff = omega().try_sub(&one)?;
    let s = omega_matrix(&shift(n))?;
    let id = Matrix::<OmegaPoly>::identity(n, NVARS);
    let left = id.try_add(&s.scale(&left_coeff)?)?;
    let right = id.try_add(&s.transpose().scale(&right_coeff)?)?;
    left.try_mul(asm)?.try_sub(&dpp.try_mul(&right)?)
}

/// Whether every entry of [`omega_relation_difference`] vanishes modulo the
/// defining relation of `ω`.
pub fn check_omega_relation(n: usize, refined: bool) -> Result<bool> {
    check_omega_relation_with(&m_asm(n, refined)?, &m_dpp(n, refined)?)
}

pub fn check_omega_relation_with(asm: &Matrix<OmegaPoly>, dpp: &Matrix<OmegaPoly>) -> Result<bool> {
    let d = omega_relation_difference(asm, dpp)?;
    let n = d.rows();
    Ok((0..n).all(|i| (0..n).all(|j| omega_congruent_zero(d.get(i, j), OmegaRoles::default()))))
}

/// `det M_DPP = (1 + ω(z - 1)) det M̄` as polynomials in `ω`.
pub fn check_dpp_factor(n: usize) -> Result<bool> {
    let lhs = m_dpp(n, true)?.det()?;
    let rhs = omega_factor()?.scale(&m_bar(n, true)?.det()?)?;
    Ok(lhs == rhs)
}

/// `(I - S) M′ = M̄ (I - Sᵗ)` and `B(y) M″ = M̄`.
pub fn check_aux_relations(n: usize, refined: bool) -> Result<(bool, bool)> {
    let bar = m_bar(n, refined)?;
    let id = Matrix::<MultiPoly>::identity(n, NVARS);
    let s = shift(n);
    let lhs = id.try_sub(&s)?.try_mul(&m_prime(n, refined)?)?;
    let rhs = bar.try_mul(&id.try_sub(&s.transpose())?)?;
    let second = b_matrix(n)?.try_mul(&m_double_prime(n, refined)?)? == bar;
    Ok((lhs == rhs, second))
}

/// A random rational with numerator in `-range..=range` and denominator in
/// `1..=range`.
pub fn random_rational(rng: &mut impl Rng, range: i64) -> Rational {
    crate::rat(rng.gen_range(-range..=range), rng.gen_range(1..=range))
}

/// Evaluates `M_ASM` at a point of the curve `y ω^2 + (1 - x - y) ω + x = 0`
/// parametrized by `ω ∉ {0, 1}`, `y` and `z`, and compares its determinant
/// with `(1 + ω(z - 1)) Z(n; x, y, z)`, and with `det M_DPP` at the same
/// point. Returns the number of points checked.
pub fn check_asm_det_rational(n: usize, trials: usize, rng: &mut impl Rng) -> Result<usize> {
    let asm = m_asm(n, true)?;
    let dpp = m_dpp(n, true)?;
    let z_poly = genfunc_det(n)?;
    let factor = omega_factor()?;
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    for _ in 0..trials {
        let mut w = random_rational(rng, 12);
        while w == zero || w == one {
            w = random_rational(rng, 12);
        }
        let y = random_rational(rng, 12);
        let z = random_rational(rng, 12);
        let x = &w * (&y * &w + &one - &y) / (&w - &one);
        let point = [x, y, z, zero.clone(), zero.clone()];
        let lhs = asm.eval(|e| e.eval(&w, &point))?.det_rat()?;
        let via_dpp = dpp.eval(|e| e.eval(&w, &point))?.det_rat()?;
        let rhs = factor.eval(&w, &point)? * z_poly.eval(&point)?;
        if lhs != rhs || via_dpp != rhs {
            return Err(Error::Invariant(format!("det M_ASM = {lhs}, det M_DPP = {via_dpp}, expected {rhs} at ω = {w}")));
        }
    }
    Ok(trials)
}
