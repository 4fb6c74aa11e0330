//! Product formulas, q-analogues, the `μ = 0` inversion-table bijection and
//! the parity and isolated-one identities.

use std::collections::HashMap;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::algebra::{factorial, Integer, MultiPoly, Rational, Var, NVARS};
use crate::asm::{self, Asm, Rotation};
use crate::dpp::{self, Dpp};
use crate::error::{Error, Result};

fn fact(n: usize) -> Integer {
    factorial(n as u64)
}

/// Exact quotient, failing if the rational is not an integer.
fn integral(r: Rational) -> Result<Integer> {
    if !r.is_integer() {
        return Err(Error::NotExact);
    }
    Ok(r.to_integer())
}

fn exact_div(a: &Integer, b: &Integer) -> Result<Integer> {
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::NotExact);
    }
    Ok(q)
}

/// `Π_{i=0}^{n-1} (3i+1)! / (n+i)!`.
pub fn asm_total(n: usize) -> Result<Integer> {
    let mut num = Integer::one();
    let mut den = Integer::one();
    for i in 0..n {
        num *= fact(3 * i + 1);
        den *= fact(n + i);
    }
    exact_div(&num, &den)
}

/// Number of ASMs of order `n` whose top-row one has `k` zeros to its left.
pub fn refined_total(n: usize, k: usize) -> Result<Integer> {
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!("k = {k} needs 0 <= k < n = {n}")));
    }
    let lead = Rational::new(
        fact(n + k - 1) * fact(2 * n - k - 2),
        fact(2 * n - 2) * fact(k) * fact(n - k - 1),
    );
    integral(lead * asm_total(n - 1)?)
}

/// `Π_{i=1}^{n} (6i-2)! / (2n+2i)!`: vertically symmetric ASMs of order `2n + 1`.
pub fn vsasm_total(n: usize) -> Result<Integer> {
    let r: Rational = (1..=n).map(|i| Rational::new(fact(6 * i - 2), fact(2 * n + 2 * i))).product();
    integral(r)
}

fn geometric(base: &MultiPoly, k: usize) -> MultiPoly {
    let mut sum = MultiPoly::zero(NVARS);
    let mut pow = MultiPoly::one(NVARS);
    for _ in 0..k {
        sum = &sum + &pow;
        pow = &pow * base;
    }
    sum
}

fn q_factorial(base: &MultiPoly, k: usize) -> MultiPoly {
    (1..=k).fold(MultiPoly::one(NVARS), |acc, i| &acc * &geometric(base, i))
}

/// `[n]_{xz} [n-1]_x!`.
pub fn z_mu_zero(n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let x = Var::X.poly();
    let xz = &x * &Var::Z.poly();
    Ok(&geometric(&xz, n) * &q_factorial(&x, n - 1))
}

/// `Π_{i=0}^{n-1} [3i+1]_q! / [n+i]_q!`, in the variable `q`.
pub fn q_factorial_product(n: usize) -> Result<MultiPoly> {
    let q = Var::Q.poly();
    let mut num = MultiPoly::one(NVARS);
    let mut den = MultiPoly::one(NVARS);
    for i in 0..n {
        num = &num * &q_factorial(&q, 3 * i + 1);
        den = &den * &q_factorial(&q, n + i);
    }
    num.div_exact(&den)
}

/// `(χ_1, …, χ_n)` with `0 ≤ χ_i ≤ n - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionTable(Vec<u32>);

impl InversionTable {
    pub fn new(chi: Vec<u32>) -> Result<Self> {
        let n = chi.len();
        if let Some(i) = (0..n).find(|&i| chi[i] as usize > n - 1 - i) {
            return Err(Error::OutOfRange(format!("χ_{} = {} exceeds {}", i + 1, chi[i], n - 1 - i)));
        }
        Ok(InversionTable(chi))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// `χ_i` counts the ones below and to the left of the one in row `i`.
    pub fn from_asm(a: &Asm) -> Result<Self> {
        let perm = a
            .permutation()
            .ok_or_else(|| Error::InvalidAsm("the m = 0 bijection needs a permutation matrix".into()))?;
        let chi = (0..perm.len()).map(|i| perm[i + 1..].iter().filter(|&&p| p < perm[i]).count() as u32).collect();
        InversionTable::new(chi)
    }

    /// Rebuilds the permutation: `π_i` is the `(χ_i + 1)`-th smallest unused column.
    pub fn to_asm(&self) -> Result<Asm> {
        let mut free: Vec<usize> = (0..self.0.len()).collect();
        let perm: Vec<usize> = self.0.iter().map(|&c| free.remove(c as usize)).collect();
        Asm::from_permutation(&perm)
    }

    /// `χ_i` copies of `n + 1 - i`, in decreasing order, packed greedily into
    /// rows whose length never exceeds their rightmost part.
    pub fn to_dpp(&self) -> Result<Dpp> {
        let n = self.0.len();
        let parts: Vec<u32> =
            self.0.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat((n - i) as u32).take(c as usize)).collect();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        for p in parts {
            if cur.len() as u32 + 1 > p {
                rows.push(std::mem::take(&mut cur));
            }
            cur.push(p);
        }
        if !cur.is_empty() {
            rows.push(cur);
        }
        Dpp::new(rows)
    }

    pub fn from_dpp(d: &Dpp, n: usize) -> Result<Self> {
        let s = d.stats(n)?;
        if s.mu != 0 {
            return Err(Error::InvalidDpp("the m = 0 bijection needs a DPP without special parts".into()));
        }
        let mut chi = vec![0u32; n];
        for (_, _, v) in d.parts() {
            chi[n - v as usize] += 1;
        }
        InversionTable::new(chi)
    }
}

pub fn m0_asm_to_dpp(a: &Asm) -> Result<Dpp> {
    InversionTable::from_asm(a)?.to_dpp()
}

pub fn m0_dpp_to_asm(d: &Dpp, n: usize) -> Result<Asm> {
    InversionTable::from_dpp(d, n)?.to_asm()
}

/// Differences of DPP counts by sum of parts, beside the rotation-invariant
/// ASM counts they equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StantonParity {
    pub even_minus_odd: i64,
    pub mod4_gap: i64,
    pub half_turn: i64,
    pub quarter_turn: i64,
}

impl StantonParity {
    pub fn holds(&self) -> bool {
        self.even_minus_odd == self.half_turn && self.mod4_gap == self.quarter_turn
    }
}

pub fn stanton_parity(n: usize) -> Result<StantonParity> {
    let (mut even_minus_odd, mut mod4_gap) = (0i64, 0i64);
    for d in dpp::enumerate_dpps(n)? {
        let s = d.parts_sum();
        even_minus_odd += if s % 2 == 0 { 1 } else { -1 };
        mod4_gap += match s % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        };
    }
    Ok(StantonParity {
        even_minus_odd,
        mod4_gap,
        half_turn: asm::count_invariant(n, Rotation::Half)? as i64,
        quarter_turn: asm::count_invariant(n, Rotation::Quarter)? as i64,
    })
}

/// `Σ_{i=0}^{min(n, 3m)} (n!)² / ((i!)² (n-i)!) · C_{i,m}`.
pub fn cdlg_sum(n: usize, m: u32) -> Result<Integer> {
    let mut total = Integer::zero();
    for i in 0..=(3 * m as usize).min(n) {
        let c = asm::count_no_isolated(i, m)?;
        if c == 0 {
            continue;
        }
        let w = exact_div(&(fact(n) * fact(n)), &(fact(i) * fact(i) * fact(n - i)))?;
        total += w * c;
    }
    Ok(total)
}

/// Counts by `(ν, μ, ρ)` for both families.
pub type StatTable = HashMap<(u32, u32, u32), (u64, u64)>;

pub fn stat_table(n: usize) -> Result<StatTable> {
    let mut t = StatTable::new();
    for (s, c) in asm::stats_histogram(n)? {
        t.entry((s.nu, s.mu, s.rho)).or_default().0 += c;
    }
    for d in dpp::enumerate_dpps(n)? {
        let s = d.stats(n)?;
        t.entry((s.nu, s.mu, s.rho)).or_default().1 += 1;
    }
    Ok(t)
}

/// Checks the `ν = 1` family counts and the single-object cells
/// `(k(k+1)/2, k(n-k-1), k)` against a statistics table of order `n`.
pub fn special_families_hold(n: usize, table: &StatTable) -> bool {
    let get = |p: usize, m: usize, k: usize| table.get(&(p as u32, m as u32, k as u32)).copied().unwrap_or((0, 0));
    let both = |p, m, k, c: usize| get(p, m, k) == (c as u64, c as u64);
    for m in 0..n {
        for k in 0..n {
            let expect = match k {
                0 if m + 3 <= n => n - m - 2,
                1 if m + 2 <= n => 1,
                _ => 0,
            };
            if !both(1, m, k, expect) {
                return false;
            }
        }
    }
    (0..n).all(|k| both(k * (k + 1) / 2, k * (n - k - 1), k, 1))
}

/// `Z(n, x, y, 0) == Z(n-1, x, y, 1)` for a family of generating functions.
pub fn boundary_relation(z_n: &MultiPoly, z_prev: &MultiPoly) -> bool {
    let z = Var::Z.index();
    z_n.substitute(z, &Integer::zero()) == z_prev.substitute(z, &Integer::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&k| k.into()).collect()
    }

    #[test]
    fn product_values() {
        let t: Vec<Integer> = (1..=7).map(|n| asm_total(n).unwrap()).collect();
        assert_eq!(t, ints(&[1, 2, 7, 42, 429, 7436, 218348]));
        let r: Vec<Integer> = (0..3).map(|k| refined_total(3, k).unwrap()).collect();
        assert_eq!(r, ints(&[2, 3, 2]));
        assert_eq!(refined_total(1, 0).unwrap(), 1.into());
        assert!(refined_total(3, 3).is_err());
        for n in 1..=8 {
            let s: Integer = (0..n).map(|k| refined_total(n, k).unwrap()).sum();
            assert_eq!(s, asm_total(n).unwrap());
        }
        let v: Vec<Integer> = (1..=4).map(|n| vsasm_total(n).unwrap()).collect();
        assert_eq!(v, ints(&[1, 3, 26, 646]));
    }

    #[test]
    fn q_products() {
        assert_eq!(q_factorial_product(2).unwrap(), "1 + q^2".parse::<MultiPoly>().unwrap());
        assert_eq!(z_mu_zero(1).unwrap(), MultiPoly::one(NVARS));
        let a: MultiPoly = "1 + x*z + x^2*z^2".parse().unwrap();
        let b: MultiPoly = "1 + x".parse().unwrap();
        assert_eq!(z_mu_zero(3).unwrap(), &a * &b);
    }

    #[test]
    fn m0_small_cases() {
        assert!(m0_asm_to_dpp(&Asm::identity(4)).unwrap().is_empty());
        let anti = Asm::from_permutation(&[1, 0]).unwrap();
        let d = m0_asm_to_dpp(&anti).unwrap();
        assert_eq!(d.to_string(), "2");
        assert_eq!(m0_dpp_to_asm(&d, 2).unwrap(), anti);
        let bad = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert!(m0_asm_to_dpp(&bad).is_err());
        assert!(InversionTable::new(vec![0, 1]).is_err());
    }

    #[test]
    fn parity_small() {
        let p = stanton_parity(3).unwrap();
        assert_eq!((p.even_minus_odd, p.mod4_gap, p.half_turn, p.quarter_turn), (3, 1, 3, 1));
        let p = stanton_parity(1).unwrap();
        assert_eq!((p.even_minus_odd, p.mod4_gap, p.half_turn, p.quarter_turn), (1, 1, 1, 1));
    }
}
