//! Six-vertex configurations with domain-wall boundary conditions, their
//! correspondence with ASMs, and the partition function: by explicit
//! summation and by the Izergin–Korepin determinant.
//!
//! Every edge carries a label in `{0, 1}`: the partial row sum (horizontal
//! edges) or partial column sum (vertical edges) of the matching ASM. Label 0
//! is an arrow pointing right or up, label 1 left or down.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, Rational};
use crate::asm::{for_each_asm, Asm};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexType {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
}

/// Edge labels around a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Labels {
    left: u8,
    right: u8,
    up: u8,
    down: u8,
}

impl VertexType {
    pub const ALL: [VertexType; 6] = [Self::A1, Self::A2, Self::B1, Self::B2, Self::C1, Self::C2];

    /// The ASM entry at a vertex of this type.
    pub fn entry(self) -> i8 {
        match self {
            Self::C1 => 1,
            Self::C2 => -1,
            _ => 0,
        }
    }

    fn labels(self) -> Labels {
        let (left, right, up, down) = match self {
            Self::A1 => (0, 0, 0, 0),
            Self::A2 => (1, 1, 1, 1),
            Self::B1 => (1, 1, 0, 0),
            Self::B2 => (0, 0, 1, 1),
            Self::C1 => (0, 1, 0, 1),
            Self::C2 => (1, 0, 1, 0),
        };
        Labels { left, right, up, down }
    }

    fn from_labels(l: Labels) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.labels() == l)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::A1 => "a1",
            Self::A2 => "a2",
            Self::B1 => "b1",
            Self::B2 => "b2",
            Self::C1 => "c1",
            Self::C2 => "c2",
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VertexType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown vertex type {s:?}")))
    }
}

/// An `n × n` grid of vertex types satisfying the ice rule along every
/// internal edge and domain-wall boundary conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<VertexType>>", into = "Vec<Vec<VertexType>>")]
pub struct SixVertexConfig {
    n: usize,
    types: Vec<VertexType>,
}

impl SixVertexConfig {
    pub fn new(grid: Vec<Vec<VertexType>>) -> Result<Self> {
        let n = grid.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if grid.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidConfig("grid is not square".into()));
        }
        let c = SixVertexConfig { n, types: grid.into_iter().flatten().collect() };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let l = self.get(i, j).labels();
                let bad = |what: &str| Err(Error::InvalidConfig(format!("{what} at vertex ({}, {})", i + 1, j + 1)));
                if j == 0 && l.left != 0 {
                    return bad("left boundary arrow points outward");
                }
                if j == n - 1 && l.right != 1 {
                    return bad("right boundary arrow points outward");
                }
                if i == 0 && l.up != 0 {
                    return bad("top boundary arrow points inward");
                }
                if i == n - 1 && l.down != 1 {
                    return bad("bottom boundary arrow points inward");
                }
                if j + 1 < n && l.right != self.get(i, j + 1).labels().left {
                    return bad("horizontal edge mismatch");
                }
                if i + 1 < n && l.down != self.get(i + 1, j).labels().up {
                    return bad("vertical edge mismatch");
                }
            }
        }
        Ok(())
    }

    pub fn from_asm(a: &Asm) -> Self {
        let n = a.order();
        let mut col = vec![0u8; n];
        let mut types = Vec::with_capacity(n * n);
        for i in 0..n {
            let mut row = 0u8;
            for j in 0..n {
                let e = a.get(i, j);
                let left = row;
                let up = col[j];
                row = (i16::from(row) + i16::from(e)) as u8;
                col[j] = (i16::from(col[j]) + i16::from(e)) as u8;
                let l = Labels { left, right: row, up, down: col[j] };
                types.push(VertexType::from_labels(l).expect("ASM partial sums give a valid vertex"));
            }
        }
        SixVertexConfig { n, types }
    }

    pub fn to_asm(&self) -> Asm {
        let rows = (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).entry()).collect()).collect();
        Asm::new(rows).expect("valid configurations map to ASMs")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Vertex in row `i`, column `j`, both 0-based.
    pub fn get(&self, i: usize, j: usize) -> VertexType {
        self.types[i * self.n + j]
    }

    pub fn to_grid(&self) -> Vec<Vec<VertexType>> {
        (0..self.n).map(|i| self.types[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn counts(&self) -> VertexCounts {
        let mut c = VertexCounts::default();
        for (k, t) in self.types.iter().enumerate() {
            c.total[*t as usize] += 1;
            if k < self.n {
                c.first_row[*t as usize] += 1;
            }
        }
        c
    }
}

impl TryFrom<Vec<Vec<VertexType>>> for SixVertexConfig {
    type Error = Error;
    fn try_from(g: Vec<Vec<VertexType>>) -> Result<Self> {
        SixVertexConfig::new(g)
    }
}

impl From<SixVertexConfig> for Vec<Vec<VertexType>> {
    fn from(c: SixVertexConfig) -> Self {
        c.to_grid()
    }
}

impl fmt::Display for SixVertexConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_grid()
            .iter()
            .map(|r| r.iter().map(|t| t.name()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Vertex type counts, indexed in the order of [`VertexType::ALL`], over the
/// whole grid and over the first row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VertexCounts {
    pub total: [u32; 6],
    pub first_row: [u32; 6],
}

impl VertexCounts {
    pub fn get(&self, t: VertexType) -> u32 {
        self.total[t as usize]
    }

    pub fn first_row(&self, t: VertexType) -> u32 {
        self.first_row[t as usize]
    }

    /// `N_a = N_a1 = N_a2`.
    pub fn n_a(&self) -> u32 {
        self.get(VertexType::A1)
    }

    /// `N_b = N_b1 = N_b2`.
    pub fn n_b(&self) -> u32 {
        self.get(VertexType::B1)
    }

    /// `N_c = N_c1 - n = N_c2`.
    pub fn n_c(&self) -> u32 {
        self.get(VertexType::C2)
    }

    /// First-row counts of types a1, b1 and c1 (the only types there).
    pub fn first_row_abc(&self) -> (u32, u32, u32) {
        (self.first_row(VertexType::A1), self.first_row(VertexType::B1), self.first_row(VertexType::C1))
    }

    /// Checks the count identities, and their agreement with the statistics
    /// of the matching ASM.
    pub fn check(&self, a: &Asm) -> Result<()> {
        use VertexType::*;
        let n = a.order() as u32;
        let s = a.stats();
        let (ta, tb, tc) = self.first_row_abc();
        let checks = [
            ("N_a1 = N_a2", self.get(A1) == self.get(A2)),
            ("N_b1 = N_b2", self.get(B1) == self.get(B2)),
            ("N_c1 - n = N_c2", self.get(C1) == n + self.get(C2)),
            ("N_a + N_b + N_c = n(n-1)/2", self.n_a() + self.n_b() + self.n_c() == n * (n - 1) / 2),
            ("first row a + b = n - 1", ta + tb == n - 1),
            ("first row c = 1", tc == 1),
            ("nu = N_a", self.n_a() == s.nu),
            ("mu = N_c", self.n_c() == s.mu),
            ("rho = first row a", ta == s.rho),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(Error::Invariant(format!("{name} fails for {a}"))),
            None => Ok(()),
        }
    }
}

pub fn asm_to_sixvertex(a: &Asm) -> SixVertexConfig {
    SixVertexConfig::from_asm(a)
}

pub fn sixvertex_to_asm(c: &SixVertexConfig) -> Asm {
    c.to_asm()
}

/// Spectral parameters in squared form: `u_i = s_i^2`, `v_j = t_j^2`, so that
/// `sqrt(u_i / v_j) = s_i / t_j` stays rational.
#[derive(Clone, Debug, PartialEq)]
pub struct IkPoint {
    pub q: Rational,
    pub s: Vec<Rational>,
    pub t: Vec<Rational>,
}

/// The local weights `(ā, b̄, c̄)` at one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl IkPoint {
    /// All parameters equal, `u_i = v_j = rho0^2`.
    pub fn homogeneous(n: usize, q: Rational, rho0: Rational) -> Self {
        IkPoint { q, s: vec![rho0.clone(); n], t: vec![rho0; n] }
    }

    /// `u_1 = s1^2` and every other parameter equal to `rho0^2`.
    pub fn refined(n: usize, q: Rational, rho0: Rational, s1: Rational) -> Self {
        let mut p = Self::homogeneous(n, q, rho0);
        if n > 0 {
            p.s[0] = s1;
        }
        p
    }

    pub fn order(&self) -> usize {
        self.s.len()
    }

    fn check_basic(&self) -> Result<()> {
        if self.s.len() != self.t.len() {
            return Err(Error::Shape(format!("{} row and {} column parameters", self.s.len(), self.t.len())));
        }
        if self.s.is_empty() {
            return Err(Error::EmptyOrder);
        }
        if self.q.is_zero() {
            return Err(Error::Degenerate("q = 0".into()));
        }
        if let Some(j) = self.t.iter().position(Zero::is_zero) {
            return Err(Error::Degenerate(format!("t_{} = 0", j + 1)));
        }
        Ok(())
    }

    /// Weights at the vertex in row `i`, column `j` (0-based).
    pub fn weights(&self, i: usize, j: usize) -> Weights {
        let q = &self.q;
        let u = &self.s[i] * &self.s[i];
        let v = &self.t[j] * &self.t[j];
        let a = &u * q - (&v * q).recip();
        let b = &u / q - q / &v;
        let c = (q * q - (q * q).recip()) * &self.s[i] / &self.t[j];
        Weights { a, b, c }
    }
}

/// `(a, b, c)` at the homogeneous point with `r = rho0^2`.
pub fn homogeneous_weights(q: &Rational, rho0: &Rational) -> Weights {
    IkPoint::homogeneous(1, q.clone(), rho0.clone()).weights(0, 0)
}

/// The partition function as a sum over all configurations of the product
/// of local weights.
pub fn partition_function_explicit(pt: &IkPoint) -> Result<Rational> {
    pt.check_basic()?;
    let n = pt.order();
    let w: Vec<Weights> = (0..n * n).map(|k| pt.weights(k / n, k % n)).collect();
    let mut total = Rational::zero();
    for_each_asm(n, |a| {
        let c = SixVertexConfig::from_asm(a);
        let mut prod = Rational::one();
        for (k, t) in c.types.iter().enumerate() {
            prod *= match t {
                VertexType::A1 | VertexType::A2 => &w[k].a,
                VertexType::B1 | VertexType::B2 => &w[k].b,
                VertexType::C1 | VertexType::C2 => &w[k].c,
            };
        }
        total += prod;
    })?;
    Ok(total)
}

/// The partition function through the Izergin–Korepin determinant.
pub fn ik_determinant_rat(pt: &IkPoint) -> Result<Rational> {
    pt.check_basic()?;
    let n = pt.order();
    let q2 = &pt.q * &pt.q;
    let q2inv = q2.recip();
    let u: Vec<Rational> = pt.s.iter().map(|s| s * s).collect();
    let v: Vec<Rational> = pt.t.iter().map(|t| t * t).collect();
    for i in 0..n {
        for j in i + 1..n {
            if u[i] == u[j] {
                return Err(Error::Degenerate(format!("u_{} = u_{}", i + 1, j + 1)));
            }
            if v[i] == v[j] {
                return Err(Error::Degenerate(format!("v_{} = v_{}", i + 1, j + 1)));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let uv = &u[i] * &v[j];
            if uv == q2 || uv == q2inv {
                return Err(Error::Degenerate(format!("u_{} v_{} is q^2 or q^-2", i + 1, j + 1)));
            }
        }
    }
    let mut num = Rational::one();
    for i in 0..n {
        num *= &pt.s[i] * Pow::pow(&pt.t[i], (2 * n + 1) as u32);
        for j in 0..n {
            let w = pt.weights(i, j);
            num *= w.a * w.b;
        }
    }
    let mut den = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            den *= (&u[i] - &u[j]) * (&v[i] - &v[j]);
        }
    }
    let m = Matrix::from_fn(n, n, 0, |i, j| {
        let uv = &u[i] * &v[j];
        (&uv - &q2).recip() - (&uv - &q2inv).recip()
    })?;
    Ok(num / den * m.det_rat()?)
}
