//! Alternating sign matrices: validation, exhaustive enumeration, the
//! statistics `(ν, μ, ρ)`, symmetries, and the brute-force generating
//! function `Z_ASM(n; x, y, z) = Σ x^ν y^μ z^ρ`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::MultiPoly;
use crate::error::{Error, Result};

/// An `n × n` matrix over `{-1, 0, 1}` whose row and column partial sums
/// all lie in `{0, 1}` and whose rows and columns each sum to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AsmStats {
    pub nu: u32,
    pub mu: u32,
    pub rho: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rotation {
    Half,
    Quarter,
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidAsm(format!("row {} has length {}, expected {n}", i + 1, rows[i].len())));
        }
        let a = Asm { n, entries: rows.into_iter().flatten().collect() };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if let Some(&v) = self.entries.iter().find(|&&v| !(-1..=1).contains(&v)) {
            return Err(Error::InvalidAsm(format!("entry {v} outside {{-1, 0, 1}}")));
        }
        for (what, line) in [("row", true), ("column", false)] {
            for i in 0..n {
                let mut s = 0i32;
                for j in 0..n {
                    s += i32::from(if line { self.get(i, j) } else { self.get(j, i) });
                    if !(0..=1).contains(&s) {
                        return Err(Error::InvalidAsm(format!("{what} {} has a partial sum of {s}", i + 1)));
                    }
                }
                if s != 1 {
                    return Err(Error::InvalidAsm(format!("{what} {} sums to {s}", i + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(&(0..n).collect::<Vec<_>>()).expect("identity is a permutation")
    }

    /// Permutation matrix with its row `i` one in column `perm[i]` (0-based).
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut rows = vec![vec![0i8; n]; n];
        for (i, &j) in perm.iter().enumerate() {
            if j >= n {
                return Err(Error::InvalidAsm(format!("column {j} out of range")));
            }
            rows[i][j] = 1;
        }
        Self::new(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry in row `i`, column `j`, both 0-based.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_permutation(&self) -> bool {
        !self.entries.contains(&-1)
    }

    /// For a permutation matrix, the column (0-based) of each row's one.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation()
            .then(|| (0..self.n).map(|i| self.row(i).iter().position(|&v| v == 1).unwrap()).collect())
    }

    pub fn stats(&self) -> AsmStats {
        let n = self.n;
        // below[j] = sum of entries strictly below the current row in columns <= j.
        let mut below = vec![0i64; n];
        let mut nu = 0i64;
        for i in (0..n).rev() {
            for j in 0..n {
                nu += i64::from(self.get(i, j)) * below[j];
            }
            let mut run = 0i64;
            for j in 0..n {
                run += i64::from(self.get(i, j));
                below[j] += run;
            }
        }
        let mu = self.entries.iter().filter(|&&v| v == -1).count();
        let rho = self.row(0).iter().position(|&v| v == 1).expect("first row has a one");
        AsmStats { nu: nu as u32, mu: mu as u32, rho: rho as u32 }
    }

    /// `ν` computed by the second expression, `Σ_{i ≤ i', j' < j} A_ij A_i'j'`.
    pub fn nu_alt(&self) -> u32 {
        let n = self.n;
        // acc[j] = sum of entries in rows >= current row and columns < j.
        let mut acc = vec![0i64; n];
        let mut nu = 0i64;
        for i in (0..n).rev() {
            let mut run = 0i64;
            for j in 0..n {
                acc[j] += run;
                run += i64::from(self.get(i, j));
            }
            for j in 0..n {
                nu += i64::from(self.get(i, j)) * acc[j];
            }
        }
        nu as u32
    }

    /// Left-right mirror image, `A*_ij = A_{i, n+1-j}`.
    pub fn reflect(&self) -> Self {
        let n = self.n;
        let entries = (0..n).flat_map(|i| (0..n).rev().map(move |j| (i, j))).map(|(i, j)| self.get(i, j)).collect();
        Asm { n, entries }
    }

    /// Rotation by a quarter turn clockwise.
    pub fn rotate_quarter(&self) -> Self {
        let n = self.n;
        let entries = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.get(n - 1 - j, i)).collect();
        Asm { n, entries }
    }

    pub fn rotate_half(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Asm { n: self.n, entries }
    }

    pub fn is_invariant(&self, r: Rotation) -> bool {
        match r {
            Rotation::Half => self.rotate_half() == *self,
            Rotation::Quarter => self.rotate_quarter() == *self,
        }
    }

    /// Ones whose row and column are otherwise zero.
    pub fn isolated_ones(&self) -> usize {
        let n = self.n;
        let nonzero_rows: Vec<usize> = (0..n).map(|i| self.row(i).iter().filter(|&&v| v != 0).count()).collect();
        let nonzero_cols: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| self.get(i, j) != 0).count()).collect();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j) == 1 && nonzero_rows[i] == 1 && nonzero_cols[j] == 1)
            .count()
    }

    /// Compact text form: each row as the 1-based columns of its nonzero
    /// entries joined by commas, rows separated by spaces. Signs alternate
    /// from `+1`, so they are implied.
    pub fn to_row_word(&self) -> String {
        (0..self.n)
            .map(|i| {
                let cols: Vec<String> = (0..self.n).filter(|&j| self.get(i, j) != 0).map(|j| (j + 1).to_string()).collect();
                cols.join(",")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_row_word(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let n = words.len();
        let mut rows = vec![vec![0i8; n]; n];
        for (i, w) in words.iter().enumerate() {
            let mut sign = 1i8;
            for c in w.split(',') {
                let j: usize = c.parse().map_err(|_| Error::Parse(format!("bad column {c:?}")))?;
                if j == 0 || j > n {
                    return Err(Error::Parse(format!("column {j} out of range")));
                }
                rows[i][j - 1] = sign;
                sign = -sign;
            }
        }
        Self::new(rows)
    }
}

impl TryFrom<Vec<Vec<i8>>> for Asm {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i8>>) -> Result<Self> {
        Asm::new(rows)
    }
}

impl From<Asm> for Vec<Vec<i8>> {
    fn from(a: Asm) -> Self {
        a.to_rows()
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Asm{:?}", self.to_rows())
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_row_word())
    }
}

impl FromStr for Asm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Asm::from_row_word(s)
    }
}

/// Depth-first enumeration, row-major over cells. At each cell the zero
/// entry is tried before the nonzero one, so matrices come out in
/// lexicographic order of their row-major entries with `0` before `±1`.
struct Enumerator<'a, F: FnMut(&Asm)> {
    n: usize,
    cells: Vec<i8>,
    col_sums: Vec<u8>,
    visit: &'a mut F,
}

impl<F: FnMut(&Asm)> Enumerator<'_, F> {
    fn cell(&mut self, pos: usize, row_sum: u8) {
        let n = self.n;
        if pos == n * n {
            let a = Asm { n, entries: self.cells.clone() };
            (self.visit)(&a);
            return;
        }
        let (i, j) = (pos / n, pos % n);
        let last_row = i == n - 1;
        let end_of_row = j == n - 1;
        let c = self.col_sums[j];
        // Zero entry.
        if !(last_row && c == 0) && !(end_of_row && row_sum == 0) {
            self.cells[pos] = 0;
            self.cell(pos + 1, if end_of_row { 0 } else { row_sum });
        }
        // Nonzero entry: +1 opens a row, -1 closes it.
        let v = match (row_sum, c) {
            (0, 0) => 1i8,
            (1, 1) if !last_row && !end_of_row => -1i8,
            _ => return,
        };
        self.cells[pos] = v;
        self.col_sums[j] = (i16::from(c) + i16::from(v)) as u8;
        let next_row_sum = (i16::from(row_sum) + i16::from(v)) as u8;
        self.cell(pos + 1, if end_of_row { 0 } else { next_row_sum });
        self.col_sums[j] = c;
        self.cells[pos] = 0;
    }
}

/// Calls `f` on every ASM of order `n` in enumeration order.
pub fn for_each_asm(n: usize, mut f: impl FnMut(&Asm)) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    crate::check_enum_limit("ASM enumeration", n)?;
    let mut e = Enumerator { n, cells: vec![0; n * n], col_sums: vec![0; n], visit: &mut f };
    e.cell(0, 0);
    Ok(())
}

/// The subtree of the enumeration whose first row has its one in column
/// `col` (0-based). These subtrees partition ASM(n) and can be processed
/// independently.
pub fn for_each_asm_with_first_one(n: usize, col: usize, mut f: impl FnMut(&Asm)) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    crate::check_enum_limit("ASM enumeration", n)?;
    if col >= n {
        return Err(Error::OutOfRange(format!("column {col} for order {n}")));
    }
    let mut cells = vec![0; n * n];
    let mut col_sums = vec![0; n];
    cells[col] = 1;
    col_sums[col] = 1;
    if n == 1 {
        f(&Asm { n, entries: cells });
        return Ok(());
    }
    let mut e = Enumerator { n, cells, col_sums, visit: &mut f };
    e.cell(n, 0);
    Ok(())
}

pub fn enumerate_asms(n: usize) -> Result<Vec<Asm>> {
    let mut out = Vec::new();
    for_each_asm(n, |a| out.push(a.clone()))?;
    Ok(out)
}

/// Number of ASMs of order `n` with each statistic triple.
pub fn stats_histogram(n: usize) -> Result<HashMap<AsmStats, u64>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    crate::check_enum_limit("ASM enumeration", n)?;
    let parts: Vec<HashMap<AsmStats, u64>> = (0..n)
        .into_par_iter()
        .map(|col| {
            let mut h = HashMap::new();
            for_each_asm_with_first_one(n, col, |a| *h.entry(a.stats()).or_insert(0) += 1).expect("order checked");
            h
        })
        .collect();
    let mut out = HashMap::new();
    for h in parts {
        for (k, v) in h {
            *out.entry(k).or_insert(0) += v;
        }
    }
    Ok(out)
}

/// `Σ_{A ∈ ASM(n)} x^ν y^μ z^ρ` by enumeration.
pub fn z_asm_brute(n: usize) -> Result<MultiPoly> {
    histogram_poly(&stats_histogram(n)?)
}

pub(crate) fn histogram_poly(h: &HashMap<AsmStats, u64>) -> Result<MultiPoly> {
    MultiPoly::from_terms(
        crate::NVARS,
        h.iter().map(|(s, &c)| (vec![s.nu, s.mu, s.rho, 0, 0], c.into())),
    )
}

/// Number of ASMs of order `n` invariant under the rotation.
pub fn count_invariant(n: usize, r: Rotation) -> Result<u64> {
    let mut c = 0;
    for_each_asm(n, |a| c += u64::from(a.is_invariant(r)))?;
    Ok(c)
}

/// `C_{n,m}`: ASMs of order `n` with `m` entries `-1` and no isolated one.
/// Order 0 counts the empty matrix once, at `m = 0`.
pub fn count_no_isolated(n: usize, m: u32) -> Result<u64> {
    if n == 0 {
        return Ok(u64::from(m == 0));
    }
    let mut c = 0;
    for_each_asm(n, |a| c += u64::from(a.isolated_ones() == 0 && a.stats().mu == m))?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Asm {
        Asm::new(vec![
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, -1, 1, 0],
            vec![1, -1, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, -1, 0, 1],
            vec![0, 0, 0, 1, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let a = example();
        assert_eq!(a.stats(), AsmStats { nu: 5, mu: 3, rho: 3 });
        assert_eq!(a.nu_alt(), 5);
        assert_eq!(a.reflect().stats(), AsmStats { nu: 7, mu: 3, rho: 2 });
    }

    #[test]
    fn small_cases() {
        let i3 = Asm::identity(3);
        assert_eq!(i3.stats(), AsmStats { nu: 0, mu: 0, rho: 0 });
        let m = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(m.stats(), AsmStats { nu: 1, mu: 1, rho: 1 });
    }

    #[test]
    fn rejects_invalid() {
        assert!(Asm::new(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(Asm::new(vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, -1, 0]]).is_err());
        assert!(Asm::new(vec![vec![2]]).is_err());
        assert!(Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1]]).is_err());
        assert!(matches!(Asm::new(vec![]), Err(Error::EmptyOrder)));
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_asms(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 7, 42, 429, 7436]);
        assert!(matches!(enumerate_asms(0), Err(Error::EmptyOrder)));
        assert!(matches!(enumerate_asms(crate::ENUM_LIMIT + 1), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn enumeration_order_is_sorted_and_distinct() {
        let v = enumerate_asms(5).unwrap();
        let key = |a: &Asm| a.entries.iter().map(|&e| e != 0).collect::<Vec<_>>();
        for w in v.windows(2) {
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn first_row_partition() {
        for n in 1..=5 {
            let mut total = 0;
            for col in 0..n {
                for_each_asm_with_first_one(n, col, |a| {
                    assert_eq!(a.stats().rho as usize, col);
                    total += 1;
                })
                .unwrap();
            }
            assert_eq!(total, enumerate_asms(n).unwrap().len());
        }
    }

    #[test]
    fn row_word_roundtrip() {
        let a = example();
        assert_eq!(a.to_row_word(), "4 2,4,5 1,2,3 4 2,4,6 4");
        assert_eq!(Asm::from_row_word(&a.to_row_word()).unwrap(), a);
        for a in enumerate_asms(4).unwrap() {
            assert_eq!(a.to_string().parse::<Asm>().unwrap(), a);
        }
    }

    #[test]
    fn json_roundtrip() {
        let a = example();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with("[[0,0,0,1,0,0],[0,1,0,-1,1,0]"));
        assert_eq!(serde_json::from_str::<Asm>(&s).unwrap(), a);
        assert!(serde_json::from_str::<Asm>("[[1,1],[0,0]]").is_err());
    }

    #[test]
    fn symmetry_counts() {
        assert_eq!(count_invariant(3, Rotation::Half).unwrap(), 3);
        assert_eq!(count_invariant(3, Rotation::Quarter).unwrap(), 1);
    }

    #[test]
    fn isolated_ones() {
        assert_eq!(Asm::identity(4).isolated_ones(), 4);
        assert_eq!(count_no_isolated(3, 1).unwrap(), 1);
        assert_eq!(count_no_isolated(0, 0).unwrap(), 1);
    }

    #[test]
    fn brute_z3() {
        let z: MultiPoly = "1+x^3z^2+x+x^2z^2+xz+x^2z+xyz".parse().unwrap();
        assert_eq!(z_asm_brute(3).unwrap(), z);
    }
}
