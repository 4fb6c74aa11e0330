//! Nonintersecting lattice paths encoding DPPs, weighted path sums, and the
//! Lindström–Gessel–Viennot determinant.
//!
//! Points are `(column, row)`. Paths step right `(+1, 0)` or down `(0, -1)`.
//! A rightward step leaving `(i, j)` lies above the line through the points
//! `(i, i - 1)` exactly when `j >= i`; those steps give the statistic `ν`.
//!
//! Two encodings are provided:
//! * [`NilpSet`] on the grid `0..n` × `0..n`: path `i` runs from
//!   `(0, λ_{i-1} - 1)` to `(λ_i, 0)` with `λ_0 = n` and `λ_{t+1} = 0`, and its
//!   `k`-th rightward step has height `D_{i,i+k-1} - 1`.
//! * [`NilpPrimeSet`] on columns `1..n` and rows `-1..n`: path `i` runs from
//!   `(1, D_ii - 1)` to `(D_ii - 1, -1)` and its `k`-th rightward step has
//!   height `D_{i,i+k} - 1`, padded with steps at height `-1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{binom, Matrix, MultiPoly, NVARS};
use crate::dpp::Dpp;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: (i32, i32),
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (i32, i32), steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn end(&self) -> (i32, i32) {
        self.steps.iter().fold(self.start, |(x, y), s| match s {
            Step::Right => (x + 1, y),
            Step::Down => (x, y - 1),
        })
    }

    /// Every vertex on the path, start and end included.
    pub fn vertices(&self) -> Vec<(i32, i32)> {
        let mut p = self.start;
        let mut out = vec![p];
        for s in &self.steps {
            p = match s {
                Step::Right => (p.0 + 1, p.1),
                Step::Down => (p.0, p.1 - 1),
            };
            out.push(p);
        }
        out
    }

    /// Starting points of the rightward steps.
    pub fn right_steps(&self) -> Vec<(i32, i32)> {
        let mut p = self.start;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::Right => {
                    out.push(p);
                    p.0 += 1;
                }
                Step::Down => p.1 -= 1,
            }
        }
        out
    }

    /// Steps as a string over `R` and `D`.
    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| if *s == Step::Right { 'R' } else { 'D' }).collect()
    }

    pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
        s.chars()
            .map(|c| match c {
                'R' => Ok(Step::Right),
                'D' => Ok(Step::Down),
                _ => Err(Error::Parse(format!("bad step {c:?}"))),
            })
            .collect()
    }
}

/// Builds a path from `start` whose rightward steps are at the given
/// heights, descending to `end_height` at the end.
fn path_with_heights(start: (i32, i32), heights: &[i32], end_height: i32) -> Result<LatticePath> {
    let mut steps = Vec::new();
    let mut y = start.1;
    for &h in heights.iter().chain(std::iter::once(&end_height)) {
        if h > y {
            return Err(Error::InvalidPaths(format!("height {h} above current height {y}")));
        }
        steps.extend(std::iter::repeat(Step::Down).take((y - h) as usize));
        y = h;
        steps.push(Step::Right);
    }
    steps.pop();
    Ok(LatticePath { start, steps })
}

fn check_disjoint(paths: &[LatticePath]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for (k, p) in paths.iter().enumerate() {
        for v in p.vertices() {
            if !seen.insert(v) {
                return Err(Error::InvalidPaths(format!("path {} meets an earlier path at {v:?}", k + 1)));
            }
        }
    }
    Ok(())
}

fn check_bounds(p: &LatticePath, xs: (i32, i32), ys: (i32, i32)) -> Result<()> {
    match p.vertices().into_iter().find(|&(x, y)| x < xs.0 || x > xs.1 || y < ys.0 || y > ys.1) {
        Some(v) => Err(Error::InvalidPaths(format!("vertex {v:?} outside the grid"))),
        None => Ok(()),
    }
}

/// A family of nonintersecting paths on the grid `0..n` × `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NilpSet {
    n: usize,
    paths: Vec<LatticePath>,
}

impl NilpSet {
    pub fn new(n: usize, paths: Vec<LatticePath>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if paths.is_empty() {
            return Err(Error::InvalidPaths("no paths".into()));
        }
        let n_i = n as i32;
        let mut lambda = n_i;
        for (k, p) in paths.iter().enumerate() {
            if p.start != (0, lambda - 1) {
                return Err(Error::InvalidPaths(format!("path {} starts at {:?}, expected {:?}", k + 1, p.start, (0, lambda - 1))));
            }
            let (ex, ey) = p.end();
            let last = k + 1 == paths.len();
            if ey != 0 || ex >= lambda || (last && ex != 0) || (!last && ex == 0) {
                return Err(Error::InvalidPaths(format!("path {} ends at {:?}", k + 1, (ex, ey))));
            }
            check_bounds(p, (0, n_i - 1), (0, n_i - 1))?;
            lambda = ex;
        }
        check_disjoint(&paths)?;
        Ok(NilpSet { n, paths })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn from_dpp(d: &Dpp, n: usize) -> Result<Self> {
        if d.max_part() as usize > n {
            return Err(Error::OutOfRange(format!("largest part {} exceeds n = {n}", d.max_part())));
        }
        let mut paths = Vec::new();
        let mut prev_len = n as i32;
        for row in d.rows() {
            let heights: Vec<i32> = row.iter().map(|&p| p as i32 - 1).collect();
            paths.push(path_with_heights((0, prev_len - 1), &heights, 0)?);
            prev_len = row.len() as i32;
        }
        paths.push(path_with_heights((0, prev_len - 1), &[], 0)?);
        Self::new(n, paths)
    }

    pub fn to_dpp(&self) -> Result<Dpp> {
        let rows = self
            .paths
            .iter()
            .map(|p| p.right_steps().iter().map(|&(_, h)| (h + 1) as u32).collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        Dpp::new(rows)
    }

    /// `(ν, μ, ρ)`: rightward steps above and below the line, and rightward
    /// steps in the top row.
    pub fn statistics(&self) -> (u32, u32, u32) {
        let (mut nu, mut mu, mut rho) = (0, 0, 0);
        for (x, h) in self.paths.iter().flat_map(LatticePath::right_steps) {
            if h >= x {
                nu += 1;
            } else {
                mu += 1;
            }
            if h == self.n as i32 - 1 {
                rho += 1;
            }
        }
        (nu, mu, rho)
    }

    pub fn step_strings(&self) -> Vec<String> {
        self.paths.iter().map(LatticePath::step_string).collect()
    }

    /// Rebuilds a family from its step strings. Each path starts at the
    /// height given by its number of down steps, so `n` is recovered too.
    pub fn from_step_strings(strings: &[String]) -> Result<Self> {
        let first = strings.first().ok_or_else(|| Error::InvalidPaths("no paths".into()))?;
        let n = first.chars().filter(|&c| c == 'D').count() + 1;
        let paths = strings
            .iter()
            .map(|s| {
                let steps = LatticePath::parse_steps(s)?;
                let downs = steps.iter().filter(|&&s| s == Step::Down).count() as i32;
                Ok(LatticePath::new((0, downs), steps))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, paths)
    }
}

/// JSON form: list of step strings, one per path.
impl Serialize for NilpSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.step_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NilpSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        NilpSet::from_step_strings(&v).map_err(serde::de::Error::custom)
    }
}

/// Step strings separated by spaces, with `-` for a path without steps.
impl fmt::Display for NilpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> =
            self.step_strings().into_iter().map(|s| if s.is_empty() { "-".into() } else { s }).collect();
        f.write_str(&words.join(" "))
    }
}

impl FromStr for NilpSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<String> =
            s.split_whitespace().map(|w| if w == "-" { String::new() } else { w.to_string() }).collect();
        Self::from_step_strings(&v)
    }
}

pub fn dpp_to_nilp(d: &Dpp, n: usize) -> Result<NilpSet> {
    NilpSet::from_dpp(d, n)
}

pub fn nilp_to_dpp(p: &NilpSet) -> Result<Dpp> {
    p.to_dpp()
}

/// The primed encoding, one path per row of the DPP.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PrimeJson", into = "PrimeJson")]
pub struct NilpPrimeSet {
    n: usize,
    paths: Vec<LatticePath>,
}

#[derive(Serialize, Deserialize)]
struct PrimeJson {
    n: usize,
    paths: Vec<String>,
}

impl TryFrom<PrimeJson> for NilpPrimeSet {
    type Error = Error;
    fn try_from(j: PrimeJson) -> Result<Self> {
        let paths = j
            .paths
            .iter()
            .map(|s| {
                let steps = LatticePath::parse_steps(s)?;
                let downs = steps.iter().filter(|&&s| s == Step::Down).count() as i32;
                Ok(LatticePath::new((1, downs - 1), steps))
            })
            .collect::<Result<Vec<_>>>()?;
        NilpPrimeSet::new(j.n, paths)
    }
}

impl From<NilpPrimeSet> for PrimeJson {
    fn from(p: NilpPrimeSet) -> Self {
        PrimeJson { n: p.n, paths: p.paths.iter().map(LatticePath::step_string).collect() }
    }
}

impl NilpPrimeSet {
    pub fn new(n: usize, paths: Vec<LatticePath>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let n_i = n as i32;
        let mut prev = n_i;
        for (k, p) in paths.iter().enumerate() {
            let delta = p.start.1;
            if p.start.0 != 1 || delta < 1 || delta >= prev {
                return Err(Error::InvalidPaths(format!("path {} starts at {:?}", k + 1, p.start)));
            }
            if p.end() != (delta, -1) {
                return Err(Error::InvalidPaths(format!("path {} ends at {:?}", k + 1, p.end())));
            }
            check_bounds(p, (1, n_i - 1), (-1, n_i - 1))?;
            prev = delta;
        }
        check_disjoint(&paths)?;
        Ok(NilpPrimeSet { n, paths })
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn from_dpp(d: &Dpp, n: usize) -> Result<Self> {
        if d.max_part() as usize > n {
            return Err(Error::OutOfRange(format!("largest part {} exceeds n = {n}", d.max_part())));
        }
        let paths = d
            .rows()
            .iter()
            .map(|row| {
                let delta = row[0] as i32 - 1;
                let mut heights: Vec<i32> = row[1..].iter().map(|&p| p as i32 - 1).collect();
                heights.resize((delta - 1).max(0) as usize, -1);
                path_with_heights((1, delta), &heights, -1)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, paths)
    }

    pub fn to_dpp(&self) -> Result<Dpp> {
        let rows = self
            .paths
            .iter()
            .map(|p| {
                let mut row = vec![(p.start.1 + 1) as u32];
                row.extend(p.right_steps().iter().filter(|&&(_, h)| h >= 0).map(|&(_, h)| (h + 1) as u32));
                row
            })
            .collect();
        Dpp::new(rows)
    }

    /// `(ν, μ, ρ)`: paths plus rightward steps above the line; rightward
    /// steps below it at nonnegative height; parts equal to `n`.
    pub fn statistics(&self) -> (u32, u32, u32) {
        let top = self.n as i32 - 1;
        let mut nu = self.paths.len() as u32;
        let mut mu = 0;
        let mut rho = self.paths.iter().filter(|p| p.start.1 == top).count() as u32;
        for (x, h) in self.paths.iter().flat_map(LatticePath::right_steps) {
            if h >= x {
                nu += 1;
            } else if h >= 0 {
                mu += 1;
            }
            if h == top {
                rho += 1;
            }
        }
        (nu, mu, rho)
    }
}

pub fn dpp_to_nilp_prime(d: &Dpp, n: usize) -> Result<NilpPrimeSet> {
    NilpPrimeSet::from_dpp(d, n)
}

pub fn nilp_prime_to_dpp(p: &NilpPrimeSet) -> Result<Dpp> {
    p.to_dpp()
}

/// Exponents of `x, y, z` on the rightward edge leaving `(i, j)`: `x` if
/// `i <= j`, `y` otherwise, times `z` on the top row when refined.
fn edge_exps(i: i32, j: i32, n: usize, refined: bool) -> [u32; 3] {
    let top = u32::from(refined && j == n as i32 - 1);
    if i <= j {
        [1, 0, top]
    } else {
        [0, 1, top]
    }
}

fn exps_poly(counts: HashMap<[u32; 3], u64>) -> MultiPoly {
    MultiPoly::from_terms(NVARS, counts.into_iter().map(|(e, c)| (vec![e[0], e[1], e[2], 0, 0], c.into())))
        .expect("full arity")
}

fn check_endpoints(i: usize, j: usize, n: usize) -> Result<()> {
    if i >= n || j >= n {
        return Err(Error::OutOfRange(format!("path sum ({i}, {j}) for n = {n}")));
    }
    Ok(())
}

/// Weighted sum over paths from `(0, j)` to `(i, 0)`, in closed form.
pub fn path_weight_sum(i: usize, j: usize, n: usize, refined: bool) -> Result<MultiPoly> {
    check_endpoints(i, j, n)?;
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let mut p = MultiPoly::zero(NVARS);
    if refined && j == n - 1 {
        for k in 0..=i {
            for l in 0..=k {
                let c = binom(i - 1, i - k) * binom(n - l - 1, k - l);
                p = &p + &MultiPoly::xyz(c, k as u32, (i - k) as u32, l as u32);
            }
        }
    } else {
        for k in 0..=i.min(j + 1) {
            let c = binom(i - 1, i - k) * binom(j + 1, k);
            p = &p + &MultiPoly::xyz(c, k as u32, (i - k) as u32, 0);
        }
    }
    Ok(p)
}

/// The same sum by walking every path.
pub fn path_weight_sum_direct(i: usize, j: usize, n: usize, refined: bool) -> Result<MultiPoly> {
    check_endpoints(i, j, n)?;
    fn walk(x: i32, y: i32, tx: i32, n: usize, refined: bool, e: [u32; 3], out: &mut HashMap<[u32; 3], u64>) {
        if x == tx && y == 0 {
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        if x < tx {
            let w = edge_exps(x, y, n, refined);
            walk(x + 1, y, tx, n, refined, [e[0] + w[0], e[1] + w[1], e[2] + w[2]], out);
        }
        if y > 0 {
            walk(x, y - 1, tx, n, refined, e, out);
        }
    }
    let mut out = HashMap::new();
    walk(0, j as i32, i as i32, n, refined, [0; 3], &mut out);
    Ok(exps_poly(out))
}

/// `A_ij` = weighted path sum from `(0, j)` to `(i, 0)`, `0 <= i, j < n`.
pub fn path_sum_matrix(n: usize, refined: bool) -> Result<Matrix<MultiPoly>> {
    let mut m = Matrix::zeros(n, n, NVARS);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, path_weight_sum(i, j, n, refined)?)?;
        }
    }
    Ok(m)
}

/// Weighted sum over every family of nonintersecting paths, by direct
/// enumeration, grouped by the end points `λ_1 > ... > λ_t`.
pub fn nilp_family_sums(n: usize, refined: bool) -> Result<Vec<(Vec<usize>, MultiPoly)>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    crate::check_enum_limit("path family enumeration", n)?;
    struct Search {
        n: usize,
        refined: bool,
        occupied: Vec<bool>,
        counts: HashMap<[u32; 3], u64>,
    }
    impl Search {
        fn idx(&self, x: i32, y: i32) -> usize {
            x as usize * self.n + y as usize
        }
        // Walks path `k` of the profile, then recurses to the next path.
        fn path(&mut self, profile: &[i32], k: usize, x: i32, y: i32, e: [u32; 3]) {
            let tx = profile[k + 1];
            let id = self.idx(x, y);
            if self.occupied[id] {
                return;
            }
            self.occupied[id] = true;
            if x == tx && y == 0 {
                if k + 2 == profile.len() {
                    *self.counts.entry(e).or_insert(0) += 1;
                } else {
                    let start = profile[k + 1] - 1;
                    self.path(profile, k + 1, 0, start, e);
                }
            } else {
                if x < tx {
                    let w = edge_exps(x, y, self.n, self.refined);
                    self.path(profile, k, x + 1, y, [e[0] + w[0], e[1] + w[1], e[2] + w[2]]);
                }
                if y > 0 {
                    self.path(profile, k, x, y - 1, e);
                }
            }
            self.occupied[id] = false;
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        // λ_1 > ... > λ_t drawn from 1..n-1.
        let lambdas: Vec<usize> = (1..n).rev().filter(|&l| mask & (1 << (l - 1)) != 0).collect();
        let mut profile = vec![n as i32];
        profile.extend(lambdas.iter().map(|&l| l as i32));
        profile.push(0);
        let mut s = Search { n, refined, occupied: vec![false; n * n], counts: HashMap::new() };
        s.path(&profile, 0, 0, n as i32 - 1, [0; 3]);
        out.push((lambdas, exps_poly(s.counts)));
    }
    Ok(out)
}

/// `Σ_T det A_{{0} ∪ T, (T - 1) ∪ {n - 1}}` over subsets `T ⊆ {1..n-1}`,
/// one LGV determinant per end-point profile.
pub fn lgv_profile_sum(n: usize, refined: bool) -> Result<MultiPoly> {
    let a = path_sum_matrix(n, refined)?;
    let mut total = MultiPoly::zero(NVARS);
    for mask in 0u32..(1 << (n.max(1) - 1)) {
        let t: Vec<usize> = (1..n).filter(|&l| mask & (1 << (l - 1)) != 0).collect();
        let mut rows = vec![0];
        rows.extend(&t);
        let mut cols: Vec<usize> = t.iter().map(|&l| l - 1).collect();
        cols.push(n - 1);
        total = &total + &a.submatrix(&rows, &cols)?.det()?;
    }
    Ok(total)
}

/// The generating function of all nonintersecting families, checked against
/// `det(-S + A)` where `A` is the path-sum matrix.
pub fn lgv_nilp_sum(n: usize, refined: bool) -> Result<MultiPoly> {
    let direct = nilp_family_sums(n, refined)?
        .into_iter()
        .fold(MultiPoly::zero(NVARS), |acc, (_, p)| &acc + &p);
    let m = path_sum_matrix(n, refined)?.try_sub(&crate::matrices::shift(n))?;
    let det = m.det()?;
    if det != direct {
        return Err(Error::Invariant(format!("family sum {direct} differs from determinant {det}")));
    }
    Ok(det)
}
