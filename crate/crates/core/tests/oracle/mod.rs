//! Independent reference implementations used only by the tests: monotone
//! triangles for ASMs, incremental validation for DPPs, statistics straight
//! from their definitions, and machine-integer product formulas.

#![allow(dead_code)]

use std::collections::HashMap;

use asmdpp_core::MultiPoly;

pub type Mat = Vec<Vec<i8>>;
pub type Hist = HashMap<(u32, u32, u32), u64>;

/// Every ASM of order `n`, built from monotone triangles.
pub fn asms(n: usize) -> Vec<Mat> {
    fn rows_above(below: &[usize], out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        let k = below.len() - 1;
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let i = cur.len();
        let lo = below[i].max(cur.last().map_or(0, |&c| c + 1));
        for v in lo..=below[i + 1] {
            cur.push(v);
            rows_above(below, out, cur);
            cur.pop();
        }
    }
    fn grow(rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let last = rows.last().unwrap();
        if last.len() == 1 {
            let mut t = rows.clone();
            t.reverse();
            out.push(t);
            return;
        }
        let mut cands = Vec::new();
        rows_above(last, &mut cands, &mut Vec::new());
        for c in cands {
            rows.push(c);
            grow(rows, out);
            rows.pop();
        }
    }
    let mut triangles = Vec::new();
    grow(&mut vec![(1..=n).collect()], &mut triangles);
    triangles
        .into_iter()
        .map(|t| {
            let ind = |r: &[usize]| -> Vec<i8> { (1..=n).map(|c| i8::from(r.contains(&c))).collect() };
            let mut prev = vec![0i8; n];
            t.iter()
                .map(|r| {
                    let cur = ind(r);
                    let row = cur.iter().zip(&prev).map(|(a, b)| a - b).collect();
                    prev = cur;
                    row
                })
                .collect()
        })
        .collect()
}

/// `(ν, μ, ρ)` straight from the defining sums.
pub fn asm_stats(a: &Mat) -> (u32, u32, u32) {
    let n = a.len();
    let mut nu = 0i64;
    for i in 0..n {
        for j in 0..n {
            for i2 in i + 1..n {
                for j2 in 0..=j {
                    nu += i64::from(a[i][j]) * i64::from(a[i2][j2]);
                }
            }
        }
    }
    let mu = a.iter().flatten().filter(|&&v| v == -1).count() as u32;
    let rho = a[0].iter().position(|&v| v == 1).unwrap() as u32;
    (nu as u32, mu, rho)
}

pub fn reflect(a: &Mat) -> Mat {
    a.iter().map(|r| r.iter().rev().copied().collect()).collect()
}

pub fn rotate_half(a: &Mat) -> Mat {
    reflect(&a.iter().rev().cloned().collect())
}

pub fn rotate_quarter(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[n - 1 - j][i]).collect()).collect()
}

/// An entry 1 that is alone in its row and column.
pub fn isolated_ones(a: &Mat) -> usize {
    let n = a.len();
    let mut c = 0;
    for i in 0..n {
        for j in 0..n {
            let row_alone = (0..n).all(|k| k == j || a[i][k] == 0);
            let col_alone = (0..n).all(|k| k == i || a[k][j] == 0);
            if a[i][j] == 1 && row_alone && col_alone {
                c += 1;
            }
        }
    }
    c
}

/// Six-vertex type names from the edge values `(left, right, up, down)`.
pub fn vertex_types(a: &Mat) -> Vec<Vec<&'static str>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let left: i8 = a[i][..j].iter().sum();
                    let right = left + a[i][j];
                    let up: i8 = (0..i).map(|k| a[k][j]).sum();
                    let down = up + a[i][j];
                    match (left, right, up, down) {
                        (0, 0, 0, 0) => "a1",
                        (1, 1, 1, 1) => "a2",
                        (1, 1, 0, 0) => "b1",
                        (0, 0, 1, 1) => "b2",
                        (0, 1, 0, 1) => "c1",
                        (1, 0, 1, 0) => "c2",
                        e => panic!("not a six-vertex configuration: {e:?}"),
                    }
                })
                .collect()
        })
        .collect()
}

/// Every DPP with parts at most `n`, as rows of parts.
pub fn dpps(n: u32) -> Vec<Vec<Vec<u32>>> {
    // A row is admissible after `prev` when each defining inequality holds.
    fn fits(rows: &[Vec<u32>], row: &[u32]) -> bool {
        if row.windows(2).any(|w| w[0] < w[1]) || row[0] as usize <= row.len() {
            return false;
        }
        match rows.last() {
            None => true,
            Some(prev) => {
                row[0] as usize <= prev.len()
                    && row.len() < prev.len()
                    && row.iter().enumerate().all(|(k, &d)| prev[k + 1] > d)
            }
        }
    }
    fn all_rows(n: u32, len: usize) -> Vec<Vec<u32>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for rest in all_rows(first, len - 1) {
                let mut r = vec![first];
                r.extend(rest);
                out.push(r);
            }
        }
        out
    }
    fn go(n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        out.push(rows.clone());
        let max_len = rows.last().map_or(n as usize, |p| p.len().saturating_sub(1));
        for len in 1..=max_len {
            for row in all_rows(n, len) {
                if fits(rows, &row) {
                    rows.push(row);
                    go(n, rows, out);
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// `(ν, μ, ρ)` of a DPP in DPP(n): row `i` starts in column `i`.
pub fn dpp_stats(d: &[Vec<u32>], n: u32) -> (u32, u32, u32) {
    let (mut nu, mut mu, mut rho) = (0, 0, 0);
    for row in d {
        for (k, &part) in row.iter().enumerate() {
            // j - i = k.
            if part as usize <= k {
                mu += 1;
            } else {
                nu += 1;
            }
            if part == n {
                rho += 1;
            }
        }
    }
    (nu, mu, rho)
}

pub fn asm_hist(n: usize) -> Hist {
    let mut h = Hist::new();
    for a in asms(n) {
        *h.entry(asm_stats(&a)).or_default() += 1;
    }
    h
}

pub fn dpp_hist(n: usize) -> Hist {
    let mut h = Hist::new();
    for d in dpps(n as u32) {
        *h.entry(dpp_stats(&d, n as u32)).or_default() += 1;
    }
    h
}

/// Histogram of the `x^ν y^μ z^ρ` terms of a polynomial; panics on other
/// variables or negative coefficients.
pub fn poly_hist(p: &MultiPoly) -> Hist {
    p.terms()
        .map(|(e, c)| {
            assert!(e[3] == 0 && e[4] == 0, "unexpected variables in {p}");
            ((e[0], e[1], e[2]), u64::try_from(c.clone()).expect("nonnegative coefficient"))
        })
        .collect()
}

pub fn fact(n: u64) -> u128 {
    (1..=n as u128).product()
}

pub fn asm_product(n: u64) -> u128 {
    let num: u128 = (0..n).map(|i| fact(3 * i + 1)).product();
    let den: u128 = (0..n).map(|i| fact(n + i)).product();
    assert_eq!(num % den, 0);
    num / den
}

pub fn refined_product(n: u64, k: u64) -> u128 {
    let num = fact(n + k - 1) * fact(2 * n - k - 2) * asm_product(n - 1);
    let den = fact(2 * n - 2) * fact(k) * fact(n - k - 1);
    assert_eq!(num % den, 0);
    num / den
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    fact(n) / (fact(k) * fact(n - k))
}

/// Dense polynomials in one variable, lowest degree first.
pub fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient of dense polynomials; panics on a remainder.
pub fn poly_div(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = *b.last().unwrap();
    let mut q = vec![0; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] / lead;
        assert_eq!(c * lead, r[k + db]);
        q[k] = c;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= c * y;
        }
    }
    assert!(r.iter().all(|&v| v == 0), "inexact division");
    q
}

pub fn q_factorial(k: usize) -> Vec<i128> {
    (1..=k).fold(vec![1], |acc, i| poly_mul(&acc, &vec![1; i]))
}
