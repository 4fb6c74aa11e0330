//! Dense matrices over exact rings and their determinants.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::numbers::Rational;
use super::omega::OmegaPoly;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Largest order accepted by the minor-expansion determinant, which keeps
/// one value per column subset.
pub const DET_LIMIT: usize = 16;

/// Exact commutative ring operations needed by [`Matrix`].
///
/// `arity` is the number of polynomial variables; rationals ignore it.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero(arity: usize) -> Self;
    fn one(arity: usize) -> Self;
    fn arity(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn try_add(&self, other: &Self) -> Result<Self>;
    fn try_sub(&self, other: &Self) -> Result<Self>;
    fn try_mul(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
}

impl Ring for MultiPoly {
    fn zero(arity: usize) -> Self {
        MultiPoly::zero(arity)
    }
    fn one(arity: usize) -> Self {
        MultiPoly::one(arity)
    }
    fn arity(&self) -> usize {
        MultiPoly::arity(self)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        MultiPoly::try_add(self, other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self> {
        MultiPoly::try_sub(self, other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        MultiPoly::try_mul(self, other)
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for OmegaPoly {
    fn zero(arity: usize) -> Self {
        OmegaPoly::constant(MultiPoly::zero(arity))
    }
    fn one(arity: usize) -> Self {
        OmegaPoly::constant(MultiPoly::one(arity))
    }
    fn arity(&self) -> usize {
        OmegaPoly::arity(self)
    }
    fn is_zero(&self) -> bool {
        OmegaPoly::is_zero(self)
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        OmegaPoly::try_add(self, other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self> {
        OmegaPoly::try_sub(self, other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        OmegaPoly::try_mul(self, other)
    }
    fn neg(&self) -> Self {
        OmegaPoly::neg(self)
    }
}

impl Ring for Rational {
    fn zero(_: usize) -> Self {
        Zero::zero()
    }
    fn one(_: usize) -> Self {
        One::one()
    }
    fn arity(&self) -> usize {
        0
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(self - other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Row-major dense matrix. All entries share one arity.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    arity: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, arity: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                if e.arity() != arity {
                    return Err(Error::ArityMismatch(arity, e.arity()));
                }
                data.push(e);
            }
        }
        Ok(Matrix { rows, cols, arity, data })
    }

    pub fn from_rows(arity: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_fn(r, c, arity, |i, j| rows[i][j].clone())
    }

    pub fn zeros(rows: usize, cols: usize, arity: usize) -> Self {
        Matrix { rows, cols, arity, data: vec![T::zero(arity); rows * cols] }
    }

    pub fn identity(n: usize, arity: usize) -> Self {
        let mut m = Self::zeros(n, n, arity);
        for i in 0..n {
            m.data[i * n + i] = T::one(arity);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) -> Result<()> {
        if v.arity() != self.arity {
            return Err(Error::ArityMismatch(self.arity, v.arity()));
        }
        self.data[i * self.cols + j] = v;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, arity: self.arity, data }
    }

    pub fn map<U: Ring>(&self, arity: usize, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<U>>>()?;
        if let Some(e) = data.iter().find(|e| e.arity() != arity) {
            return Err(Error::ArityMismatch(arity, e.arity()));
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, arity, data })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, arity: self.arity, data })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, arity: self.arity, data })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.arity);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].try_add(&a.try_mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every entry by `k`.
    pub fn scale(&self, k: &T) -> Result<Self> {
        self.map(self.arity, |e| e.try_mul(k))
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::Shape("submatrix index out of range".into()));
        }
        Self::from_fn(rows.len(), cols.len(), self.arity, |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by Laplace expansion along rows, memoized over column
    /// subsets. Division free, so it works over any commutative ring.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n > DET_LIMIT {
            return Err(Error::TooLarge { what: "determinant", n, limit: DET_LIMIT });
        }
        // minors[mask] = det of rows 0..|mask| against the columns in mask.
        let mut minors: Vec<T> = Vec::with_capacity(1 << n);
        minors.push(T::one(self.arity));
        for mask in 1usize..(1 << n) {
            let r = mask.count_ones() as usize - 1;
            let mut acc = T::zero(self.arity);
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(r, j);
                let sub = &minors[mask ^ (1 << j)];
                if a.is_zero() || sub.is_zero() {
                    continue;
                }
                let term = a.try_mul(sub)?;
                let higher = (mask >> (j + 1)).count_ones();
                acc = if higher % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
            }
            minors.push(acc);
        }
        Ok(minors.pop().unwrap())
    }
}

impl Matrix<MultiPoly> {
    /// Fraction-free (Bareiss) elimination. Every division is checked to be
    /// exact; an inexact one is reported as [`Error::NotExact`].
    pub fn det_bareiss(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a: Vec<Vec<MultiPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = MultiPoly::one(self.arity);
        let mut negate = false;
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(self.arity)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = if n == 0 { MultiPoly::one(self.arity) } else { a[n - 1][n - 1].clone() };
        Ok(if negate { -d } else { d })
    }
}

impl Matrix<Rational> {
    /// Gaussian elimination over the rationals.
    pub fn det_rat(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = <Rational as One>::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !Zero::is_zero(&a[i][k])) else {
                return Ok(<Rational as Zero>::zero());
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            let pivot = a[k][k].clone();
            det *= &pivot;
            for i in k + 1..n {
                if Zero::is_zero(&a[i][k]) {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
        Ok(det)
    }
}

impl<T: Ring> Matrix<T> {
    /// Converts entries to rationals.
    pub fn eval(&self, f: impl FnMut(&T) -> Result<Rational>) -> Result<Matrix<Rational>> {
        self.map(0, f)
    }
}

/// JSON form: `{"rows": r, "cols": c, "entries": [[entry, ...], ...]}`.
impl<T: Ring + Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<&[T]> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// JSON form: `{"omega": [d0, d1, d2]}`, trailing zeros omitted.
impl Serialize for OmegaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = HashMap::new();
        m.insert("omega", self.coeffs());
        m.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, NVARS};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn pm(rows: &[&[&str]]) -> Matrix<MultiPoly> {
        Matrix::from_rows(NVARS, rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_determinants() {
        let m = pm(&[&["x", "y"], &["z", "w"]]);
        assert_eq!(m.det().unwrap(), p("xw - yz"));
        assert_eq!(m.det_bareiss().unwrap(), p("xw - yz"));
        let m3 = pm(&[&["0", "1", "x"], &["1", "0", "y"], &["z", "1", "0"]]);
        let expect = p("x + yz");
        assert_eq!(m3.det().unwrap(), expect);
        assert_eq!(m3.det_bareiss().unwrap(), expect);
        let e: Matrix<MultiPoly> = Matrix::identity(0, NVARS);
        assert!(e.det().unwrap().is_one());
    }

    #[test]
    fn rational_determinant() {
        let m = Matrix::from_rows(0, vec![vec![rat(1, 2), rat(1, 3)], vec![rat(2, 1), rat(0, 1)]]).unwrap();
        assert_eq!(m.det_rat().unwrap(), rat(-2, 3));
        assert_eq!(m.det().unwrap(), rat(-2, 3));
    }

    #[test]
    fn non_square_rejected() {
        let m: Matrix<MultiPoly> = Matrix::zeros(2, 3, NVARS);
        assert!(matches!(m.det(), Err(Error::Shape(_))));
        let big: Matrix<Rational> = Matrix::identity(DET_LIMIT + 1, 0);
        assert!(matches!(big.det(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn product_and_transpose() {
        let a = pm(&[&["x", "1"], &["0", "y"]]);
        let b = pm(&[&["1", "0"], &["z", "1"]]);
        assert_eq!(a.try_mul(&b).unwrap(), pm(&[&["x + z", "1"], &["yz", "y"]]));
        assert_eq!(a.transpose(), pm(&[&["x", "0"], &["1", "y"]]));
    }
}
