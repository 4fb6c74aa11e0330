//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Canonical form: every stored coefficient is nonzero and every exponent
//! vector has length `arity`, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::numbers::{Integer, Rational};
use crate::error::{Error, Result};

/// Number of variables in the global order.
pub const NVARS: usize = 5;

/// Printed names, in variable order.
pub const VAR_NAMES: [&str; NVARS] = ["x", "y", "z", "w", "q"];

/// The global variables. The discriminant is the exponent slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    W = 3,
    Q = 4,
}

impl Var {
    pub fn index(self) -> usize {
        self as usize
    }

    /// The variable as a polynomial of full arity.
    pub fn poly(self) -> MultiPoly {
        MultiPoly::var(NVARS, self.index())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Integer>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Integer::one())
    }

    pub fn constant(arity: usize, c: impl Into<Integer>) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c.into());
        p
    }

    /// The variable in slot `idx`. Panics if `idx >= arity`.
    pub fn var(arity: usize, idx: usize) -> Self {
        assert!(idx < arity, "variable slot {idx} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[idx] = 1;
        Self::monomial(e, Integer::one())
    }

    pub fn monomial(exps: Vec<u32>, coeff: impl Into<Integer>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff.into());
        p
    }

    /// Builds a polynomial from terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Integer)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch(arity, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Full-arity monomial `coeff * x^ex * y^ey * z^ez`.
    pub fn xyz(coeff: impl Into<Integer>, ex: u32, ey: u32, ez: u32) -> Self {
        Self::monomial(vec![ex, ey, ez, 0, 0], coeff)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Integer) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&k| k == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Integer)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Integer {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> Integer {
        self.coeff(&vec![0; self.arity])
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Integer) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e = e.clone();
                e[var] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Substitutes an integer for one variable.
    pub fn substitute(&self, var: usize, value: &Integer) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let k = std::mem::replace(&mut e[var], 0);
            out.add_term(e, c * Pow::pow(value, k));
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn compose(&self, var: usize, value: &Self) -> Result<Self> {
        self.check_arity(value)?;
        let mut out = Self::zero(self.arity);
        let mut powers: Vec<Self> = vec![Self::one(self.arity)];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut e0 = e.clone();
            e0[var] = 0;
            let term = Self::monomial(e0, c.clone());
            out = &out + &(&term * &powers[k]);
        }
        Ok(out)
    }

    /// Evaluates at a rational point with one coordinate per variable.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, point.len()));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (v, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= Pow::pow(v, k);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Same polynomial with a different arity. Fails if a dropped slot is used.
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (e, c) in &self.terms {
            if e.iter().skip(arity).any(|&k| k > 0) {
                return Err(Error::ArityMismatch(self.arity, arity));
            }
            let mut e2 = e.clone();
            e2.resize(arity, 0);
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Exact division. Fails with [`Error::NotExact`] if `divisor` does not
    /// divide `self` in the integer polynomial ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_arity(divisor)?;
        let (lead_e, lead_c) = divisor.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Err(Error::NotExact);
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotExact);
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let t = Self::monomial(qe, q);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn terms_grlex(&self) -> Vec<(&[u32], &Integer)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    fn var_name(&self, i: usize) -> String {
        if self.arity <= NVARS {
            VAR_NAMES[i].to_string()
        } else {
            format!("v{i}")
        }
    }
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for MultiPoly {
    /// Graded lexicographic order, variables `x > y > z > w > q`, explicit
    /// signs: `x^3*z^2 + x*y*z - 2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms_grlex().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if !a.is_one() || is_const {
                factors.push(a.to_string());
            }
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(self.var_name(i)),
                    _ => factors.push(format!("{}^{}", self.var_name(i), p)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses sums of terms over `x, y, z, w, q` into a full-arity polynomial.
    /// Factors may be juxtaposed (`3x^2y`) or joined with `*`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = MultiPoly::zero(NVARS);
        let mut pos = 0;
        let number = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| chars[start..*pos].iter().collect::<String>().parse().unwrap())
        };
        while pos < chars.len() {
            let mut sign = BigInt::one();
            if chars[pos] == '+' || chars[pos] == '-' {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(Error::Parse(format!("expected sign at {pos}")));
            }
            let mut coeff = sign;
            let mut exps = vec![0u32; NVARS];
            let mut factors = 0;
            loop {
                if pos < chars.len() && chars[pos] == '*' && factors > 0 {
                    pos += 1;
                }
                if let Some(n) = number(&mut pos) {
                    coeff *= n;
                } else if let Some(v) = chars.get(pos).and_then(|c| VAR_NAMES.iter().position(|n| n.starts_with(*c))) {
                    pos += 1;
                    let mut p = 1u32;
                    if chars.get(pos) == Some(&'^') {
                        pos += 1;
                        let n = number(&mut pos).ok_or_else(|| Error::Parse(format!("missing exponent at {pos}")))?;
                        p = u32::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?;
                    }
                    exps[v] += p;
                } else {
                    break;
                }
                factors += 1;
            }
            if factors == 0 {
                return Err(Error::Parse(format!("expected a term at {pos}")));
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics on arity mismatch; use the `try_` form to recover.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$imp(rhs).expect("polynomial arity mismatch")
            }
        }
        impl std::ops::$trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$imp(&rhs).expect("polynomial arity mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigInt::one())
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// JSON form: `{"vars": [...], "terms": [["coeff", [exponents]], ...]}` with
/// terms in graded lexicographic order and coefficients as decimal strings.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vars: Vec<String> = (0..self.arity).map(|i| self.var_name(i)).collect();
        let terms: Vec<(String, Vec<u32>)> = self
            .terms_grlex()
            .into_iter()
            .map(|(e, c)| (c.to_string(), e.to_vec()))
            .collect();
        PolyJson { vars, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolyJson::deserialize(d)?;
        let terms = j
            .terms
            .into_iter()
            .map(|(c, e)| c.parse::<BigInt>().map(|c| (e, c)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        MultiPoly::from_terms(j.vars.len(), terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<(String, Vec<u32>)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn square_of_binomial() {
        let one_xz = p("1 + x*z");
        assert_eq!(one_xz.pow(2), p("1 + 2xz + x^2z^2"));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("1+x^3z^2+x+x^2z^2+xz+x^2z+xyz").to_string(), "x^3*z^2 + x^2*z^2 + x^2*z + x*y*z + x*z + x + 1");
        assert_eq!(p("-x + 2").to_string(), "-x + 2");
        assert_eq!(p("y - 3x^2").to_string(), "-3*x^2 + y");
        assert_eq!(MultiPoly::zero(NVARS).to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let d = &p("x + y") - &p("x");
        assert_eq!(d.num_terms(), 1);
        assert!((&d - &d).is_zero());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = MultiPoly::var(2, 0);
        let b = MultiPoly::var(3, 0);
        assert_eq!(a.try_add(&b), Err(Error::ArityMismatch(2, 3)));
        assert_eq!(a.try_mul(&b), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert_eq!(a.div_exact(&p("x + 2")), Err(Error::NotExact));
        assert_eq!(p("2x").div_exact(&p("4")), Err(Error::NotExact));
    }

    #[test]
    fn evaluation_and_substitution() {
        let a = p("x^2*y + 3z - 1");
        let pt = [rat(1, 2), rat(4, 1), rat(-1, 3), rat(0, 1), rat(0, 1)];
        assert_eq!(a.eval(&pt).unwrap(), rat(-1, 1));
        assert_eq!(a.substitute(Var::Z.index(), &BigInt::from(1)), p("x^2y + 2"));
        assert_eq!(a.compose(Var::Z.index(), &p("x + 1")).unwrap(), p("x^2y + 3x + 2"));
    }

    #[test]
    fn json_roundtrip() {
        let a = p("x^3z^2 - 7xyz + 12");
        let s = serde_json::to_string(&a).unwrap();
        let b: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
