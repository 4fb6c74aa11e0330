use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `n / d` as a normalized rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `a(a-1)...(a-b+1)/b!`, zero for `b < 0`.
///
/// For negative `a` this follows upper negation, so `binom(-1, 0) == 1`.
pub fn binom(a: i64, b: i64) -> Integer {
    if b < 0 {
        return Integer::zero();
    }
    if a >= 0 && b > a {
        return Integer::zero();
    }
    let b = if a >= 0 { b.min(a - b) } else { b };
    let mut num = Integer::one();
    let mut den = Integer::one();
    for k in 0..b {
        num *= a - k;
        den *= k + 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(5, 7), BigInt::from(0));
        assert_eq!(binom(-1, 0), BigInt::from(1));
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(3, -1), BigInt::from(0));
        assert_eq!(binom(0, 0), BigInt::from(1));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
