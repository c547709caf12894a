//! Continuants, finite continued fractions and Fibonacci numbers.
//!
//! `K[] = 1`, `K[x₀] = x₀` and
//! `K[x₀, …, x_n] = x_n·K[x₀, …, x_{n−1}] + K[x₀, …, x_{n−2}]`.
//! Entries may be negative; the signed Stern formula relies on that.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::frac::Frac;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuantError {
    #[error("continued fraction has a zero denominator")]
    ZeroDenominator,
    #[error("empty continued fraction")]
    Empty,
    #[error("Fibonacci index {0} is below -1")]
    FibIndex(i64),
}

pub fn continuant<T>(xs: &[T]) -> BigInt
where
    T: Clone + Into<BigInt>,
{
    // (K[..i-1], K[..i])
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for x in xs {
        let next = x.clone().into() * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Continuant of non-negative entries.
pub fn continuant_nat(xs: &[usize]) -> BigUint {
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    for &x in xs {
        let next = &cur * x + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `[a₀; a₁, …, a_n] = K[a₀, …, a_n] / K[a₁, …, a_n]`, in lowest terms with
/// the sign on the numerator.
pub fn cf_value<T>(coeffs: &[T]) -> Result<BigRational, ContinuantError>
where
    T: Clone + Into<BigInt>,
{
    if coeffs.is_empty() {
        return Err(ContinuantError::Empty);
    }
    let den = continuant(&coeffs[1..]);
    if den.is_zero() {
        return Err(ContinuantError::ZeroDenominator);
    }
    Ok(BigRational::new(continuant(coeffs), den))
}

fn cf_frac(coeffs: &[usize]) -> Frac {
    Frac::reduced(continuant_nat(coeffs), continuant_nat(&coeffs[1..]))
}

/// The Stern-Brocot and Raney labels of the node `v`, from its integral
/// representation `(a₀, …, a_n)`:
/// `Sb(v) = [a₀; a₁, …, a_{n−1}, a_n + 1]`, `Ra(v) = [a_n; a_{n−1}, …, a₁, a₀ + 1]`.
pub fn mirror_formula(v: &Word) -> (Frac, Frac) {
    let rep = v.integral_rep();
    let runs = rep.runs();
    let n = rep.n();
    if n == 0 {
        let f = Frac::reduced((runs[0] + 1).into(), BigUint::one());
        return (f.clone(), f);
    }
    let mut sb = runs.to_vec();
    sb[n] += 1;
    let mut ra: Vec<usize> = runs.iter().rev().copied().collect();
    ra[n] += 1;
    (cf_frac(&sb), cf_frac(&ra))
}

/// `(|aψ(v)b|, π(ψ(v)))` computed from the reduced integral representation
/// `(a₀, …, a_n)` of `v`:
/// `|aψ(v)b| = K[a₀+1, a₁, …, a_{n−1}, a_n+1]` and
/// `π(ψ(v)) = K[a₀+1, a₁, …, a_{n−1}]`; for `n = 0` they are `K[a₀+2]` and `1`.
pub fn christoffel_length_cf(v: &Word) -> (BigUint, BigUint) {
    let rep = v.integral_rep();
    let reduced = rep.reduced();
    let n = reduced.len() - 1;
    if n == 0 {
        return (continuant_nat(&[reduced[0] + 2]), continuant_nat(&[1]));
    }
    let mut length = reduced.to_vec();
    length[0] += 1;
    length[n] += 1;
    let mut period = reduced[..n].to_vec();
    period[0] += 1;
    (continuant_nat(&length), continuant_nat(&period))
}

/// Fibonacci numbers indexed from `F₋₁ = F₀ = 1`.
pub fn fib(n: i64) -> Result<BigUint, ContinuantError> {
    if n < -1 {
        return Err(ContinuantError::FibIndex(n));
    }
    let mut prev = BigUint::one();
    let mut cur = BigUint::one();
    for _ in 0..n.max(0) {
        let next = &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

pub fn fib_u64(n: i64) -> u64 {
    let mut prev = 1u64;
    let mut cur = 1u64;
    for _ in 0..n.max(0) {
        let next = cur + prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palindrome::{christoffel_len, min_period_central};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn k(xs: &[i64]) -> BigInt {
        continuant(xs)
    }

    /// Sum over all ways of striking out disjoint adjacent pairs from the
    /// product `x₀x₁⋯x_n`.
    fn continuant_by_striking(xs: &[i64]) -> i64 {
        if xs.is_empty() {
            return 1;
        }
        if xs.len() == 1 {
            return xs[0];
        }
        xs[0] * continuant_by_striking(&xs[1..]) + continuant_by_striking(&xs[2..])
    }

    #[test]
    fn base_cases_and_examples() {
        assert_eq!(k(&[]), BigInt::one());
        assert_eq!(k(&[5]), BigInt::from(5));
        assert_eq!(k(&[1, 1, 2, 1]), BigInt::from(7));
        assert_eq!(k(&[1, -3, 1]), BigInt::from(-1));
        assert_eq!(k(&[1, -3, 1, -5]), BigInt::from(3));
        assert_eq!(continuant_nat(&[1, 1, 1, 3]), BigUint::from(11u32));
    }

    #[test]
    fn striking_pairs_agree() {
        // exhaustive over short lists with entries in [-2, 2]
        let vals = [-2i64, -1, 0, 1, 2];
        for len in 0..=6usize {
            let total = vals.len().pow(len as u32);
            for mut code in 0..total {
                let mut xs = Vec::with_capacity(len);
                for _ in 0..len {
                    xs.push(vals[code % vals.len()]);
                    code /= vals.len();
                }
                assert_eq!(k(&xs), BigInt::from(continuant_by_striking(&xs)), "{xs:?}");
            }
        }
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(cf_value(&[0i64, 1]).unwrap(), BigRational::one());
        assert_eq!(
            cf_value(&[3i64, 1]).unwrap(),
            BigRational::from_integer(4.into())
        );
        assert_eq!(
            cf_value(&[1i64, 1, 1]).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(cf_value(&[1i64, 0]), Err(ContinuantError::ZeroDenominator));
        assert_eq!(cf_value::<i64>(&[]), Err(ContinuantError::Empty));
        let neg = cf_value(&[0i64, -3, 1]).unwrap();
        assert_eq!(neg, BigRational::new((-1).into(), 2.into()));
        assert!(neg.numer() < &BigInt::zero() && neg.denom() > &BigInt::zero());
    }

    #[test]
    fn mirror_formula_examples() {
        let (sb, ra) = mirror_formula(&w(""));
        assert_eq!(
            (sb.to_string(), ra.to_string()),
            ("1/1".into(), "1/1".into())
        );
        let (sb, ra) = mirror_formula(&w("ab"));
        assert_eq!(
            (sb.to_string(), ra.to_string()),
            ("2/3".into(), "3/2".into())
        );
        let (sb, ra) = mirror_formula(&w("abaa"));
        assert_eq!(
            (sb.to_string(), ra.to_string()),
            ("4/7".into(), "3/8".into())
        );
        let (sb, ra) = mirror_formula(&w("bbb"));
        assert_eq!(
            (sb.to_string(), ra.to_string()),
            ("4/1".into(), "4/1".into())
        );
    }

    #[test]
    fn lengths_from_continuants() {
        assert_eq!(
            christoffel_length_cf(&w("abaa")),
            (BigUint::from(11u32), BigUint::from(3u32))
        );
        for n in 0..8 {
            let v = Word::repeat(crate::word::Letter::A, n);
            assert_eq!(christoffel_length_cf(&v).0, BigUint::from(n + 2));
            let v = Word::repeat(crate::word::Letter::B, n);
            assert_eq!(
                christoffel_length_cf(&v),
                (BigUint::from(n + 2), BigUint::one())
            );
        }
        for v in ["ab", "abab", "ababab", "ba", "babab"] {
            let v = w(v);
            let expected = fib(v.len() as i64 + 1).unwrap();
            assert_eq!(christoffel_length_cf(&v).0, expected);
            assert_eq!(christoffel_len(&v), expected);
            assert_eq!(christoffel_length_cf(&v).1, min_period_central(&v));
        }
    }

    #[test]
    fn fibonacci() {
        assert_eq!(fib(-1).unwrap(), BigUint::one());
        assert_eq!(fib(0).unwrap(), BigUint::one());
        assert_eq!(fib(1).unwrap(), BigUint::from(2u32));
        assert_eq!(fib(6).unwrap(), BigUint::from(21u32));
        assert_eq!(fib(-2), Err(ContinuantError::FibIndex(-2)));
        for n in 0..=30usize {
            let ones = vec![1usize; n];
            assert_eq!(continuant_nat(&ones), fib(n as i64 - 1).unwrap());
        }
        assert_eq!(BigUint::from(fib_u64(40)), fib(40).unwrap());
    }
}
