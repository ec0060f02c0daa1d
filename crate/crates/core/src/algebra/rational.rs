//! Arbitrary-precision rational scalars and integer factoring helpers.
//!
//! `Rational` is always stored reduced with a positive denominator; the
//! backing type maintains that on every operation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Int = BigInt;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Reduced fraction n/d; panics if d = 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(Int::from(n), Int::from(d))
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional sign; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("malformed rational literal `{s}`"));
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: Int = num_str.parse().map_err(|_| bad())?;
    let denom: Int = den_str.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Exact integer square root test.
pub fn perfect_square_root(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

/// Exact rational square root of a reduced fraction, if one exists.
pub fn rational_square_root(r: &Rational) -> Option<Rational> {
    let num = perfect_square_root(r.numer())?;
    let den = perfect_square_root(r.denom())?;
    Some(Rational::new(num, den))
}

const TRIAL_BOUND: u64 = 1_000_000;

/// Deterministic Miller-Rabin; the witness set is valid far beyond the
/// factoring sizes this crate produces.
fn is_probable_prime(n: &Int) -> bool {
    if n < &Int::from(2) {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = Int::from(small);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = Int::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = Int::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&Int::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All positive divisors of |n|, or None when |n| has a composite factor
/// beyond the trial-division bound and the list would be incomplete.
pub fn positive_divisors(n: &Int) -> Option<Vec<Int>> {
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut primes: Vec<(Int, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_BOUND {
        let bp = Int::from(p);
        if (&bp * &bp) > m {
            break;
        }
        if (&m % &bp).is_zero() {
            let mut e = 0u32;
            while (&m % &bp).is_zero() {
                m /= &bp;
                e += 1;
            }
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        if is_probable_prime(&m) {
            primes.push((m, 1));
        } else {
            return None;
        }
    }
    let mut divisors = vec![Int::one()];
    for (prime, e) in primes {
        let mut extended = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut power = Int::one();
            for _ in 0..=e {
                extended.push(d * &power);
                power *= &prime;
            }
        }
        divisors = extended;
    }
    divisors.sort();
    divisors.dedup();
    Some(divisors)
}

/// Clears denominators: returns the integer coefficient vector and the
/// common denominator that was multiplied through.
pub fn clear_denominators(coeffs: &[Rational]) -> (Vec<Int>, Int) {
    let mut lcm = Int::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    (ints, lcm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_hides_unit_denominator() {
        assert_eq!(format_rational(&ratio(-3, 1)), "-3");
        assert_eq!(format_rational(&ratio(3, 4)), "3/4");
        assert_eq!(format_rational(&ratio(2, -4)), "-1/2");
    }

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        let r = parse_rational("6/-8").unwrap();
        assert_eq!(r, ratio(-3, 4));
        assert!(r.denom() > &Int::zero());
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let sum = ratio(3, 4) + ratio(1, 4);
        assert_eq!(sum, rat(1));
        assert!(sum.denom().is_one());
        assert_eq!(ratio(1, 3) * rat(3), rat(1));
    }

    #[test]
    fn divisor_enumeration() {
        let divs = positive_divisors(&Int::from(-12)).unwrap();
        let as_i64: Vec<i64> = divs.iter().map(|d| i64::try_from(d).unwrap()).collect();
        assert_eq!(as_i64, vec![1, 2, 3, 4, 6, 12]);
        assert!(positive_divisors(&Int::zero()).is_none());
    }

    #[test]
    fn square_root_detection() {
        assert_eq!(rational_square_root(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_square_root(&ratio(2, 1)), None);
        assert_eq!(rational_square_root(&ratio(-9, 4)), None);
    }

    #[test]
    fn primality_witnesses() {
        assert!(is_probable_prime(&Int::from(1_000_003)));
        assert!(!is_probable_prime(&Int::from(1_000_001)));
        // Small factors times one large prime factorizes completely.
        let divs = positive_divisors(&(Int::from(96) * Int::from(1_000_003))).unwrap();
        assert!(divs.contains(&Int::from(1_000_003)));
        assert_eq!(divs.len(), 12 * 2);
        // A semiprime with both factors above the trial bound is reported
        // as incomplete rather than silently truncated.
        assert!(positive_divisors(&(Int::from(1_000_003) * Int::from(1_000_033))).is_none());
    }
}
