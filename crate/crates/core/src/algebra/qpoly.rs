//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored low-to-high with no trailing zero; the zero
//! polynomial is the empty vector. This module backs the number-field
//! internals (reduction, inversion, irreducibility) and rational root
//! extraction.

use num::{One, Signed, Zero};

use super::rational::{clear_denominators, positive_divisors, rational_square_root, Int, Rational};
use crate::error::{Error, Result};

pub type QPoly = Vec<Rational>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn is_zero(p: &[Rational]) -> bool {
    p.is_empty()
}

/// Degree of a nonzero polynomial; panics on zero.
pub fn degree(p: &[Rational]) -> usize {
    assert!(!p.is_empty(), "degree of the zero polynomial");
    p.len() - 1
}

pub fn add(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn neg(a: &[Rational]) -> QPoly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    add(a, &neg(b))
}

pub fn mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

pub fn scale(a: &[Rational], s: &Rational) -> QPoly {
    trim(a.iter().map(|c| c * s).collect())
}

/// Quotient and remainder by a nonzero divisor.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem: QPoly = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let factor = rem.last().unwrap() / lead;
        let shift = dr - db;
        quot[shift] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let adj = &factor * c;
            rem[shift + i] -= adj;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(p: &[Rational]) -> QPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(Int::from(i)))
            .collect(),
    )
}

pub fn monic(p: &[Rational]) -> QPoly {
    match p.last() {
        None => Vec::new(),
        Some(lead) => scale(p, &(Rational::one() / lead)),
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g and g monic (or zero).
pub fn ext_gcd(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = Rational::one() / lead;
        return (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv));
    }
    (r0, s0, t0)
}

/// p(t + c), expanded exactly.
pub fn compose_shift(p: &[Rational], c: &Rational) -> QPoly {
    // Horner in (t + c): acc <- acc * (t + c) + coefficient.
    let mut acc: QPoly = Vec::new();
    for coeff in p.iter().rev() {
        let shifted = add(
            &mul(&acc, &[c.clone(), Rational::one()]),
            std::slice::from_ref(coeff),
        );
        acc = shifted;
    }
    acc
}

/// All rational roots with multiplicities, by the rational root theorem
/// and exact deflation. Errors when the divisor enumeration of the outer
/// coefficients is incomplete, since roots could then be missed.
pub fn rational_roots(p: &[Rational]) -> Result<Vec<(Rational, usize)>> {
    let mut p = trim(p.to_vec());
    assert!(!p.is_empty(), "roots of the zero polynomial");
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    // Zero roots come from trailing zero coefficients.
    let mut zero_mult = 0usize;
    while p.first().is_some_and(|c| c.is_zero()) {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if p.len() <= 1 {
        return Ok(roots);
    }
    let (ints, _) = clear_denominators(&p);
    let trailing = ints.first().unwrap().clone();
    let leading = ints.last().unwrap().clone();
    let num_divs =
        positive_divisors(&trailing).ok_or(Error::IrreducibilityVerificationFailed)?;
    let den_divs = positive_divisors(&leading).ok_or(Error::IrreducibilityVerificationFailed)?;
    let mut candidates: Vec<Rational> = Vec::new();
    for n in &num_divs {
        for d in &den_divs {
            let pos = Rational::new(n.clone(), d.clone());
            candidates.push(-&pos);
            candidates.push(pos);
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        if p.len() <= 1 {
            break;
        }
        if !eval(&p, &cand).is_zero() {
            continue;
        }
        let linear = vec![-&cand, Rational::one()];
        let mut mult = 0usize;
        loop {
            let (q, r) = divrem(&p, &linear);
            if is_zero(&r) {
                p = q;
                mult += 1;
                if p.len() <= 1 {
                    break;
                }
            } else {
                break;
            }
        }
        roots.push((cand, mult));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

/// Irreducibility over the rationals for monic polynomials of degree <= 4.
pub fn irreducible_over_q(p: &[Rational]) -> Result<bool> {
    let p = trim(p.to_vec());
    if p.len() < 2 || !p.last().unwrap().is_one() {
        return Err(Error::BadMinimalPolynomial);
    }
    let d = p.len() - 1;
    match d {
        1 => Ok(true),
        2 | 3 => Ok(rational_roots(&p)?.is_empty()),
        4 => {
            if !rational_roots(&p)?.is_empty() {
                return Ok(false);
            }
            // No linear factor; the only remaining split is into two
            // monic quadratics, detected on the depressed quartic
            // y^4 + P y^2 + Q y + R via the cubic resolvent in u^2.
            let shift = -&p[3] / Rational::from_integer(Int::from(4));
            let dep = compose_shift(&p, &shift);
            let (big_r, big_q, big_p) = (dep[0].clone(), dep[1].clone(), dep[2].clone());
            let disc = &big_p * &big_p - Rational::from_integer(Int::from(4)) * &big_r;
            if big_q.is_zero() {
                // Biquadratic: splits iff P^2 - 4R is a square, or both
                // -P +- 2*sqrt(R) give a square for the cross pattern
                // (y^2 + uy + v)(y^2 - uy + v) with v^2 = R.
                if rational_square_root(&disc).is_some() {
                    return Ok(false);
                }
                if let Some(v) = rational_square_root(&big_r) {
                    for vv in [v.clone(), -v] {
                        let z = Rational::from_integer(Int::from(2)) * &vv - &big_p;
                        if !z.is_zero() && rational_square_root(&z).is_some() {
                            return Ok(false);
                        }
                    }
                }
                return Ok(true);
            }
            // Q != 0 forces u != 0, so u^2 is a nonzero rational root of
            // the cubic resolvent and must itself be a rational square.
            let resolvent = vec![
                -(&big_q * &big_q),
                disc,
                Rational::from_integer(Int::from(2)) * &big_p,
                Rational::one(),
            ];
            for (z, _) in rational_roots(&resolvent)? {
                if z.is_positive() && rational_square_root(&z).is_some() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(Error::IrreducibilityNotChecked),
    }
}
