//! Arithmetic modulo word-sized primes, including quotient rings
//! F_p[t]/(m(t)) for reducing number-field data.
//!
//! Reductions can fail for a particular prime (a denominator divisible
//! by p, or a zero-divisor pivot when m is reducible mod p); callers
//! retry with the next prime from [`CERTIFICATE_PRIMES`].

use num::ToPrimitive;

use super::field::FieldElement;
use super::rational::{Int, Rational};

/// 62-bit primes used for modular regularity certificates.
pub const CERTIFICATE_PRIMES: [u64; 5] = [
    4611686018427388039,
    4611686018427388121,
    4611686018427388159,
    4611686018427388231,
    4611686018427388289,
];

/// A prime turned out to be unusable for the requested reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeUnusable;

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 + p as u128 - b as u128) as u64 % p
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime; None for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    // Extended Euclid over signed 128-bit accumulators.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        r0 -= q * r1;
        std::mem::swap(&mut r0, &mut r1);
        t0 -= q * t1;
        std::mem::swap(&mut t0, &mut t1);
    }
    debug_assert_eq!(r0, 1);
    let mut t = t0 % p as i128;
    if t < 0 {
        t += p as i128;
    }
    Some(t as u64)
}

pub fn int_mod(n: &Int, p: u64) -> u64 {
    let m = n % Int::from(p);
    let m = if m < Int::from(0) { m + Int::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

/// Rational mod p; fails when p divides the denominator.
pub fn rational_mod(r: &Rational, p: u64) -> Result<u64, PrimeUnusable> {
    let den = int_mod(r.denom(), p);
    let den_inv = inv_mod(den, p).ok_or(PrimeUnusable)?;
    Ok(mul_mod(int_mod(r.numer(), p), den_inv, p))
}

/// The quotient ring F_p[t]/(m(t)) for monic m. When m is irreducible
/// mod p this is the field F_{p^d}; otherwise it has zero divisors and
/// inversion can fail, which callers treat as an unusable prime.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub p: u64,
    /// Monic modulus, low-to-high, length d+1.
    modulus: Vec<u64>,
}

/// Element of a [`QuotientRing`]: coefficients low-to-high, length d.
pub type QuotElem = Vec<u64>;

impl QuotientRing {
    pub fn new(p: u64, modulus: Vec<u64>) -> QuotientRing {
        assert!(modulus.len() >= 2, "modulus must have degree >= 1");
        assert_eq!(*modulus.last().unwrap() % p, 1, "modulus must be monic");
        QuotientRing { p, modulus }
    }

    /// Reduces a monic rational modulus mod p.
    pub fn from_min_poly(p: u64, min_poly: &[Rational]) -> Result<QuotientRing, PrimeUnusable> {
        let modulus = min_poly
            .iter()
            .map(|c| rational_mod(c, p))
            .collect::<Result<Vec<u64>, PrimeUnusable>>()?;
        Ok(QuotientRing::new(p, modulus))
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> QuotElem {
        vec![0; self.degree()]
    }

    pub fn one(&self) -> QuotElem {
        let mut e = self.zero();
        e[0] = 1 % self.p;
        e
    }

    pub fn from_u64(&self, n: u64) -> QuotElem {
        let mut e = self.zero();
        e[0] = n % self.p;
        e
    }

    /// The residue class of t.
    pub fn generator(&self) -> QuotElem {
        let mut e = self.zero();
        if self.degree() == 1 {
            // t reduces to the root of the linear modulus.
            e[0] = sub_mod(0, self.modulus[0], self.p);
        } else {
            e[1] = 1;
        }
        e
    }

    pub fn reduce_field_element(&self, x: &FieldElement) -> Result<QuotElem, PrimeUnusable> {
        let coords = x.coords();
        if coords.len() != self.degree() {
            return Err(PrimeUnusable);
        }
        coords.iter().map(|c| rational_mod(c, self.p)).collect()
    }

    pub fn is_zero(&self, a: &QuotElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| add_mod(x, y, self.p))
            .collect()
    }

    pub fn sub(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| sub_mod(x, y, self.p))
            .collect()
    }

    pub fn neg(&self, a: &QuotElem) -> QuotElem {
        a.iter().map(|&x| sub_mod(0, x, self.p)).collect()
    }

    pub fn mul(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        let d = self.degree();
        let mut conv = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                conv[i + j] = add_mod(conv[i + j], mul_mod(x, y, self.p), self.p);
            }
        }
        // Reduce by the monic modulus.
        for i in (d..conv.len()).rev() {
            let top = conv[i];
            if top == 0 {
                continue;
            }
            conv[i] = 0;
            let shift = i - d;
            for (k, &mc) in self.modulus.iter().take(d).enumerate() {
                conv[shift + k] = sub_mod(conv[shift + k], mul_mod(top, mc, self.p), self.p);
            }
        }
        conv.truncate(d);
        conv
    }

    pub fn pow(&self, a: &QuotElem, mut e: u64) -> QuotElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm in F_p[t]. None when
    /// the element is a zero divisor (modulus reducible mod p) or zero.
    pub fn inverse(&self, a: &QuotElem) -> Option<QuotElem> {
        if self.is_zero(a) {
            return None;
        }
        let p = self.p;
        let trim = |mut v: Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        let mut r0 = trim(self.modulus.clone());
        let mut r1 = trim(a.clone());
        let mut t0: Vec<u64> = vec![];
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // r0 = q*r1 + r; long division over F_p.
            let mut rem = r0.clone();
            let mut quot = vec![0u64; rem.len().saturating_sub(r1.len()) + 1];
            let lead_inv = inv_mod(*r1.last().unwrap(), p)?;
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let factor = mul_mod(*rem.last().unwrap(), lead_inv, p);
                if factor != 0 {
                    quot[shift] = factor;
                    for (i, &c) in r1.iter().enumerate() {
                        rem[shift + i] = sub_mod(rem[shift + i], mul_mod(factor, c, p), p);
                    }
                }
                rem.pop();
                rem = trim(rem);
                if rem.len() < r1.len() {
                    break;
                }
            }
            let rem = trim(rem);
            // t = t0 - q*t1
            let mut t = t0.clone();
            let prod_len = quot.len() + t1.len();
            t.resize(t.len().max(prod_len.saturating_sub(1)), 0);
            for (i, &qc) in quot.iter().enumerate() {
                if qc == 0 {
                    continue;
                }
                for (j, &tc) in t1.iter().enumerate() {
                    if i + j >= t.len() {
                        t.resize(i + j + 1, 0);
                    }
                    t[i + j] = sub_mod(t[i + j], mul_mod(qc, tc, p), p);
                }
            }
            let t = trim(t);
            r0 = std::mem::replace(&mut r1, rem);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.len() != 1 {
            return None;
        }
        let scale = inv_mod(r0[0], p)?;
        let mut out = self.zero();
        for (i, &c) in t0.iter().enumerate() {
            if i < out.len() {
                out[i] = mul_mod(c, scale, p);
            }
        }
        Some(out)
    }
}

/// Finds a monic irreducible polynomial of degree k over F_p by scanning,
/// verified with the Frobenius criterion: t^(p^k) = t mod f, and for each
/// prime divisor q of k, gcd(t^(p^(k/q)) - t, f) = 1.
pub fn irreducible_poly(p: u64, k: usize) -> Vec<u64> {
    assert!(k >= 1);
    if k == 1 {
        return vec![0, 1];
    }
    let mut coeffs = vec![0u64; k + 1];
    coeffs[k] = 1;
    loop {
        if is_irreducible(p, &coeffs) {
            return coeffs;
        }
        // Increment the low coefficients like a base-p counter.
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
            assert!(i < k, "no irreducible of degree {k} over F_{p}");
        }
    }
}

fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let k = f.len() - 1;
    let ring = QuotientRing::new(p, f.to_vec());
    let t = {
        let mut e = ring.zero();
        e[1] = 1;
        e
    };
    // t^(p^k) must equal t.
    let mut frob = t.clone();
    for _ in 0..k {
        frob = ring.pow(&frob, p);
    }
    if frob != t {
        return false;
    }
    // For each prime q | k the intermediate Frobenius must be fixed-point
    // free on the quotient, i.e. t^(p^(k/q)) - t must be a unit or the
    // gcd with f trivial; a unit check via inversion suffices.
    let mut primes = Vec::new();
    let mut rest = k;
    let mut q = 2;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            primes.push(q);
            while rest.is_multiple_of(q) {
                rest /= q;
            }
        }
        q += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    for q in primes {
        let mut inter = t.clone();
        for _ in 0..(k / q) {
            inter = ring.pow(&inter, p);
        }
        let diff = ring.sub(&inter, &t);
        if ring.is_zero(&diff) || ring.inverse(&diff).is_none() {
            return false;
        }
    }
    true
}

/// All elements of F_{p^k} for small scans, as quotient-ring elements.
pub fn all_elements(ring: &QuotientRing) -> Vec<QuotElem> {
    let d = ring.degree();
    let p = ring.p;
    let total = (p as u128).pow(d as u32);
    assert!(total <= 1 << 22, "field too large to enumerate");
    let mut out = Vec::with_capacity(total as usize);
    let mut current = ring.zero();
    loop {
        out.push(current.clone());
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            current[i] += 1;
            if current[i] < p {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}
