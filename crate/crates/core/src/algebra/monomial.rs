//! Exponent vectors with the graded lexicographic order.
//!
//! Comparison grades by total degree first, then compares exponents from
//! x0 onward, so x0^m is the largest monomial of its degree.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    /// The constant monomial in `num_vars` variables.
    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    /// x_i within `num_vars` variables.
    pub fn var(num_vars: usize, i: usize) -> Monomial {
        let mut exponents = vec![0; num_vars];
        exponents[i] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn total_degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise quotient, when every exponent of `other` fits.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        let mut exponents = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            if a < b {
                return None;
            }
            exponents.push(a - b);
        }
        Some(Monomial { exponents })
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All monomials of the given total degree, largest first in graded lex.
pub fn monomials_of_degree(num_vars: usize, degree: usize) -> Vec<Monomial> {
    assert!(num_vars >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    descend(&mut out, &mut current, 0, degree);
    out
}

fn descend(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: usize) {
    if var == current.len() - 1 {
        current[var] = remaining as u32;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    // Largest exponent on the earliest variable first gives descending
    // graded-lex order.
    for e in (0..=remaining).rev() {
        current[var] = e as u32;
        descend(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}
