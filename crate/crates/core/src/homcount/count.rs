//! The closed-form count of surface-group homomorphisms.

use num::Zero;

use crate::algebra::rational::{Int, Rational};
use crate::homcount::data::GroupRepData;

/// Number of homomorphisms from the fundamental group of a closed
/// genus-g surface into the group behind `data`, evaluated exactly as
/// #G * sum over irreducible degrees d of (#G / d)^(2g - 2).
///
/// The value is a positive integer for g >= 1. At g = 0 the exponent
/// is -2 and the sum telescopes through the degree-sum identity to
/// exactly 1, which is why the return type stays rational.
pub fn count_homs(data: &GroupRepData, genus: usize) -> Rational {
    let order = Rational::from_integer(Int::from(data.order()));
    let exponent = i32::try_from(2 * genus as i64 - 2).expect("genus exceeds the exponent range");
    let mut sum = Rational::zero();
    for &d in data.irrep_degrees() {
        let base = &order / Rational::from_integer(Int::from(d));
        sum += base.pow(exponent);
    }
    order * sum
}
