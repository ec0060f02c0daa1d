//! Formal intersection theory on a projectivized rank-2 bundle: the
//! tautological-divisor relation, twist solving, ramification classes,
//! and the pullback constraints on Chern classes.

pub mod bundle;
pub mod class;

pub use bundle::{
    c2_twist_expand, pullback_twist_constraint, ramification_class, solve_twist_degree,
    symmetric_power_det, TwistSpec,
};
pub use class::{chow_mul, ChowClass, Symbol};
