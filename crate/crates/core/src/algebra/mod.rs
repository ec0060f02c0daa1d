//! Exact arithmetic foundations: rationals, number fields, homogeneous
//! forms, matrices, univariate polynomials, and modular reductions.

pub mod field;
pub mod form;
pub mod kpoly;
pub mod matrix;
pub mod modular;
pub mod monomial;
pub mod qpoly;
pub mod rational;

pub use field::{FieldElement, NumberField};
pub use form::Form;
pub use kpoly::KPoly;
pub use matrix::Matrix;
pub use monomial::Monomial;
pub use rational::{Int, Rational};
