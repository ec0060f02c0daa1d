//! Stability diagnostics for the conjugation action on map tuples: the
//! linearized coefficient operator of a group element, eigenanalysis of
//! its fixed tuples with per-eigenspace regularity verdicts, torus
//! weight profiles, and one-parameter limits on the line.

pub mod fixed;
pub mod operator;
pub mod weights;

pub use fixed::{fixed_maps, Eigenspace, EigenspaceVerdict, FixedMapReport};
pub use operator::{
    coefficient_operator, coefficient_vector, tuple_from_coefficients, CoefficientOperator,
};
pub use weights::{
    one_param_limit, torus_weight_analysis, LimitResult, LimitTag, TermWeight, WeightProfile,
};
