//! Self-maps of projective space: construction and normalization,
//! regularity certificates, group actions, ramification, and orbit
//! classification.

pub mod binary;
pub mod classify;
pub mod factor;
pub mod map;
pub mod regularity;
pub mod resultant;

pub use classify::{classify_orbit, ramification_form, OrbitTag, OrbitType};
pub use factor::{squarefree_factorization, BinaryFactor, BinaryFormFactorization};
pub use map::{
    compose, conjugate_act, make_map, pair_act, projectively_equal, stabilizer_check,
    ProjectiveMap, Regularity,
};
pub use regularity::certify_regular;
pub use resultant::sylvester_resultant;
