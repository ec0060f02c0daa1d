//! Exact counts of homomorphisms from closed-surface fundamental
//! groups into the finite subgroups of PU(2), cross-checked at desk
//! scale by an exhaustive permutation oracle.

pub mod count;
pub mod data;
pub mod perm;

pub use count::count_homs;
pub use data::{builtin_group_data, GroupFamily, GroupRepData};
pub use perm::{brute_force_homs, builtin_perm_group, Perm, PermGroup};
