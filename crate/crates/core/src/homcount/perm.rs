//! Explicit permutation realizations of the builtin groups and the
//! exhaustive homomorphism count they support.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::homcount::data::GroupFamily;

/// A permutation of {0, .., n-1} stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table; rejects tables that
    /// are not bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidParameter(
                    "image table is not a permutation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Left-to-right reading: (self.compose(other))(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.images.len(), other.images.len());
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// A finite permutation group with its elements listed exhaustively,
/// in a sorted canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Closes the generators under composition. Termination is forced
    /// by the cap; a finite group simply stops growing on its own.
    pub fn from_generators(degree: usize, generators: &[Perm], cap: usize) -> Result<PermGroup> {
        if cap == 0 {
            return Err(Error::InvalidParameter(
                "enumeration cap must be positive".into(),
            ));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::InvalidParameter(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        let mut elements = BTreeSet::new();
        elements.insert(Perm::identity(degree));
        let mut frontier = vec![Perm::identity(degree)];
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q = g.compose(&p);
                if !elements.contains(&q) {
                    if elements.len() == cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    elements.insert(q.clone());
                    frontier.push(q);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: elements.into_iter().collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Smallest faithful permutation realizations: an n-cycle for the
/// cyclic family, the vertices of the n-gon for the dihedral family,
/// and 4 or 5 letters for the polyhedral groups.
pub fn builtin_perm_group(family: GroupFamily) -> Result<PermGroup> {
    const DEGREE_LIMIT: u64 = 4096;
    const CAP: usize = 10_000;
    let cycle = |n: u64| {
        let n = n as usize;
        Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()
    };
    match family {
        GroupFamily::Cyclic(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter(
                    "cyclic groups need order n >= 1".into(),
                ));
            }
            if n > DEGREE_LIMIT {
                return Err(Error::InvalidParameter(format!(
                    "permutation degree {n} exceeds the oracle limit {DEGREE_LIMIT}"
                )));
            }
            PermGroup::from_generators(n as usize, &[cycle(n)], CAP)
        }
        GroupFamily::Dihedral(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(
                    "dihedral groups need n >= 3".into(),
                ));
            }
            if n > DEGREE_LIMIT {
                return Err(Error::InvalidParameter(format!(
                    "permutation degree {n} exceeds the oracle limit {DEGREE_LIMIT}"
                )));
            }
            let reflection =
                Perm::from_images((0..n as usize).map(|i| (n as usize - i) % n as usize).collect())
                    .unwrap();
            PermGroup::from_generators(n as usize, &[cycle(n), reflection], CAP)
        }
        GroupFamily::A4 => PermGroup::from_generators(
            4,
            &[
                Perm::from_images(vec![1, 2, 0, 3]).unwrap(),
                Perm::from_images(vec![1, 0, 3, 2]).unwrap(),
            ],
            CAP,
        ),
        GroupFamily::S4 => PermGroup::from_generators(
            4,
            &[
                Perm::from_images(vec![1, 2, 3, 0]).unwrap(),
                Perm::from_images(vec![1, 0, 2, 3]).unwrap(),
            ],
            CAP,
        ),
        GroupFamily::A5 => PermGroup::from_generators(
            5,
            &[
                Perm::from_images(vec![1, 2, 3, 4, 0]).unwrap(),
                Perm::from_images(vec![1, 2, 0, 3, 4]).unwrap(),
            ],
            CAP,
        ),
    }
}

/// Counts tuples (a1, b1, .., ag, bg) of group elements whose product
/// of commutators [a, b] = a b a^-1 b^-1 is the identity, by direct
/// enumeration. Only genus 1 and 2 are supported, and the tuple space
/// |G|^(2g) is capped at ten million.
pub fn brute_force_homs(group: &PermGroup, genus: usize) -> Result<u64> {
    if genus != 1 && genus != 2 {
        return Err(Error::GenusUnsupported(genus));
    }
    const GUARD: u128 = 10_000_000;
    let size = (group.order() as u128).pow(2 * genus as u32);
    if size > GUARD {
        return Err(Error::EnumerationGuard { size, guard: GUARD });
    }
    let els = group.elements();
    if genus == 1 {
        let mut count = 0;
        for a in els {
            for b in els {
                if a.compose(b) == b.compose(a) {
                    count += 1;
                }
            }
        }
        return Ok(count);
    }
    // Genus 2: precompute every [a, b] once, then scan all pairs of
    // pairs by comparing one commutator against the other's inverse.
    let mut commutators = Vec::with_capacity(els.len() * els.len());
    for a in els {
        for b in els {
            commutators.push(a.compose(b).compose(&a.inverse()).compose(&b.inverse()));
        }
    }
    let inverses: Vec<Perm> = commutators.iter().map(Perm::inverse).collect();
    let mut count = 0;
    for c in &commutators {
        for d in &inverses {
            if c == d {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_realizations_have_the_advertised_orders() {
        for (family, order) in [
            (GroupFamily::Cyclic(1), 1),
            (GroupFamily::Cyclic(5), 5),
            (GroupFamily::Dihedral(3), 6),
            (GroupFamily::Dihedral(4), 8),
            (GroupFamily::A4, 12),
            (GroupFamily::S4, 24),
            (GroupFamily::A5, 60),
        ] {
            let group = builtin_perm_group(family).unwrap();
            assert_eq!(group.order(), order, "{family:?}");
        }
    }

    #[test]
    fn element_lists_are_closed_and_contain_inverses() {
        for family in [
            GroupFamily::Cyclic(6),
            GroupFamily::Dihedral(5),
            GroupFamily::A4,
            GroupFamily::S4,
            GroupFamily::A5,
        ] {
            let group = builtin_perm_group(family).unwrap();
            assert!(group.contains(&Perm::identity(group.degree())));
            for a in group.elements() {
                assert!(group.contains(&a.inverse()));
                for b in group.elements() {
                    assert!(group.contains(&a.compose(b)));
                }
            }
        }
    }

    #[test]
    fn composition_reads_right_to_left() {
        let swap = Perm::from_images(vec![1, 0, 2]).unwrap();
        let rotate = Perm::from_images(vec![1, 2, 0]).unwrap();
        // (swap . rotate)(0) applies rotate first.
        assert_eq!(swap.compose(&rotate).apply(0), swap.apply(rotate.apply(0)));
        assert!(swap.compose(&swap).is_identity());
        assert!(rotate.compose(&rotate.inverse()).is_identity());
    }

    #[test]
    fn bad_image_tables_are_rejected() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
        assert!(Perm::from_images(vec![]).is_ok());
    }

    #[test]
    fn every_tuple_counts_in_an_abelian_group() {
        let c2 = builtin_perm_group(GroupFamily::Cyclic(2)).unwrap();
        assert_eq!(brute_force_homs(&c2, 1).unwrap(), 4);
        assert_eq!(brute_force_homs(&c2, 2).unwrap(), 16);
    }

    #[test]
    fn commuting_pairs_count_order_times_classes() {
        let a4 = builtin_perm_group(GroupFamily::A4).unwrap();
        assert_eq!(brute_force_homs(&a4, 1).unwrap(), 48);
        let a5 = builtin_perm_group(GroupFamily::A5).unwrap();
        assert_eq!(brute_force_homs(&a5, 1).unwrap(), 300);
    }

    #[test]
    fn genus_two_count_for_s3_by_exhaustion() {
        let s3 = builtin_perm_group(GroupFamily::Dihedral(3)).unwrap();
        assert_eq!(brute_force_homs(&s3, 2).unwrap(), 486);
    }

    #[test]
    fn enumeration_guards_fire() {
        let a5 = builtin_perm_group(GroupFamily::A5).unwrap();
        match brute_force_homs(&a5, 2) {
            Err(Error::EnumerationGuard { size, guard }) => {
                assert_eq!(size, 12_960_000);
                assert_eq!(guard, 10_000_000);
            }
            other => panic!("expected the guard to fire, got {other:?}"),
        }
        assert!(matches!(
            brute_force_homs(&a5, 0),
            Err(Error::GenusUnsupported(0))
        ));
        assert!(matches!(
            brute_force_homs(&a5, 3),
            Err(Error::GenusUnsupported(3))
        ));
    }

    #[test]
    fn mismatched_generator_degrees_are_rejected() {
        let gen = Perm::from_images(vec![1, 0]).unwrap();
        assert!(PermGroup::from_generators(3, &[gen], 100).is_err());
    }

    #[test]
    fn the_cap_stops_runaway_closures() {
        let big = builtin_perm_group(GroupFamily::Cyclic(64)).unwrap();
        assert_eq!(big.order(), 64);
        let gen = Perm::from_images((0..64).map(|i| (i + 1) % 64).collect()).unwrap();
        assert!(matches!(
            PermGroup::from_generators(64, &[gen], 10),
            Err(Error::ClosureCapExceeded { cap: 10 })
        ));
    }
}
