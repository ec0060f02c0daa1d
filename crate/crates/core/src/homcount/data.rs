//! Builtin finite groups described by their irreducible character
//! degrees.

use crate::error::{Error, Result};

/// The finite subgroups of PU(2), up to conjugacy: two infinite
/// families and the three polyhedral groups. Surveys occasionally
/// misprint the icosahedral entry of this list as S5; S5 has no
/// faithful two-dimensional projective representation and is
/// deliberately absent here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    /// Rotations of order n, n >= 1.
    Cyclic(u64),
    /// Symmetries of the regular n-gon (order 2n), n >= 3.
    Dihedral(u64),
    /// Tetrahedral rotations (order 12).
    A4,
    /// Octahedral rotations (order 24).
    S4,
    /// Icosahedral rotations (order 60).
    A5,
}

impl GroupFamily {
    /// Resolves a family name as accepted on the command line. The
    /// parametric families need `n`; the fixed groups reject it.
    /// `S3` is accepted as an alias for the dihedral group of order 6.
    pub fn from_name(name: &str, n: Option<i64>) -> Result<GroupFamily> {
        let fixed = |family: GroupFamily| {
            if n.is_some() {
                return Err(Error::InvalidParameter(format!(
                    "family {name} does not take an order parameter"
                )));
            }
            Ok(family)
        };
        let parametric = |minimum: i64| {
            let value = n.ok_or_else(|| {
                Error::InvalidParameter(format!("family {name} needs an order parameter"))
            })?;
            if value < minimum {
                return Err(Error::InvalidParameter(format!(
                    "family {name} needs n >= {minimum}, got {value}"
                )));
            }
            Ok(value as u64)
        };
        match name {
            "cyclic" => Ok(GroupFamily::Cyclic(parametric(1)?)),
            "dihedral" => Ok(GroupFamily::Dihedral(parametric(3)?)),
            "A4" | "a4" => fixed(GroupFamily::A4),
            "S4" | "s4" => fixed(GroupFamily::S4),
            "A5" | "a5" => fixed(GroupFamily::A5),
            "S3" | "s3" => fixed(GroupFamily::Dihedral(3)),
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }
}

/// A finite group reduced to what the counting formula consumes: its
/// order and the multiset of irreducible character degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRepData {
    name: String,
    order: u64,
    irrep_degrees: Vec<u64>,
}

impl GroupRepData {
    /// Checks the degree-sum identity: the squares of the irreducible
    /// degrees must add up to the group order.
    pub fn new(name: impl Into<String>, order: u64, irrep_degrees: Vec<u64>) -> Result<Self> {
        let name = name.into();
        if irrep_degrees.is_empty() || irrep_degrees.contains(&0) {
            return Err(Error::CharacterDegreeSum {
                detail: format!("{name}: degrees must be a nonempty list of positive integers"),
            });
        }
        let sum: u64 = irrep_degrees.iter().map(|d| d * d).sum();
        if sum != order {
            return Err(Error::CharacterDegreeSum {
                detail: format!("{name}: squared degrees sum to {sum}, group order is {order}"),
            });
        }
        Ok(GroupRepData {
            name,
            order,
            irrep_degrees,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn irrep_degrees(&self) -> &[u64] {
        &self.irrep_degrees
    }
}

/// Character degree lists for the builtin families.
pub fn builtin_group_data(family: GroupFamily) -> Result<GroupRepData> {
    match family {
        GroupFamily::Cyclic(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter(
                    "cyclic groups need order n >= 1".into(),
                ));
            }
            GroupRepData::new(format!("C{n}"), n, vec![1; n as usize])
        }
        GroupFamily::Dihedral(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(
                    "dihedral groups need n >= 3".into(),
                ));
            }
            // Four linear characters when n is even, two when n is
            // odd; everything else is two-dimensional.
            let (linear, twos) = if n % 2 == 0 {
                (4, (n as usize - 2) / 2)
            } else {
                (2, (n as usize - 1) / 2)
            };
            let mut degrees = vec![1; linear];
            degrees.extend(std::iter::repeat(2).take(twos));
            GroupRepData::new(format!("D{n}"), 2 * n, degrees)
        }
        GroupFamily::A4 => GroupRepData::new("A4", 12, vec![1, 1, 1, 3]),
        GroupFamily::S4 => GroupRepData::new("S4", 24, vec![1, 1, 2, 3, 3]),
        GroupFamily::A5 => GroupRepData::new("A5", 60, vec![1, 3, 3, 4, 5]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_have_only_linear_characters() {
        let data = builtin_group_data(GroupFamily::Cyclic(5)).unwrap();
        assert_eq!(data.name(), "C5");
        assert_eq!(data.order(), 5);
        assert_eq!(data.irrep_degrees(), &[1, 1, 1, 1, 1]);
        let trivial = builtin_group_data(GroupFamily::Cyclic(1)).unwrap();
        assert_eq!(trivial.irrep_degrees(), &[1]);
    }

    #[test]
    fn dihedral_degree_lists_split_on_parity() {
        let odd = builtin_group_data(GroupFamily::Dihedral(5)).unwrap();
        assert_eq!(odd.order(), 10);
        assert_eq!(odd.irrep_degrees(), &[1, 1, 2, 2]);
        let even = builtin_group_data(GroupFamily::Dihedral(6)).unwrap();
        assert_eq!(even.order(), 12);
        assert_eq!(even.irrep_degrees(), &[1, 1, 1, 1, 2, 2]);
        let smallest = builtin_group_data(GroupFamily::Dihedral(3)).unwrap();
        assert_eq!(smallest.irrep_degrees(), &[1, 1, 2]);
    }

    #[test]
    fn polyhedral_degree_lists_satisfy_the_degree_sum() {
        for (family, order) in [
            (GroupFamily::A4, 12),
            (GroupFamily::S4, 24),
            (GroupFamily::A5, 60),
        ] {
            let data = builtin_group_data(family).unwrap();
            assert_eq!(data.order(), order);
            let sum: u64 = data.irrep_degrees().iter().map(|d| d * d).sum();
            assert_eq!(sum, order);
        }
    }

    #[test]
    fn mismatched_degree_sums_are_rejected() {
        match GroupRepData::new("broken", 10, vec![1, 1, 2]) {
            Err(Error::CharacterDegreeSum { detail }) => {
                assert!(detail.contains("broken"));
            }
            other => panic!("expected a degree-sum error, got {other:?}"),
        }
        assert!(GroupRepData::new("empty", 0, vec![]).is_err());
        assert!(GroupRepData::new("zero", 1, vec![0, 1]).is_err());
    }

    #[test]
    fn family_names_resolve_with_their_parameters() {
        assert_eq!(
            GroupFamily::from_name("cyclic", Some(4)).unwrap(),
            GroupFamily::Cyclic(4)
        );
        assert_eq!(
            GroupFamily::from_name("S3", None).unwrap(),
            GroupFamily::Dihedral(3)
        );
        assert_eq!(GroupFamily::from_name("a5", None).unwrap(), GroupFamily::A5);
        assert!(matches!(
            GroupFamily::from_name("cyclic", None),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            GroupFamily::from_name("cyclic", Some(0)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            GroupFamily::from_name("dihedral", Some(2)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            GroupFamily::from_name("A4", Some(4)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            GroupFamily::from_name("monster", None),
            Err(Error::UnknownFamily(name)) if name == "monster"
        ));
    }

    #[test]
    fn invalid_family_parameters_are_rejected_at_construction() {
        assert!(matches!(
            builtin_group_data(GroupFamily::Cyclic(0)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            builtin_group_data(GroupFamily::Dihedral(2)),
            Err(Error::InvalidParameter(_))
        ));
    }
}
