use crate::error::{Error, Result};

use super::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suborbit {
    /// Sorted points of the orbit of the point stabilizer.
    pub points: Vec<usize>,
    /// Index of the paired suborbit.
    pub paired: usize,
}

impl Suborbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn representative(&self) -> usize {
        self.points[0]
    }
}

/// The suborbits of a transitive group relative to a base point.
#[derive(Clone, Debug)]
pub struct Orbitals {
    pub base: usize,
    pub suborbits: Vec<Suborbit>,
    suborbit_of: Vec<usize>,
}

impl Orbitals {
    pub fn rank(&self) -> usize {
        self.suborbits.len()
    }

    /// Subdegrees in the order of `suborbits` (trivial first, then by size).
    pub fn subdegrees(&self) -> Vec<usize> {
        self.suborbits.iter().map(|s| s.len()).collect()
    }

    pub fn suborbit_of(&self, p: usize) -> usize {
        self.suborbit_of[p]
    }

    pub fn is_self_paired(&self, i: usize) -> bool {
        self.suborbits[i].paired == i
    }
}

/// Suborbits are ordered by size, ties broken by smallest point; the trivial
/// suborbit `{base}` is always first.
pub fn orbitals(group: &PermGroup, base: usize) -> Result<Orbitals> {
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    let chain = group.chain_with_base(&[base]);
    let stab = group.stabilizer(&[base]);
    let mut orbs = stab.orbits();
    orbs.sort_by_key(|o| (o.len(), o[0] != base, o[0]));
    let pos = orbs.iter().position(|o| o[0] == base && o.len() == 1).expect("base is fixed");
    let trivial = orbs.remove(pos);
    orbs.insert(0, trivial);
    let mut suborbit_of = vec![0usize; group.degree()];
    for (i, o) in orbs.iter().enumerate() {
        for &p in o {
            suborbit_of[p] = i;
        }
    }
    let level0 = &chain.levels()[0];
    let suborbits = orbs
        .into_iter()
        .map(|points| {
            let u = level0.transversal(points[0]).expect("transitive");
            let paired = suborbit_of[u.inverse().image(base)];
            Suborbit { points, paired }
        })
        .collect();
    Ok(Orbitals { base, suborbits, suborbit_of })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn pentagon_suborbits() {
        let d5 = PermGroup::dihedral(5);
        let o = orbitals(&d5, 0).unwrap();
        assert_eq!(o.subdegrees(), vec![1, 2, 2]);
        assert!((0..3).all(|i| o.is_self_paired(i)));
    }

    #[test]
    fn cyclic_group_pairs_i_with_minus_i() {
        let c5 = PermGroup::cyclic(5);
        let o = orbitals(&c5, 0).unwrap();
        assert_eq!(o.rank(), 5);
        let s1 = o.suborbit_of(1);
        assert_eq!(o.suborbits[s1].paired, o.suborbit_of(4));
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::new(4, vec![Permutation::parse_cycles(4, "(0,1)").unwrap()]).unwrap();
        assert!(matches!(orbitals(&g, 0), Err(Error::Intransitive)));
    }
}
