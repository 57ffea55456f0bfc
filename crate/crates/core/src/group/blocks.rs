use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::PermGroup;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The finest block system in which `a` and `b` share a block.
fn minimal_block(group: &PermGroup, a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = group.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.image(x), g.image(y));
            let (rx, ry) = (uf.find(gx), uf.find(gy));
            if rx != ry {
                uf.union(rx, ry);
                queue.push((rx, ry));
            }
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for p in 0..n {
        let r = uf.find(p);
        blocks.entry(r).or_default().push(p);
    }
    blocks.into_values().collect()
}

/// All minimal nontrivial block systems of a transitive group, each given as
/// a sorted list of sorted blocks.
pub fn minimal_block_systems(group: &PermGroup) -> Result<Vec<Vec<Vec<usize>>>> {
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = group.degree();
    if n <= 2 {
        return Ok(Vec::new());
    }
    let stab = group.stabilizer(&[0]);
    let mut systems: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for orb in stab.orbits() {
        if orb[0] == 0 && orb.len() == 1 {
            continue;
        }
        let sys = minimal_block(group, 0, orb[0]);
        if sys.len() > 1 {
            systems.insert(sys);
        }
    }
    let systems: Vec<_> = systems.into_iter().collect();
    let block0 = |s: &Vec<Vec<usize>>| -> BTreeSet<usize> { s.iter().find(|b| b.contains(&0)).unwrap().iter().copied().collect() };
    let zero_blocks: Vec<BTreeSet<usize>> = systems.iter().map(block0).collect();
    let minimal = systems
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !zero_blocks
                .iter()
                .enumerate()
                .any(|(j, b)| j != *i && b.len() < zero_blocks[*i].len() && b.is_subset(&zero_blocks[*i]))
        })
        .map(|(_, s)| s.clone())
        .collect();
    Ok(minimal)
}

pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    Ok(minimal_block_systems(group)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_blocks() {
        let d6 = PermGroup::dihedral(6);
        let sys = minimal_block_systems(&d6).unwrap();
        // antipodal pairs and the two triangles
        assert_eq!(sys.len(), 2);
        let sizes: BTreeSet<usize> = sys.iter().map(|s| s[0].len()).collect();
        assert_eq!(sizes, [2, 3].into_iter().collect());
    }

    #[test]
    fn primitive_groups() {
        assert!(is_primitive(&PermGroup::symmetric(6)).unwrap());
        assert!(is_primitive(&PermGroup::dihedral(7)).unwrap());
        assert!(!is_primitive(&PermGroup::cyclic(8)).unwrap());
    }
}
