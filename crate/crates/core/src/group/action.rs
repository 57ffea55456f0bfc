use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::PermGroup;

pub const COSET_INDEX_CAP: u128 = 100_000;

/// The permutation action of a group on a finite labelled set; `images[k]`
/// is the action of the k-th generator of the acting group.
#[derive(Clone, Debug)]
pub struct ActionTable<L> {
    pub images: Vec<Permutation>,
    pub labels: Vec<L>,
}

impl<L> ActionTable<L> {
    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.labels.len(), self.images.clone()).expect("degrees agree")
    }

    pub fn group_with_order(&self, order: u128) -> PermGroup {
        PermGroup::with_known_order(self.labels.len(), self.images.clone(), order).expect("degrees agree")
    }
}

impl<L: Eq + Hash> ActionTable<L> {
    pub fn index_of(&self) -> HashMap<&L, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l, i)).collect()
    }
}

/// Closes `seeds` under the generators and records the induced permutations.
/// Points are numbered in discovery order.
pub fn induced_action<L, G, F>(gens: &[G], seeds: Vec<L>, act: F, cap: usize) -> Result<ActionTable<L>>
where
    L: Clone + Eq + Hash,
    F: Fn(&L, &G) -> L,
{
    let mut index: HashMap<L, usize> = HashMap::new();
    let mut labels = Vec::new();
    for s in seeds {
        if !index.contains_key(&s) {
            index.insert(s.clone(), labels.len());
            labels.push(s);
        }
    }
    let mut tables: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut i = 0;
    while i < labels.len() {
        for (k, g) in gens.iter().enumerate() {
            let img = act(&labels[i], g);
            let j = match index.get(&img) {
                Some(&j) => j,
                None => {
                    if labels.len() >= cap {
                        return Err(Error::IndexTooLarge { index: labels.len() as u128 + 1, cap: cap as u128 });
                    }
                    index.insert(img.clone(), labels.len());
                    labels.push(img);
                    labels.len() - 1
                }
            };
            tables[k].push(j as u32);
        }
        i += 1;
    }
    let images = tables.into_iter().map(Permutation::from_raw).collect();
    Ok(ActionTable { images, labels })
}

/// Right multiplication action of `G` on the right cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub table: ActionTable<Permutation>,
}

impl CosetAction {
    pub fn index(&self) -> usize {
        self.table.degree()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.table.labels
    }
}

pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction> {
    coset_action_capped(g, h, COSET_INDEX_CAP)
}

pub fn coset_action_capped(g: &PermGroup, h: &PermGroup, cap: u128) -> Result<CosetAction> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch { expected: g.degree(), got: h.degree() });
    }
    for (i, x) in h.generators().iter().enumerate() {
        if !g.contains(x)? {
            return Err(Error::NotSubgroup(i));
        }
    }
    let index = g.order() / h.order();
    if index > cap {
        return Err(Error::IndexTooLarge { index, cap });
    }
    let n = g.degree();
    let mut orbit_id = vec![0u32; n];
    for (k, o) in h.orbits().iter().enumerate() {
        for &p in o {
            orbit_id[p] = k as u32;
        }
    }
    // H x = H y forces p -> orbit of p^(x^-1) to agree, which buckets cosets.
    let key = |x: &Permutation| -> Vec<u32> {
        let inv = x.inverse();
        (0..n).map(|p| orbit_id[inv.image(p)]).collect()
    };
    let mut buckets: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Permutation> = vec![Permutation::identity(n)];
    let mut rep_inv: Vec<Permutation> = vec![Permutation::identity(n)];
    buckets.entry(key(&reps[0])).or_default().push(0);
    let gens = g.generators();
    let mut tables: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let hchain = h.chain();
    let mut i = 0;
    while i < reps.len() {
        for (k, s) in gens.iter().enumerate() {
            let c = reps[i].compose(s);
            let bucket = buckets.entry(key(&c)).or_default();
            let found = bucket.iter().copied().find(|&j| hchain.contains(&c.compose(&rep_inv[j])));
            let j = match found {
                Some(j) => j,
                None => {
                    let j = reps.len();
                    bucket.push(j);
                    rep_inv.push(c.inverse());
                    reps.push(c);
                    j
                }
            };
            tables[k].push(j as u32);
        }
        i += 1;
    }
    debug_assert_eq!(reps.len() as u128, index);
    let images = tables.into_iter().map(Permutation::from_raw).collect();
    Ok(CosetAction { table: ActionTable { images, labels: reps } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_of_point_stabilizer() {
        let s5 = PermGroup::symmetric(5);
        let st = s5.stabilizer(&[0]);
        let ca = coset_action(&s5, &st).unwrap();
        assert_eq!(ca.index(), 5);
        let act = ca.table.group();
        assert_eq!(act.order(), 120);
        assert!(act.is_transitive());
    }

    #[test]
    fn rejects_non_subgroup() {
        let a5 = PermGroup::alternating(5);
        let t = PermGroup::new(5, vec![Permutation::parse_cycles(5, "(0,1)").unwrap()]).unwrap();
        assert!(matches!(coset_action(&a5, &t), Err(Error::NotSubgroup(0))));
    }

    #[test]
    fn index_cap() {
        let s9 = PermGroup::symmetric(9);
        let t = PermGroup::trivial(9);
        assert!(matches!(coset_action_capped(&s9, &t, 1000), Err(Error::IndexTooLarge { .. })));
    }

    #[test]
    fn induced_on_pairs() {
        let s5 = PermGroup::symmetric(5);
        let t = induced_action(
            s5.generators(),
            vec![(0usize, 1usize)],
            |&(a, b), g: &Permutation| {
                let (x, y) = (g.image(a), g.image(b));
                (x.min(y), x.max(y))
            },
            100,
        )
        .unwrap();
        assert_eq!(t.degree(), 10);
        assert_eq!(t.group().order(), 120);
    }
}
