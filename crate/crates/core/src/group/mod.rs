//! Permutation groups, stabilizer chains, induced actions, orbitals and blocks.

mod action;
mod blocks;
mod chain;
pub mod io;
mod orbital;
mod random;

use std::sync::OnceLock;

pub use action::{coset_action, induced_action, ActionTable, CosetAction, COSET_INDEX_CAP};
pub use blocks::{is_primitive, minimal_block_systems};
pub use chain::{Level, StabChain};
pub use orbital::{orbitals, Orbitals, Suborbit};
pub use random::{seed_from_env, ProductReplacement, DEFAULT_SEED};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    known_order: Option<u128>,
    seed: u64,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup { degree: self.degree, gens: self.gens.clone(), known_order: self.known_order, seed: self.seed, chain }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        Ok(PermGroup { degree, gens, known_order: None, seed: seed_from_env(), chain: OnceLock::new() })
    }

    /// A group whose order is known in advance, which lets the randomized
    /// chain construction stop as soon as that order is reached.
    pub fn with_known_order(degree: usize, gens: Vec<Permutation>, order: u128) -> Result<Self> {
        let mut g = PermGroup::new(degree, gens)?;
        g.known_order = Some(order);
        Ok(g)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self.chain = OnceLock::new();
        self
    }

    fn from_chain(degree: usize, gens: Vec<Permutation>, chain: StabChain, seed: u64) -> Self {
        let order = chain.order();
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        PermGroup { degree, gens, known_order: Some(order), seed, chain: cell }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("no generators")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        let order = (1..=n as u128).product();
        PermGroup::with_known_order(n, gens, order).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        for i in 2..n {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1, i]]).unwrap());
        }
        let order = if n < 2 { 1 } else { (3..=n as u128).product() };
        PermGroup::with_known_order(n, gens, order).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 { vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()] } else { vec![] };
        PermGroup::with_known_order(n, gens, n.max(1) as u128).unwrap()
    }

    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3);
        let rot = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        PermGroup::with_known_order(n, vec![rot, refl], 2 * n as u128).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.gens, &[], self.known_order, self.seed))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: g.degree() });
        }
        Ok(self.chain().contains(g))
    }

    /// A stabilizer chain whose base starts with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::build(self.degree, &self.gens, prefix, Some(self.order()), self.seed)
    }

    /// The pointwise stabilizer of `points`.
    pub fn stabilizer(&self, points: &[usize]) -> PermGroup {
        let full = self.chain_with_base(points);
        let k = points.len();
        let levels = full.levels();
        let gens = if k < levels.len() { levels[k].generators().to_vec() } else { Vec::new() };
        let sub = StabChain::build(self.degree, &gens, &full.base()[k..], Some(full.order_from(k)), self.seed);
        PermGroup::from_chain(self.degree, gens, sub, self.seed)
    }

    pub fn orbit(&self, p: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[p] = true;
        let mut out = vec![p];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for g in &self.gens {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let o = self.orbit(p);
                for &x in &o {
                    seen[x] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Lists all elements; fails if the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::IndexTooLarge { index: order, cap: cap as u128 });
        }
        let chain = self.chain();
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in chain.levels().iter().rev() {
            let reps: Vec<Permutation> = level.orbit().map(|p| level.transversal(p).unwrap()).collect();
            let mut next = Vec::with_capacity(elems.len() * reps.len());
            for e in &elems {
                for u in &reps {
                    next.push(e.compose(u));
                }
            }
            elems = next;
        }
        Ok(elems)
    }

    pub fn random_source(&self) -> ProductReplacement {
        ProductReplacement::new(self.degree, &self.gens, self.seed ^ 0x9e37_79b9_7f4a_7c15)
    }
}

/// Pretty-prints a group order with its prime factorization, e.g. `12096 = 2^6·3^3·7`.
pub fn format_order(order: u128) -> String {
    let mut parts = Vec::new();
    let mut m = order;
    let mut p = 2u128;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e == 1 {
            parts.push(p.to_string());
        } else if e > 1 {
            parts.push(format!("{p}^{e}"));
        }
        p += 1;
    }
    if m > 1 {
        parts.push(m.to_string());
    }
    if parts.is_empty() {
        return order.to_string();
    }
    format!("{order} = {}", parts.join("·"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_small_groups() {
        assert_eq!(PermGroup::symmetric(7).order(), 5040);
        assert_eq!(PermGroup::alternating(6).order(), 360);
        assert_eq!(PermGroup::dihedral(5).order(), 10);
        let a5 = PermGroup::new(5, PermGroup::alternating(5).generators().to_vec()).unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn stabilizers() {
        let s6 = PermGroup::symmetric(6);
        let st = s6.stabilizer(&[0, 3]);
        assert_eq!(st.order(), 24);
        for g in st.generators() {
            assert_eq!(g.image(0), 0);
            assert_eq!(g.image(3), 3);
        }
        assert_eq!(st.orbits().len(), 3);
    }

    #[test]
    fn elements_enumeration() {
        let d = PermGroup::dihedral(6);
        let els = d.elements(100).unwrap();
        assert_eq!(els.len(), 12);
        let set: std::collections::HashSet<_> = els.into_iter().collect();
        assert_eq!(set.len(), 12);
    }

    #[test]
    fn order_formatting() {
        assert_eq!(format_order(12096), "12096 = 2^6·3^3·7");
        assert_eq!(format_order(1), "1");
    }
}
