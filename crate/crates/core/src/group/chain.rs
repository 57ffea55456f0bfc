use crate::perm::Permutation;

use super::random::ProductReplacement;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// One level of a stabilizer chain: a base point, the strong generators
/// fixing all earlier base points, and a Schreier tree for the basic orbit.
#[derive(Clone, Debug)]
pub struct Level {
    base: usize,
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    label: Vec<u32>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut label = vec![NONE; degree];
        label[base] = ROOT;
        Level { base, gens: Vec::new(), inv_gens: Vec::new(), label, orbit: vec![base as u32] }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        self.orbit.iter().map(|&x| x as usize)
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    pub fn in_orbit(&self, p: usize) -> bool {
        self.label[p] != NONE
    }

    fn push_generator(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        let j = self.gens.len() - 1;
        let mut frontier = Vec::new();
        for idx in 0..self.orbit.len() {
            let x = self.orbit[idx] as usize;
            let y = self.gens[j].image(x);
            if self.label[y] == NONE {
                self.label[y] = j as u32;
                self.orbit.push(y as u32);
                frontier.push(y);
            }
        }
        while let Some(x) = frontier.pop() {
            for (k, g) in self.gens.iter().enumerate() {
                let y = g.image(x);
                if self.label[y] == NONE {
                    self.label[y] = k as u32;
                    self.orbit.push(y as u32);
                    frontier.push(y);
                }
            }
        }
    }

    /// The transversal element `u` with `base^u = p`.
    pub fn transversal(&self, p: usize) -> Option<Permutation> {
        if self.label[p] == NONE {
            return None;
        }
        let mut word = Vec::new();
        let mut x = p;
        while self.label[x] != ROOT {
            let j = self.label[x] as usize;
            word.push(j);
            x = self.inv_gens[j].image(x);
        }
        let mut u = Permutation::identity(self.label.len());
        for &j in word.iter().rev() {
            u = u.compose(&self.gens[j]);
        }
        Some(u)
    }

    /// Replaces `h` by `h * u^-1` where `u` is the transversal element for
    /// `base^h`. Returns false if `base^h` is outside the basic orbit.
    fn strip(&self, h: &mut Permutation, tmp: &mut Permutation) -> bool {
        let mut x = h.image(self.base);
        if self.label[x] == NONE {
            return false;
        }
        while self.label[x] != ROOT {
            let j = self.label[x] as usize;
            h.compose_into(&self.inv_gens[j], tmp);
            std::mem::swap(h, tmp);
            x = self.inv_gens[j].image(x);
        }
        true
    }
}

/// A base and strong generating set with Schreier trees.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn empty(degree: usize, base_prefix: &[usize]) -> Self {
        StabChain { degree, levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Order of the pointwise stabilizer of the first `k` base points.
    pub fn order_from(&self, k: usize) -> u128 {
        self.levels[k.min(self.levels.len())..].iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Sifts `g` starting at level `from`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    pub fn sift_from(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        let mut tmp = Permutation::identity(self.degree);
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            if !level.strip(&mut h, &mut tmp) {
                return (h, i);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, i) = self.sift_from(g, 0);
        i == self.levels.len() && h.is_identity()
    }

    /// Adds a nontrivial sift residue that fixes the first `level` base points.
    fn add_residue(&mut self, h: Permutation, level: usize) {
        let level = if level == self.levels.len() {
            let moved = (0..self.degree).find(|&p| h.image(p) != p).expect("residue must be nontrivial");
            self.levels.push(Level::new(moved, self.degree));
            self.levels.len() - 1
        } else {
            level
        };
        for l in 0..=level {
            self.levels[l].push_generator(h.clone());
        }
    }

    fn sift_and_add(&mut self, g: &Permutation, from: usize) -> bool {
        let (h, i) = self.sift_from(g, from);
        if i == self.levels.len() && h.is_identity() {
            return false;
        }
        self.add_residue(h, i);
        true
    }

    /// Randomized Schreier-Sims. If `known_order` is reached the chain is
    /// complete; otherwise a deterministic Schreier generator pass finishes it.
    pub fn build(
        degree: usize,
        gens: &[Permutation],
        base_prefix: &[usize],
        known_order: Option<u128>,
        seed: u64,
    ) -> Self {
        let mut chain = StabChain::empty(degree, base_prefix);
        for g in gens {
            chain.sift_and_add(g, 0);
        }
        if gens.iter().all(|g| g.is_identity()) || known_order == Some(chain.order()) {
            return chain;
        }
        let mut rnd = ProductReplacement::new(degree, gens, seed);
        let patience = if known_order.is_some() { 120 } else { 40 };
        let mut quiet = 0;
        while quiet < patience {
            if known_order == Some(chain.order()) {
                return chain;
            }
            let r = rnd.next_element();
            if chain.sift_and_add(&r, 0) {
                quiet = 0;
            } else {
                quiet += 1;
            }
        }
        if known_order != Some(chain.order()) {
            chain.complete();
        }
        chain
    }

    /// Verifies all Schreier generators level by level from the bottom,
    /// adding residues until the chain is complete.
    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            i -= 1;
            if let Some((h, j)) = self.bad_schreier_generator(i) {
                self.add_residue(h, j);
                i = j + 1;
            }
        }
    }

    fn bad_schreier_generator(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        let mut tmp = Permutation::identity(self.degree);
        for p in level.orbit() {
            let u = level.transversal(p).expect("orbit point");
            for (k, s) in level.gens.iter().enumerate() {
                if level.label[s.image(p)] == k as u32 {
                    continue;
                }
                let mut t = u.compose(s);
                level.strip(&mut t, &mut tmp);
                let (h, stop) = self.sift_from(&t, i + 1);
                if stop < self.levels.len() || !h.is_identity() {
                    return Some((h, stop));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_gens(n: usize) -> Vec<Permutation> {
        let cyc: Vec<usize> = (0..n).collect();
        vec![
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[cyc]).unwrap(),
        ]
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..9 {
            let c = StabChain::build(n, &sym_gens(n), &[], None, 1);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(c.order(), fact);
        }
    }

    #[test]
    fn base_prefix_is_respected() {
        let c = StabChain::build(6, &sym_gens(6), &[4, 2], Some(720), 3);
        assert_eq!(&c.base()[..2], &[4, 2]);
        assert_eq!(c.order_from(2), 24);
    }

    #[test]
    fn membership() {
        let gens = vec![Permutation::parse_cycles(5, "(0,1,2,3,4)").unwrap()];
        let c = StabChain::build(5, &gens, &[], None, 0);
        assert_eq!(c.order(), 5);
        assert!(c.contains(&gens[0].pow(3)));
        assert!(!c.contains(&Permutation::parse_cycles(5, "(0,1)").unwrap()));
    }
}
