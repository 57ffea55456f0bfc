use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::refine::{Partition, Scratch};

pub const DEFAULT_BUDGET: u64 = 2_000_000;
pub const MAX_VERTICES: usize = 5000;

/// Generators and exact order of the full automorphism group.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    pub order: u128,
    /// Vertices individualized along the first search path.
    pub base: Vec<usize>,
    pub nodes: u64,
}

impl AutGroup {
    pub fn group(&self, n: usize) -> PermGroup {
        PermGroup::with_known_order(n, self.generators.clone(), self.order).expect("degrees agree")
    }
}

struct PathNode {
    part: Partition,
    hash: u64,
    target: Option<usize>,
    chosen: usize,
}

struct Search<'a> {
    path: Vec<PathNode>,
    source: &'a Graph,
    sc: Scratch,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, budget: u64) -> Result<Self> {
        let n = g.n();
        let mut sc = Scratch::new(n);
        let mut part = Partition::unit(n);
        let hash = part.refine(g, &[0], &mut sc, 0);
        let mut s = Search { path: Vec::new(), source: g, sc, nodes: 1, budget };
        let mut node = PathNode { target: part.target_cell(), part, hash, chosen: 0 };
        while let Some(t) = node.target {
            let v = node.part.cell(t)[0] as usize;
            node.chosen = v;
            let child = s.child(g, &node.part, v, node.hash)?;
            s.path.push(node);
            node = child;
        }
        s.path.push(node);
        Ok(s)
    }

    fn child(&mut self, g: &Graph, part: &Partition, v: usize, hash: u64) -> Result<PathNode> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut p = part.clone();
        let c = p.individualize(v);
        let h = p.refine(g, &[c], &mut self.sc, hash ^ c as u64);
        Ok(PathNode { target: p.target_cell(), part: p, hash: h, chosen: 0 })
    }

    fn leaf(&self) -> &[u32] {
        &self.path.last().unwrap().part.elems
    }

    /// Looks below `node` (at depth `level`, in graph `target`) for a leaf
    /// whose alignment with the first leaf is an isomorphism source -> target.
    fn dfs(&mut self, target: &Graph, level: usize, node: PathNode) -> Result<Option<Permutation>> {
        if node.hash != self.path[level].hash || node.target != self.path[level].target {
            return Ok(None);
        }
        let Some(t) = node.target else {
            let n = target.n();
            let mut img = vec![0u32; n];
            for (a, b) in self.leaf().iter().zip(node.part.elems.iter()) {
                img[*a as usize] = *b;
            }
            let gamma = Permutation::from_raw(img);
            return Ok(is_isomorphism(self.source, target, &gamma).then_some(gamma));
        };
        let cell: Vec<u32> = node.part.cell(t).to_vec();
        for &x in &cell {
            let child = self.child(target, &node.part, x as usize, node.hash)?;
            if let Some(g) = self.dfs(target, level + 1, child)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

fn is_isomorphism(a: &Graph, b: &Graph, gamma: &Permutation) -> bool {
    (0..a.n()).all(|u| {
        let gu = gamma.image(u);
        a.degree(u) == b.degree(gu) && a.neighbors(u).iter().all(|&v| b.has_edge(gu, gamma.image(v as usize)))
    })
}

struct Orbits {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
        }
    }

    fn absorb(&mut self, g: &Permutation) {
        for x in 0..g.degree() {
            self.union(x, g.image(x));
        }
    }
}

/// Computes Aut(g) by partition refinement and backtracking. The search
/// follows a first path to a leaf and, level by level from the bottom, tests
/// every vertex of the target cell outside the current orbit of the chosen
/// vertex for an equivalent leaf.
pub fn automorphism_group(g: &Graph, budget: u64) -> Result<AutGroup> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::Unsupported(format!("{n} vertices exceeds the solver cap of {MAX_VERTICES}")));
    }
    if n <= 1 {
        return Ok(AutGroup { generators: Vec::new(), order: 1, base: Vec::new(), nodes: 0 });
    }
    let mut s = Search::new(g, budget)?;
    let depth = s.path.len() - 1;
    let base: Vec<usize> = s.path[..depth].iter().map(|p| p.chosen).collect();
    let mut orbits = Orbits::new(n);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for level in (0..depth).rev() {
        let t = s.path[level].target.unwrap();
        let chosen = s.path[level].chosen;
        let cell: Vec<u32> = s.path[level].part.cell(t).to_vec();
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell {
            let w = w as usize;
            let rw = orbits.find(w);
            if rw == orbits.find(chosen) || failed.iter().any(|&f| orbits.find(f) == rw) {
                continue;
            }
            let (part, hash) = (s.path[level].part.clone(), s.path[level].hash);
            let child = s.child(g, &part, w, hash)?;
            match s.dfs(g, level + 1, child)? {
                Some(gamma) => {
                    orbits.absorb(&gamma);
                    gens.push(gamma);
                }
                None => failed.push(w),
            }
        }
        let r = orbits.find(chosen);
        let orbit_len = cell.iter().filter(|&&x| orbits.find(x as usize) == r).count();
        order *= orbit_len as u128;
    }
    Ok(AutGroup { generators: gens, order, base, nodes: s.nodes })
}

/// An isomorphism `a -> b` as a vertex map, or `None` if the graphs are not
/// isomorphic.
pub fn find_isomorphism(a: &Graph, b: &Graph, budget: u64) -> Result<Option<Permutation>> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(None);
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    if a.n() <= 1 {
        return Ok(Some(Permutation::identity(a.n())));
    }
    let mut s = Search::new(a, budget)?;
    let mut sc = Scratch::new(b.n());
    let mut root = Partition::unit(b.n());
    let hash = root.refine(b, &[0], &mut sc, 0);
    let target = root.target_cell();
    s.dfs(b, 0, PathNode { part: root, hash, target, chosen: 0 })
}

pub fn are_isomorphic(a: &Graph, b: &Graph, budget: u64) -> Result<bool> {
    Ok(find_isomorphism(a, b, budget)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u)
    }

    fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        Graph::from_fn(10, |i, j| {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            a != c && a != d && b != c && b != d
        })
    }

    #[test]
    fn small_orders() {
        assert_eq!(automorphism_group(&cycle(6), DEFAULT_BUDGET).unwrap().order, 12);
        assert_eq!(automorphism_group(&cycle(7), DEFAULT_BUDGET).unwrap().order, 14);
        assert_eq!(automorphism_group(&petersen(), DEFAULT_BUDGET).unwrap().order, 120);
        let k5 = Graph::from_fn(5, |_, _| true);
        assert_eq!(automorphism_group(&k5, DEFAULT_BUDGET).unwrap().order, 120);
        let empty = Graph::empty(4);
        assert_eq!(automorphism_group(&empty, DEFAULT_BUDGET).unwrap().order, 24);
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = petersen();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert!(a.generators.iter().all(|p| g.is_automorphism(p)));
        assert_eq!(a.group(10).order(), 120);
    }

    #[test]
    fn isomorphism_of_relabelled_graph() {
        let g = petersen();
        let p = Permutation::parse_cycles(10, "(0,5,3)(1,9)(2,7,4,8)").unwrap();
        let h = g.relabel(&p);
        let iso = find_isomorphism(&g, &h, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(is_isomorphism(&g, &h, &iso));
        assert!(!are_isomorphic(&cycle(6), &Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(), DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(automorphism_group(&petersen(), 3), Err(Error::BudgetExceeded(3))));
    }
}
