//! Orbital graphs and transitivity on distance pairs, geodesics and arcs.

mod aut;
mod refine;

use std::collections::{HashSet, VecDeque};

pub use aut::{are_isomorphic, automorphism_group, find_isomorphism, AutGroup, DEFAULT_BUDGET, MAX_VERTICES};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::group::{orbitals, PermGroup};

pub const TUPLE_CAP: usize = 10_000_000;

/// The undirected orbital graph of a transitive group for the self-paired
/// suborbit containing `suborbit_rep`, relative to base point 0.
pub fn orbital_graph(group: &PermGroup, suborbit_rep: usize) -> Result<Graph> {
    orbital_graph_at(group, 0, suborbit_rep)
}

pub fn orbital_graph_at(group: &PermGroup, base: usize, suborbit_rep: usize) -> Result<Graph> {
    let orb = orbitals(group, base)?;
    let i = orb.suborbit_of(suborbit_rep);
    if i == 0 {
        return Err(Error::TrivialSuborbit);
    }
    if !orb.is_self_paired(i) {
        return Err(Error::NotSelfPaired);
    }
    let delta = &orb.suborbits[i].points;
    let chain = group.chain_with_base(&[base]);
    let level0 = &chain.levels()[0];
    let n = group.degree();
    let mut edges = Vec::with_capacity(n * delta.len() / 2);
    for x in 0..n {
        let u = level0.transversal(x).expect("transitive");
        for &y in delta {
            let uy = u.image(y);
            if x < uy {
                edges.push((x, uy));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn check_automorphisms(g: &Graph, group: &PermGroup) -> Result<()> {
    if group.degree() != g.n() {
        return Err(Error::DegreeMismatch { expected: g.n(), got: group.degree() });
    }
    for (i, p) in group.generators().iter().enumerate() {
        if !g.is_automorphism(p) {
            return Err(Error::NotAutomorphism(i));
        }
    }
    Ok(())
}

/// Outcome of a transitivity test, with two tuples in different orbits when
/// the test fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transitivity {
    pub transitive: bool,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl Transitivity {
    fn yes() -> Self {
        Transitivity { transitive: true, witness: None }
    }

    fn no(a: Vec<usize>, b: Vec<usize>) -> Self {
        Transitivity { transitive: false, witness: Some((a, b)) }
    }
}

fn vertex_transitivity(group: &PermGroup) -> Option<Transitivity> {
    let orbit = group.orbit(0);
    if orbit.len() != group.degree() {
        let other = (0..group.degree()).find(|v| orbit.binary_search(v).is_err()).unwrap();
        return Some(Transitivity::no(vec![0], vec![other]));
    }
    None
}

/// Whether `group` is transitive on ordered pairs at each distance: the
/// group is vertex-transitive and the stabilizer of vertex 0 is transitive
/// on every sphere around 0.
pub fn is_distance_transitive(g: &Graph, group: &PermGroup) -> Result<Transitivity> {
    check_automorphisms(g, group)?;
    if let Some(t) = vertex_transitivity(group) {
        return Ok(t);
    }
    let part = graph::distance_partition(g, 0)?;
    let stab = group.stabilizer(&[0]);
    let mut orbit_id = vec![usize::MAX; g.n()];
    for (k, o) in stab.orbits().iter().enumerate() {
        for &p in o {
            orbit_id[p] = k;
        }
    }
    for level in &part.levels {
        let first = level[0];
        if let Some(&other) = level.iter().find(|&&v| orbit_id[v] != orbit_id[first]) {
            return Ok(Transitivity::no(vec![0, first], vec![0, other]));
        }
    }
    Ok(Transitivity::yes())
}

/// All `s`-geodesics as ordered `(s+1)`-tuples.
#[derive(Clone, Debug)]
pub struct GeodesicSet {
    pub s: usize,
    pub tuples: Vec<Vec<u32>>,
}

impl GeodesicSet {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

pub fn enumerate_geodesics(g: &Graph, s: usize) -> Result<GeodesicSet> {
    let diam = graph::diameter(g)?;
    if s > diam {
        return Err(Error::ExceedsDiameter { i: s, diameter: diam });
    }
    let mut tuples = Vec::new();
    for u0 in 0..g.n() {
        let dist = graph::distances(g, u0);
        let mut stack: Vec<Vec<u32>> = vec![vec![u0 as u32]];
        while let Some(path) = stack.pop() {
            let i = path.len() - 1;
            if i == s {
                if tuples.len() >= TUPLE_CAP {
                    return Err(Error::TupleCap(TUPLE_CAP));
                }
                tuples.push(path);
                continue;
            }
            let last = *path.last().unwrap() as usize;
            for &w in g.neighbors(last).iter().rev() {
                if dist[w as usize] as usize == i + 1 {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
    }
    tuples.sort_unstable();
    Ok(GeodesicSet { s, tuples })
}

/// Level-by-level test: `G` is transitive on `i`-geodesics iff it is on
/// `(i-1)`-geodesics and the pointwise stabilizer of one `(i-1)`-geodesic
/// `(u0..u_{i-1})` is transitive on `Γ(u_{i-1}) ∩ Γ_i(u0)`.
pub fn is_s_geodesic_transitive(g: &Graph, group: &PermGroup, s: usize) -> Result<Transitivity> {
    check_automorphisms(g, group)?;
    let diam = graph::diameter(g)?;
    if s > diam {
        return Err(Error::ExceedsDiameter { i: s, diameter: diam });
    }
    if let Some(t) = vertex_transitivity(group) {
        return Ok(t);
    }
    let dist = graph::distances(g, 0);
    let mut rep = vec![0usize];
    for i in 1..=s {
        let last = *rep.last().unwrap();
        let ext: Vec<usize> =
            g.neighbors(last).iter().map(|&w| w as usize).filter(|&w| dist[w] as usize == i).collect();
        if let Some(t) = split_extension(group, &rep, &ext) {
            return Ok(t);
        }
        rep.push(ext[0]);
    }
    Ok(Transitivity::yes())
}

/// Level-by-level test on `i`-arcs for `i <= s`, with extension set
/// `Γ(u_{i-1}) \ {u_{i-2}}`.
pub fn is_s_arc_transitive(g: &Graph, group: &PermGroup, s: usize) -> Result<Transitivity> {
    check_automorphisms(g, group)?;
    if let Some(t) = vertex_transitivity(group) {
        return Ok(t);
    }
    let mut rep = vec![0usize];
    for _ in 1..=s {
        let last = *rep.last().unwrap();
        let prev = if rep.len() >= 2 { Some(rep[rep.len() - 2]) } else { None };
        let ext: Vec<usize> = g.neighbors(last).iter().map(|&w| w as usize).filter(|&w| Some(w) != prev).collect();
        if ext.is_empty() {
            return Err(Error::Precondition("graph has no arcs of the requested length".into()));
        }
        if let Some(t) = split_extension(group, &rep, &ext) {
            return Ok(t);
        }
        rep.push(ext[0]);
    }
    Ok(Transitivity::yes())
}

fn split_extension(group: &PermGroup, rep: &[usize], ext: &[usize]) -> Option<Transitivity> {
    if ext.len() <= 1 {
        return None;
    }
    let stab = group.stabilizer(rep);
    let orbit = stab.orbit(ext[0]);
    let other = ext.iter().find(|w| orbit.binary_search(w).is_err())?;
    let mut a = rep.to_vec();
    a.push(ext[0]);
    let mut b = rep.to_vec();
    b.push(*other);
    Some(Transitivity::no(a, b))
}

/// Orbit of one tuple under the generators, by explicit closure.
pub fn tuple_orbit(group: &PermGroup, start: &[u32]) -> Result<HashSet<Vec<u32>>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.to_vec());
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(t) = queue.pop_front() {
        for p in group.generators() {
            let img: Vec<u32> = t.iter().map(|&x| p.image(x as usize) as u32).collect();
            if !seen.contains(&img) {
                if seen.len() >= TUPLE_CAP {
                    return Err(Error::TupleCap(TUPLE_CAP));
                }
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    Ok(seen)
}

/// Explicit-orbit variant of the geodesic test: for each `i <= s`, compares
/// the orbit of one `i`-geodesic with the full set.
pub fn is_s_geodesic_transitive_explicit(g: &Graph, group: &PermGroup, s: usize) -> Result<bool> {
    check_automorphisms(g, group)?;
    for i in 1..=s {
        let all = enumerate_geodesics(g, i)?;
        let orbit = tuple_orbit(group, &all.tuples[0])?;
        if orbit.len() != all.len() {
            return Ok(false);
        }
    }
    Ok(group.is_transitive())
}

/// All `s`-arcs (non-reversing walks of length `s`).
pub fn enumerate_arcs(g: &Graph, s: usize) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for u0 in 0..g.n() {
        let mut stack: Vec<Vec<u32>> = vec![vec![u0 as u32]];
        while let Some(path) = stack.pop() {
            if path.len() == s + 1 {
                if out.len() >= TUPLE_CAP {
                    return Err(Error::TupleCap(TUPLE_CAP));
                }
                out.push(path);
                continue;
            }
            let last = *path.last().unwrap() as usize;
            let prev = if path.len() >= 2 { path[path.len() - 2] } else { u32::MAX };
            for &w in g.neighbors(last) {
                if w != prev {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
    }
    Ok(out)
}

/// Convenience: the full automorphism group as a `PermGroup`.
pub fn full_automorphism_group(g: &Graph, budget: u64) -> Result<PermGroup> {
    Ok(automorphism_group(g, budget)?.group(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

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
    fn circulant_orbital_graph() {
        let d6 = PermGroup::dihedral(6);
        assert_eq!(orbital_graph(&d6, 1).unwrap(), cycle(6));
        assert!(matches!(orbital_graph(&d6, 0), Err(Error::TrivialSuborbit)));
        // in the regular action {1} is paired with {5}
        assert!(matches!(orbital_graph(&PermGroup::cyclic(6), 1), Err(Error::NotSelfPaired)));
        let z7 = PermGroup::cyclic(7);
        assert!(matches!(orbital_graph(&z7, 1), Err(Error::NotSelfPaired)));
    }

    #[test]
    fn rotations_are_not_distance_transitive() {
        let c7 = cycle(7);
        let t = is_distance_transitive(&c7, &PermGroup::cyclic(7)).unwrap();
        assert!(!t.transitive);
        assert!(is_distance_transitive(&c7, &PermGroup::dihedral(7)).unwrap().transitive);
        assert!(!is_s_geodesic_transitive(&c7, &PermGroup::cyclic(7), 1).unwrap().transitive);
    }

    #[test]
    fn non_automorphism_rejected() {
        let g = PermGroup::new(6, vec![Permutation::parse_cycles(6, "(0,1)").unwrap()]).unwrap();
        assert!(matches!(is_distance_transitive(&cycle(6), &g), Err(Error::NotAutomorphism(0))));
    }

    #[test]
    fn geodesic_counts() {
        assert_eq!(enumerate_geodesics(&cycle(6), 2).unwrap().len(), 12);
        assert_eq!(enumerate_geodesics(&petersen(), 2).unwrap().len(), 60);
        assert!(enumerate_geodesics(&cycle(6), 4).is_err());
    }

    #[test]
    fn petersen_arcs_and_geodesics() {
        let g = petersen();
        let aut = full_automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert!(is_s_arc_transitive(&g, &aut, 3).unwrap().transitive);
        assert!(!is_s_arc_transitive(&g, &aut, 4).unwrap().transitive);
        assert!(is_s_geodesic_transitive(&g, &aut, 2).unwrap().transitive);
        assert!(is_s_geodesic_transitive_explicit(&g, &aut, 2).unwrap());
        assert_eq!(tuple_orbit(&aut, &[0, 7, 3, 4]).unwrap().len(), enumerate_arcs(&g, 3).unwrap().len());
    }

    #[test]
    fn prism_is_not_two_arc_transitive() {
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let aut = full_automorphism_group(&prism, DEFAULT_BUDGET).unwrap();
        assert_eq!(aut.order(), 12);
        // rungs and triangle edges lie in different arc orbits
        assert!(!is_s_arc_transitive(&prism, &aut, 1).unwrap().transitive);
        assert!(!is_s_arc_transitive(&prism, &aut, 2).unwrap().transitive);
    }
}
