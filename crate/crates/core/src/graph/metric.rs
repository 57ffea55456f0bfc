use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::Graph;

pub const UNREACHABLE: u32 = u32::MAX;

/// BFS distances from `u`; unreachable vertices get `UNREACHABLE`.
pub fn distances(g: &Graph, u: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x] + 1;
        for &y in g.neighbors(x) {
            if dist[y as usize] == UNREACHABLE {
                dist[y as usize] = dx;
                queue.push_back(y as usize);
            }
        }
    }
    dist
}

pub fn all_distances(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|u| distances(g, u)).collect()
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in g.neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    comp.push(y as usize);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn require_connected(g: &Graph) -> Result<()> {
    let c = components(g).len();
    if c > 1 {
        return Err(Error::Disconnected { components: c });
    }
    Ok(())
}

/// The partition of the vertex set by distance from a source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub source: usize,
    /// `levels[i]` is the sorted sphere of radius `i`.
    pub levels: Vec<Vec<usize>>,
}

impl DistancePartition {
    pub fn eccentricity(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }
}

pub fn distance_partition(g: &Graph, u: usize) -> Result<DistancePartition> {
    let dist = distances(g, u);
    if dist.contains(&UNREACHABLE) {
        require_connected(g)?;
    }
    let ecc = *dist.iter().max().unwrap_or(&0) as usize;
    let mut levels = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        levels[d as usize].push(v);
    }
    Ok(DistancePartition { source: u, levels })
}

pub fn diameter(g: &Graph) -> Result<usize> {
    require_connected(g)?;
    Ok((0..g.n()).map(|u| *distances(g, u).iter().max().unwrap_or(&0) as usize).max().unwrap_or(0))
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for r in 0..n {
        for &t in &touched {
            dist[t] = UNREACHABLE;
            parent[t] = u32::MAX;
        }
        touched.clear();
        dist[r] = 0;
        touched.push(r);
        queue.clear();
        queue.push_back(r);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] as usize + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                let y = y as usize;
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    parent[y] = x as u32;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y as u32 {
                    let len = (dist[x] + dist[y] + 1) as usize;
                    if len < best {
                        best = len;
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Vertices adjacent exactly when at distance `i`.
pub fn distance_i_graph(g: &Graph, i: usize) -> Result<Graph> {
    require_connected(g)?;
    let mut adj_pairs = Vec::new();
    let mut diam = 0;
    for u in 0..g.n() {
        let dist = distances(g, u);
        diam = diam.max(*dist.iter().max().unwrap_or(&0) as usize);
        for (v, &d) in dist.iter().enumerate().skip(u + 1) {
            if d as usize == i {
                adj_pairs.push((u, v));
            }
        }
    }
    if i == 0 || i > diam {
        return Err(Error::ExceedsDiameter { i, diameter: diam });
    }
    Graph::from_edges(g.n(), adj_pairs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour (0 or 1) of each vertex.
    Bipartite(Vec<u8>),
    /// Vertices of an odd closed walk that is a cycle, in order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                let y = y as usize;
                if colour[y] == u8::MAX {
                    colour[y] = 1 - colour[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if colour[y] == colour[x] {
                    return Bipartition::OddCycle(odd_cycle(x, y, &parent, &depth));
                }
            }
        }
    }
    Bipartition::Bipartite(colour)
}

fn odd_cycle(x: usize, y: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u)
    }

    #[test]
    fn cycle_metrics() {
        let c7 = cycle(7);
        assert_eq!(diameter(&c7).unwrap(), 3);
        assert_eq!(girth(&c7), Some(7));
        assert_eq!(distance_partition(&c7, 0).unwrap().sizes(), vec![1, 2, 2, 2]);
        let c6 = cycle(6);
        assert_eq!(girth(&c6), Some(6));
        assert!(bipartition(&c6).is_bipartite());
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        let g = cycle(9);
        match bipartition(&g) {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len() % 2, 1);
                for i in 0..c.len() {
                    assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            _ => panic!("C9 is not bipartite"),
        }
    }

    #[test]
    fn disconnected_errors() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(diameter(&g), Err(Error::Disconnected { components: 2 })));
        assert!(distance_partition(&g, 0).is_err());
        assert_eq!(girth(&g), None);
    }

    #[test]
    fn distance_graphs() {
        let c6 = cycle(6);
        let d3 = distance_i_graph(&c6, 3).unwrap();
        assert_eq!(d3.m(), 3);
        assert!(matches!(distance_i_graph(&c6, 4), Err(Error::ExceedsDiameter { i: 4, diameter: 3 })));
    }
}
