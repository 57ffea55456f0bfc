//! Simple undirected graphs and their metric structure.

pub mod io;
mod metric;

pub use metric::{
    all_distances, bipartition, components, diameter, distance_i_graph, distance_partition, distances, girth,
    Bipartition, DistancePartition, UNREACHABLE,
};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Loops are rejected; repeated edges
    /// are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Graph::from_adjacency_lists(adj))
    }

    fn from_adjacency_lists(mut adj: Vec<Vec<u32>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, m: twice / 2 }
    }

    /// Builds a graph from a symmetric adjacency predicate over all pairs.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v as u32);
                    adj[v].push(u as u32);
                }
            }
        }
        Graph::from_adjacency_lists(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// The common valency, or `None` if the graph is not regular.
    pub fn valency(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, |a| a.len());
        self.adj.iter().all(|a| a.len() == k).then_some(k)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| (v as usize) > u).map(move |&v| (u, v as usize)))
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![u32::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i as u32;
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| index[w as usize] != u32::MAX).map(|&w| index[w as usize]).collect())
            .collect();
        Graph::from_adjacency_lists(adj)
    }

    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        if g.degree() != self.n() {
            return false;
        }
        self.adj.iter().enumerate().all(|(u, a)| {
            let gu = g.image(u);
            self.adj[gu].len() == a.len() && a.iter().all(|&v| self.has_edge(gu, g.image(v as usize)))
        })
    }

    /// The image graph under a vertex relabelling.
    pub fn relabel(&self, g: &Permutation) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, a) in self.adj.iter().enumerate() {
            adj[g.image(u)] = a.iter().map(|&v| g.image(v as usize) as u32).collect();
        }
        Graph::from_adjacency_lists(adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.valency(), Some(2));
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    }

    #[test]
    fn automorphism_check() {
        let g = Graph::from_fn(5, |u, v| (u + 1) % 5 == v || (v + 1) % 5 == u);
        let rot = Permutation::parse_cycles(5, "(0,1,2,3,4)").unwrap();
        assert!(g.is_automorphism(&rot));
        assert!(!g.is_automorphism(&Permutation::parse_cycles(5, "(0,1)").unwrap()));
    }
}
