use std::collections::VecDeque;

use crate::graph::Graph;

/// Ordered partition of the vertex set; cells are contiguous ranges of
/// `elems` identified by their start position.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub elems: Vec<u32>,
    pos: Vec<u32>,
    cell_of: Vec<u32>,
    len: Vec<u32>,
    ncells: usize,
}

pub(crate) struct Scratch {
    count: Vec<u32>,
    touched: Vec<u32>,
    touched_cells: Vec<u32>,
    marked: Vec<bool>,
    in_queue: Vec<bool>,
    queue: VecDeque<u32>,
    buf: Vec<u32>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Scratch {
            count: vec![0; n],
            touched: Vec::new(),
            touched_cells: Vec::new(),
            marked: vec![false; n],
            in_queue: vec![false; n],
            queue: VecDeque::new(),
            buf: Vec::new(),
        }
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(23) ^ 0x9e37_79b9_7f4a_7c15
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        let mut len = vec![0u32; n.max(1)];
        len[0] = n as u32;
        Partition {
            elems: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell_of: vec![0; n],
            len,
            ncells: usize::from(n > 0),
        }
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }


    pub fn cell(&self, start: usize) -> &[u32] {
        &self.elems[start..start + self.len[start] as usize]
    }


    /// Smallest non-singleton cell, first by position on ties.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        let mut i = 0;
        while i < self.n() {
            let l = self.len[i];
            if l > 1 && best.is_none_or(|(bl, _)| l < bl) {
                best = Some((l, i));
                if l == 2 {
                    break;
                }
            }
            i += l as usize;
        }
        best.map(|(_, s)| s)
    }

    /// Splits `v` off the front of its cell; returns the singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let c = self.cell_of[v] as usize;
        let l = self.len[c] as usize;
        debug_assert!(l > 1);
        let p = self.pos[v] as usize;
        let other = self.elems[c];
        self.elems.swap(c, p);
        self.pos[v] = c as u32;
        self.pos[other as usize] = p as u32;
        self.len[c] = 1;
        self.len[c + 1] = (l - 1) as u32;
        for i in c + 1..c + l {
            self.cell_of[self.elems[i] as usize] = (c + 1) as u32;
        }
        self.ncells += 1;
        c
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, starting from the given splitter cells. Returns a hash of the
    /// sequence of splits, which is invariant under relabelling.
    pub fn refine(&mut self, g: &Graph, splitters: &[usize], sc: &mut Scratch, mut h: u64) -> u64 {
        for &s in splitters {
            if !sc.in_queue[s] {
                sc.in_queue[s] = true;
                sc.queue.push_back(s as u32);
            }
        }
        while let Some(s) = sc.queue.pop_front() {
            let s = s as usize;
            sc.in_queue[s] = false;
            sc.buf.clear();
            sc.buf.extend_from_slice(self.cell(s));
            for &w in &sc.buf {
                for &x in g.neighbors(w as usize) {
                    if sc.count[x as usize] == 0 {
                        sc.touched.push(x);
                    }
                    sc.count[x as usize] += 1;
                }
            }
            for &x in &sc.touched {
                let c = self.cell_of[x as usize];
                if !sc.marked[c as usize] {
                    sc.marked[c as usize] = true;
                    sc.touched_cells.push(c);
                }
            }
            sc.touched_cells.sort_unstable();
            h = mix(h, s as u64);
            for ti in 0..sc.touched_cells.len() {
                let c = sc.touched_cells[ti] as usize;
                sc.marked[c] = false;
                let l = self.len[c] as usize;
                if l == 1 {
                    continue;
                }
                let count = &sc.count;
                let slice = &mut self.elems[c..c + l];
                let first = count[slice[0] as usize];
                if slice.iter().all(|&v| count[v as usize] == first) {
                    continue;
                }
                slice.sort_unstable_by_key(|&v| count[v as usize]);
                let mut groups: Vec<(usize, usize, u32)> = Vec::new();
                let mut start = 0;
                for i in 1..=l {
                    if i == l || count[slice[i] as usize] != count[slice[start] as usize] {
                        groups.push((c + start, i - start, count[slice[start] as usize]));
                        start = i;
                    }
                }
                for (i, &v) in self.elems[c..c + l].iter().enumerate() {
                    self.pos[v as usize] = (c + i) as u32;
                }
                h = mix(h, c as u64 ^ ((groups.len() as u64) << 32));
                for &(gs, gl, cnt) in &groups {
                    self.len[gs] = gl as u32;
                    for i in gs..gs + gl {
                        self.cell_of[self.elems[i] as usize] = gs as u32;
                    }
                    h = mix(h, ((cnt as u64) << 32) | gl as u64);
                }
                self.ncells += groups.len() - 1;
                let skip = if sc.in_queue[c] {
                    Some(c)
                } else {
                    groups.iter().max_by_key(|&&(gs, gl, _)| (gl, std::cmp::Reverse(gs))).map(|g| g.0)
                };
                for &(gs, _, _) in &groups {
                    if Some(gs) != skip && !sc.in_queue[gs] {
                        sc.in_queue[gs] = true;
                        sc.queue.push_back(gs as u32);
                    }
                }
            }
            sc.touched_cells.clear();
            for &x in &sc.touched {
                sc.count[x as usize] = 0;
            }
            sc.touched.clear();
        }
        mix(h, self.ncells as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_refines_by_degree_and_distance() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut p = Partition::unit(5);
        let mut sc = Scratch::new(5);
        p.refine(&g, &[0], &mut sc, 0);
        // {0,4}, {1,3}, {2}
        assert_eq!(p.ncells, 3);
    }

    #[test]
    fn regular_graph_stays_unit() {
        let g = Graph::from_fn(6, |u, v| (u + 1) % 6 == v || (v + 1) % 6 == u);
        let mut p = Partition::unit(6);
        let mut sc = Scratch::new(6);
        p.refine(&g, &[0], &mut sc, 0);
        assert_eq!(p.ncells, 1);
        p.individualize(0);
        p.refine(&g, &[0], &mut sc, 0);
        assert_eq!(p.ncells, 4);
    }
}
