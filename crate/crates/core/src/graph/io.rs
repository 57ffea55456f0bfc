//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! `u < v`, sorted. Lines starting with `#` are comments.

use std::path::Path;

use crate::error::{Error, Result};

use super::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line_no, format!("bad integer {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() != 2 {
            return Err(Error::parse(line_no, "expected two integers"));
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some((n, _)) => {
                let (u, v) = (nums[0], nums[1]);
                if u >= n || v >= n {
                    return Err(Error::parse(line_no, format!("vertex out of range 0..{n}")));
                }
                if u == v {
                    return Err(Error::parse(line_no, "loop"));
                }
                edges.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing 'n m' header"))?;
    let g = Graph::from_edges(n, edges.iter().copied())?;
    if g.m() != m || edges.len() != m {
        return Err(Error::parse(0, format!("header declares {m} edges, found {} distinct of {}", g.m(), edges.len())));
    }
    Ok(g)
}

/// Canonical, byte-stable text for a graph.
pub fn format_graph(g: &Graph) -> String {
    let mut s = String::with_capacity(16 + g.m() * 10);
    s.push_str(&format!("{} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, format_graph(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_stable() {
        let text = "# a square\n4 4\n1 2\n0 1\n3 0\n2 3\n";
        let g = parse_graph(text).unwrap();
        let canon = format_graph(&g);
        assert_eq!(canon, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(format_graph(&parse_graph(&canon).unwrap()), canon);
    }

    #[test]
    fn header_must_match() {
        assert!(parse_graph("3 3\n0 1\n1 2\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
        assert!(parse_graph("3 2\n0 1\n1 0\n").is_err());
    }
}
