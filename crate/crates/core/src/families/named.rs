//! Hoffman–Singleton and its subgraphs, the Perkel graph and the M23 graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{coset_action, orbitals, PermGroup};
use crate::perm::Permutation;
use crate::transitivity::orbital_graph;

use super::Built;

/// Pentagons `P_h` and pentagrams `Q_i` on `Z_5`, with `P_h^j ~ Q_i^(hi+j)`.
pub fn hoffman_singleton() -> Built {
    let p = |h: usize, j: usize| h * 5 + j;
    let q = |i: usize, j: usize| 25 + i * 5 + j;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, (j + 1) % 5)));
            edges.push((q(h, j), q(h, (j + 2) % 5)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    let graph = Graph::from_edges(50, edges).expect("valid edges");
    let labels = (0..50).map(|v| if v < 25 { format!("P{}.{}", v / 5, v % 5) } else { format!("Q{}.{}", (v - 25) / 5, v % 5) }).collect();
    Built { name: "Hoffman-Singleton".into(), graph, labels, group: None }
}

fn delete(b: &Built, name: &str, removed: &[usize]) -> Built {
    let keep: Vec<usize> = (0..b.graph.n()).filter(|v| !removed.contains(v)).collect();
    Built {
        name: name.into(),
        graph: b.graph.induced_subgraph(&keep),
        labels: keep.iter().map(|&v| b.labels[v].clone()).collect(),
        group: None,
    }
}

/// Hoffman–Singleton with a vertex and its neighbours deleted.
pub fn g42() -> Built {
    let hs = hoffman_singleton();
    let mut removed = vec![0];
    removed.extend(hs.graph.neighbors(0).iter().map(|&x| x as usize));
    delete(&hs, "G42", &removed)
}

/// Hoffman–Singleton with an edge and all neighbours of its ends deleted.
pub fn sylvester() -> Built {
    let hs = hoffman_singleton();
    let v = hs.graph.neighbors(0)[0] as usize;
    let mut removed: Vec<usize> = vec![0, v];
    removed.extend(hs.graph.neighbors(0).iter().map(|&x| x as usize));
    removed.extend(hs.graph.neighbors(v).iter().map(|&x| x as usize));
    removed.sort_unstable();
    removed.dedup();
    delete(&hs, "Sylvester", &removed)
}

/// PSL(2,19) on the projective line `0..18, ∞ = 19`.
pub fn psl2_19() -> PermGroup {
    let p = 19usize;
    let inf = p;
    let inv = |x: usize| (1..p).find(|y| x * y % p == 1).unwrap();
    let shift = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
    let scale = (0..=p).map(|x| if x == inf { inf } else { 4 * x % p }).collect();
    let invert = (0..=p)
        .map(|x| {
            if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                (p - inv(x)) % p
            }
        })
        .collect();
    let gens = [shift, scale, invert].into_iter().map(|v| Permutation::from_images(v).expect("bijection")).collect();
    PermGroup::with_known_order(20, gens, 3420).expect("degree 20")
}

fn power_to_order(g: &Permutation, target: u64) -> Option<Permutation> {
    let o = g.order();
    o.is_multiple_of(target).then(|| g.pow(o / target))
}

/// A subgroup `⟨a,b⟩ ≅ A5` of PSL(2,19), found from random elements with
/// `a^2 = b^3 = (ab)^5 = 1`.
pub fn a5_in_psl2_19(group: &PermGroup, seed: u64) -> Result<PermGroup> {
    let mut src = group.clone().with_seed(seed).random_source();
    for _ in 0..20_000 {
        let (Some(a), Some(b)) = (power_to_order(&src.next_element(), 2), power_to_order(&src.next_element(), 3)) else {
            continue;
        };
        if a.compose(&b).order() != 5 {
            continue;
        }
        let h = PermGroup::new(20, vec![a, b])?;
        if h.order() == 60 {
            return Ok(h);
        }
    }
    Err(Error::SearchFailed(20_000))
}

/// The orbital graph of valency 6 of PSL(2,19) on the 57 cosets of A5.
pub fn perkel(seed: u64) -> Result<Built> {
    let g = psl2_19();
    let h = a5_in_psl2_19(&g, seed)?;
    let action = coset_action(&g, &h)?;
    let group = action.table.group();
    let orb = orbitals(&group, 0)?;
    let six = orb
        .suborbits
        .iter()
        .find(|s| s.len() == 6)
        .ok_or_else(|| Error::InvariantMismatch(format!("no suborbit of length 6 among {:?}", orb.subdegrees())))?;
    let graph = orbital_graph(&group, six.representative())?;
    let labels = (0..graph.n()).map(|i| format!("A5·g{i}")).collect();
    Ok(Built { name: "Perkel".into(), graph, labels, group: Some(group) })
}

/// Generator polynomial `1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11` of the
/// cyclic binary Golay code of length 23, as a bit mask.
pub const GOLAY_POLY: u32 = 0b1100_0111_0101;

/// The 4096 words of the extended binary Golay code, bit 23 the parity.
pub fn extended_golay_code() -> Vec<u32> {
    let rows: Vec<u32> = (0..12).map(|i| GOLAY_POLY << i).collect();
    (0u32..1 << 12)
        .map(|m| {
            let w = (0..12).filter(|i| m >> i & 1 == 1).fold(0, |acc, i| acc ^ rows[i]);
            w | ((w.count_ones() & 1) << 23)
        })
        .collect()
}

/// Octads avoiding coordinate 23, adjacent when disjoint.
pub fn m23_graph() -> Built {
    let octads: Vec<u32> = extended_golay_code().into_iter().filter(|w| w.count_ones() == 8 && w >> 23 & 1 == 0).collect();
    let graph = Graph::from_fn(octads.len(), |i, j| octads[i] & octads[j] == 0);
    let labels = octads
        .iter()
        .map(|w| {
            let pts: Vec<String> = (0..24).filter(|i| w >> i & 1 == 1).map(|i| i.to_string()).collect();
            format!("{{{}}}", pts.join(","))
        })
        .collect();
    Built { name: "M23-graph".into(), graph, labels, group: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::intersection_array;
    use crate::graph::girth;

    #[test]
    fn golay_weights() {
        let code = extended_golay_code();
        let mut dist = [0usize; 25];
        for w in &code {
            dist[w.count_ones() as usize] += 1;
        }
        assert_eq!((dist[0], dist[8], dist[12], dist[16], dist[24]), (1, 759, 2576, 759, 1));
    }

    #[test]
    fn hoffman_singleton_family() {
        let hs = hoffman_singleton();
        assert_eq!(intersection_array(&hs.graph).unwrap().to_string(), "{7,6;1,1}");
        let g = g42();
        assert_eq!((g.graph.n(), g.graph.valency(), girth(&g.graph)), (42, Some(6), Some(5)));
        let s = sylvester();
        assert_eq!((s.graph.n(), s.graph.valency(), girth(&s.graph)), (36, Some(5), Some(5)));
        assert_eq!(intersection_array(&s.graph).unwrap().to_string(), "{5,4,2;1,1,4}");
    }

    #[test]
    fn perkel_graph() {
        let p = perkel(11).unwrap();
        assert_eq!(intersection_array(&p.graph).unwrap().to_string(), "{6,5,2;1,1,3}");
        assert_eq!(girth(&p.graph), Some(5));
    }

    #[test]
    fn m23() {
        let m = m23_graph();
        assert_eq!(m.graph.n(), 506);
        assert_eq!(intersection_array(&m.graph).unwrap().to_string(), "{15,14,12;1,1,9}");
    }
}
