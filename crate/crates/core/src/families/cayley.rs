//! Cayley graphs, with the Golay-code constructions as instances.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{linalg, Field};
use crate::graph::{distance_i_graph, Graph};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::named::GOLAY_POLY;
use super::{Built, VERTEX_CAP};

/// A group with a connection set `S`; vertices are group elements and
/// `u ~ s·u` for `s ∈ S`.
#[derive(Clone, Debug)]
pub enum CayleySpec {
    /// `Z_p^r` with elements as coordinate vectors.
    Abelian { p: u32, r: u32, connection: Vec<Vec<u32>> },
    /// The group generated by `generators`; `connection` must lie in it.
    Permutation { generators: Vec<Permutation>, connection: Vec<Permutation> },
}

fn abelian_index(p: u32, v: &[u32]) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

fn abelian_vector(p: u32, r: u32, mut x: usize) -> Vec<u32> {
    (0..r)
        .map(|_| {
            let c = (x % p as usize) as u32;
            x /= p as usize;
            c
        })
        .collect()
}

fn cayley_abelian(p: u32, r: u32, connection: &[Vec<u32>]) -> Result<Built> {
    let n = (p as f64).powi(r as i32);
    if n > VERTEX_CAP as f64 {
        return Err(Error::Unsupported(format!("Z_{p}^{r} has {n} elements, cap {VERTEX_CAP}")));
    }
    let n = n as usize;
    let field = Field::gf(p as usize)?;
    let mut set: Vec<usize> = Vec::new();
    for s in connection {
        if s.len() != r as usize || s.iter().any(|&c| c >= p) {
            return Err(Error::Precondition(format!("element {s:?} is not in Z_{p}^{r}")));
        }
        if s.iter().all(|&c| c == 0) {
            return Err(Error::IdentityInConnectionSet);
        }
        set.push(abelian_index(p, s));
    }
    set.sort_unstable();
    set.dedup();
    for s in connection {
        let neg: Vec<u32> = s.iter().map(|&c| (p - c) % p).collect();
        if set.binary_search(&abelian_index(p, &neg)).is_err() {
            return Err(Error::NotInverseClosed);
        }
    }
    let rows: Vec<linalg::Vector> = connection.iter().map(|s| s.iter().map(|&c| c as u8).collect()).collect();
    if linalg::rank(&field, &rows) != r as usize {
        return Err(Error::DoesNotGenerate);
    }
    let vecs: Vec<Vec<u32>> = (0..n).map(|x| abelian_vector(p, r, x)).collect();
    let add = |a: &[u32], b: &[u32]| -> usize {
        let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
        abelian_index(p, &s)
    };
    let mut edges = Vec::with_capacity(n * set.len() / 2);
    for u in 0..n {
        for &s in &set {
            let v = add(&vecs[s], &vecs[u]);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    let translations = (0..r as usize)
        .map(|j| {
            let mut e = vec![0; r as usize];
            e[j] = 1;
            Permutation::from_images((0..n).map(|u| add(&vecs[u], &e)).collect()).expect("translation")
        })
        .collect();
    let labels = vecs.iter().map(|v| v.iter().map(|c| c.to_string()).collect()).collect();
    Ok(Built { name: format!("Cay(Z_{p}^{r})"), graph, labels, group: Some(PermGroup::new(n, translations)?) })
}

fn cayley_permutation(generators: &[Permutation], connection: &[Permutation]) -> Result<Built> {
    let degree = generators.first().or(connection.first()).map_or(0, |g| g.degree());
    let g = PermGroup::new(degree, generators.to_vec())?;
    if g.order() > VERTEX_CAP as u128 {
        return Err(Error::Unsupported(format!("group of order {} exceeds cap {VERTEX_CAP}", g.order())));
    }
    for s in connection {
        if s.is_identity() {
            return Err(Error::IdentityInConnectionSet);
        }
        if !g.contains(s)? {
            return Err(Error::Precondition("connection element outside the group".into()));
        }
        if !connection.contains(&s.inverse()) {
            return Err(Error::NotInverseClosed);
        }
    }
    if PermGroup::new(degree, connection.to_vec())?.order() != g.order() {
        return Err(Error::DoesNotGenerate);
    }
    let elems = g.elements(VERTEX_CAP)?;
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut edges = Vec::new();
    for (u, x) in elems.iter().enumerate() {
        for s in connection {
            let v = index[&s.compose(x)];
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let n = elems.len();
    let graph = Graph::from_edges(n, edges)?;
    let right = generators
        .iter()
        .map(|a| Permutation::from_images((0..n).map(|u| index[&elems[u].compose(a)]).collect()).expect("regular action"))
        .collect();
    let labels = elems.iter().map(|e| format!("{:?}", e.cycles())).collect();
    Ok(Built { name: format!("Cay(G,|S|={})", connection.len()), graph, labels, group: Some(PermGroup::new(n, right)?) })
}

pub fn cayley(spec: &CayleySpec) -> Result<Built> {
    match spec {
        CayleySpec::Abelian { p, r, connection } => cayley_abelian(*p, *r, connection),
        CayleySpec::Permutation { generators, connection } => cayley_permutation(generators, connection),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Golay {
    C12,
    C22,
    C23,
}

impl fmt::Display for Golay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Golay::C12 => "golay-c12",
            Golay::C22 => "golay-c22",
            Golay::C23 => "golay-c23",
        })
    }
}

impl FromStr for Golay {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().trim_start_matches("golay-") {
            "c12" => Ok(Golay::C12),
            "c22" => Ok(Golay::C22),
            "c23" => Ok(Golay::C23),
            _ => Err(Error::Unsupported(format!("unknown Cayley construction `{s}`"))),
        }
    }
}

const C12_WORDS: [&str; 12] = [
    "(1,2,3)",
    "(4,5,6)",
    "(7,8,9)",
    "(10,11,12)",
    "(13,14,15)",
    "(16,17,18)",
    "(1,2,3)(4,6,5)(7,9,8)(10,11,12)(13,14,15)",
    "(1,3,2)(4,6,5)(7,8,9)(10,11,12)(16,18,17)",
    "(1,2,3)(4,6,5)(7,8,9)(13,15,14)(16,17,18)",
    "(1,2,3)(4,5,6)(10,11,12)(13,15,14)(16,18,17)",
    "(4,5,6)(7,8,9)(10,11,12)(13,14,15)(16,17,18)",
    "(1,2,3)(7,8,9)(10,12,11)(13,14,15)(16,18,17)",
];

const C22_EXTRA_WORDS: [&str; 12] = [
    "(1,2)(3,4)(5,6)(7,8)(9,10)(15,16)",
    "(1,2)(3,4)(7,8)(13,14)(17,18)",
    "(1,2)(3,4)(11,12)(13,14)(15,16)(19,20)",
    "(1,2)(3,4)(9,10)(11,12)(15,16)(17,18)",
    "(3,4)(5,6)(11,12)(13,14)(17,18)(19,20)",
    "(5,6)(7,8)(13,14)(15,16)(19,20)",
    "(1,2)(5,6)(7,8)(11,12)(13,14)(15,16)(17,18)",
    "(3,4)(7,8)(9,10)(13,14)(15,16)(17,18)(19,20)",
    "(5,6)(9,10)(11,12)(15,16)(17,18)(19,20)",
    "(1,2)(5,6)(7,8)(9,10)(17,18)(19,20)",
    "(3,4)(7,8)(9,10)(11,12)(19,20)",
    "(1,2)(5,6)(9,10)(11,12)(13,14)",
];

/// Parses cycle notation on the points `1..=n`.
pub fn parse_one_based(n: usize, s: &str) -> Result<Permutation> {
    let p = Permutation::parse_cycles(n + 1, s)?;
    if p.image(0) != 0 {
        return Err(Error::InvalidPermutation(format!("point 0 used in one-based word {s:?}")));
    }
    Permutation::from_images((1..=n).map(|x| p.image(x) - 1).collect())
}

/// The generator words of the ternary (`C12`) or truncated binary (`C22`)
/// construction, in the order printed.
pub fn golay_words(which: Golay) -> Result<(usize, Vec<Permutation>)> {
    match which {
        Golay::C12 => Ok((18, C12_WORDS.iter().map(|w| parse_one_based(18, w)).collect::<Result<_>>()?)),
        Golay::C22 => {
            let mut words: Vec<Permutation> = (1..=10).map(|j| parse_one_based(20, &format!("({},{})", 2 * j - 1, 2 * j))).collect::<Result<_>>()?;
            for w in C22_EXTRA_WORDS {
                words.push(parse_one_based(20, w)?);
            }
            Ok((20, words))
        }
        Golay::C23 => Err(Error::Unsupported("C23 is built from syndromes, not permutation words".into())),
    }
}

/// Coordinates of a product of powers of the block cycles
/// `(1..p)(p+1..2p)...` in `Z_p^r`; `None` if the word is not such a product.
pub fn block_coordinates(word: &Permutation, p: usize) -> Option<Vec<u32>> {
    let r = word.degree() / p;
    let mut coords = Vec::with_capacity(r);
    for j in 0..r {
        let base = j * p;
        let shift = (word.image(base) + p - base) % p;
        if word.image(base) / p != j {
            return None;
        }
        for i in 0..p {
            if word.image(base + i) != base + (i + shift) % p {
                return None;
            }
        }
        coords.push(shift as u32);
    }
    Some(coords)
}

/// The connection sets of the Golay constructions as vectors of `Z_p^r`:
/// the printed words and their inverses (all printed words for `C22`), or
/// the syndromes of the unit vectors for `C23`.
pub fn golay_connection(which: Golay) -> Result<(u32, u32, Vec<Vec<u32>>)> {
    if which == Golay::C23 {
        let syndromes = (0..23).map(|i| {
            let mut x: u32 = 1 << i;
            for k in (11..23).rev() {
                if x >> k & 1 == 1 {
                    x ^= GOLAY_POLY << (k - 11);
                }
            }
            (0..11).map(|b| x >> b & 1).collect()
        });
        return Ok((2, 11, syndromes.collect()));
    }
    let (_, words) = golay_words(which)?;
    let p = if which == Golay::C12 { 3 } else { 2 };
    let mut s = Vec::new();
    for w in &words {
        let c = block_coordinates(w, p).ok_or_else(|| Error::InvariantMismatch(format!("word {:?} is not a product of block cycles", w.cycles())))?;
        let neg: Vec<u32> = c.iter().map(|&x| (p as u32 - x) % p as u32).collect();
        s.push(c);
        if !s.contains(&neg) {
            s.push(neg);
        }
    }
    let r = words[0].degree() / p;
    Ok((p as u32, r as u32, s))
}

/// Γ(C12) on `Z_3^6`, Γ(C22) on `Z_2^10` or Γ(C23) on `Z_2^11`.
pub fn golay(which: Golay) -> Result<Built> {
    let (p, r, connection) = golay_connection(which)?;
    let mut b = cayley_abelian(p, r, &connection)?;
    b.name = format!("Gamma({})", which.to_string().trim_start_matches("golay-").to_uppercase());
    Ok(b)
}

/// The distance-2 graph of a Golay construction.
pub fn golay_distance2(which: Golay) -> Result<Graph> {
    distance_i_graph(&golay(which)?.graph, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::intersection_array;

    #[test]
    fn words_commute_and_have_prime_order() {
        for (which, p) in [(Golay::C12, 3), (Golay::C22, 2)] {
            let (_, words) = golay_words(which).unwrap();
            for a in &words {
                assert_eq!(a.order(), p);
                for b in &words {
                    assert_eq!(a.compose(b), b.compose(a));
                }
            }
        }
    }

    #[test]
    fn abstract_and_permutation_constructions_agree() {
        let (_, words) = golay_words(Golay::C12).unwrap();
        let mut conn: Vec<Permutation> = Vec::new();
        for w in &words {
            conn.push(w.clone());
            conn.push(w.inverse());
        }
        let perm = cayley(&CayleySpec::Permutation { generators: words[..6].to_vec(), connection: conn }).unwrap();
        let abs = golay(Golay::C12).unwrap();
        assert_eq!(perm.graph.n(), abs.graph.n());
        assert_eq!(perm.graph.m(), abs.graph.m());
        assert_eq!(intersection_array(&perm.graph).unwrap().to_string(), "{24,22,20;1,2,12}");
    }

    #[test]
    fn golay_arrays() {
        assert_eq!(intersection_array(&golay(Golay::C12).unwrap().graph).unwrap().to_string(), "{24,22,20;1,2,12}");
        assert_eq!(intersection_array(&golay(Golay::C22).unwrap().graph).unwrap().to_string(), "{22,21,20;1,2,6}");
        assert_eq!(intersection_array(&golay(Golay::C23).unwrap().graph).unwrap().to_string(), "{23,22,21;1,2,3}");
    }

    #[test]
    fn connection_set_checks() {
        let c5 = cayley(&CayleySpec::Abelian { p: 5, r: 1, connection: vec![vec![1], vec![4]] }).unwrap();
        assert_eq!((c5.graph.n(), c5.graph.valency()), (5, Some(2)));
        let e = cayley(&CayleySpec::Abelian { p: 5, r: 1, connection: vec![vec![1]] }).unwrap_err();
        assert!(matches!(e, Error::NotInverseClosed));
        let e = cayley(&CayleySpec::Abelian { p: 2, r: 2, connection: vec![vec![1, 0]] }).unwrap_err();
        assert!(matches!(e, Error::DoesNotGenerate));
        let e = cayley(&CayleySpec::Abelian { p: 2, r: 1, connection: vec![vec![0]] }).unwrap_err();
        assert!(matches!(e, Error::IdentityInConnectionSet));
    }
}
