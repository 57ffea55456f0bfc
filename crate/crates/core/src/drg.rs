//! Distance-regularity: intersection arrays and the identities they satisfy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Bipartition, Graph, UNREACHABLE};

/// `{b0,...,b_{d-1}; c1,...,c_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.is_empty() || b.len() != c.len() {
            return Err(Error::InvalidArray(format!("need d >= 1 entries on each side, got {} and {}", b.len(), c.len())));
        }
        if c[0] != 1 {
            return Err(Error::InvalidArray(format!("c1 must be 1, got {}", c[0])));
        }
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return Err(Error::InvalidArray(format!("b{i} must be positive")));
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return Err(Error::InvalidArray(format!("c{} must be positive", i + 1)));
        }
        let a = IntersectionArray { b, c };
        for i in 1..=a.diameter() {
            if a.b(0) < a.b(i) + a.c(i) {
                return Err(Error::InvalidArray(format!("a{i} would be negative")));
            }
        }
        Ok(a)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// `b_i`, with `b_d = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> u64 {
        self.b(0) - self.b(i) - self.c(i)
    }

    pub fn bs(&self) -> &[u64] {
        &self.b
    }

    pub fn cs(&self) -> &[u64] {
        &self.c
    }

    /// `k_0, ..., k_d` from `k_{i+1} = k_i b_i / c_{i+1}`.
    pub fn sphere_sizes(&self) -> Result<Vec<u64>> {
        let mut k = vec![1u64];
        for i in 0..self.diameter() {
            let num = k[i] as u128 * self.b(i) as u128;
            let den = self.c(i + 1) as u128;
            if !num.is_multiple_of(den) {
                return Err(Error::InconsistentArray(format!("k{} = {num}/{den} is not an integer", i + 1)));
            }
            k.push(u64::try_from(num / den).map_err(|_| Error::InconsistentArray("sphere size overflow".into()))?);
        }
        Ok(k)
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.sphere_sizes()?.iter().sum())
    }

    /// For diameter 3, whether `k2 >= max(k1, k3)`.
    pub fn middle_sphere_dominates(&self) -> Result<bool> {
        let k = self.sphere_sizes()?;
        Ok(k.len() != 4 || k[2] >= k[1].max(k[3]))
    }

    /// The girth forced by the array: `2i` at the first `c_i >= 2`, or
    /// `2i + 1` at the first `a_i >= 1`, whichever comes first.
    pub fn girth(&self) -> Option<u64> {
        for i in 1..=self.diameter() {
            if self.c(i) >= 2 {
                return Some(2 * i as u64);
            }
            if self.a(i) >= 1 {
                return Some(2 * i as u64 + 1);
            }
        }
        None
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidArray(format!("expected {{b...;c...}}, got {s:?}")))?;
        let (bs, cs) = body.split_once(';').ok_or_else(|| Error::InvalidArray("missing ';'".into()))?;
        let parse = |part: &str| -> Result<Vec<u64>> {
            part.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidArray(format!("bad entry {t:?}"))))
                .collect()
        };
        IntersectionArray::new(parse(bs)?, parse(cs)?)
    }
}

/// Computes the intersection array after checking, for every vertex `u` and
/// every `v`, that the counts `a_i(u,v)`, `b_i(u,v)`, `c_i(u,v)` depend only on
/// `i = d(u,v)`.
pub fn intersection_array(g: &Graph) -> Result<IntersectionArray> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    for v in 1..n {
        if g.degree(v) != g.degree(0) {
            return Err(Error::NotRegular { u: 0, v, du: g.degree(0), dv: g.degree(v) });
        }
    }
    let dist0 = graph::distances(g, 0);
    if dist0.contains(&UNREACHABLE) {
        let c = graph::components(g).len();
        return Err(Error::Disconnected { components: c });
    }
    let d = *dist0.iter().max().unwrap() as usize;
    if d == 0 {
        return Err(Error::InvalidGraph("single vertex".into()));
    }
    let counts = |dist: &[u32], v: usize| -> (u64, u64, u64) {
        let dv = dist[v];
        let (mut c, mut a, mut b) = (0, 0, 0);
        for &w in g.neighbors(v) {
            let dw = dist[w as usize];
            if dw + 1 == dv {
                c += 1;
            } else if dw == dv {
                a += 1;
            } else {
                b += 1;
            }
        }
        (c, a, b)
    };
    let mut expected = vec![(0u64, 0u64, 0u64); d + 1];
    let mut set = vec![false; d + 1];
    for (v, &dv) in dist0.iter().enumerate() {
        let i = dv as usize;
        if !set[i] {
            expected[i] = counts(&dist0, v);
            set[i] = true;
        }
    }
    for u in 0..n {
        let dist = if u == 0 { dist0.clone() } else { graph::distances(g, u) };
        for (v, &dv) in dist.iter().enumerate() {
            let i = dv as usize;
            if i > d {
                return Err(Error::NotDistanceRegular { u, v, i, detail: format!("distance exceeds {d}") });
            }
            let got = counts(&dist, v);
            if got != expected[i] {
                let (c, a, b) = got;
                let (ec, ea, eb) = expected[i];
                return Err(Error::NotDistanceRegular {
                    u,
                    v,
                    i,
                    detail: format!("(c,a,b) = ({c},{a},{b}) but ({ec},{ea},{eb}) from vertex 0"),
                });
            }
        }
        if *dist.iter().max().unwrap() as usize != d {
            return Err(Error::NotDistanceRegular { u, v: u, i: 0, detail: "eccentricity differs".into() });
        }
    }
    let b = (0..d).map(|i| expected[i].2).collect();
    let c = (1..=d).map(|i| expected[i].0).collect();
    IntersectionArray::new(b, c)
}

pub fn girth_from_array(a: &IntersectionArray) -> Option<u64> {
    a.girth()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Imprimitivity {
    pub bipartite: bool,
    /// Antipodal classes `{u} ∪ Γ_d(u)` when the graph is antipodal.
    pub antipodal_classes: Option<Vec<Vec<usize>>>,
}

impl Imprimitivity {
    pub fn antipodal_r(&self) -> Option<usize> {
        self.antipodal_classes.as_ref().map(|c| c[0].len())
    }

    pub fn is_primitive_type(&self) -> bool {
        !self.bipartite && self.antipodal_classes.is_none()
    }

    pub fn kind(&self) -> String {
        match (self.bipartite, self.antipodal_r()) {
            (false, None) => "primitive".into(),
            (true, None) => "bipartite".into(),
            (false, Some(r)) => format!("antipodal({r})"),
            (true, Some(r)) => format!("bipartite+antipodal({r})"),
        }
    }
}

pub fn classify_imprimitive(g: &Graph, a: &IntersectionArray) -> Imprimitivity {
    let bipartite = matches!(graph::bipartition(g), Bipartition::Bipartite(_));
    let d = a.diameter() as u32;
    let n = g.n();
    let class_of: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let dist = graph::distances(g, u);
            let mut cls: Vec<usize> = (0..n).filter(|&v| v == u || dist[v] == d).collect();
            cls.sort_unstable();
            cls
        })
        .collect();
    let r = class_of[0].len();
    let equivalence = d >= 2
        && r >= 2
        && (0..n).all(|u| class_of[u].len() == r && class_of[u].iter().all(|&v| class_of[v] == class_of[u]));
    let antipodal_classes = equivalence.then(|| {
        let mut classes: Vec<Vec<usize>> = class_of.clone();
        classes.sort();
        classes.dedup();
        classes
    });
    Imprimitivity { bipartite, antipodal_classes }
}

/// `{n-1, (r-1)c2, 1; 1, c2, n-1}`.
pub fn antipodal_quotient_array(n: u64, r: u64, c2: u64) -> Result<IntersectionArray> {
    if r < 2 || n < 3 || c2 < 1 {
        return Err(Error::Precondition(format!("need r >= 2, n >= 3, c2 >= 1; got n={n}, r={r}, c2={c2}")));
    }
    IntersectionArray::new(vec![n - 1, (r - 1) * c2, 1], vec![1, c2, n - 1])
}

/// Whether `b0 b1 ... b_{s-1}` divides `stabilizer_order`.
pub fn geodesic_divisibility(a: &IntersectionArray, s: usize, stabilizer_order: u128) -> Result<bool> {
    if s > a.diameter() {
        return Err(Error::Precondition(format!("s = {s} exceeds diameter {}", a.diameter())));
    }
    let prod: u128 = (0..s).map(|i| a.b(i) as u128).product();
    Ok(stabilizer_order.is_multiple_of(prod))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let a = arr("{4,3,3;1,1,2}");
        assert_eq!(a.to_string(), "{4,3,3;1,1,2}");
        assert_eq!(a.sphere_sizes().unwrap(), vec![1, 4, 12, 18]);
        assert!(arr(" {2,1,1; 1,1,1} ").diameter() == 3);
        assert!("{4,3;2,1}".parse::<IntersectionArray>().is_err());
        assert!("{4,3;1}".parse::<IntersectionArray>().is_err());
    }

    #[test]
    fn sphere_sizes_and_integrality() {
        assert_eq!(arr("{6,4,4;1,1,3}").sphere_sizes().unwrap(), vec![1, 6, 24, 32]);
        assert_eq!(arr("{253,210,3;1,30,231}").order().unwrap(), 2048);
        assert_eq!(arr("{12,10,3;1,1,8}").sphere_sizes().unwrap(), vec![1, 12, 120, 45]);
        assert!(matches!(arr("{5,4;1,3}").sphere_sizes(), Err(Error::InconsistentArray(_))));
    }

    #[test]
    fn girth_rule() {
        assert_eq!(arr("{4,3,3;1,1,2}").girth(), Some(6));
        assert_eq!(arr("{2,1,1;1,1,1}").girth(), Some(7));
        assert_eq!(arr("{22,21,20;1,2,6}").girth(), Some(4));
        assert_eq!(arr("{24,22,20;1,2,12}").girth(), Some(3));
        assert_eq!(arr("{1;1}").girth(), None);
    }

    #[test]
    fn quotient_arrays() {
        assert_eq!(antipodal_quotient_array(4, 2, 2).unwrap().to_string(), "{3,2,1;1,2,3}");
        let a = antipodal_quotient_array(7, 2, 3).unwrap();
        assert_eq!(a.sphere_sizes().unwrap(), vec![1, 6, 6, 1]);
        assert_eq!(antipodal_quotient_array(3, 2, 1).unwrap().to_string(), "{2,1,1;1,1,2}");
        assert!(antipodal_quotient_array(2, 2, 1).is_err());
    }

    #[test]
    fn divisibility() {
        let syl = arr("{5,4,2;1,1,4}");
        assert!(geodesic_divisibility(&syl, 3, 40).unwrap());
        assert!(geodesic_divisibility(&syl, 1, 5).unwrap());
        assert!(!geodesic_divisibility(&arr("{6,5,1;1,1,6}"), 3, 20).unwrap());
    }

    #[test]
    fn path_is_not_distance_regular() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(intersection_array(&p3), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn cycle_arrays() {
        let c6 = Graph::from_fn(6, |u, v| (u + 1) % 6 == v || (v + 1) % 6 == u);
        let a = intersection_array(&c6).unwrap();
        assert_eq!(a.to_string(), "{2,1,1;1,1,2}");
        let imp = classify_imprimitive(&c6, &a);
        assert!(imp.bipartite);
        assert_eq!(imp.antipodal_r(), Some(2));
    }
}
