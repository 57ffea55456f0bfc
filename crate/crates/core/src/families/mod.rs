//! Constructors for the graph families and named graphs, each returned with
//! vertex labels and, where available, a vertex-transitive group of
//! automorphisms from the construction.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::actions::{general_linear_generators, subspace_maps, symplectic_transvections, SubspaceMap};
use crate::geom::linalg::{self, key_rows, subspace_key, Vector};
use crate::geom::Field;
use crate::graph::Graph;
use crate::group::{induced_action, PermGroup};

pub mod cayley;
pub mod named;
pub mod pack;

pub use cayley::{cayley, golay, golay_distance2, CayleySpec, Golay};
pub use named::{g42, hoffman_singleton, m23_graph, perkel, psl2_19, sylvester};
pub use pack::{load_pack_graph, read_manifest, write_pack, write_standard_pack, Manifest, PackEntry};

/// Largest vertex set a constructor will produce.
pub const VERTEX_CAP: usize = 5000;

/// A constructed graph.
#[derive(Clone, Debug)]
pub struct Built {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    /// A vertex-transitive group of automorphisms from the construction.
    pub group: Option<PermGroup>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle,
    Hamming,
    Johnson,
    Odd,
    Multipartite,
    Cube,
    PgIncidence,
    Grassmann,
    DualPolar,
    HoffmanSingleton,
    G42,
    Sylvester,
    Perkel,
    M23,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Cycle,
        Family::Hamming,
        Family::Johnson,
        Family::Odd,
        Family::Multipartite,
        Family::Cube,
        Family::PgIncidence,
        Family::Grassmann,
        Family::DualPolar,
        Family::HoffmanSingleton,
        Family::G42,
        Family::Sylvester,
        Family::Perkel,
        Family::M23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Hamming => "hamming",
            Family::Johnson => "johnson",
            Family::Odd => "odd",
            Family::Multipartite => "multipartite",
            Family::Cube => "cube",
            Family::PgIncidence => "pg-incidence",
            Family::Grassmann => "grassmann",
            Family::DualPolar => "dual-polar",
            Family::HoffmanSingleton => "hoffman-singleton",
            Family::G42 => "g42",
            Family::Sylvester => "sylvester",
            Family::Perkel => "perkel",
            Family::M23 => "m23",
        }
    }

    /// Parameter names and defaults.
    pub fn parameters(self) -> &'static [(&'static str, Option<i64>)] {
        match self {
            Family::Cycle => &[("n", None)],
            Family::Hamming => &[("d", None), ("n", None)],
            Family::Johnson => &[("n", None), ("k", Some(3))],
            Family::Odd => &[("k", Some(3))],
            Family::Multipartite => &[("m", None), ("b", None)],
            Family::Cube => &[("d", Some(3))],
            Family::PgIncidence => &[("n", Some(2)), ("q", None)],
            Family::Grassmann => &[("n", None), ("k", Some(3)), ("q", Some(2))],
            Family::DualPolar => &[("q", None)],
            _ => &[],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let alias = match s.as_str() {
            "hs" => "hoffman-singleton",
            "m23-graph" => "m23",
            "incidence" | "pg" => "pg-incidence",
            "c3" | "symplectic-dual-polar" => "dual-polar",
            other => other,
        };
        Family::ALL
            .into_iter()
            .find(|f| f.name() == alias)
            .ok_or_else(|| Error::Unsupported(format!("unknown family `{s}`")))
    }
}

/// A family with integer parameters, written `hamming:d=3,n=4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, i64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[(&str, i64)]) -> Self {
        FamilySpec { family, params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect() }
    }

    /// Parses `d=3,n=4` as parameters of `family`.
    pub fn with_params(family: Family, params: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for kv in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Precondition(format!("bad parameter `{kv}`")))?;
            let v: i64 = v.trim().parse().map_err(|_| Error::Precondition(format!("bad parameter value `{kv}`")))?;
            map.insert(k.trim().to_string(), v);
        }
        Ok(FamilySpec { family, params: map })
    }

    fn get(&self, key: &str) -> Result<i64> {
        if let Some(&v) = self.params.get(key) {
            return Ok(v);
        }
        self.family
            .parameters()
            .iter()
            .find(|(k, _)| *k == key)
            .and_then(|(_, d)| *d)
            .ok_or_else(|| Error::Precondition(format!("family {} needs parameter `{key}`", self.family)))
    }

    fn get_usize(&self, key: &str, min: i64) -> Result<usize> {
        let v = self.get(key)?;
        if v < min {
            return Err(Error::Unsupported(format!("{} needs {key} >= {min}, got {v}", self.family)));
        }
        Ok(v as usize)
    }

    fn check_known(&self) -> Result<()> {
        let known = self.family.parameters();
        match self.params.keys().find(|k| !known.iter().any(|(n, _)| n == k)) {
            Some(k) => Err(Error::Precondition(format!("family {} has no parameter `{k}`", self.family))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if ps.is_empty() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}:{}", self.family, ps.join(","))
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        FamilySpec::with_params(name.parse()?, params)
    }
}

type Map<L> = Box<dyn Fn(&L) -> L>;

/// The orbit of `seed` under `gens` as vertex set, with the induced group.
fn orbit_family<L: Clone + Eq + Hash>(
    name: String,
    seed: L,
    gens: Vec<Map<L>>,
    adjacent: impl Fn(&L, &L) -> bool,
    label: impl Fn(&L) -> String,
) -> Result<Built> {
    let table = induced_action(&gens, vec![seed], |l, g| g(l), VERTEX_CAP)?;
    let labels = &table.labels;
    let graph = Graph::from_fn(labels.len(), |i, j| adjacent(&labels[i], &labels[j]));
    let group = table.group();
    Ok(Built { name, graph, labels: labels.iter().map(label).collect(), group: Some(group) })
}

fn cap_check(family: Family, count: f64) -> Result<()> {
    if count > VERTEX_CAP as f64 {
        return Err(Error::Unsupported(format!("{family} would have {count} vertices, cap {VERTEX_CAP}")));
    }
    Ok(())
}

fn cycle(n: usize) -> Result<Built> {
    cap_check(Family::Cycle, n as f64)?;
    let graph = Graph::from_fn(n, |a, b| (a + 1) % n == b || (b + 1) % n == a);
    let labels = (0..n).map(|x| x.to_string()).collect();
    Ok(Built { name: format!("C{n}"), graph, labels, group: Some(PermGroup::dihedral(n)) })
}

/// Generators of `S_n` acting on sorted tuples of symbols.
fn symmetric_on_sets(n: usize) -> Vec<Map<Vec<u32>>> {
    let map = |f: Box<dyn Fn(u32) -> u32>| -> Map<Vec<u32>> {
        Box::new(move |s: &Vec<u32>| {
            let mut t: Vec<u32> = s.iter().map(|&x| f(x)).collect();
            t.sort_unstable();
            t
        })
    };
    let n32 = n as u32;
    vec![map(Box::new(move |x| (x + 1) % n32)), map(Box::new(|x| if x < 2 { 1 - x } else { x }))]
}

fn subset_label(s: &[u32]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

fn johnson(n: usize, k: usize) -> Result<Built> {
    if k == 0 || 2 * k > n {
        return Err(Error::Unsupported(format!("J({n},{k}) needs 1 <= k <= n/2")));
    }
    cap_check(Family::Johnson, binomial(n, k))?;
    orbit_family(
        format!("J({n},{k})"),
        (0..k as u32).collect(),
        symmetric_on_sets(n),
        move |a, b| intersection_size(a, b) == k - 1,
        |s| subset_label(s),
    )
}

/// `k`-subsets of a `(2k+1)`-set, adjacent when disjoint.
fn odd(k: usize) -> Result<Built> {
    let n = 2 * k + 1;
    cap_check(Family::Odd, binomial(n, k))?;
    orbit_family(format!("O{k}"), (0..k as u32).collect(), symmetric_on_sets(n), |a, b| intersection_size(a, b) == 0, |s| subset_label(s))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn hamming(d: usize, n: usize, name: String) -> Result<Built> {
    cap_check(Family::Hamming, (n as f64).powi(d as i32))?;
    let gens: Vec<Map<Vec<u8>>> = vec![
        Box::new(move |w: &Vec<u8>| {
            let mut v = w.clone();
            v[0] = ((w[0] as usize + 1) % n) as u8;
            v
        }),
        Box::new(|w: &Vec<u8>| {
            let mut v = w.clone();
            v[0] = match w[0] {
                0 => 1,
                1 => 0,
                x => x,
            };
            v
        }),
        Box::new(|w: &Vec<u8>| {
            let mut v = w.clone();
            v.rotate_left(1);
            v
        }),
        Box::new(|w: &Vec<u8>| {
            let mut v = w.clone();
            if v.len() > 1 {
                v.swap(0, 1);
            }
            v
        }),
    ];
    orbit_family(
        name,
        vec![0u8; d],
        gens,
        |a, b| a.iter().zip(b).filter(|(x, y)| x != y).count() == 1,
        |w| w.iter().map(|x| x.to_string()).collect(),
    )
}

/// `K_{m[b]}`: `m` parts of size `b`, vertices `(part, index)`.
fn multipartite(m: usize, b: usize) -> Result<Built> {
    cap_check(Family::Multipartite, (m * b) as f64)?;
    let gens: Vec<Map<(usize, usize)>> = vec![
        Box::new(move |&(p, i)| ((p + 1) % m, i)),
        Box::new(|&(p, i)| (if p < 2 { 1 - p } else { p }, i)),
        Box::new(move |&(p, i)| (p, if p == 0 { (i + 1) % b } else { i })),
        Box::new(|&(p, i)| (p, if p == 0 && i < 2 { 1 - i } else { i })),
    ];
    orbit_family(format!("K_{m}[{b}]"), (0, 0), gens, |a, c| a.0 != c.0, |(p, i)| format!("{p}.{i}"))
}

fn subspace_family(
    name: String,
    field: &Field,
    gens: Vec<SubspaceMap>,
    seeds: Vec<Vec<Vector>>,
    n: usize,
    adjacent: impl Fn(&Vector, &Vector) -> bool,
) -> Result<Built> {
    let seeds: Vec<Vector> = seeds.iter().map(|rows| subspace_key(field, rows)).collect();
    let f = field.clone();
    let table = induced_action(&gens, seeds, |key, g| g.apply(&f, &key_rows(key, n)), VERTEX_CAP)?;
    let labels = &table.labels;
    let graph = Graph::from_fn(labels.len(), |i, j| adjacent(&labels[i], &labels[j]));
    let fmt_key = |key: &Vector| {
        key_rows(key, n)
            .iter()
            .map(|r| r.iter().map(|&c| field.format(c)).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("|")
    };
    Ok(Built { name, graph, labels: labels.iter().map(fmt_key).collect(), group: Some(table.group()) })
}

fn unit_rows(n: usize, k: usize) -> Vec<Vector> {
    (0..k)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()
}

fn joint_rank(f: &Field, n: usize, a: &Vector, b: &Vector) -> usize {
    let mut rows = key_rows(a, n);
    rows.extend(key_rows(b, n));
    linalg::rank(f, &rows)
}

/// Points and hyperplanes of PG(n,q), adjacent when incident.
fn pg_incidence(n: usize, q: usize) -> Result<Built> {
    let field = Field::gf(q)?;
    let dim = n + 1;
    let points = ((q as f64).powi(dim as i32) - 1.0) / (q as f64 - 1.0);
    cap_check(Family::PgIncidence, 2.0 * points)?;
    let mut gens = subspace_maps(general_linear_generators(&field, dim));
    gens.push(SubspaceMap::Polarity);
    let f = field.clone();
    subspace_family(format!("B(PG({n},{q}))"), &field, gens, vec![unit_rows(dim, 1)], dim, move |a, b| {
        let (ra, rb) = (a.len() / dim, b.len() / dim);
        ra != rb && joint_rank(&f, dim, a, b) == ra.max(rb)
    })
}

/// `k`-subspaces of GF(q)^n, adjacent when meeting in dimension `k-1`.
fn grassmann(n: usize, k: usize, q: usize) -> Result<Built> {
    let field = Field::gf(q)?;
    if k == 0 || k >= n {
        return Err(Error::Unsupported(format!("Grassmann needs 0 < k < n, got n={n}, k={k}")));
    }
    let count = crate::geom::formulas::gaussian_binomial(n as u32, k as u32, q as i128)? as f64;
    cap_check(Family::Grassmann, count)?;
    let gens = subspace_maps(general_linear_generators(&field, n));
    let f = field.clone();
    subspace_family(format!("J_{q}({n},{k})"), &field, gens, vec![unit_rows(n, k)], n, move |a, b| joint_rank(&f, n, a, b) == k + 1)
}

/// Maximal totally isotropic subspaces of the symplectic space GF(q)^6,
/// adjacent when meeting in a plane.
fn dual_polar(q: usize) -> Result<Built> {
    if q > 3 {
        return Err(Error::Unsupported(format!("symplectic dual polar graph supported for q <= 3, got {q}")));
    }
    let field = Field::gf(q)?;
    let gens = subspace_maps(symplectic_transvections(&field, 3, 8, 1));
    let f = field.clone();
    subspace_family(format!("C3({q})"), &field, gens, vec![unit_rows(6, 3)], 6, move |a, b| joint_rank(&f, 6, a, b) == 4)
}

/// Builds a family graph.
pub fn build(spec: &FamilySpec) -> Result<Built> {
    spec.check_known()?;
    match spec.family {
        Family::Cycle => cycle(spec.get_usize("n", 3)?),
        Family::Hamming => {
            let (d, n) = (spec.get_usize("d", 1)?, spec.get_usize("n", 2)?);
            hamming(d, n, format!("H({d},{n})"))
        }
        Family::Johnson => johnson(spec.get_usize("n", 2)?, spec.get_usize("k", 1)?),
        Family::Odd => odd(spec.get_usize("k", 1)?),
        Family::Multipartite => multipartite(spec.get_usize("m", 2)?, spec.get_usize("b", 1)?),
        Family::Cube => {
            let d = spec.get_usize("d", 1)?;
            hamming(d, 2, format!("Q{d}"))
        }
        Family::PgIncidence => {
            let n = spec.get_usize("n", 2)?;
            if n > 3 {
                return Err(Error::Unsupported(format!("pg-incidence supports n = 2 or 3, got {n}")));
            }
            pg_incidence(n, spec.get_usize("q", 2)?)
        }
        Family::Grassmann => grassmann(spec.get_usize("n", 2)?, spec.get_usize("k", 1)?, spec.get_usize("q", 2)?),
        Family::DualPolar => dual_polar(spec.get_usize("q", 2)?),
        Family::HoffmanSingleton => Ok(hoffman_singleton()),
        Family::G42 => Ok(g42()),
        Family::Sylvester => Ok(sylvester()),
        Family::Perkel => perkel(crate::group::seed_from_env()),
        Family::M23 => Ok(m23_graph()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::intersection_array;
    use crate::graph::{diameter, girth};

    fn b(s: &str) -> Built {
        build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_families() {
        let h = b("hamming:d=3,n=3");
        assert_eq!((h.graph.n(), h.graph.valency(), diameter(&h.graph).unwrap()), (27, Some(6), 3));
        let o = b("odd:k=3");
        assert_eq!(intersection_array(&o.graph).unwrap().to_string(), "{4,3,3;1,1,2}");
        let heawood = b("pg-incidence:q=2");
        assert_eq!(intersection_array(&heawood.graph).unwrap().to_string(), "{3,2,2;1,1,3}");
        assert_eq!(girth(&heawood.graph), Some(6));
        assert_eq!(b("johnson:n=7").graph.n(), 35);
        assert_eq!(b("multipartite:m=3,b=2").graph.valency(), Some(4));
        assert_eq!(b("cube").graph.n(), 8);
    }

    #[test]
    fn subspace_families() {
        let c = b("dual-polar:q=2");
        assert_eq!(c.graph.n(), 135);
        assert_eq!(c.graph.valency(), Some(14));
        let g = b("grassmann:n=6,k=3,q=2");
        assert_eq!(g.graph.n(), 1395);
        assert_eq!(g.graph.valency(), Some(98));
        let p3 = b("pg-incidence:n=3,q=2");
        assert_eq!((p3.graph.n(), p3.graph.valency()), (30, Some(7)));
    }

    #[test]
    fn natural_groups_are_automorphisms() {
        for s in ["cycle:n=7", "hamming:d=3,n=4", "johnson:n=8", "pg-incidence:q=3", "multipartite:m=4,b=3"] {
            let x = b(s);
            let g = x.group.unwrap();
            assert!(g.generators().iter().all(|p| x.graph.is_automorphism(p)), "{s}");
            assert!(g.is_transitive(), "{s}");
        }
    }

    #[test]
    fn spec_round_trip() {
        let s: FamilySpec = "hamming:d=3,n=4".parse().unwrap();
        assert_eq!(s.to_string(), "hamming:d=3,n=4");
        assert!(build(&"hamming:d=3".parse().unwrap()).is_err());
        assert!(build(&"cycle:n=7,z=1".parse().unwrap()).is_err());
    }
}
