//! Seeded property checks over a corpus of distance-regular graphs and
//! permutation actions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{is_cover, quotient, VertexPartition};
use crate::drg::{classify_imprimitive, girth_from_array, intersection_array, IntersectionArray};
use crate::error::Result;
use crate::families::{build, golay, psl2_19, FamilySpec, Golay};
use crate::graph::{components, distance_i_graph, distance_partition, girth, Graph};
use crate::group::{is_primitive, orbitals, PermGroup};
use crate::perm::Permutation;
use crate::report::{Case, Report, Status};

use super::Options;

/// Family specs beyond the diameter-3 subset.
const EXTRA: [&str; 11] = [
    "hoffman-singleton",
    "dual-polar:q=2",
    "hamming:d=4,n=2",
    "johnson:n=8,k=4",
    "odd:k=4",
    "grassmann:n=4,k=2,q=2",
    "pg-incidence:n=3,q=2",
    "cycle:n=8",
    "multipartite:m=3,b=2",
    "cube:d=4",
    "hamming:d=2,n=5",
];

/// Largest action degree for the primitivity check.
pub const ACTION_DEGREE_CAP: usize = 500;

pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
    pub group: Option<PermGroup>,
}

pub fn corpus() -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    let specs = super::tables::ENTRIES.iter().map(|e| e.spec).chain(EXTRA);
    for s in specs {
        let spec: FamilySpec = s.parse()?;
        let b = build(&spec)?;
        out.push(CorpusGraph { name: spec.to_string(), graph: b.graph, group: b.group });
    }
    let c12 = golay(Golay::C12)?;
    out.push(CorpusGraph { name: Golay::C12.to_string(), graph: c12.graph, group: c12.group });
    Ok(out)
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// `a_i + b_i + c_i = k`, `k_i b_i = k_{i+1} c_{i+1}`, spheres summing to
/// `n`, and sphere sizes at sampled vertices.
fn array_identity(g: &Graph, a: &IntersectionArray, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let k = a.valency();
    let d = a.diameter();
    for i in 0..=d {
        let (b, c) = (if i < d { a.b(i) } else { 0 }, if i > 0 { a.c(i) } else { 0 });
        if a.a(i) + b + c != k {
            return Err(format!("a_{i}+b_{i}+c_{i} != {k}"));
        }
    }
    let spheres = a.sphere_sizes().map_err(|e| e.to_string())?;
    for i in 0..d {
        if spheres[i] * a.b(i) != spheres[i + 1] * a.c(i + 1) {
            return Err(format!("k_{i} b_{i} != k_{} c_{}", i + 1, i + 1));
        }
    }
    if spheres.iter().sum::<u64>() != g.n() as u64 {
        return Err(format!("spheres {spheres:?} do not sum to {}", g.n()));
    }
    for _ in 0..3 {
        let u = rng.gen_range(0..g.n());
        let sizes: Vec<u64> = distance_partition(g, u).map_err(|e| e.to_string())?.sizes().into_iter().map(|x| x as u64).collect();
        if sizes != spheres {
            return Err(format!("vertex {u} has spheres {sizes:?}, array gives {spheres:?}"));
        }
    }
    Ok(())
}

fn graph_properties(r: &mut Report, c: &CorpusGraph, rng: &mut ChaCha8Rng) {
    let g = &c.graph;
    let a = match intersection_array(g) {
        Ok(a) => a,
        Err(e) => return r.push(Case::skipped(format!("{}/array-identity", c.name), "distance-regular-arrays", e.to_string())),
    };
    let id = array_identity(g, &a, rng);
    r.push(
        Case::new(format!("{}/array-identity", c.name), "distance-regular-arrays")
            .computed(a.to_string())
            .detail(id.clone().err().unwrap_or_default())
            .check(id.is_ok(), Status::Fail),
    );
    let (gi, ga) = (girth(g).map(|x| x as u64), girth_from_array(&a));
    r.push(Case::new(format!("{}/girth", c.name), "girth-from-array").computed([gi, ga]).check(gi == ga, Status::Fail));
    let relabelled = g.relabel(&random_permutation(g.n(), rng));
    let same = intersection_array(&relabelled).map(|b| b == a).unwrap_or(false) && girth(&relabelled) == girth(g);
    r.push(Case::new(format!("{}/relabel", c.name), "distance-regular-arrays").computed(same).check(same, Status::Fail));
    let imp = classify_imprimitive(g, &a);
    if imp.bipartite {
        let parts = distance_i_graph(g, 2).map(|h| components(&h).len());
        match parts {
            Ok(p) => r.push(Case::new(format!("{}/distance2-components", c.name), "bipartite-halves").computed(p).check(p == 2, Status::Fail)),
            Err(e) => r.push(Case::error(format!("{}/distance2-components", c.name), "bipartite-halves", e)),
        }
    }
    if let (Some(classes), 3) = (imp.antipodal_classes, a.diameter()) {
        let checked = VertexPartition::from_blocks(g.n(), classes).and_then(|p| Ok((is_cover(g, &p)?.is_ok(), quotient(g, &p)?)));
        match checked {
            Ok((cover, q)) => {
                let complete = q.valency() == Some(q.n() - 1);
                r.push(
                    Case::new(format!("{}/antipodal-cover", c.name), "antipodal-quotient")
                        .computed(serde_json::json!({"cover": cover, "complete": complete, "blocks": q.n()}))
                        .check(cover && complete, Status::Fail),
                );
            }
            Err(e) => r.push(Case::error(format!("{}/antipodal-cover", c.name), "antipodal-quotient", e)),
        }
    }
}

/// Connected components of the undirected orbital graph of suborbit `i`.
fn orbital_components(group: &PermGroup, points: &[usize]) -> usize {
    let chain = group.chain_with_base(&[0]);
    let level = &chain.levels()[0];
    let n = group.degree();
    let mut edges = Vec::new();
    for x in 0..n {
        let u = level.transversal(x).expect("transitive");
        edges.extend(points.iter().map(|&y| (x.min(u.image(y)), x.max(u.image(y)))));
    }
    Graph::from_edges(n, edges).map(|g| components(&g).len()).unwrap_or(0)
}

fn primitivity_case(r: &mut Report, name: &str, group: &PermGroup) {
    let loc = "primitive-connected";
    let id = format!("{name}/primitive-iff-connected");
    if group.degree() > ACTION_DEGREE_CAP || !group.is_transitive() {
        return;
    }
    let checked = is_primitive(group).and_then(|p| {
        let orb = orbitals(group, 0)?;
        let connected = orb.suborbits.iter().skip(1).all(|s| orbital_components(group, &s.points) == 1);
        Ok((p, connected, orb.rank()))
    });
    match checked {
        Ok((p, conn, rank)) => r.push(
            Case::new(id, loc)
                .computed(serde_json::json!({"primitive": p, "orbital_graphs_connected": conn, "rank": rank}))
                .check(p == conn, Status::Fail),
        ),
        Err(e) => r.push(Case::error(id, loc, e)),
    }
}

fn extra_actions(seed: u64) -> Vec<(String, PermGroup)> {
    let mut v: Vec<(String, PermGroup)> = Vec::new();
    for n in [6, 7, 8, 9, 10, 12] {
        v.push((format!("dihedral-{n}"), PermGroup::dihedral(n)));
        v.push((format!("cyclic-{n}"), PermGroup::cyclic(n)));
    }
    v.push(("symmetric-6".into(), PermGroup::symmetric(6)));
    v.push(("alternating-7".into(), PermGroup::alternating(7)));
    v.push(("psl2-19".into(), psl2_19()));
    let wreath = |m: usize, k: usize| {
        let n = m * k;
        let within = Permutation::from_images((0..n).map(|x| if x < m { (x + 1) % m } else { x }).collect()).expect("cycle");
        let swap = Permutation::from_images((0..n).map(|x| if x < m { x + m } else if x < 2 * m { x - m } else { x }).collect()).expect("swap");
        let across = Permutation::from_images((0..n).map(|x| (x + m) % n).collect()).expect("shift");
        PermGroup::new(n, vec![within, swap, across]).expect("degree n")
    };
    v.push(("wreath-3-3".into(), wreath(3, 3)));
    v.push(("wreath-2-4".into(), wreath(2, 4)));
    if let Ok(b) = crate::families::perkel(seed) {
        if let Some(g) = b.group {
            v.push(("perkel-action".into(), g));
        }
    }
    v
}

pub fn run(opts: &Options) -> Report {
    let mut r = Report::new("properties");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let corpus = match corpus() {
        Ok(c) => c,
        Err(e) => {
            r.push(Case::error("corpus", "distance-regular-arrays", e));
            return r;
        }
    };
    for c in &corpus {
        graph_properties(&mut r, c, &mut rng);
        if let Some(g) = &c.group {
            primitivity_case(&mut r, &c.name, g);
        }
    }
    for (name, g) in extra_actions(opts.seed) {
        primitivity_case(&mut r, &name, &g);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_suite() {
        let r = run(&Options { seed: 17, ..Default::default() });
        assert!(!r.has_fail(), "{r}");
        assert!(r.find("dihedral-9/primitive-iff-connected").is_some());
        assert!(r.find("cube:d=3/distance2-components").is_some());
        assert!(r.find("g42/antipodal-cover").is_some());
    }
}
