//! Coset graphs of the Golay codes and their distance-2 graphs.

use std::time::Instant;

use crate::drg::intersection_array;
use crate::error::Error;
use crate::families::{golay, golay_distance2, load_pack_graph, Golay};
use crate::graph::{diameter, Graph};
use crate::report::{Case, Provenance, Report, Status};
use crate::transitivity::{are_isomorphic, automorphism_group, is_distance_transitive, is_s_geodesic_transitive, DEFAULT_BUDGET};

use super::Options;

struct Expect {
    which: Golay,
    array: &'static str,
    aut: u128,
    /// Array of the distance-2 graph, or `None` when it is not distance
    /// transitive.
    distance2: Option<&'static str>,
}

const EXPECT: [Expect; 3] = [
    Expect { which: Golay::C12, array: "{24,22,20;1,2,12}", aut: 138_568_320, distance2: None },
    Expect { which: Golay::C22, array: "{22,21,20;1,2,6}", aut: 908_328_960, distance2: Some("{231,160,6;1,48,210}") },
    Expect { which: Golay::C23, array: "{23,22,21;1,2,3}", aut: 20_891_566_080, distance2: Some("{253,210,3;1,30,231}") },
];

fn location(w: Golay) -> String {
    w.to_string()
}

/// Array, full automorphism group, distance and 3-geodesic transitivity.
fn graph_cases(r: &mut Report, prefix: &str, loc: &str, g: &Graph, array: Option<&str>, aut_order: u128) {
    let start = Instant::now();
    match intersection_array(g) {
        Ok(a) => {
            let c = Case::new(format!("{prefix}/array"), loc).computed(a.to_string());
            r.push(match array {
                Some(e) => c.expected(e, Provenance::Published).compare(),
                None => c.status(Status::Fail).detail("expected not distance-regular"),
            });
        }
        Err(Error::NotDistanceRegular { u, v, i, detail }) => {
            let c = Case::new(format!("{prefix}/array"), loc)
                .computed("not distance-regular")
                .detail(format!("vertices {u},{v} at distance {i}: {detail}"));
            r.push(match array {
                Some(e) => c.expected(e, Provenance::Published).compare(),
                None => c,
            });
        }
        Err(e) => r.push(Case::error(format!("{prefix}/array"), loc, e)),
    }
    let aut = match automorphism_group(g, DEFAULT_BUDGET) {
        Ok(a) => a,
        Err(e) => return r.push(Case::error(format!("{prefix}/aut-order"), loc, e)),
    };
    r.push(
        Case::new(format!("{prefix}/aut-order"), loc)
            .computed(aut.order.to_string())
            .expected(aut_order.to_string(), Provenance::Published)
            .compare(),
    );
    let group = aut.group(g.n());
    let dt = array.is_some();
    match is_distance_transitive(g, &group) {
        Ok(t) => r.push(
            Case::new(format!("{prefix}/distance-transitive"), loc)
                .computed(t.transitive)
                .expected(dt, Provenance::Published)
                .detail(t.witness.map(|w| format!("pairs in different orbits: {w:?}")).unwrap_or_default())
                .compare(),
        ),
        Err(e) => r.push(Case::error(format!("{prefix}/distance-transitive"), loc, e)),
    }
    if dt {
        let d = diameter(g).unwrap_or(0);
        match is_s_geodesic_transitive(g, &group, d) {
            Ok(t) => r.push(
                Case::new(format!("{prefix}/geodesic-transitive"), loc)
                    .computed(t.transitive)
                    .expected(true, Provenance::Published)
                    .detail(format!("{d}-geodesics"))
                    .compare()
                    .runtime(start),
            ),
            Err(e) => r.push(Case::error(format!("{prefix}/geodesic-transitive"), loc, e)),
        }
    }
}

fn pack_case(r: &mut Report, opts: &Options, built: &Graph) {
    let loc = location(Golay::C23);
    let Some(dir) = &opts.data_pack else {
        return r.push(Case::skipped("golay-c23/data-pack", loc, "no data pack given; graph built from the code"));
    };
    match load_pack_graph(dir, "golay-c23") {
        Ok((g, _)) => match are_isomorphic(&g, built, DEFAULT_BUDGET) {
            Ok(iso) => r.push(Case::new("golay-c23/data-pack", loc).computed(iso).detail("pack graph isomorphic to the constructed graph").check(iso, Status::Fail)),
            Err(e) => r.push(Case::error("golay-c23/data-pack", loc, e)),
        },
        Err(e) => r.push(Case::error("golay-c23/data-pack", loc, e)),
    }
}

pub fn run(opts: &Options) -> Report {
    let mut r = Report::new("golay");
    for e in &EXPECT {
        let loc = location(e.which);
        let start = Instant::now();
        let g = match golay(e.which) {
            Ok(b) => b.graph,
            Err(err) => {
                r.push(Case::error(format!("{}/build", e.which), loc, err));
                continue;
            }
        };
        r.push(Case::new(format!("{}/order", e.which), &loc).computed(g.n()).detail(format!("valency {:?}", g.valency())).runtime(start));
        graph_cases(&mut r, &e.which.to_string(), &loc, &g, Some(e.array), e.aut);
        if e.which == Golay::C23 {
            pack_case(&mut r, opts, &g);
        }
        match golay_distance2(e.which) {
            Ok(d2) => graph_cases(&mut r, &format!("{}/distance2", e.which), &loc, &d2, e.distance2, e.aut),
            Err(err) => r.push(Case::error(format!("{}/distance2", e.which), loc, err)),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_suite() {
        let r = run(&Options::default());
        assert!(!r.has_fail(), "{r}");
        assert_eq!(r.find("golay-c12/distance2/distance-transitive").unwrap().status, Status::Pass);
        assert_eq!(r.find("golay-c22/distance2/array").unwrap().status, Status::Pass);
    }
}
