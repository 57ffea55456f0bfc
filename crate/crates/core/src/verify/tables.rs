//! Desk-scale distance-transitive graphs of diameter 3: construction,
//! intersection arrays, girth, full automorphism groups and the girth
//! classes of the geodesic-transitive ones.

use std::time::Instant;

use crate::drg::{girth_from_array, intersection_array};
use crate::families::{build, FamilySpec};
use crate::graph::{components, diameter, girth, Graph};
use crate::report::{Case, Provenance, Report, Status};
use crate::transitivity::{automorphism_group, is_distance_transitive, is_s_geodesic_transitive, DEFAULT_BUDGET};

use super::Options;

const LOCATION: &str = "diameter-3-graphs";
const GIRTH_CLASSES: &str = "geodesic-transitive-girth-classes";

/// One graph of the desk subset.
pub struct Entry {
    pub spec: &'static str,
    pub array: &'static str,
    pub aut_order: u128,
    /// Girth class among geodesic-transitive graphs of diameter 3, when the
    /// girth is 5, 6 or 7.
    pub girth_class: Option<u64>,
}

const fn e(spec: &'static str, array: &'static str, aut_order: u128, girth_class: Option<u64>) -> Entry {
    Entry { spec, array, aut_order, girth_class }
}

pub const ENTRIES: [Entry; 17] = [
    e("cycle:n=6", "{2,1,1;1,1,2}", 12, Some(6)),
    e("cycle:n=7", "{2,1,1;1,1,1}", 14, Some(7)),
    e("hamming:d=3,n=2", "{3,2,1;1,2,3}", 48, None),
    e("hamming:d=3,n=3", "{6,4,2;1,2,3}", 1296, None),
    e("hamming:d=3,n=4", "{9,6,3;1,2,3}", 82944, None),
    e("johnson:n=6,k=3", "{9,4,1;1,4,9}", 1440, None),
    e("johnson:n=7,k=3", "{12,6,2;1,4,9}", 5040, None),
    e("johnson:n=8,k=3", "{15,8,3;1,4,9}", 40320, None),
    e("odd:k=3", "{4,3,3;1,1,2}", 5040, Some(6)),
    e("pg-incidence:q=2", "{3,2,2;1,1,3}", 336, Some(6)),
    e("pg-incidence:q=3", "{4,3,3;1,1,4}", 11232, Some(6)),
    e("pg-incidence:q=4", "{5,4,4;1,1,5}", 241920, Some(6)),
    e("cube:d=3", "{3,2,1;1,2,3}", 48, None),
    e("g42", "{6,5,1;1,1,6}", 5040, Some(5)),
    e("sylvester", "{5,4,2;1,1,4}", 1440, Some(5)),
    e("perkel", "{6,5,2;1,1,3}", 3420, Some(5)),
    e("m23", "{15,14,12;1,1,9}", 10200960, Some(5)),
];

fn entry_cases(r: &mut Report, entry: &Entry) {
    let start = Instant::now();
    let spec: FamilySpec = match entry.spec.parse() {
        Ok(s) => s,
        Err(err) => return r.push(Case::error(format!("{}/build", entry.spec), LOCATION, err)),
    };
    let id = spec.to_string();
    let g: Graph = match build(&spec) {
        Ok(b) => b.graph,
        Err(err) => return r.push(Case::error(format!("{id}/build"), LOCATION, err)),
    };
    let connected = components(&g).len() == 1;
    r.push(Case::new(format!("{id}/connected"), LOCATION).computed(connected).detail(format!("{} vertices", g.n())).check(connected, Status::Fail));
    match diameter(&g) {
        Ok(d) => r.push(Case::new(format!("{id}/diameter"), LOCATION).computed(d).expected(3, Provenance::Published).compare()),
        Err(err) => r.push(Case::error(format!("{id}/diameter"), LOCATION, err)),
    }
    let a = match intersection_array(&g) {
        Ok(a) => a,
        Err(err) => return r.push(Case::error(format!("{id}/array"), LOCATION, err)),
    };
    r.push(Case::new(format!("{id}/array"), LOCATION).computed(a.to_string()).expected(entry.array, Provenance::Elementary).compare());
    let gi = girth(&g).map(|x| x as u64);
    let ga = girth_from_array(&a);
    r.push(Case::new(format!("{id}/girth"), LOCATION).computed(gi).expected(ga, Provenance::Derived).detail("girth read off the intersection array").compare());
    if let Some(class) = entry.girth_class {
        r.push(Case::new(format!("{id}/girth-class"), GIRTH_CLASSES).computed(gi).expected(Some(class), Provenance::Published).compare());
    }
    let aut = match automorphism_group(&g, DEFAULT_BUDGET) {
        Ok(x) => x,
        Err(err) => return r.push(Case::error(format!("{id}/aut-order"), LOCATION, err)),
    };
    r.push(
        Case::new(format!("{id}/aut-order"), LOCATION)
            .computed(aut.order.to_string())
            .expected(entry.aut_order.to_string(), Provenance::Elementary)
            .compare(),
    );
    let group = aut.group(g.n());
    match is_distance_transitive(&g, &group) {
        Ok(t) => r.push(
            Case::new(format!("{id}/distance-transitive"), LOCATION)
                .computed(t.transitive)
                .expected(true, Provenance::Published)
                .detail(t.witness.map(|w| format!("pairs in different orbits: {w:?}")).unwrap_or_default())
                .compare(),
        ),
        Err(err) => r.push(Case::error(format!("{id}/distance-transitive"), LOCATION, err)),
    }
    if entry.girth_class.is_some() {
        match is_s_geodesic_transitive(&g, &group, 3) {
            Ok(t) => r.push(
                Case::new(format!("{id}/geodesic-transitive"), GIRTH_CLASSES)
                    .computed(t.transitive)
                    .expected(true, Provenance::Published)
                    .compare()
                    .runtime(start),
            ),
            Err(err) => r.push(Case::error(format!("{id}/geodesic-transitive"), GIRTH_CLASSES, err)),
        }
    }
}

pub fn run(_opts: &Options) -> Report {
    let mut r = Report::new("tables");
    for entry in &ENTRIES {
        entry_cases(&mut r, entry);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_subset() {
        let r = run(&Options::default());
        assert!(!r.has_fail(), "{r}");
        assert_eq!(r.count(Status::Warn), 0, "{r}");
    }
}
