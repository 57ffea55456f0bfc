//! Re-evaluation of the explicit vectors used to rule out diameter-3
//! orbital graphs on non-singular points: every printed form value,
//! every claimed 2-geodesic and every claimed (non-)degenerate span.

use std::collections::HashMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{Case, Provenance, Report, Status};

use super::classify::{geometric_orbital_graph, Classifier};
use super::field::Elem;
use super::linalg::{self, all_vectors, Vector};
use super::space::{enumerate_points, FormedSpace, PointSet, SpaceSpec};

/// Point sets up to this size get an explicit orbital graph; larger ones
/// use the defining adjacency predicate.
const EXPLICIT_GRAPH_LIMIT: usize = 2000;

struct Block<'a> {
    report: &'a mut Report,
    name: &'static str,
    space: FormedSpace,
    vectors: HashMap<&'static str, Vector>,
    graphs: HashMap<usize, (Graph, PointSet)>,
    explicit: bool,
}

impl<'a> Block<'a> {
    fn new(report: &'a mut Report, name: &'static str, spec: &str, vectors: &[(&'static str, &str)]) -> Result<Self> {
        let space = FormedSpace::new(spec.parse::<SpaceSpec>()?)?;
        let mut map = HashMap::new();
        for &(k, s) in vectors {
            map.insert(k, space.parse_vector(s)?);
        }
        let explicit = enumerate_points(&space)?.len() <= EXPLICIT_GRAPH_LIMIT;
        Ok(Block { report, name, space, vectors: map, graphs: HashMap::new(), explicit })
    }

    fn v(&self, k: &str) -> &Vector {
        &self.vectors[k]
    }

    fn elem(&self, s: &str) -> Elem {
        let f = self.space.field();
        match s.strip_prefix('-') {
            Some(rest) => f.neg(f.parse(rest).expect("printed scalar parses")),
            None => f.parse(s).expect("printed scalar parses"),
        }
    }

    fn push(&mut self, what: String, computed: String, expected: String) {
        let c = Case::new(format!("{}/{}", self.name, what), self.name)
            .computed(computed)
            .expected(expected, Provenance::Published)
            .compare();
        self.report.push(c);
    }

    fn beta(&mut self, a: &str, b: &str, expected: &str) {
        let f = self.space.field();
        let got = f.format(self.space.beta(self.v(a), self.v(b)));
        let want = f.format(self.elem(expected));
        self.push(format!("beta({a},{b})"), got, want);
    }

    fn quad(&mut self, a: &str, expected: &str) {
        let f = self.space.field();
        let got = f.format(self.space.quadratic(self.v(a)));
        let want = f.format(self.elem(expected));
        self.push(format!("Q({a})"), got, want);
    }

    /// A basis-vector value, e.g. `β(d,t)` or `Q(t)`.
    fn basis_beta(&mut self, a: &str, b: &str, expected: &str) {
        let (x, y) = (self.space.parse_vector(a).unwrap(), self.space.parse_vector(b).unwrap());
        let f = self.space.field();
        let got = f.format(self.space.beta(&x, &y));
        let want = f.format(self.elem(expected));
        self.push(format!("beta({a},{b})"), got, want);
    }

    fn basis_quad(&mut self, a: &str, expected: &str) {
        let x = self.space.parse_vector(a).unwrap();
        let f = self.space.field();
        let got = f.format(self.space.quadratic(&x));
        let want = f.format(self.elem(expected));
        self.push(format!("Q({a})"), got, want);
    }

    /// `β(left, k a + l b) = α k^q + γ l^q` for every `k, l`.
    fn combination(&mut self, left: &str, a: &str, b: &str, alpha: &str, gamma: &str) {
        let f = self.space.field();
        let (al, ga) = (self.elem(alpha), self.elem(gamma));
        let mut bad = 0;
        for kl in all_vectors(f.order(), 2) {
            let (k, l) = (kl[0], kl[1]);
            let z = linalg::add(f, &linalg::scale(f, k, self.v(a)), &linalg::scale(f, l, self.v(b)));
            let want = f.add(f.mul(al, self.space.bar(k)), f.mul(ga, self.space.bar(l)));
            if self.space.beta(self.v(left), &z) != want {
                bad += 1;
            }
        }
        let total = f.order() * f.order();
        let c = Case::new(format!("{}/beta({left},k{a}+l{b})=({alpha})k^q+({gamma})l^q", self.name), self.name)
            .computed(total - bad)
            .expected(total, Provenance::Published)
            .compare();
        self.report.push(c);
    }

    /// The radical of `⟨a,b⟩` is `⟨k a + l b⟩` for the given `(k, l)`, or
    /// zero when `None`.
    fn radical(&mut self, a: &str, b: &str, gen: Option<(&str, &str)>) {
        let f = self.space.field();
        let (x, y) = (self.v(a).clone(), self.v(b).clone());
        let mut rad: Vec<Vector> = Vec::new();
        for kl in all_vectors(f.order(), 2).skip(1) {
            let z = linalg::add(f, &linalg::scale(f, kl[0], &x), &linalg::scale(f, kl[1], &y));
            if self.space.beta(&x, &z) == 0 && self.space.beta(&y, &z) == 0 {
                rad.push(linalg::projective_normal(f, &z));
            }
        }
        rad.sort();
        rad.dedup();
        let got: Vec<String> = rad.iter().map(|z| self.space.format_vector(z)).collect();
        let want: Vec<String> = match gen {
            Some((k, l)) => {
                let z = linalg::add(f, &linalg::scale(f, self.elem(k), &x), &linalg::scale(f, self.elem(l), &y));
                vec![self.space.format_vector(&linalg::projective_normal(f, &z))]
            }
            None => Vec::new(),
        };
        let nondeg = self.space.span_is_nondegenerate(&[x.clone(), y.clone()]);
        let decomposes = self.space.decomposes(&[x, y]);
        let c = Case::new(format!("{}/radical<{a},{b}>", self.name), self.name)
            .computed(&got)
            .expected(&want, Provenance::Published)
            .compare();
        let c = if nondeg != want.is_empty() || decomposes != want.is_empty() {
            c.status(Status::Fail).detail("degeneracy criteria disagree")
        } else {
            c.detail(if nondeg { "non-degenerate" } else { "degenerate" })
        };
        self.report.push(c);
    }

    fn class_of(&self, a: &str, b: &str) -> usize {
        Classifier::new(&self.space).expect("classified space").class(self.v(a), self.v(b))
    }

    /// The claimed class of `⟨b⟩` relative to `⟨a⟩`.
    fn class(&mut self, a: &str, b: &str, expected: usize) {
        let got = self.class_of(a, b);
        let c = Case::new(format!("{}/class({a},{b})", self.name), self.name)
            .computed(format!("Delta{got}"))
            .expected(format!("Delta{expected}"), Provenance::Published)
            .compare();
        self.report.push(c);
    }

    /// `(⟨a⟩,⟨b⟩,⟨c⟩)` is a 2-geodesic of the orbital graph of class `delta`.
    fn geodesic(&mut self, a: &str, b: &str, c: &str, delta: usize) -> Result<()> {
        let t = Instant::now();
        let ok_points = [a, b, c].iter().all(|k| self.space.normalize(self.v(k)).is_some());
        let (adj_ab, adj_bc, distance_two, how) = if self.explicit {
            if !self.graphs.contains_key(&delta) {
                self.graphs.insert(delta, geometric_orbital_graph(&self.space, delta)?);
            }
            let (g, pts) = &self.graphs[&delta];
            let idx = |k: &str| pts.index_of(&self.space, self.v(k)).ok_or_else(|| Error::Precondition(format!("{k} is not a point")));
            let (ia, ib, ic) = (idx(a)?, idx(b)?, idx(c)?);
            let dist = crate::graph::distances(g, ia);
            (g.has_edge(ia, ib), g.has_edge(ib, ic), dist[ic] == 2, format!("graph on {} points, d(a,c) = {}", g.n(), dist[ic]))
        } else {
            let f = self.space.field();
            let same = linalg::projective_normal(f, self.v(a)) == linalg::projective_normal(f, self.v(c));
            let adj = |x: &str, y: &str| self.class_of(x, y) == delta;
            (adj(a, b), adj(b, c), !same && !adj(a, c), "adjacency predicate".to_string())
        };
        let ok = ok_points && adj_ab && adj_bc && distance_two;
        let case = Case::new(format!("{}/2-geodesic({a},{b},{c})", self.name), self.name)
            .computed(ok)
            .expected(true, Provenance::Published)
            .compare()
            .detail(format!("Delta{delta} {how}"))
            .runtime(t);
        self.report.push(case);
        Ok(())
    }
}

fn unitary_q3(r: &mut Report) -> Result<()> {
    let vs = [
        ("u", "e1+2e2+f2"),
        ("v1", "(1+2x)e1+2e2+2xf1+(2+2x)f2"),
        ("v2", "xe1+e2+(2+2x)f1+2xf2"),
        ("w1", "2e1+xe2+(1+x)f1+2f2"),
        ("w2", "(1+x)e1+e2+xf1+(1+2x)f2"),
    ];
    let mut b = Block::new(r, "unitary-q3-orthogonal-adjacency", "unitary:n=4,q=3", &vs)?;
    b.beta("u", "u", "1");
    for (v, w) in [("v1", "w1"), ("v2", "w2")] {
        b.beta("u", v, "0");
        b.beta(v, w, "0");
        b.beta(v, v, "1");
        b.beta(w, w, "1");
    }
    b.beta("u", "w1", "2+x");
    b.beta("u", "w2", "x");
    b.combination("u", "u", "w1", "1", "2+x");
    b.combination("w1", "u", "w1", "2+2x", "1");
    b.combination("u", "u", "w2", "1", "x");
    b.combination("w2", "u", "w2", "2x", "1");
    b.radical("u", "w1", None);
    b.radical("u", "w2", Some(("1", "2x")));
    b.geodesic("u", "v1", "w1", 1)?;
    b.geodesic("u", "v2", "w2", 1)?;
    b.class("u", "w1", 3);
    b.class("u", "w2", 2);

    let vs = [("u", "e1+2e2+f2"), ("v", "(1+x)e1+e2+xf1+(1+2x)f2"), ("w", "(2+2x)e1+f1+f2")];
    let mut b = Block::new(r, "unitary-q3-degenerate-adjacency", "unitary:n=4,q=3", &vs)?;
    b.beta("v", "v", "1");
    b.beta("w", "w", "1");
    b.beta("v", "w", "1");
    b.beta("u", "w", "0");
    b.beta("u", "v", "x");
    b.combination("u", "u", "v", "1", "x");
    b.combination("v", "u", "v", "2x", "1");
    b.combination("v", "v", "w", "1", "1");
    b.combination("w", "v", "w", "1", "1");
    b.radical("u", "v", Some(("1", "2x")));
    b.radical("v", "w", Some(("1", "2")));
    b.geodesic("u", "v", "w", 2)?;
    b.class("u", "w", 1);

    let vs = [("u", "e1+2e2+f2"), ("v", "(2+2x)e1+(2+2x)f1+f2"), ("w", "(2+2x)e1+f1+f2")];
    let mut b = Block::new(r, "unitary-q3-nondegenerate-adjacency", "unitary:n=5,q=3", &vs)?;
    b.beta("v", "v", "1");
    b.beta("w", "w", "1");
    b.beta("u", "w", "0");
    b.beta("u", "v", "1+x");
    b.beta("v", "w", "1+2x");
    b.combination("u", "u", "v", "1", "1+x");
    b.combination("v", "u", "v", "1+2x", "1");
    b.combination("v", "v", "w", "1", "1+2x");
    b.combination("w", "v", "w", "1+x", "1");
    b.radical("u", "v", None);
    b.radical("v", "w", None);
    b.geodesic("u", "v", "w", 3)?;
    b.class("u", "w", 1);
    Ok(())
}

fn unitary_q4(r: &mut Report) -> Result<()> {
    let f16 = super::field::Field::gf(16)?;
    let l = f16.generator();
    let c = Case::new("unitary-q4/lambda^4+lambda", "unitary-q4-base-point")
        .computed(f16.format(f16.add(f16.pow(l, 4), l)))
        .expected("1", Provenance::Published)
        .compare();
    r.push(c);

    let vs = [("u", "e1+e2+λf1"), ("v", "λ^7e1+λ^14e2+λ^7f1+λ^8f2"), ("w", "λ^10e1+λ^4e2+λ^3f1+λ^11f2")];
    let mut b = Block::new(r, "unitary-q4-orthogonal-adjacency", "unitary:n=4,q=4", &vs)?;
    b.beta("u", "u", "1");
    b.beta("v", "v", "1");
    b.beta("w", "w", "1");
    b.beta("u", "v", "0");
    b.beta("v", "w", "0");
    b.beta("u", "w", "λ^3");
    b.geodesic("u", "v", "w", 1)?;
    b.class("u", "w", 2);

    let vs = [("u", "e1+e2+λf1"), ("v", "λ^6e1+e2+λ^5f1+λ^7f2"), ("w", "λ^12e1+λ^3e2+λ^4f1+f2")];
    let mut b = Block::new(r, "unitary-q4-cube-adjacency", "unitary:n=4,q=4", &vs)?;
    b.beta("v", "v", "1");
    b.beta("w", "w", "1");
    b.beta("u", "v", "λ^6");
    b.beta("v", "w", "λ^6");
    b.beta("u", "w", "0");
    b.geodesic("u", "v", "w", 2)?;
    b.class("u", "w", 1);
    Ok(())
}

fn orthogonal_odd(r: &mut Report) -> Result<()> {
    let vs = [
        ("u", "4e1+3e2+3e3+3f1+2f2+3d"),
        ("v", "3e1+e2+e3+4f1+2f3+d"),
        ("w", "3e1+e3+f1+f2+f3+4d"),
        ("x", "e1+4e2+2e3+2f1+4f2+3f3+4d"),
        ("y", "3e1+e2+e3+4f1+2f3+d"),
    ];
    let mut b = Block::new(r, "orthogonal-odd-q5", "orthogonal:n=7,q=5,type=circle", &vs)?;
    b.basis_beta("d", "d", "4");
    b.basis_quad("d", "2");
    b.beta("u", "u", "2");
    b.quad("u", "1");
    b.quad("v", "1");
    b.quad("w", "1");
    b.beta("u", "v", "0");
    b.beta("v", "w", "0");
    b.beta("u", "w", "2");
    b.geodesic("u", "v", "w", 1)?;
    b.class("u", "w", 3);
    b.quad("x", "1");
    b.quad("y", "1");
    b.beta("u", "x", "-2");
    b.beta("x", "y", "2");
    b.beta("u", "y", "0");
    b.geodesic("u", "x", "y", 3)?;
    b.class("u", "y", 1);
    Ok(())
}

fn orthogonal_plus(r: &mut Report) -> Result<()> {
    let f4 = super::field::Field::gf(4)?;
    let l = f4.generator();
    let l2 = f4.mul(l, l);
    for (a, b, s, name) in [(1, 1, 0, "1+1"), (1, l, l2, "1+λ"), (1, l2, l, "1+λ^2"), (l, l, 0, "λ+λ"), (l, l2, 1, "λ+λ^2"), (l2, l2, 0, "λ^2+λ^2")] {
        let c = Case::new(format!("gf4-addition/{name}"), "gf4-addition-rules")
            .computed(f4.format(f4.add(a, b)))
            .expected(f4.format(s), Provenance::Published)
            .compare();
        r.push(c);
    }

    let vs = [
        ("u", "e1+λe2+λf1+λf2+λf3"),
        ("v", "λe1+λe2+λ^2e3+λ^2f2"),
        ("w", "e1+e2+f1+λf3"),
        ("x", "e1+e2+f1+λf3"),
        ("y", "e1+λ^2e3+λf1+λ^2f2+f3"),
    ];
    let mut b = Block::new(r, "orthogonal-plus-q4", "orthogonal:n=6,q=4,type=plus", &vs)?;
    b.basis_quad("e1", "0");
    b.basis_quad("f1", "0");
    b.quad("u", "1");
    b.quad("v", "1");
    b.quad("w", "1");
    b.beta("u", "v", "0");
    b.beta("v", "w", "0");
    b.beta("u", "w", "1");
    b.geodesic("u", "v", "w", 1)?;
    b.class("u", "w", 2);
    b.quad("x", "1");
    b.quad("y", "1");
    b.beta("u", "x", "1");
    b.beta("x", "y", "1");
    b.beta("u", "y", "0");
    b.geodesic("u", "x", "y", 2)?;
    b.class("u", "y", 1);

    let vs = [
        ("u", "2e1+e2+4e3+3f1+2f2+2f3"),
        ("v", "4e1+3e2+4e3+f2+2f3"),
        ("w", "3e2+4f1+2f2"),
        ("x", "3e2+4f1+2f2"),
        ("y", "e1+4e2+e3+f1+4f2+4f3"),
    ];
    let mut b = Block::new(r, "orthogonal-plus-q5", "orthogonal:n=6,q=5,type=plus", &vs)?;
    b.quad("u", "1");
    b.quad("v", "1");
    b.quad("w", "1");
    b.beta("u", "v", "0");
    b.beta("v", "w", "0");
    b.beta("u", "w", "1");
    b.geodesic("u", "v", "w", 1)?;
    b.class("u", "w", 2);
    b.quad("x", "1");
    b.quad("y", "1");
    b.beta("u", "x", "1");
    b.beta("x", "y", "-1");
    b.beta("u", "y", "0");
    b.geodesic("u", "x", "y", 2)?;
    b.class("u", "y", 1);
    Ok(())
}

fn orthogonal_minus(r: &mut Report) -> Result<()> {
    let vs = [
        ("u", "e1+f2+d+λ^2t"),
        ("v", "λ^2e2+d+t+f1+f2"),
        ("w", "e2+d+λt+f1+λ^2f2"),
        ("x", "e2+d+λt+f1+λ^2f2"),
        ("y", "e1+e2+d+t+λ^2f1"),
    ];
    let mut b = Block::new(r, "orthogonal-minus-q4", "orthogonal:n=6,q=4,type=minus", &vs)?;
    b.basis_quad("t", "λ");
    b.basis_quad("d", "1");
    b.basis_beta("d", "t", "1");
    b.basis_beta("d", "d", "0");
    b.basis_beta("t", "t", "0");
    b.quad("u", "1");
    b.quad("v", "1");
    b.quad("w", "1");
    b.beta("u", "v", "0");
    b.beta("v", "w", "0");
    b.beta("u", "w", "1");
    b.geodesic("u", "v", "w", 1)?;
    b.class("u", "w", 3);
    b.quad("x", "1");
    b.quad("y", "1");
    b.beta("u", "x", "1");
    b.beta("x", "y", "1");
    b.beta("u", "y", "0");
    b.geodesic("u", "x", "y", 2)?;
    b.class("u", "y", 1);

    let vs = [
        ("u", "4e1+3d+t+3f2"),
        ("v", "4e1+d+3f1+2f2"),
        ("w", "2e1+e2+4d+2t+3f1+2f2"),
        ("x", "2e1+3d+2t+2f1"),
        ("y", "3e2+4f1+2f2"),
    ];
    let mut b = Block::new(r, "orthogonal-minus-q5", "orthogonal:n=6,q=5,type=minus", &vs)?;
    b.basis_beta("d", "t", "4");
    b.basis_beta("d", "d", "3");
    b.basis_beta("t", "t", "1");
    b.quad("u", "1");
    b.quad("v", "1");
    b.quad("w", "1");
    b.beta("u", "v", "0");
    b.beta("v", "w", "0");
    b.beta("u", "w", "3");
    b.geodesic("u", "v", "w", 1)?;
    b.class("u", "w", 3);
    b.quad("x", "1");
    b.quad("y", "1");
    b.beta("u", "x", "3");
    b.beta("x", "y", "3");
    b.beta("u", "y", "0");
    b.geodesic("u", "x", "y", 3)?;
    b.class("u", "y", 1);
    Ok(())
}

/// Every explicit witness computation, one case per printed identity.
pub fn verify_witnesses() -> Report {
    let mut r = Report::new("witnesses");
    let blocks: [(&str, fn(&mut Report) -> Result<()>); 5] = [
        ("unitary-q3", unitary_q3),
        ("unitary-q4", unitary_q4),
        ("orthogonal-odd", orthogonal_odd),
        ("orthogonal-plus", orthogonal_plus),
        ("orthogonal-minus", orthogonal_minus),
    ];
    for (name, run) in blocks {
        if let Err(e) = run(&mut r) {
            r.push(Case::error(format!("{name}/setup"), name, e));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_hold() {
        let r = verify_witnesses();
        assert!(r.cases.len() >= 40);
        assert!(!r.has_fail(), "{r}");
        let warns: Vec<&str> = r.cases.iter().filter(|c| c.status == Status::Warn).map(|c| c.id.as_str()).collect();
        assert_eq!(warns, vec!["orthogonal-minus-q4/class(u,w)"], "{r}");
    }
}
