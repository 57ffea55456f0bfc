//! The three nontrivial point classes around a base point in the four
//! rank-4 geometries: unitary over GF(9) and GF(16), orthogonal over GF(4)
//! and GF(5).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transitivity::MAX_VERTICES;

use super::field::Elem;
use super::space::{enumerate_points, FormKind, FormedSpace, PointSet};

/// Which adjacency rule a space follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Unitary, q = 3: orthogonal / degenerate span / non-degenerate span.
    UnitaryDegeneracy,
    /// Unitary, q = 4: `β = 0`, `β ∈ ⟨λ^3⟩`, otherwise.
    UnitaryCubes,
    /// Orthogonal, q = 5: `β = 0`, `±1`, `±2`.
    OrthogonalFive,
    /// Orthogonal, q = 4: `β = 0`, `1`, `λ` or `λ^2`.
    OrthogonalFour,
}

impl Classification {
    pub fn of(space: &FormedSpace) -> Result<Self> {
        match (space.spec().kind, space.q()) {
            (FormKind::Hermitian, 3) => Ok(Classification::UnitaryDegeneracy),
            (FormKind::Hermitian, 4) => Ok(Classification::UnitaryCubes),
            (FormKind::Quadratic(_), 5) => Ok(Classification::OrthogonalFive),
            (FormKind::Quadratic(_), 4) => Ok(Classification::OrthogonalFour),
            _ => Err(Error::Unclassified(space.spec().to_string())),
        }
    }

    /// Descriptive key of the rule, used in reports.
    pub fn rule(&self) -> &'static str {
        match self {
            Classification::UnitaryDegeneracy => "unitary-q3-span-degeneracy",
            Classification::UnitaryCubes => "unitary-q4-cube-classes",
            Classification::OrthogonalFive => "orthogonal-q5-beta-sign",
            Classification::OrthogonalFour => "orthogonal-q4-beta-value",
        }
    }
}

/// A precomputed classifier for one space.
#[derive(Clone, Debug)]
pub struct Classifier<'a> {
    space: &'a FormedSpace,
    rule: Classification,
    class_of_beta: Vec<u8>,
}

impl<'a> Classifier<'a> {
    pub fn new(space: &'a FormedSpace) -> Result<Self> {
        let rule = Classification::of(space)?;
        let f = space.field();
        let class_of_beta = f
            .elements()
            .map(|b| match rule {
                _ if b == 0 => 1,
                Classification::UnitaryDegeneracy => 0,
                Classification::UnitaryCubes => {
                    let cubes: Vec<Elem> = (0..5).map(|i| f.pow(f.generator(), 3 * i)).collect();
                    if cubes.contains(&b) {
                        2
                    } else {
                        3
                    }
                }
                Classification::OrthogonalFive => {
                    if b == 1 || b == f.neg(1) {
                        2
                    } else {
                        3
                    }
                }
                Classification::OrthogonalFour => {
                    if b == 1 {
                        2
                    } else {
                        3
                    }
                }
            })
            .collect();
        Ok(Classifier { space, rule, class_of_beta })
    }

    pub fn rule(&self) -> Classification {
        self.rule
    }

    /// The class index in `{1, 2, 3}` of `⟨w⟩` relative to `⟨u⟩`.
    pub fn class(&self, u: &[Elem], w: &[Elem]) -> usize {
        let b = self.space.beta(u, w);
        match self.class_of_beta[b as usize] {
            0 => {
                if self.space.span_is_nondegenerate(&[u.to_vec(), w.to_vec()]) {
                    3
                } else {
                    2
                }
            }
            c => c as usize,
        }
    }
}

/// The class of `other` relative to `base`, both normalized representatives.
pub fn suborbit_of(space: &FormedSpace, base: &[Elem], other: &[Elem]) -> Result<usize> {
    if crate::geom::linalg::projective_normal(space.field(), base) == crate::geom::linalg::projective_normal(space.field(), other) {
        return Err(Error::Precondition("base and other are the same point".into()));
    }
    Ok(Classifier::new(space)?.class(base, other))
}

/// Sizes of the three classes around point `base`.
pub fn class_sizes(space: &FormedSpace, points: &PointSet, base: usize) -> Result<[usize; 3]> {
    let c = Classifier::new(space)?;
    let u = &points.reps[base];
    let mut sizes = [0; 3];
    for (i, w) in points.reps.iter().enumerate() {
        if i != base {
            sizes[c.class(u, w) - 1] += 1;
        }
    }
    Ok(sizes)
}

/// The graph on the point set with `⟨u⟩ ~ ⟨w⟩` iff `⟨w⟩` lies in class
/// `delta` relative to `⟨u⟩`.
pub fn geometric_orbital_graph(space: &FormedSpace, delta: usize) -> Result<(Graph, PointSet)> {
    if !(1..=3).contains(&delta) {
        return Err(Error::Precondition(format!("class index must be 1, 2 or 3, got {delta}")));
    }
    let c = Classifier::new(space)?;
    let points = enumerate_points(space)?;
    if points.len() > MAX_VERTICES {
        return Err(Error::SpaceTooLarge(format!("{} points exceed the graph cap {MAX_VERTICES}", points.len())));
    }
    let reps = &points.reps;
    let mut edges = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if c.class(&reps[i], &reps[j]) == delta {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges(reps.len(), edges)?, points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::intersection_array;
    use crate::graph::diameter;

    #[test]
    fn unitary_three_classes() {
        let s = FormedSpace::unitary(3, 3).unwrap();
        let p = enumerate_points(&s).unwrap();
        let mut sizes = class_sizes(&s, &p, 0).unwrap().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![6, 24, 32]);
    }

    #[test]
    fn unitary_63_graph() {
        let s = FormedSpace::unitary(3, 3).unwrap();
        let (g, _) = geometric_orbital_graph(&s, 1).unwrap();
        assert_eq!(g.n(), 63);
        assert_eq!(intersection_array(&g).unwrap().to_string(), "{6,4,4;1,1,3}");
    }

    #[test]
    fn unitary_540_has_diameter_two() {
        let s = FormedSpace::unitary(4, 3).unwrap();
        let (g, _) = geometric_orbital_graph(&s, 1).unwrap();
        assert_eq!(diameter(&g).unwrap(), 2);
    }

    #[test]
    fn unclassified_space() {
        let s = FormedSpace::unitary(3, 2).unwrap();
        assert!(matches!(Classifier::new(&s), Err(Error::Unclassified(_))));
    }
}
