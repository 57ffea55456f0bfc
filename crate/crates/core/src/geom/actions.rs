//! Permutation actions of classical groups on points, subspaces and
//! orthonormal frames, generated by reflections, transvections and the
//! Frobenius map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{induced_action, ActionTable, PermGroup};

use super::field::{Elem, Field};
use super::linalg::{self, key_rows, subspace_key, vec_mat, Matrix, Vector};
use super::space::{enumerate_points, FormedSpace, PointSet};

/// Largest point set handled by [`unitary_group_action`].
pub const POINT_ACTION_CAP: usize = 1000;

/// The map `x ↦ x^(p^frobenius) M` on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semilinear {
    pub matrix: Matrix,
    pub frobenius: u32,
}

impl Semilinear {
    pub fn linear(matrix: Matrix) -> Self {
        Semilinear { matrix, frobenius: 0 }
    }

    /// Coordinate-wise `x ↦ x^(p^k)`.
    pub fn frobenius(n: usize, k: u32) -> Self {
        Semilinear { matrix: linalg::identity(n), frobenius: k }
    }

    pub fn apply(&self, f: &Field, v: &[Elem]) -> Vector {
        if self.frobenius == 0 {
            vec_mat(f, v, &self.matrix)
        } else {
            let w: Vector = v.iter().map(|&c| f.frobenius(c, self.frobenius)).collect();
            vec_mat(f, &w, &self.matrix)
        }
    }
}

/// The matrix of `x ↦ x + c · φ(x) · v` where `φ(b_i)` is given per basis
/// vector.
fn rank_one_update(f: &Field, n: usize, phi: impl Fn(usize) -> Elem, c: Elem, v: &[Elem]) -> Matrix {
    (0..n)
        .map(|i| {
            let mut row = vec![0; n];
            row[i] = 1;
            linalg::axpy(f, &row, f.mul(c, phi(i)), v)
        })
        .collect()
}

fn basis_vector(n: usize, i: usize) -> Vector {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// The reflection in a non-singular vector `v`: for Hermitian forms
/// `x ↦ x + (ζ-1) β(x,v)/β(v,v) v` with `ζ^(q+1) = 1`; for quadratic forms
/// `x ↦ x - β(x,v)/Q(v) v`. `None` if `v` is singular.
pub fn reflection(space: &FormedSpace, v: &[Elem], zeta: Elem) -> Option<Semilinear> {
    let f = space.field();
    let n = space.dim();
    let nv = space.norm_value(v);
    if nv == 0 {
        return None;
    }
    let c = if space.is_hermitian() { f.div(f.sub(zeta, 1), nv) } else { f.neg(f.inv(nv)) };
    let m = rank_one_update(f, n, |i| space.beta(&basis_vector(n, i), v), c, v);
    Some(Semilinear::linear(m))
}

/// Whether `g` preserves the form up to the field automorphism it carries.
pub fn is_semi_isometry(space: &FormedSpace, g: &Semilinear) -> bool {
    let f = space.field();
    let n = space.dim();
    let basis: Vec<Vector> = (0..n).map(|i| basis_vector(n, i)).collect();
    let img: Vec<Vector> = basis.iter().map(|b| g.apply(f, b)).collect();
    for i in 0..n {
        if !space.is_hermitian() && space.quadratic(&img[i]) != f.frobenius(space.quadratic(&basis[i]), g.frobenius) {
            return false;
        }
        for j in 0..n {
            if space.beta(&img[i], &img[j]) != f.frobenius(space.beta(&basis[i], &basis[j]), g.frobenius) {
                return false;
            }
        }
    }
    true
}

/// `count` random reflections, plus the Frobenius map for Hermitian spaces.
pub fn isometry_generators(space: &FormedSpace, count: usize, seed: u64) -> Vec<Semilinear> {
    let f = space.field();
    let n = space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zetas: Vec<Elem> = space.unit_scalars().into_iter().filter(|&z| z != 1).collect();
    let mut gens = Vec::new();
    while gens.len() < count {
        let v: Vector = (0..n).map(|_| rng.gen_range(0..f.order()) as Elem).collect();
        let zeta = if zetas.is_empty() { 1 } else { zetas[rng.gen_range(0..zetas.len())] };
        if let Some(r) = reflection(space, &v, zeta) {
            if !r.matrix.iter().enumerate().all(|(i, row)| row == &basis_vector(n, i)) {
                gens.push(r);
            }
        }
    }
    if space.is_hermitian() {
        gens.push(Semilinear::frobenius(n, 1));
    }
    gens
}

/// Random symplectic transvections `x ↦ x + a B(x,v) v` of GF(q)^(2m),
/// `B(x,y) = Σ x_i y_(m+i) - x_(m+i) y_i`.
pub fn symplectic_transvections(field: &Field, m: usize, count: usize, seed: u64) -> Vec<Semilinear> {
    let n = 2 * m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let form = |x: &[Elem], y: &[Elem]| {
        (0..m).fold(0, |acc, i| field.add(acc, field.sub(field.mul(x[i], y[m + i]), field.mul(x[m + i], y[i]))))
    };
    let mut gens = Vec::new();
    while gens.len() < count {
        let v: Vector = (0..n).map(|_| rng.gen_range(0..field.order()) as Elem).collect();
        if linalg::is_zero(&v) {
            continue;
        }
        let a = rng.gen_range(1..field.order()) as Elem;
        gens.push(Semilinear::linear(rank_one_update(field, n, |i| form(&basis_vector(n, i), &v), a, &v)));
    }
    gens
}

/// Generators of GL(n, q): the elementary transvection `e_1 ↦ e_1 + e_2`,
/// a primitive diagonal scaling and the cyclic shift of coordinates.
pub fn general_linear_generators(field: &Field, n: usize) -> Vec<Semilinear> {
    let mut t = linalg::identity(n);
    t[0][1] = 1;
    let mut shift = vec![vec![0; n]; n];
    for (i, row) in shift.iter_mut().enumerate() {
        row[(i + 1) % n] = 1;
    }
    let mut gens = vec![Semilinear::linear(t), Semilinear::linear(shift)];
    if field.order() > 2 {
        let mut d = linalg::identity(n);
        d[0][0] = field.primitive_element();
        gens.push(Semilinear::linear(d));
    }
    gens
}

/// The action on the points of `space`, numbered as in `points`.
pub fn point_action(space: &FormedSpace, points: &PointSet, gens: &[Semilinear]) -> Result<ActionTable<Vector>> {
    let f = space.field();
    let table = induced_action(
        gens,
        points.reps.clone(),
        |v, g| space.normalize(&g.apply(f, v)).expect("isometries preserve the point set"),
        points.len(),
    )?;
    if table.degree() != points.len() {
        return Err(Error::InvalidPartition("point action does not close on the point set".into()));
    }
    Ok(table)
}

/// A map on subspaces: a semilinear map, or `U ↦ U^⊥` for the standard dot
/// product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceMap {
    Semilinear(Semilinear),
    Polarity,
}

impl SubspaceMap {
    pub fn apply(&self, field: &Field, rows: &[Vector]) -> Vector {
        let n = rows.first().map_or(0, |r| r.len());
        match self {
            SubspaceMap::Semilinear(g) => {
                let img: Vec<Vector> = rows.iter().map(|r| g.apply(field, r)).collect();
                subspace_key(field, &img)
            }
            SubspaceMap::Polarity => subspace_key(field, &linalg::nullspace(field, rows, n)),
        }
    }
}

/// Wraps semilinear generators as subspace maps.
pub fn subspace_maps(gens: Vec<Semilinear>) -> Vec<SubspaceMap> {
    gens.into_iter().map(SubspaceMap::Semilinear).collect()
}

/// The orbit of the span of `seed_rows` on subspaces; labels are flattened
/// reduced echelon forms.
pub fn subspace_action(field: &Field, gens: &[SubspaceMap], seed_rows: &[Vector], cap: usize) -> Result<ActionTable<Vector>> {
    let n = seed_rows.first().map_or(0, |r| r.len());
    let seed = subspace_key(field, seed_rows);
    induced_action(gens, vec![seed], |key, g| g.apply(field, &key_rows(key, n)), cap)
}

/// The action on incident point-line flags of PG(2,q) of PGL(3,q) extended
/// by the standard polarity, which swaps the two members of a flag.
pub fn flag_action(field: &Field) -> Result<ActionTable<(Vector, Vector)>> {
    let gens = subspace_maps(general_linear_generators(field, 3)).into_iter().chain([SubspaceMap::Polarity]).collect::<Vec<_>>();
    let seed = (subspace_key(field, &[basis_vector(3, 0)]), subspace_key(field, &[basis_vector(3, 0), basis_vector(3, 1)]));
    induced_action(
        &gens,
        vec![seed],
        |(p, l), g| {
            let (ip, il) = (g.apply(field, &key_rows(p, 3)), g.apply(field, &key_rows(l, 3)));
            if matches!(g, SubspaceMap::Polarity) {
                (il, ip)
            } else {
                (ip, il)
            }
        },
        100_000,
    )
}

/// The action on sorted point sets induced by a point action.
pub fn set_action<L>(points: &ActionTable<L>, seeds: Vec<Vec<u32>>, cap: usize) -> Result<ActionTable<Vec<u32>>> {
    let seeds = seeds
        .into_iter()
        .map(|mut s| {
            s.sort_unstable();
            s
        })
        .collect();
    induced_action(
        &points.images,
        seeds,
        |set, g| {
            let mut img: Vec<u32> = set.iter().map(|&p| g.image(p as usize) as u32).collect();
            img.sort_unstable();
            img
        },
        cap,
    )
}

/// `|PΓU(n,q)| = q^(n(n-1)/2) Π_{i=2..n} (q^i - (-1)^i) · 2f` for
/// `q^2 = p^(2f)`.
pub fn projective_semiunitary_order(n: u32, q: u128) -> u128 {
    let mut o = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        let t = q.pow(i);
        o *= if i % 2 == 0 { t - 1 } else { t + 1 };
    }
    let mut f = 0;
    let mut r = q * q;
    let p = (2..=r).find(|d| r.is_multiple_of(*d)).unwrap_or(1);
    while r > 1 {
        r /= p;
        f += 1;
    }
    o * f
}

/// A semi-unitary group acting on the non-singular points of a unitary space.
#[derive(Clone, Debug)]
pub struct UnitaryAction {
    pub space: FormedSpace,
    pub points: PointSet,
    pub table: ActionTable<Vector>,
    pub group: PermGroup,
    /// `|PΓU(n,q)|`.
    pub expected_order: u128,
}

/// The action of PΓU(n,q) on the non-singular points of GF(q^2)^n,
/// generated by random unitary reflections and the Frobenius map.
pub fn unitary_group_action(n: usize, q: usize, seed: u64) -> Result<UnitaryAction> {
    let space = FormedSpace::unitary(n, q)?;
    let points = enumerate_points(&space)?;
    if points.len() > POINT_ACTION_CAP {
        return Err(Error::SpaceTooLarge(format!("{} points exceed the action cap {POINT_ACTION_CAP}", points.len())));
    }
    let gens = isometry_generators(&space, 6, seed);
    let table = point_action(&space, &points, &gens)?;
    let group = table.group();
    let expected_order = projective_semiunitary_order(n as u32, q as u128);
    Ok(UnitaryAction { space, points, table, group, expected_order })
}

/// The orthonormal frames of a 3-dimensional unitary space (triples of
/// mutually perpendicular points), permuted by the point action.
pub fn frame_action(action: &UnitaryAction) -> Result<ActionTable<Vec<u32>>> {
    let s = &action.space;
    if s.dim() != 3 {
        return Err(Error::Unsupported("frames are built for 3-dimensional spaces".into()));
    }
    let reps = &action.table.labels;
    let perp: Vec<usize> = (1..reps.len()).filter(|&j| s.beta(&reps[0], &reps[j]) == 0).collect();
    let (a, b) = (perp[0], perp[1..].iter().copied().find(|&j| s.beta(&reps[perp[0]], &reps[j]) == 0));
    let b = b.ok_or_else(|| Error::Precondition("no orthonormal frame through the first point".into()))?;
    set_action(&action.table, vec![vec![0, a as u32, b as u32]], POINT_ACTION_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::orbitals;
    use crate::geom::space::OrthogonalType;

    #[test]
    fn reflections_are_isometries() {
        for s in [
            FormedSpace::unitary(3, 3).unwrap(),
            FormedSpace::unitary(4, 2).unwrap(),
            FormedSpace::orthogonal(6, 4, OrthogonalType::Minus).unwrap(),
            FormedSpace::orthogonal(7, 3, OrthogonalType::Parabolic).unwrap(),
        ] {
            for g in isometry_generators(&s, 5, 1) {
                assert!(is_semi_isometry(&s, &g), "{}", s.spec());
            }
        }
    }

    #[test]
    fn unitary_63_action() {
        let a = unitary_group_action(3, 3, 7).unwrap();
        assert_eq!(a.group.order(), 12096);
        let mut sub = orbitals(&a.group, 0).unwrap().subdegrees();
        sub.sort();
        assert_eq!(sub, vec![1, 6, 24, 32]);
    }

    #[test]
    fn frames_of_the_63_space() {
        let a = unitary_group_action(3, 3, 7).unwrap();
        let fr = frame_action(&a).unwrap();
        assert_eq!(fr.degree(), 63);
    }

    #[test]
    fn symplectic_dual_polar() {
        let f = Field::gf(2).unwrap();
        let gens = subspace_maps(symplectic_transvections(&f, 3, 8, 3));
        let seed: Vec<Vector> = (0..3).map(|i| basis_vector(6, i)).collect();
        let t = subspace_action(&f, &gens, &seed, 10_000).unwrap();
        assert_eq!(t.degree(), 135);
    }

    #[test]
    fn heawood_flags() {
        let f = Field::gf(2).unwrap();
        let t = flag_action(&f).unwrap();
        assert_eq!(t.degree(), 21);
        let g = t.group();
        assert_eq!(g.order(), 336);
        let mut sub = orbitals(&g, 0).unwrap().subdegrees();
        sub.sort();
        assert_eq!(sub, vec![1, 4, 8, 8]);
    }
}
