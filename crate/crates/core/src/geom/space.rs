//! Vector spaces with a Hermitian or quadratic form, in the standard bases
//! `e_1..e_m, f_1..f_m` plus `d` (odd dimension) or `d, t` (minus type).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::field::{Elem, Field};
use super::linalg::{self, Matrix, Vector};

/// Raw vectors allowed in a point enumeration.
pub const ENUMERATION_CAP: usize = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrthogonalType {
    Plus,
    Minus,
    Parabolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// Hermitian over GF(q^2), `β(x,y) = Σ x_i g_ij y_j^q`.
    Hermitian,
    /// Quadratic form over GF(q) with polar form `β`.
    Quadratic(OrthogonalType),
}

/// The specification string of a space, e.g. `unitary:n=3,q=3` or
/// `orthogonal:n=6,q=4,type=minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpaceSpec {
    pub kind: FormKind,
    pub n: usize,
    pub q: usize,
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FormKind::Hermitian => write!(f, "unitary:n={},q={}", self.n, self.q),
            FormKind::Quadratic(t) => {
                let t = match t {
                    OrthogonalType::Plus => "plus",
                    OrthogonalType::Minus => "minus",
                    OrthogonalType::Parabolic => "circle",
                };
                write!(f, "orthogonal:n={},q={},type={}", self.n, self.q, t)
            }
        }
    }
}

impl FromStr for SpaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("bad space spec `{s}`"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let mut params = HashMap::new();
        for kv in rest.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            params.insert(k.trim(), v.trim());
        }
        let num = |k: &str| -> Result<usize> { params.get(k).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let n = num("n")?;
        let q = num("q")?;
        let kind = match kind.trim() {
            "unitary" => FormKind::Hermitian,
            "orthogonal" => {
                let t = match params.get("type").copied() {
                    Some("plus") | Some("+") => OrthogonalType::Plus,
                    Some("minus") | Some("-") => OrthogonalType::Minus,
                    Some("circle") | Some("parabolic") | Some("0") => OrthogonalType::Parabolic,
                    None if n % 2 == 1 => OrthogonalType::Parabolic,
                    _ => return Err(bad()),
                };
                FormKind::Quadratic(t)
            }
            _ => return Err(bad()),
        };
        Ok(SpaceSpec { kind, n, q })
    }
}

#[derive(Clone, Debug)]
pub struct FormedSpace {
    spec: SpaceSpec,
    field: Field,
    basis: Vec<String>,
    /// Nonzero entries `(i, j, β(b_i, b_j))`.
    gram: Vec<(usize, usize, Elem)>,
    /// Nonzero coefficients `(i, j, c)` with `i <= j` of `Q = Σ c x_i x_j`.
    quad: Vec<(usize, usize, Elem)>,
}

impl FormedSpace {
    pub fn new(spec: SpaceSpec) -> Result<Self> {
        match spec.kind {
            FormKind::Hermitian => Self::unitary(spec.n, spec.q),
            FormKind::Quadratic(t) => Self::orthogonal(spec.n, spec.q, t),
        }
    }

    /// Non-degenerate Hermitian space of dimension `n` over GF(q^2) with
    /// `β(e_i,f_j) = δ_ij` and `β(d,d) = 1`.
    pub fn unitary(n: usize, q: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Unsupported("unitary spaces need n >= 2".into()));
        }
        let field = Field::gf(q * q)?;
        let m = n / 2;
        let mut basis: Vec<String> = (1..=m).map(|i| format!("e{i}")).chain((1..=m).map(|i| format!("f{i}"))).collect();
        let mut gram = Vec::new();
        for i in 0..m {
            gram.push((i, m + i, 1));
            gram.push((m + i, i, 1));
        }
        if n % 2 == 1 {
            basis.push("d".into());
            gram.push((n - 1, n - 1, 1));
        }
        Ok(FormedSpace { spec: SpaceSpec { kind: FormKind::Hermitian, n, q }, field, basis, gram, quad: Vec::new() })
    }

    /// Quadratic space over GF(q). Odd `n` uses `β(d,d) = 4` (so `Q(d) = 2`
    /// over GF(5)); minus type adds the anisotropic pair `d, t` with
    /// `Q(d) = 1, Q(t) = λ, β(d,t) = 1` over GF(4) and
    /// `β(d,d) = 3, β(t,t) = 1, β(d,t) = 4` over GF(5).
    pub fn orthogonal(n: usize, q: usize, t: OrthogonalType) -> Result<Self> {
        let field = Field::gf(q)?;
        let odd = q % 2 == 1;
        let expect_odd_n = t == OrthogonalType::Parabolic;
        if (n % 2 == 1) != expect_odd_n || n < 2 {
            return Err(Error::Unsupported(format!("dimension {n} does not fit orthogonal type {t:?}")));
        }
        if expect_odd_n && !odd {
            return Err(Error::Unsupported("odd-dimensional orthogonal spaces need odd q".into()));
        }
        let m = match t {
            OrthogonalType::Plus => n / 2,
            OrthogonalType::Minus => n / 2 - 1,
            OrthogonalType::Parabolic => n / 2,
        };
        let mut basis: Vec<String> = (1..=m).map(|i| format!("e{i}")).chain((1..=m).map(|i| format!("f{i}"))).collect();
        let mut quad: Vec<(usize, usize, Elem)> = (0..m).map(|i| (i, m + i, 1)).collect();
        let half = |b: Elem| field.div(b, field.from_int(2));
        match t {
            OrthogonalType::Plus => {}
            OrthogonalType::Parabolic => {
                basis.push("d".into());
                let alpha = if field.is_square(field.from_int(4)) && field.from_int(4) != 0 { field.from_int(4) } else { 1 };
                quad.push((2 * m, 2 * m, half(alpha)));
            }
            OrthogonalType::Minus => {
                basis.push("d".into());
                basis.push("t".into());
                let (d, tt) = (2 * m, 2 * m + 1);
                if q == 5 {
                    quad.push((d, d, half(3)));
                    quad.push((tt, tt, half(1)));
                    quad.push((d, tt, 4));
                } else if odd {
                    let nonsquare = field.nonzero().find(|&a| !field.is_square(a)).unwrap();
                    quad.push((d, d, 1));
                    quad.push((tt, tt, field.neg(nonsquare)));
                } else {
                    let mu = field
                        .nonzero()
                        .find(|&mu| field.elements().all(|x| field.add(field.add(field.mul(x, x), x), mu) != 0))
                        .unwrap();
                    quad.push((d, d, 1));
                    quad.push((tt, tt, mu));
                    quad.push((d, tt, 1));
                }
            }
        }
        let mut gram = Vec::new();
        for &(i, j, c) in &quad {
            if i == j {
                let g = field.add(c, c);
                if g != 0 {
                    gram.push((i, i, g));
                }
            } else {
                gram.push((i, j, c));
                gram.push((j, i, c));
            }
        }
        Ok(FormedSpace { spec: SpaceSpec { kind: FormKind::Quadratic(t), n, q }, field, basis, gram, quad })
    }

    pub fn spec(&self) -> SpaceSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.n
    }

    /// The form parameter `q`; the scalars are GF(q^2) for Hermitian spaces.
    pub fn q(&self) -> usize {
        self.spec.q
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_hermitian(&self) -> bool {
        self.spec.kind == FormKind::Hermitian
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// `x ↦ x^q` on scalars, the identity for quadratic spaces.
    pub fn bar(&self, a: Elem) -> Elem {
        if self.is_hermitian() {
            self.field.pow(a, self.spec.q as u64)
        } else {
            a
        }
    }

    pub fn beta(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for &(i, j, g) in &self.gram {
            if x[i] != 0 && y[j] != 0 {
                acc = f.add(acc, f.mul(f.mul(x[i], g), self.bar(y[j])));
            }
        }
        acc
    }

    /// The quadratic form; for Hermitian spaces `β(x,x)`.
    pub fn quadratic(&self, x: &[Elem]) -> Elem {
        if self.is_hermitian() {
            return self.beta(x, x);
        }
        let f = &self.field;
        let mut acc = 0;
        for &(i, j, c) in &self.quad {
            if x[i] != 0 && x[j] != 0 {
                acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
            }
        }
        acc
    }

    /// The value that defines membership of `⟨v⟩` in the point set: `β(v,v)`
    /// for Hermitian spaces, `Q(v)` otherwise.
    pub fn norm_value(&self, v: &[Elem]) -> Elem {
        self.quadratic(v)
    }

    /// Parses a vector such as `(1+2x)e1+2e2+f2` or `λ^7e1+λ^14e2`.
    pub fn parse_vector(&self, s: &str) -> Result<Vector> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut v = vec![0; self.dim()];
        let mut depth = 0;
        let mut start = 0;
        let mut terms = Vec::new();
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' if depth == 0 => {
                    terms.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        for term in terms {
            let (coef, name) = self.split_term(term)?;
            let idx = self.basis.iter().position(|b| b == name).ok_or_else(|| Error::Precondition(format!("unknown basis vector `{name}` in `{s}`")))?;
            v[idx] = self.field.add(v[idx], coef);
        }
        Ok(v)
    }

    fn split_term<'a>(&'a self, term: &str) -> Result<(Elem, &'a str)> {
        let mut names: Vec<&str> = self.basis.iter().map(|s| s.as_str()).collect();
        names.sort_by_key(|b| std::cmp::Reverse(b.len()));
        let name = names
            .into_iter()
            .find(|b| term.ends_with(b))
            .ok_or_else(|| Error::Precondition(format!("cannot parse vector term `{term}`")))?;
        let prefix = term[..term.len() - name.len()].trim_end_matches('*');
        let coef = if prefix.is_empty() { 1 } else { self.field.parse(prefix)? };
        Ok((coef, name))
    }

    pub fn format_vector(&self, v: &[Elem]) -> String {
        let parts: Vec<String> = v
            .iter()
            .zip(&self.basis)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, b)| {
                let s = self.field.format(c);
                if c == 1 {
                    b.clone()
                } else if s.contains('+') {
                    format!("({s}){b}")
                } else {
                    format!("{s}{b}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Scalars `k` with `norm_value(k v) = norm_value(v)`: the norm-1
    /// subgroup for Hermitian spaces, `±1` otherwise.
    pub fn unit_scalars(&self) -> Vec<Elem> {
        let f = &self.field;
        f.nonzero()
            .filter(|&k| if self.is_hermitian() { f.mul(k, self.bar(k)) == 1 } else { f.mul(k, k) == 1 })
            .collect()
    }

    /// The normalized multiple of `v` (`norm_value = 1`, lexicographically
    /// least among those), or `None` if `⟨v⟩` is not in the point set.
    pub fn normalize(&self, v: &[Elem]) -> Option<Vector> {
        let f = &self.field;
        let nv = self.norm_value(v);
        if nv == 0 {
            return None;
        }
        f.nonzero()
            .filter(|&k| {
                let scale = if self.is_hermitian() { f.mul(k, self.bar(k)) } else { f.mul(k, k) };
                f.mul(scale, nv) == 1
            })
            .map(|k| linalg::scale(f, k, v))
            .min()
    }

    /// Whether the span of `vs` meets its perpendicular space only in 0,
    /// decided by searching the span for a radical vector.
    pub fn span_is_nondegenerate(&self, vs: &[Vector]) -> bool {
        let f = &self.field;
        let k = vs.len();
        for coeffs in linalg::all_vectors(f.order(), k).skip(1) {
            let mut z = vec![0; self.dim()];
            for (c, v) in coeffs.iter().zip(vs) {
                z = linalg::axpy(f, &z, *c, v);
            }
            if linalg::is_zero(&z) {
                continue;
            }
            if vs.iter().all(|v| self.beta(v, &z) == 0) {
                return false;
            }
        }
        true
    }

    /// The perpendicular space of the span of `vs`.
    pub fn perp(&self, vs: &[Vector]) -> Matrix {
        let n = self.dim();
        let f = &self.field;
        // β(v, x) = Σ_ij v_i g_ij bar(x_j) = 0 is linear in bar(x); solve for
        // y = bar(x), then map back with the inverse automorphism.
        let rows: Vec<Vector> = vs
            .iter()
            .map(|v| {
                let mut r = vec![0; n];
                for &(i, j, g) in &self.gram {
                    r[j] = f.add(r[j], f.mul(v[i], g));
                }
                r
            })
            .collect();
        linalg::nullspace(f, &rows, n).into_iter().map(|y| y.into_iter().map(|c| self.bar(c)).collect()).collect()
    }

    /// The criterion `V = W ⊥ W^⊥`: `W + W^⊥` is all of `V`.
    pub fn decomposes(&self, vs: &[Vector]) -> bool {
        let mut rows = vs.to_vec();
        rows.extend(self.perp(vs));
        linalg::rank(&self.field, &rows) == self.dim()
    }
}

/// The non-singular points `⟨v⟩` with `norm_value(v) = 1`, each stored by
/// its normalized representative.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub reps: Vec<Vector>,
    index: HashMap<Vector, usize>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The point containing `v`, if any.
    pub fn index_of(&self, space: &FormedSpace, v: &[Elem]) -> Option<usize> {
        self.index.get(&linalg::projective_normal(space.field(), v)).copied()
    }
}

pub fn enumerate_points(space: &FormedSpace) -> Result<PointSet> {
    let f = space.field();
    let total = (f.order() as f64).powi(space.dim() as i32);
    if total > ENUMERATION_CAP as f64 {
        return Err(Error::SpaceTooLarge(format!("{} has {total} vectors, cap {ENUMERATION_CAP}", space.spec())));
    }
    let mut reps = Vec::new();
    let mut index = HashMap::new();
    for v in linalg::projective_points(f, space.dim()) {
        if let Some(rep) = space.normalize(&v) {
            index.insert(v, reps.len());
            reps.push(rep);
        }
    }
    Ok(PointSet { reps, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_point_counts() {
        for (n, q, expect) in [(3, 3, 63), (3, 4, 208), (4, 3, 540)] {
            let s = FormedSpace::unitary(n, q).unwrap();
            assert_eq!(enumerate_points(&s).unwrap().len(), expect, "U({n},{q})");
        }
    }

    #[test]
    fn hermitian_symmetry() {
        let s = FormedSpace::unitary(3, 3).unwrap();
        let f = s.field();
        let pts = enumerate_points(&s).unwrap();
        for a in pts.reps.iter().take(10) {
            for b in pts.reps.iter().take(10) {
                assert_eq!(s.beta(a, b), s.bar(s.beta(b, a)));
                let k = f.generator();
                assert_eq!(s.beta(&linalg::scale(f, k, a), b), f.mul(k, s.beta(a, b)));
            }
        }
    }

    #[test]
    fn char2_polarization() {
        let s = FormedSpace::orthogonal(6, 4, OrthogonalType::Minus).unwrap();
        let f = s.field();
        for u in linalg::all_vectors(4, 6).step_by(97) {
            for v in linalg::all_vectors(4, 6).step_by(131) {
                let lhs = s.beta(&u, &v);
                let rhs = f.add(f.add(s.quadratic(&linalg::add(f, &u, &v)), s.quadratic(&u)), s.quadratic(&v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orthogonal_point_counts() {
        let cases = [
            (OrthogonalType::Plus, 4, 1008),
            (OrthogonalType::Minus, 4, 1040),
            (OrthogonalType::Plus, 5, 1550),
            (OrthogonalType::Minus, 5, 1575),
        ];
        for (t, q, expect) in cases {
            let s = FormedSpace::orthogonal(6, q, t).unwrap();
            assert_eq!(enumerate_points(&s).unwrap().len(), expect, "{t:?} q={q}");
        }
    }

    #[test]
    fn vector_parsing_round_trip() {
        let s = FormedSpace::unitary(4, 3).unwrap();
        let v = s.parse_vector("(1+2x)e1+2e2+2xf1+(2+2x)f2").unwrap();
        assert_eq!(s.format_vector(&v), "(1+2x)e1+2e2+2xf1+(2+2x)f2");
        let spec: SpaceSpec = "orthogonal:n=7,q=5,type=circle".parse().unwrap();
        assert_eq!(spec.to_string(), "orthogonal:n=7,q=5,type=circle");
    }

    #[test]
    fn nondegeneracy_criteria_agree() {
        let s = FormedSpace::unitary(3, 3).unwrap();
        let pts = enumerate_points(&s).unwrap();
        for a in &pts.reps {
            for b in &pts.reps {
                if a != b {
                    let w = vec![a.clone(), b.clone()];
                    assert_eq!(s.span_is_nondegenerate(&w), s.decomposes(&w));
                }
            }
        }
    }
}
