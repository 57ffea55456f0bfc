//! Row-vector linear algebra over a [`Field`].

use super::field::{Elem, Field};

pub type Vector = Vec<Elem>;
pub type Matrix = Vec<Vec<Elem>>;

pub fn add(f: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn scale(f: &Field, k: Elem, v: &[Elem]) -> Vector {
    v.iter().map(|&x| f.mul(k, x)).collect()
}

/// `a + k b`.
pub fn axpy(f: &Field, a: &[Elem], k: Elem, b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, f.mul(k, y))).collect()
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn is_zero(v: &[Elem]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// The multiple of `v` whose first nonzero coordinate is 1.
pub fn projective_normal(f: &Field, v: &[Elem]) -> Vector {
    match v.iter().find(|&&x| x != 0) {
        Some(&lead) => scale(f, f.inv(lead), v),
        None => v.to_vec(),
    }
}

/// `v M` for a row vector `v`.
pub fn vec_mat(f: &Field, v: &[Elem], m: &Matrix) -> Vector {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![0; cols];
    for (i, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (o, &y) in out.iter_mut().zip(&m[i]) {
            *o = f.add(*o, f.mul(x, y));
        }
    }
    out
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as Elem).collect()).collect()
}

/// Reduced row echelon form; zero rows are dropped.
pub fn rref(f: &Field, rows: &[Vector]) -> Matrix {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = f.inv(m[r][c]);
        m[r] = scale(f, inv, &m[r]);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let k = f.neg(m[i][c]);
                m[i] = axpy(f, &m[i], k, &m[r]);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

pub fn rank(f: &Field, rows: &[Vector]) -> usize {
    rref(f, rows).len()
}

/// A basis of `{x : rows · x = 0}`.
pub fn nullspace(f: &Field, rows: &[Vector], cols: usize) -> Matrix {
    let r = rref(f, rows);
    let pivots: Vec<usize> = r.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0; cols];
        x[free] = 1;
        for (row, &p) in r.iter().zip(&pivots) {
            x[p] = f.neg(row[free]);
        }
        basis.push(x);
    }
    basis
}

/// A canonical key for the span of `rows`: the flattened RREF.
pub fn subspace_key(f: &Field, rows: &[Vector]) -> Vector {
    rref(f, rows).concat()
}

/// Splits a flattened key back into rows of length `n`.
pub fn key_rows(key: &[Elem], n: usize) -> Matrix {
    key.chunks(n).map(|c| c.to_vec()).collect()
}

/// All vectors of `GF(q)^n` in lexicographic order, first coordinate most
/// significant.
pub fn all_vectors(q: usize, n: usize) -> impl Iterator<Item = Vector> {
    let total = q.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; n];
        for i in (0..n).rev() {
            v[i] = (code % q) as Elem;
            code /= q;
        }
        v
    })
}

/// Representatives of the 1-subspaces of `GF(q)^n` (first nonzero
/// coordinate 1), lexicographically ordered.
pub fn projective_points(f: &Field, n: usize) -> Vec<Vector> {
    all_vectors(f.order(), n).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        let f = Field::gf(3).unwrap();
        let rows = vec![vec![1, 2, 0], vec![2, 1, 0]];
        assert_eq!(rank(&f, &rows), 1);
        let ns = nullspace(&f, &rows, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                assert_eq!(dot(&f, r, x), 0);
            }
        }
    }

    #[test]
    fn projective_point_count() {
        let f = Field::gf(4).unwrap();
        assert_eq!(projective_points(&f, 3).len(), 21);
    }

    #[test]
    fn keys_identify_spans() {
        let f = Field::gf(2).unwrap();
        let a = subspace_key(&f, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = subspace_key(&f, &[vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(a, b);
    }
}
