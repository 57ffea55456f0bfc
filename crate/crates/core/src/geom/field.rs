//! Small finite fields GF(p^f) by full addition and multiplication tables.
//!
//! An element is stored as a `u8` code: the polynomial `c_0 + c_1 x + ...`
//! over GF(p) is encoded as `c_0 + c_1 p + c_2 p^2 + ...`.

use std::fmt;

use crate::error::{Error, Result};

pub type Elem = u8;

#[derive(Clone)]
pub struct Field {
    p: u32,
    f: u32,
    q: usize,
    /// Monic modulus, coefficients low to high, length `f + 1`.
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    /// Name of the polynomial variable used for display and parsing.
    var: char,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {:?}", self.q, self.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f && self.modulus == other.modulus
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let f = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * f];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (f..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate().take(f) {
                let t = &mut prod[k - f + i];
                *t = (*t + (p - c) * m % p) % p;
            }
            prod[k] = 0;
        }
    }
    prod.truncate(f);
    prod
}

/// Brute-force search for a monic factor of degree at most `f/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let f = modulus.len() - 1;
    let total = (p as usize).pow(f as u32 / 2 + 1);
    for code in 0..total {
        let mut g = Vec::new();
        let mut c = code;
        for _ in 0..=f / 2 {
            g.push((c % p as usize) as u32);
            c /= p as usize;
        }
        while g.len() > 1 && *g.last().unwrap() == 0 {
            g.pop();
        }
        let deg = g.len() - 1;
        if deg == 0 || deg > f / 2 || *g.last().unwrap() != 1 {
            continue;
        }
        let mut r = modulus.to_vec();
        while r.len() > deg {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - deg;
            for (i, &gi) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * gi % p) % p;
            }
            r.pop();
        }
        if r.iter().all(|&x| x == 0) {
            return false;
        }
    }
    true
}

impl Field {
    /// GF(p^f) modulo the monic polynomial with coefficients `modulus`
    /// (low to high, leading 1 included).
    pub fn new(p: u32, modulus: &[u32], var: char) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Unsupported(format!("{p} is not prime")));
        }
        let f = modulus.len() as u32 - 1;
        if f == 0 || *modulus.last().unwrap() != 1 {
            return Err(Error::Unsupported("modulus must be monic of positive degree".into()));
        }
        let q = (p as usize).pow(f);
        if q > 256 {
            return Err(Error::Unsupported(format!("field of order {q} exceeds the table cap 256")));
        }
        if modulus.iter().any(|&c| c >= p) || !is_irreducible(modulus, p) {
            return Err(Error::Unsupported(format!("modulus {modulus:?} is not irreducible over GF({p})")));
        }
        let digits = |mut code: usize| -> Vec<u32> {
            (0..f)
                .map(|_| {
                    let d = (code % p as usize) as u32;
                    code /= p as usize;
                    d
                })
                .collect()
        };
        let encode = |v: &[u32]| -> Elem { v.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) as Elem };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s);
                mul[a * q + b] = encode(&poly_mulmod(&da, &db, modulus, p));
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem;
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as Elem;
            }
        }
        Ok(Field { p, f, q, modulus: modulus.to_vec(), add, mul, neg, inv, var })
    }

    /// The field of order `q` with the fixed moduli used throughout:
    /// GF(4) = F2[x]/(x^2+x+1), GF(8) = F2[x]/(x^3+x+1),
    /// GF(9) = F3[x]/(x^2+1), GF(16) = F2[x]/(x^4+x+1),
    /// GF(25) = F5[x]/(x^2+2).
    pub fn gf(q: usize) -> Result<Self> {
        match q {
            2 | 3 | 5 | 7 | 11 | 13 => Field::new(q as u32, &[0, 1], 'x'),
            4 => Field::new(2, &[1, 1, 1], 'λ'),
            8 => Field::new(2, &[1, 1, 0, 1], 'x'),
            9 => Field::new(3, &[1, 0, 1], 'x'),
            16 => Field::new(2, &[1, 1, 0, 0, 1], 'λ'),
            25 => Field::new(5, &[2, 0, 1], 'x'),
            _ => Err(Error::Unsupported(format!("no built-in field of order {q}"))),
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        1..self.q as Elem
    }

    /// The code of the polynomial variable (the class of `x`).
    pub fn generator(&self) -> Elem {
        if self.f == 1 {
            self.primitive_element()
        } else {
            self.p as Elem
        }
    }

    /// The smallest code of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Elem {
        if self.q == 2 {
            return 1;
        }
        self.nonzero().find(|&a| self.mult_order(a) == self.q - 1).expect("GF(q)* is cyclic")
    }

    pub fn mult_order(&self, a: Elem) -> usize {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        assert!(b != 0, "division by zero in {self:?}");
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        self.pow(a, (self.p as u64).pow(k))
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a == 0 || self.elements().any(|b| self.mul(b, b) == a)
    }

    /// Polynomial coefficients of `a`, low to high.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        let mut c = a as u32;
        (0..self.f)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Elem {
        coeffs.iter().rev().fold(0u32, |acc, &d| acc * self.p + d % self.p) as Elem
    }

    /// Polynomial form, e.g. `2+2x`, `1`, `0`.
    pub fn format(&self, a: Elem) -> String {
        let c = self.coefficients(a);
        let mut parts = Vec::new();
        for (i, &d) in c.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let coef = if d == 1 && i > 0 { String::new() } else { d.to_string() };
            parts.push(match i {
                0 => coef,
                1 => format!("{coef}{}", self.var),
                _ => format!("{coef}{}^{i}", self.var),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Parses `0`, `2`, `x`, `2+2x`, `1+2x^2`, `λ^7`, or a product such as
    /// `2λ^3`. Powers of the variable are field powers, so `λ^7` in GF(16)
    /// is the seventh power of the class of `x`.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Precondition("empty field element".into()));
        }
        let mut acc = 0;
        for term in s.split('+') {
            acc = self.add(acc, self.parse_term(term)?);
        }
        Ok(acc)
    }

    fn parse_term(&self, t: &str) -> Result<Elem> {
        let bad = || Error::Precondition(format!("cannot parse field term `{t}`"));
        let (num, rest) = match t.find(|c: char| !c.is_ascii_digit() && c != '-') {
            Some(i) => (&t[..i], &t[i..]),
            None => (t, ""),
        };
        let mut coef = if num.is_empty() { 1 } else { self.from_int(num.parse::<i64>().map_err(|_| bad())?) };
        if !rest.is_empty() {
            let mut chars = rest.chars();
            let v = chars.next().unwrap();
            if v != self.var && v != 'x' && v != 'λ' {
                return Err(bad());
            }
            let tail = chars.as_str();
            let e = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^').ok_or_else(bad)?.trim_matches(|c| c == '{' || c == '}').parse::<u64>().map_err(|_| bad())?
            };
            coef = self.mul(coef, self.pow(self.generator(), e));
        }
        Ok(coef)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::gf(5).unwrap();
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2), 3);
        assert_eq!(f.neg(1), 4);
        assert_eq!(f.primitive_element(), 2);
    }

    #[test]
    fn gf9_relations() {
        let f = Field::gf(9).unwrap();
        let x = f.generator();
        assert_eq!(f.mul(x, x), 2);
        assert_eq!(f.format(f.parse("2+2x").unwrap()), "2+2x");
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 2), a);
        }
    }

    #[test]
    fn gf16_generator_is_primitive() {
        let f = Field::gf(16).unwrap();
        assert_eq!(f.mult_order(f.generator()), 15);
        assert_eq!(f.parse("λ^4").unwrap(), f.add(f.generator(), 1));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(Field::new(3, &[2, 0, 1], 'x').is_err());
        assert!(Field::new(2, &[1, 0, 1], 'x').is_err());
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        for q in [4, 8, 9, 16, 25] {
            let f = Field::gf(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                    assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
                }
            }
        }
    }
}
