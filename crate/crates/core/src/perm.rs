use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..n`, acting on the right: `p^(gh) = (p^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!("image {x} out of range for degree {n}")));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of degree `n` from disjoint or overlapping cycles,
    /// composed left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut seen = std::collections::HashSet::new();
            for &x in cycle {
                if x >= n {
                    return Err(Error::InvalidPermutation(format!("point {x} out of range for degree {n}")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!("point {x} repeated in a cycle")));
                }
            }
            if cycle.len() < 2 {
                continue;
            }
            let mut c = Permutation::identity(n);
            for (i, &x) in cycle.iter().enumerate() {
                c.images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
            acc = acc.compose(&c);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub(crate) fn compose_into(&self, other: &Permutation, out: &mut Permutation) {
        out.images.clear();
        out.images.extend(self.images.iter().map(|&x| other.images[x as usize]));
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        by.inverse().compose(self).compose(by)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i as u32 != x).count()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Parses cycle notation such as `(0,1,2)(3,4)`; `()` is the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Permutation> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {s:?}")))?;
            let body = open[..close].trim();
            if !body.is_empty() {
                let cycle = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::InvalidPermutation(format!("bad point {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let a = Permutation::parse_cycles(3, "(0,1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1,2)").unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).image(0), 2);
        assert_eq!(a.compose(&b).order(), 3);
    }

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles(8, "(0,3,5)(1,7)").unwrap();
        assert_eq!(p.to_string(), "(0,3,5)(1,7)");
        assert_eq!(Permutation::parse_cycles(8, &p.to_string()).unwrap(), p);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::parse_cycles(3, "(0,3)").is_err());
        assert!(Permutation::parse_cycles(3, "(0,1,0)").is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let p = Permutation::parse_cycles(6, "(0,1,2,3,4)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.pow(5).is_identity());
        assert_eq!(p.pow(2), p.compose(&p));
    }
}
