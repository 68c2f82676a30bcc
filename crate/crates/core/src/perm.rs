//! Permutations of `{0, .., degree - 1}`.
//!
//! Composition follows function notation: `a.compose(&b)` applies `b` first,
//! so that a left action `g -> lambda(g)` satisfies
//! `lambda(g * h) = lambda(g).compose(&lambda(h))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree - 1}`, ordered lexicographically by images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears twice"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(0 1 2)(3 4)"` or `"()"`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self o other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `self o other o self^-1`
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in other.images.iter().enumerate() {
            images[self.images[x]] = self.images[y];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a bracketed image list such as `"[1, 2, 0]"`.
    fn from_str(s: &str) -> Result<Self> {
        let images: Vec<usize> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::parse_cycles(6, "(0 2 4)(1 5)").unwrap();
        assert_eq!(p.images(), &[2, 5, 4, 3, 0, 1]);
        assert_eq!(p.to_cycle_string(), "(0 2 4)(1 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(
            Permutation::parse_cycles(3, "()").unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // b sends 1 -> 2, a fixes 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
        assert_eq!(a.conjugate(&b), a.compose(&b).compose(&a.inverse()));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::parse_cycles(3, "(0 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "0 1").is_err());
    }
}
