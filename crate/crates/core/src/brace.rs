//! Skew braces `(B, *, .)`: `a . (b * c) = (a . b) * a^-1 * (a . c)`.

use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, GroupHom};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    star: FiniteGroup,
    dot: FiniteGroup,
}

impl SkewBrace {
    pub fn new(star: FiniteGroup, dot: FiniteGroup) -> Result<Self> {
        if star.order() != dot.order() {
            return Err(Error::InvalidTable("the two operations have different carriers".into()));
        }
        for a in star.elements() {
            let ai = star.inv(a);
            for b in star.elements() {
                let left = star.mul(dot.mul(a, b), ai);
                for c in star.elements() {
                    if dot.mul(a, star.mul(b, c)) != star.mul(left, dot.mul(a, c)) {
                        return Err(Error::BraceRelationFails { a, b, c });
                    }
                }
            }
        }
        Ok(SkewBrace { star, dot })
    }

    /// `D_n` under `.`, with `r^i s^j * r^k s^l = r^(i+k) s^(j+l)` (so `(B, *)`
    /// is `C_n x C_2`).
    pub fn dihedral_product(n: usize) -> Result<Self> {
        let dot = crate::families::dihedral(n)?;
        let m = 2 * n;
        let table = (0..m * m)
            .map(|k| {
                let (a, b) = (k / m, k % m);
                2 * ((a / 2 + b / 2) % n) + (a + b) % 2
            })
            .collect();
        SkewBrace::new(FiniteGroup::from_flat(m, table)?, dot)
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn dot(&self) -> &FiniteGroup {
        &self.dot
    }

    /// `gamma(a)(b) = a^-1 * (a . b)`
    pub fn gamma_of(&self, a: usize) -> Permutation {
        let ai = self.star.inv(a);
        Permutation::from_images(self.star.elements().map(|b| self.star.mul(ai, self.dot.mul(a, b))).collect())
            .expect("left translate of a row")
    }

    /// `((B, .), (B, *), a o b = a . b)`
    pub fn to_bracoid(&self) -> SkewBracoid {
        let action = self
            .dot
            .elements()
            .map(|a| Permutation::from_images(self.dot.rows().swap_remove(a)).expect("row of a group table"))
            .collect();
        SkewBracoid::new_unchecked(self.dot.clone(), self.star.clone(), action)
    }

    /// Whether `A` is a subgroup of `(B, *)`, stable under every `gamma(a)`,
    /// and normal in `(B, *)`; each failure has its own error.
    pub fn check_strong_left_ideal(&self, a: &[usize]) -> Result<()> {
        if !crate::group::is_sorted_set(a) || !self.star.is_subgroup(a) {
            return Err(Error::NotSubgroup);
        }
        for x in self.star.elements() {
            let g = self.gamma_of(x);
            if a.iter().any(|&y| a.binary_search(&g.apply(y)).is_err()) {
                return Err(Error::NotGammaStable);
            }
        }
        if !self.star.is_normal(a) {
            return Err(Error::NotNormal);
        }
        Ok(())
    }

    /// The bracoid `((B, .), (B/A, *))` with `b o (c * A) = (b . c) * A`, and
    /// the projection `(B, *) -> (B/A, *)`.
    pub fn quotient_bracoid(&self, a: &[usize]) -> Result<(SkewBracoid, GroupHom)> {
        self.check_strong_left_ideal(a)?;
        let (quotient, projection) = self.star.quotient(a)?;
        // the *-cosets of A are also its .-cosets
        for b in self.star.elements() {
            let mut dot_coset: Vec<usize> = a.iter().map(|&x| self.dot.mul(b, x)).collect();
            dot_coset.sort_unstable();
            let mut star_coset: Vec<usize> = a.iter().map(|&x| self.star.mul(b, x)).collect();
            star_coset.sort_unstable();
            if dot_coset != star_coset {
                return Err(Error::Inconsistent(format!("cosets of {b} differ")));
            }
        }
        let cosets = self.star.left_cosets(a)?;
        let action = self
            .dot
            .elements()
            .map(|b| {
                let images = cosets.iter().map(|c| projection.apply(self.dot.mul(b, c[0]))).collect();
                Permutation::from_images(images).expect("translation permutes cosets")
            })
            .collect();
        let bracoid = SkewBracoid::new(self.dot.clone(), quotient, action)?;
        Ok((bracoid, projection))
    }

    pub fn is_strong_left_ideal(&self, a: &[usize]) -> bool {
        self.check_strong_left_ideal(a).is_ok()
    }

    /// All strong left ideals, from the subgroups of `(B, *)`.
    pub fn strong_left_ideals(&self, limits: &crate::limits::Limits) -> Result<Vec<ElementSet>> {
        Ok(self
            .star
            .subgroups(limits)?
            .into_iter()
            .filter(|a| self.is_strong_left_ideal(a))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, direct_product, symmetric};
    use crate::homsearch::are_isomorphic;

    #[test]
    fn relation_is_checked() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        assert!(SkewBrace::new(c4.clone(), c4.clone()).is_ok());
        assert!(SkewBrace::new(direct_product(&c2, &c2), c4).is_ok());
        let s3 = symmetric(3).unwrap();
        assert_eq!(
            SkewBrace::new(s3, cyclic(6).unwrap()),
            Err(Error::BraceRelationFails { a: 1, b: 1, c: 1 })
        );
    }

    #[test]
    fn dihedral_product_brace() {
        let b = SkewBrace::dihedral_product(4).unwrap();
        assert!(are_isomorphic(b.star(), &direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap())));
        // gamma(r^i s^j) fixes r^k and sends s to s, r to r^(+-1)
        let g = b.gamma_of(1);
        assert_eq!(g.apply(2), 6);
        assert_eq!(g.apply(1), 1);
        assert_eq!(b.to_bracoid().gamma(), b.star().elements().map(|a| b.gamma_of(a)).collect::<Vec<_>>());
    }

    #[test]
    fn quotients_by_extreme_ideals() {
        let b = SkewBrace::dihedral_product(3).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let (q, _) = b.quotient_bracoid(&all).unwrap();
        assert_eq!(q.n().order(), 1);
        let (q, proj) = b.quotient_bracoid(&[0]).unwrap();
        assert_eq!(q, b.to_bracoid());
        assert!(proj.is_injective());
    }

    #[test]
    fn strong_left_ideal_failures() {
        let b = SkewBrace::dihedral_product(4).unwrap();
        assert_eq!(b.check_strong_left_ideal(&[0, 2]), Err(Error::NotSubgroup));
        let s3 = symmetric(3).unwrap();
        let transposition = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.generate(&[transposition]);
        // trivial brace: gamma is trivial, so only normality can fail
        let trivial = SkewBrace::new(s3.clone(), s3.clone()).unwrap();
        assert_eq!(trivial.check_strong_left_ideal(&h), Err(Error::NotNormal));
        // a . b = b * a: gamma is conjugation, so non-normal subgroups move
        let almost_trivial = SkewBrace::new(s3.clone(), s3.opposite()).unwrap();
        assert_eq!(almost_trivial.check_strong_left_ideal(&h), Err(Error::NotGammaStable));
    }
}
