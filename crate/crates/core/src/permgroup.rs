//! Permutation groups with fully enumerated, canonically sorted elements.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};
use crate::homsearch;
use crate::limits::Limits;
use crate::perm::Permutation;

/// A subgroup of `Sym(degree)`. Elements are sorted lexicographically by
/// image array, so the identity is element 0 and two groups are equal exactly
/// when their element lists are.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl Hash for PermGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PermGroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree, &self.elements).cmp(&(other.degree, &other.elements))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// The group generated by `gens`, enumerated breadth-first.
    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Self> {
        if let Some(p) = gens.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: p.degree(),
            });
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, ()> = HashMap::new();
        index.insert(elements[0].clone(), ());
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let y = elements[i].compose(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), ());
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort();
        let generators = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps a set of permutations already known to form a group, choosing a
    /// small generating set greedily.
    pub(crate) fn from_group_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span = PermGroup::trivial(degree);
        for p in &elements {
            if span.order() == elements.len() {
                break;
            }
            if !span.contains(p) {
                generators.push(p.clone());
                span = PermGroup::closure(degree, &generators).expect("degrees agree");
            }
        }
        debug_assert_eq!(span.elements, elements, "input was not closed");
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Cayley table over the sorted element list.
    pub fn to_finite_group(&self) -> FiniteGroup {
        cayley_table_of(&self.elements)
    }

    pub fn orbit(&self, point: usize) -> ElementSet {
        crate::group::to_element_set(self.elements.iter().map(|p| p.apply(point)).collect())
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Transitive with trivial point stabilizers.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let elems = self
            .elements
            .iter()
            .filter(|p| p.apply(point) == point)
            .cloned()
            .collect();
        PermGroup::from_group_elements(self.degree, elems)
    }

    /// `theta G theta^-1`
    pub fn conjugate_by(&self, theta: &Permutation) -> PermGroup {
        let elements: Vec<Permutation> = self.elements.iter().map(|p| theta.conjugate(p)).collect();
        let mut sorted = elements;
        sorted.sort();
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|g| theta.conjugate(g)).collect(),
            elements: sorted,
        }
    }

    pub fn is_normalized_by(&self, p: &Permutation) -> bool {
        self.generating_view().iter().all(|g| self.contains(&p.conjugate(g)))
    }

    /// Generators, or all elements when none were recorded.
    fn generating_view(&self) -> &[Permutation] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    /// Centralizer in the full symmetric group, by scanning all of `Sym(degree)`.
    pub fn centralizer_in_symmetric(&self, limits: &Limits) -> Result<PermGroup> {
        limits.check_hgs(self.degree)?;
        let gens = self.generating_view();
        let elems: Vec<Permutation> =
            itertools::Itertools::permutations(0..self.degree, self.degree)
                .map(|imgs| Permutation::from_images(imgs).expect("permutation"))
                .filter(|c| gens.iter().all(|g| c.compose(g) == g.compose(c)))
                .collect();
        Ok(PermGroup::from_group_elements(self.degree, elems))
    }

    /// Element set of a subgroup in terms of this group's element indices.
    pub fn indices_of(&self, sub: &PermGroup) -> Option<ElementSet> {
        sub.elements.iter().map(|p| self.index_of(p)).collect()
    }

    pub fn subgroup_from_indices(&self, set: &[usize]) -> PermGroup {
        let elems = set.iter().map(|&i| self.elements[i].clone()).collect();
        PermGroup::from_group_elements(self.degree, elems)
    }

    /// All subgroups, sorted lexicographically by element list.
    pub fn subgroups(&self, limits: &Limits) -> Result<Vec<PermGroup>> {
        let table = self.to_finite_group();
        let mut sets = table.subgroups(limits)?;
        sets.sort();
        Ok(sets.iter().map(|s| self.subgroup_from_indices(s)).collect())
    }

    /// Subgroups acting transitively on all `degree` points.
    pub fn transitive_subgroups(&self, limits: &Limits) -> Result<Vec<PermGroup>> {
        Ok(self
            .subgroups(limits)?
            .into_iter()
            .filter(PermGroup::is_transitive)
            .collect())
    }
}

/// Cayley table of a sorted list of permutations that is closed under composition.
pub(crate) fn cayley_table_of(sorted: &[Permutation]) -> FiniteGroup {
    let n = sorted.len();
    let index: HashMap<&Permutation, usize> = sorted.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![0; n * n];
    for (a, p) in sorted.iter().enumerate() {
        for (b, q) in sorted.iter().enumerate() {
            table[a * n + b] = index[&p.compose(q)];
        }
    }
    FiniteGroup::from_flat_trusted(n, table)
}

/// `lambda(eta)` for every element: left multiplication by `eta`.
pub fn left_translations(n: &FiniteGroup) -> Vec<Permutation> {
    n.elements()
        .map(|a| Permutation::from_images(n.elements().map(|b| n.mul(a, b)).collect()).expect("row of a group table"))
        .collect()
}

/// Image of the left regular representation.
pub fn left_regular_rep(n: &FiniteGroup) -> PermGroup {
    PermGroup::from_group_elements(n.order(), left_translations(n))
}

/// `Aut(N)` acting on element indices.
pub fn automorphism_group(n: &FiniteGroup, limits: &Limits) -> Result<PermGroup> {
    limits.check_automorphisms(n.order())?;
    let elems = homsearch::automorphisms(n)
        .into_iter()
        .map(|imgs| Permutation::from_images(imgs).expect("automorphism is bijective"))
        .collect();
    Ok(PermGroup::from_group_elements(n.order(), elems))
}

/// `Hol(N) = lambda(N) Aut(N)`.
pub fn holomorph(n: &FiniteGroup, limits: &Limits) -> Result<PermGroup> {
    let aut = automorphism_group(n, limits)?;
    let mut gens: Vec<Permutation> = left_regular_rep(n).generators().to_vec();
    gens.extend_from_slice(aut.generators());
    PermGroup::closure(n.order(), &gens)
}

/// Whether `p` fixes the identity and respects multiplication.
pub fn is_automorphism(n: &FiniteGroup, p: &Permutation) -> bool {
    p.degree() == n.order()
        && p.apply(0) == 0
        && n.elements().all(|a| n.elements().all(|b| p.apply(n.mul(a, b)) == n.mul(p.apply(a), p.apply(b))))
}

/// Membership in `Hol(N)` without enumerating it: `p` lies in the holomorph
/// exactly when `lambda(p(e))^-1 o p` is an automorphism.
pub fn is_in_holomorph(n: &FiniteGroup, p: &Permutation) -> bool {
    if p.degree() != n.order() {
        return false;
    }
    let shift = n.inv(p.apply(0));
    let stripped = Permutation::from_images(n.elements().map(|x| n.mul(shift, p.apply(x))).collect())
        .expect("left translate of a permutation");
    is_automorphism(n, &stripped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, dihedral, direct_product, symmetric};

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(PermGroup::closure(4, &[]).unwrap().order(), 1);
        let c = perm(4, "(0 1 2 3)");
        assert_eq!(PermGroup::closure(4, &[c.clone()]).unwrap().order(), 4);
        let refl = perm(4, "(1 3)");
        let d = PermGroup::closure(4, &[c, refl]).unwrap();
        assert_eq!(d.order(), 8);
        let again = PermGroup::closure(4, d.elements()).unwrap();
        assert_eq!(again, d);
        assert_eq!(
            PermGroup::closure(4, &[perm(3, "(0 1)")]).unwrap_err(),
            Error::DegreeMismatch { expected: 4, found: 3 }
        );
    }

    #[test]
    fn regular_representation() {
        assert_eq!(left_regular_rep(&FiniteGroup::trivial()).order(), 1);
        let c4 = cyclic(4).unwrap();
        assert_eq!(left_translations(&c4)[1], perm(4, "(0 1 2 3)"));
        let d4 = left_regular_rep(&dihedral(4).unwrap());
        assert!(d4.is_regular());
        assert_eq!(d4.stabilizer(0).order(), 1);
    }

    #[test]
    fn holomorph_orders() {
        let l = Limits::default();
        assert_eq!(holomorph(&FiniteGroup::trivial(), &l).unwrap().order(), 1);
        assert_eq!(holomorph(&cyclic(4).unwrap(), &l).unwrap().order(), 8);
        let c2 = cyclic(2).unwrap();
        assert_eq!(holomorph(&direct_product(&c2, &c2), &l).unwrap().order(), 24);
        assert_eq!(holomorph(&dihedral(3).unwrap(), &l).unwrap().order(), 36);
        assert!(matches!(
            automorphism_group(&cyclic(25).unwrap(), &l),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn holomorph_membership_matches_enumeration() {
        let l = Limits::default();
        let s3 = symmetric(3).unwrap();
        let hol = holomorph(&s3, &l).unwrap();
        let all = PermGroup::closure(6, &[perm(6, "(0 1 2 3 4 5)"), perm(6, "(0 1)")]).unwrap();
        assert_eq!(all.order(), 720);
        for p in all.elements() {
            assert_eq!(is_in_holomorph(&s3, p), hol.contains(p));
        }
    }

    #[test]
    fn transitive_subgroups_of_hol_c4() {
        let hol = holomorph(&cyclic(4).unwrap(), &Limits::default()).unwrap();
        let trans = hol.transitive_subgroups(&Limits::default()).unwrap();
        let mut orders: Vec<usize> = trans.iter().map(PermGroup::order).collect();
        orders.sort();
        assert_eq!(orders, vec![4, 4, 8]);
        assert_eq!(trans.iter().filter(|a| a.is_regular()).count(), 2);
        assert!(trans.windows(2).all(|w| w[0] < w[1]));
    }
}
