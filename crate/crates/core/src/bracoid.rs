//! Skew bracoids `(G, ., N, *, o)`: a transitive action of `G` on `N`
//! satisfying `g o (eta * mu) = (g o eta) * (g o e)^-1 * (g o mu)`.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, GroupHom};
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::permgroup::{self, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBracoid {
    g: FiniteGroup,
    n: FiniteGroup,
    action: Vec<Permutation>,
}

impl SkewBracoid {
    /// Validates the axioms in a fixed order (shape, homomorphism,
    /// transitivity, relation) and reports the first violation found when
    /// scanning indices in ascending order.
    pub fn new(g: FiniteGroup, n: FiniteGroup, action: Vec<Permutation>) -> Result<Self> {
        if action.len() != g.order() {
            return Err(Error::ActionShape {
                expected: g.order(),
                found: action.len(),
            });
        }
        if let Some(p) = action.iter().find(|p| p.degree() != n.order()) {
            return Err(Error::DegreeMismatch {
                expected: n.order(),
                found: p.degree(),
            });
        }
        for a in g.elements() {
            for b in g.elements() {
                if action[g.mul(a, b)] != action[a].compose(&action[b]) {
                    return Err(Error::ActionNotHomomorphism { g: a, h: b });
                }
            }
        }
        let mut reached = vec![false; n.order()];
        for p in &action {
            reached[p.apply(0)] = true;
        }
        if let Some(missing) = reached.iter().position(|&r| !r) {
            return Err(Error::NotTransitive { missing });
        }
        let b = SkewBracoid { g, n, action };
        b.check_relation()?;
        Ok(b)
    }

    fn check_relation(&self) -> Result<()> {
        let n = &self.n;
        for (g, p) in self.action.iter().enumerate() {
            let shift = n.inv(p.apply(0));
            for eta in n.elements() {
                let left = n.mul(p.apply(eta), shift);
                for mu in n.elements() {
                    if p.apply(n.mul(eta, mu)) != n.mul(left, p.apply(mu)) {
                        return Err(Error::RelationFails { g, eta, mu });
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn new_unchecked(g: FiniteGroup, n: FiniteGroup, action: Vec<Permutation>) -> Self {
        debug_assert!(SkewBracoid::new(g.clone(), n.clone(), action.clone()).is_ok());
        SkewBracoid { g, n, action }
    }

    /// The family `G = D_n` acting on `N = C_d` (`d | n`) by
    /// `r^i s^j o eta^k = eta^(i + (-1)^j k)`.
    pub fn dihedral_on_cyclic(n: usize, d: usize) -> Result<Self> {
        if d == 0 || n % d != 0 {
            return Err(Error::InvalidParameter(format!("{d} does not divide {n}")));
        }
        let g = crate::families::dihedral(n)?;
        let cd = crate::families::cyclic(d)?;
        let action = g
            .elements()
            .map(|x| {
                let (i, j) = (x / 2, x % 2);
                let images = (0..d)
                    .map(|k| if j == 0 { (i + k) % d } else { (i + d - k) % d })
                    .collect();
                Permutation::from_images(images).expect("affine map of Z/d")
            })
            .collect();
        SkewBracoid::new(g, cd, action)
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn n(&self) -> &FiniteGroup {
        &self.n
    }

    pub fn action(&self) -> &[Permutation] {
        &self.action
    }

    /// `g o eta`
    #[inline]
    pub fn act(&self, g: usize, eta: usize) -> usize {
        self.action[g].apply(eta)
    }

    /// `g o e_N`
    #[inline]
    pub fn pi(&self, g: usize) -> usize {
        self.action[g].apply(0)
    }

    pub fn stabilizer(&self) -> ElementSet {
        self.g.elements().filter(|&g| self.pi(g) == 0).collect()
    }

    /// `gamma(g)(eta) = (g o e)^-1 * (g o eta)`
    pub fn gamma_of(&self, g: usize) -> Permutation {
        let shift = self.n.inv(self.pi(g));
        Permutation::from_images(self.n.elements().map(|eta| self.n.mul(shift, self.act(g, eta))).collect())
            .expect("left translate of a permutation")
    }

    /// The gamma-function over all of `G`. Each value is checked to be an
    /// automorphism and the whole map to be a homomorphism.
    pub fn gamma(&self) -> Vec<Permutation> {
        let gamma: Vec<Permutation> = self.g.elements().map(|g| self.gamma_of(g)).collect();
        debug_assert!(gamma.iter().all(|p| permgroup::is_automorphism(&self.n, p)));
        debug_assert!(self.g.elements().all(|a| self
            .g
            .elements()
            .all(|b| gamma[self.g.mul(a, b)] == gamma[a].compose(&gamma[b]))));
        gamma
    }

    /// `lambda(G)` as a permutation group on `N`.
    pub fn lambda_image(&self) -> PermGroup {
        let mut elems = self.action.clone();
        elems.sort();
        elems.dedup();
        PermGroup::from_group_elements(self.n.order(), elems)
    }

    /// `lambda(G)` inside `Hol(N)` together with the surjection `G -> lambda(G)`
    /// (the codomain is the Cayley table of the sorted image).
    pub fn to_hol_subgroup(&self) -> Result<(PermGroup, GroupHom)> {
        let image = self.lambda_image();
        if let Some(p) = image.generators().iter().find(|p| !permgroup::is_in_holomorph(&self.n, p)) {
            return Err(Error::NotInHolomorph(p.to_cycle_string()));
        }
        let images = self
            .action
            .iter()
            .map(|p| image.index_of(p).expect("action lies in its own image"))
            .collect();
        let hom = GroupHom::new(self.g.clone(), image.to_finite_group(), images)?;
        Ok((image, hom))
    }

    /// Builds the bracoid `g o eta = delta(g)(eta)` from a transitive subgroup
    /// `A` of `Hol(N)`. Without `delta`, `G` is `A` itself (as the Cayley table
    /// of its sorted elements). The codomain of `delta` must be that table.
    pub fn from_hol_subgroup(n: &FiniteGroup, a: &PermGroup, delta: Option<&GroupHom>) -> Result<Self> {
        if a.degree() != n.order() {
            return Err(Error::DegreeMismatch {
                expected: n.order(),
                found: a.degree(),
            });
        }
        let orbit = a.orbit(0);
        if orbit.len() != n.order() {
            let missing = (0..n.order()).find(|x| orbit.binary_search(x).is_err()).unwrap();
            return Err(Error::NotTransitive { missing });
        }
        if let Some(p) = a.generators().iter().find(|p| !permgroup::is_in_holomorph(n, p)) {
            return Err(Error::NotInHolomorph(p.to_cycle_string()));
        }
        let table = a.to_finite_group();
        let (g, images): (FiniteGroup, Vec<usize>) = match delta {
            None => (table, (0..a.order()).collect()),
            Some(delta) => {
                if *delta.codomain() != table {
                    return Err(Error::Inconsistent(
                        "delta does not map onto the given permutation group".into(),
                    ));
                }
                if !delta.is_surjective() {
                    return Err(Error::NotSurjective);
                }
                (delta.domain().clone(), delta.images().to_vec())
            }
        };
        let action = images.iter().map(|&i| a.elements()[i].clone()).collect();
        SkewBracoid::new(g, n.clone(), action)
    }

    pub fn to_gamma_cocycle(&self) -> GammaCocyclePair {
        GammaCocyclePair {
            g: self.g.clone(),
            n: self.n.clone(),
            gamma: self.gamma(),
            pi: self.g.elements().map(|g| self.pi(g)).collect(),
        }
    }

    /// Same `G` and action, `N` replaced by its opposite group.
    pub fn opposite(&self) -> SkewBracoid {
        SkewBracoid::new_unchecked(self.g.clone(), self.n.opposite(), self.action.clone())
    }

    /// `|G| = |N|`, i.e. the action is regular.
    pub fn is_essentially_brace(&self) -> bool {
        self.g.order() == self.n.order()
    }

    /// Transports `G` onto `N` along `g -> g o e`, giving the skew brace with
    /// `(g o e) . (h o e) = (gh) o e` and `*` the operation of `N`.
    pub fn transport_to_brace(&self) -> Result<SkewBrace> {
        if !self.is_essentially_brace() {
            return Err(Error::NotRegular);
        }
        let m = self.n.order();
        let mut back = vec![0; m];
        for g in self.g.elements() {
            back[self.pi(g)] = g;
        }
        let mut dot = vec![0; m * m];
        for x in 0..m {
            for y in 0..m {
                dot[x * m + y] = self.pi(self.g.mul(back[x], back[y]));
            }
        }
        SkewBrace::new(self.n.clone(), FiniteGroup::from_flat(m, dot)?)
    }

    /// `ker(lambda) = {g : g acts trivially}`
    pub fn kernel_lambda(&self) -> ElementSet {
        self.g.elements().filter(|&g| self.action[g].is_identity()).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.kernel_lambda().len() == 1
    }

    /// The bracoid `(G / ker(lambda), N)` and the projection from `G`.
    pub fn reduced_form(&self) -> (SkewBracoid, GroupHom) {
        let kernel = self.kernel_lambda();
        let (quotient, projection) = self.g.quotient(&kernel).expect("kernels are normal");
        let mut action = vec![None; quotient.order()];
        for g in self.g.elements() {
            action[projection.apply(g)].get_or_insert_with(|| self.action[g].clone());
        }
        let action = action.into_iter().map(|p| p.expect("projection is onto")).collect();
        (SkewBracoid::new_unchecked(quotient, self.n.clone(), action), projection)
    }

    /// Same `N` table and equal `lambda`-images.
    pub fn is_equivalent(&self, other: &SkewBracoid) -> bool {
        self.n == other.n && self.lambda_image() == other.lambda_image()
    }

    /// Every equivalence class of bracoids on `N`, one per transitive subgroup
    /// of `Hol(N)`, in the canonical order of those subgroups.
    pub fn enumerate_on(n: &FiniteGroup, limits: &Limits) -> Result<Vec<SkewBracoid>> {
        let hol = permgroup::holomorph(n, limits)?;
        hol.transitive_subgroups(limits)?
            .iter()
            .map(|a| SkewBracoid::from_hol_subgroup(n, a, None))
            .collect()
    }
}

/// A homomorphism `gamma: G -> Aut(N)` and a surjective 1-cocycle `pi: G -> N`,
/// `pi(gh) = pi(g) * gamma(g)(pi(h))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCocyclePair {
    g: FiniteGroup,
    n: FiniteGroup,
    gamma: Vec<Permutation>,
    pi: Vec<usize>,
}

impl GammaCocyclePair {
    pub fn new(g: FiniteGroup, n: FiniteGroup, gamma: Vec<Permutation>, pi: Vec<usize>) -> Result<Self> {
        if gamma.len() != g.order() || pi.len() != g.order() {
            return Err(Error::ActionShape {
                expected: g.order(),
                found: gamma.len().min(pi.len()),
            });
        }
        if let Some(&x) = pi.iter().find(|&&x| x >= n.order()) {
            return Err(Error::InvalidParameter(format!("cocycle value {x} is not in N")));
        }
        if let Some(p) = gamma.iter().find(|p| !permgroup::is_automorphism(&n, p)) {
            return Err(Error::NotAutomorphism(p.to_cycle_string()));
        }
        for a in g.elements() {
            for b in g.elements() {
                if gamma[g.mul(a, b)] != gamma[a].compose(&gamma[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        for a in g.elements() {
            for b in g.elements() {
                if pi[g.mul(a, b)] != n.mul(pi[a], gamma[a].apply(pi[b])) {
                    return Err(Error::CocycleFails { g: a, h: b });
                }
            }
        }
        let mut hit = vec![false; n.order()];
        for &x in &pi {
            hit[x] = true;
        }
        if hit.contains(&false) {
            return Err(Error::NotSurjective);
        }
        Ok(GammaCocyclePair { g, n, gamma, pi })
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn n(&self) -> &FiniteGroup {
        &self.n
    }

    pub fn gamma(&self) -> &[Permutation] {
        &self.gamma
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    /// `g o eta = pi(g) * gamma(g)(eta)`
    pub fn to_bracoid(&self) -> Result<SkewBracoid> {
        let action = self
            .g
            .elements()
            .map(|g| {
                let images = self
                    .n
                    .elements()
                    .map(|eta| self.n.mul(self.pi[g], self.gamma[g].apply(eta)))
                    .collect();
                Permutation::from_images(images).expect("translate of an automorphism")
            })
            .collect();
        SkewBracoid::new(self.g.clone(), self.n.clone(), action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, dihedral, direct_product, symmetric};
    use crate::homsearch::are_isomorphic;

    fn regular_bracoid(n: &FiniteGroup) -> SkewBracoid {
        SkewBracoid::new(n.clone(), n.clone(), permgroup::left_translations(n)).unwrap()
    }

    #[test]
    fn family_is_valid_with_expected_gamma() {
        let b = SkewBracoid::dihedral_on_cyclic(6, 3).unwrap();
        for x in b.g().elements() {
            let j = x % 2;
            let expected: Vec<usize> = (0..3).map(|k| if j == 0 { k } else { (3 - k) % 3 }).collect();
            assert_eq!(b.gamma_of(x).images(), &expected[..]);
            assert_eq!(b.pi(x), (x / 2) % 3);
        }
        assert!(SkewBracoid::dihedral_on_cyclic(6, 4).is_err());
    }

    #[test]
    fn regular_representation_is_a_bracoid() {
        for n in [cyclic(5).unwrap(), symmetric(3).unwrap()] {
            let b = regular_bracoid(&n);
            assert!(b.is_reduced() && b.is_essentially_brace());
            assert_eq!(b.lambda_image(), permgroup::left_regular_rep(&n));
            let brace = b.transport_to_brace().unwrap();
            assert_eq!(brace.star(), brace.dot());
        }
    }

    #[test]
    fn translation_on_the_wrong_group_fails() {
        // Hol(C_2 x C_2) is all of Sym(4), so C_4 acting by translation is a
        // bracoid on the Klein group under every labelling. Use C_6 on S_3.
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        assert!(SkewBracoid::new(c4.clone(), direct_product(&c2, &c2), permgroup::left_translations(&c4)).is_ok());

        let c6 = cyclic(6).unwrap();
        let s3 = symmetric(3).unwrap();
        let err = SkewBracoid::new(c6.clone(), s3.clone(), permgroup::left_translations(&c6)).unwrap_err();
        // oracle: scan the relation directly in (g, eta, mu) order
        let mut first = None;
        'scan: for g in 0..6 {
            for eta in 0..6 {
                for mu in 0..6 {
                    let act = |x: usize| c6.mul(g, x);
                    if act(s3.mul(eta, mu)) != s3.mul(s3.mul(act(eta), s3.inv(act(0))), act(mu)) {
                        first = Some((g, eta, mu));
                        break 'scan;
                    }
                }
            }
        }
        let (g, eta, mu) = first.unwrap();
        assert_eq!(err, Error::RelationFails { g, eta, mu });
        assert_eq!((g, eta, mu), (1, 1, 1));
    }

    #[test]
    fn axiom_violations_are_distinguished() {
        let c2 = cyclic(2).unwrap();
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        let id = Permutation::identity(2);
        assert_eq!(
            SkewBracoid::new(c2.clone(), c2.clone(), vec![id.clone()]),
            Err(Error::ActionShape { expected: 2, found: 1 })
        );
        assert_eq!(
            SkewBracoid::new(c2.clone(), c2.clone(), vec![swap.clone(), swap.clone()]),
            Err(Error::ActionNotHomomorphism { g: 0, h: 0 })
        );
        assert_eq!(
            SkewBracoid::new(c2.clone(), c2.clone(), vec![id.clone(), id]),
            Err(Error::NotTransitive { missing: 1 })
        );
    }

    #[test]
    fn trivial_n_is_allowed() {
        let g = dihedral(3).unwrap();
        let b = SkewBracoid::new(g, FiniteGroup::trivial(), vec![Permutation::identity(1); 6]).unwrap();
        assert_eq!(b.kernel_lambda().len(), 6);
        assert_eq!(b.reduced_form().0.g().order(), 1);
    }

    #[test]
    fn family_characterizations() {
        let b = SkewBracoid::dihedral_on_cyclic(4, 4).unwrap();
        let (image, hom) = b.to_hol_subgroup().unwrap();
        assert_eq!(image.order(), 8);
        assert!(hom.is_surjective());
        let inversion = Permutation::from_images(vec![0, 3, 2, 1]).unwrap();
        let mut gens = permgroup::left_regular_rep(b.n()).generators().to_vec();
        gens.push(inversion);
        assert_eq!(image, PermGroup::closure(4, &gens).unwrap());
        let again = SkewBracoid::from_hol_subgroup(b.n(), &image, Some(&hom)).unwrap();
        assert_eq!(again, b);
        assert_eq!(b.to_gamma_cocycle().to_bracoid().unwrap(), b);
    }

    #[test]
    fn kernel_and_reduced_form() {
        let b = SkewBracoid::dihedral_on_cyclic(8, 4).unwrap();
        // <r^4> = {e, r^4} = indices {0, 8}
        assert_eq!(b.kernel_lambda(), vec![0, 8]);
        let (red, proj) = b.reduced_form();
        assert!(red.is_reduced());
        // G / <r^d> has order 2d
        assert!(are_isomorphic(red.g(), &dihedral(4).unwrap()));
        assert_eq!(proj.kernel(), vec![0, 8]);
        assert!(b.is_equivalent(&red));
        assert!(b.is_equivalent(&SkewBracoid::dihedral_on_cyclic(4, 4).unwrap()));
        let (again, _) = red.reduced_form();
        assert_eq!(again, red);
    }

    #[test]
    fn opposite_of_nonabelian() {
        let s3 = symmetric(3).unwrap();
        let b = regular_bracoid(&s3);
        let op = b.opposite();
        assert_ne!(op.n(), b.n());
        assert_eq!(op.opposite(), b);
        let fam = SkewBracoid::dihedral_on_cyclic(6, 3).unwrap();
        assert_eq!(fam.opposite(), fam);
    }

    #[test]
    fn cocycle_rejections() {
        let c2 = cyclic(2).unwrap();
        let id = Permutation::identity(2);
        assert_eq!(
            GammaCocyclePair::new(c2.clone(), c2.clone(), vec![id.clone(), id.clone()], vec![0, 0]),
            Err(Error::NotSurjective)
        );
        assert_eq!(
            GammaCocyclePair::new(c2.clone(), c2, vec![id.clone(), id], vec![1, 0]),
            Err(Error::CocycleFails { g: 0, h: 0 })
        );
    }
}
