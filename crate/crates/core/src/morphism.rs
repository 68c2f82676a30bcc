//! Homomorphisms of skew bracoids: pairs `(phi: G -> G', phi_N: N -> N')`
//! with `phi_N(g o eta) = phi(g) o' phi_N(eta)`.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::group::{to_element_set, ElementSet, GroupHom};
use crate::homsearch::{self, HomKind};
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::substructure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracoidHom {
    source: SkewBracoid,
    target: SkewBracoid,
    phi: GroupHom,
    phi_n: Vec<usize>,
}

impl BracoidHom {
    /// Induces `phi_N(g o e) = phi(g) o' e'` from `phi`, after checking that
    /// `phi` maps `Stab(e)` into `Stab(e')`, and validates the result.
    pub fn make(source: &SkewBracoid, target: &SkewBracoid, phi: GroupHom) -> Result<Self> {
        if phi.domain() != source.g() || phi.codomain() != target.g() {
            return Err(Error::Inconsistent("phi does not map G to G'".into()));
        }
        if let Some(g) = source.stabilizer().into_iter().find(|&g| target.pi(phi.apply(g)) != 0) {
            return Err(Error::StabilizerNotPreserved(g));
        }
        let mut phi_n = vec![usize::MAX; source.n().order()];
        for g in source.g().elements() {
            let (eta, image) = (source.pi(g), target.pi(phi.apply(g)));
            if phi_n[eta] == usize::MAX {
                phi_n[eta] = image;
            } else if phi_n[eta] != image {
                return Err(Error::InducedMapIllDefined);
            }
        }
        BracoidHom::from_parts(source, target, phi, phi_n)
    }

    /// Validates a hand-supplied pair `(phi, psi)` against the definition.
    pub fn from_parts(source: &SkewBracoid, target: &SkewBracoid, phi: GroupHom, psi: Vec<usize>) -> Result<Self> {
        if phi.domain() != source.g() || phi.codomain() != target.g() {
            return Err(Error::Inconsistent("phi does not map G to G'".into()));
        }
        let (n, n2) = (source.n(), target.n());
        if psi.len() != n.order() || psi.iter().any(|&x| x >= n2.order()) {
            return Err(Error::InvalidTable("phi_N has the wrong shape".into()));
        }
        for a in n.elements() {
            for b in n.elements() {
                if psi[n.mul(a, b)] != n2.mul(psi[a], psi[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        for g in source.g().elements() {
            for eta in n.elements() {
                if psi[source.act(g, eta)] != target.act(phi.apply(g), psi[eta]) {
                    return Err(Error::Inconsistent(format!(
                        "phi_N(g o eta) != phi(g) o' phi_N(eta) at ({g}, {eta})"
                    )));
                }
            }
        }
        Ok(BracoidHom {
            source: source.clone(),
            target: target.clone(),
            phi,
            phi_n: psi,
        })
    }

    pub fn identity(b: &SkewBracoid) -> Self {
        BracoidHom {
            source: b.clone(),
            target: b.clone(),
            phi: GroupHom::identity(b.g()),
            phi_n: b.n().elements().collect(),
        }
    }

    pub fn source(&self) -> &SkewBracoid {
        &self.source
    }

    pub fn target(&self) -> &SkewBracoid {
        &self.target
    }

    pub fn phi(&self) -> &GroupHom {
        &self.phi
    }

    pub fn phi_n(&self) -> &[usize] {
        &self.phi_n
    }

    /// `ker(phi_N)`, an ideal of the source.
    pub fn kernel(&self) -> ElementSet {
        self.source.n().elements().filter(|&x| self.phi_n[x] == 0).collect()
    }

    /// `(Im phi, Im phi_N)` as a bracoid in its own right, together with the
    /// embeddings of both groups into the target.
    pub fn image(&self) -> Result<(SkewBracoid, ElementSet, ElementSet)> {
        let h = self.phi.image();
        let m = to_element_set(self.phi_n.clone());
        let (hg, h_embed) = self.target.g().subgroup_as_group(&h)?;
        let (mg, m_embed) = self.target.n().subgroup_as_group(&m)?;
        let action = h_embed
            .iter()
            .map(|&g| {
                let images = m_embed
                    .iter()
                    .map(|&eta| {
                        m_embed
                            .binary_search(&self.target.act(g, eta))
                            .map_err(|_| Error::Inconsistent("image of phi does not preserve image of phi_N".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Permutation::from_images(images).expect("restriction of a permutation"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((SkewBracoid::new(hg, mg, action)?, h_embed, m_embed))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.phi.is_injective()
            && self.phi.is_surjective()
            && to_element_set(self.phi_n.clone()).len() == self.target.n().order()
            && self.phi_n.len() == self.target.n().order()
    }

    /// `other o self`
    pub fn then(&self, other: &BracoidHom) -> Result<BracoidHom> {
        let phi = other.phi.after(&self.phi)?;
        let psi = self.phi_n.iter().map(|&x| other.phi_n[x]).collect();
        BracoidHom::from_parts(&self.source, &other.target, phi, psi)
    }

    pub fn inverse(&self) -> Result<BracoidHom> {
        if !self.is_isomorphism() {
            return Err(Error::NotSurjective);
        }
        let mut psi = vec![0; self.phi_n.len()];
        for (a, &b) in self.phi_n.iter().enumerate() {
            psi[b] = a;
        }
        BracoidHom::from_parts(&self.target, &self.source, self.phi.inverse()?, psi)
    }
}

/// Permutation of element indices given by a bijection `N -> N`.
fn as_perm(images: &[usize]) -> Permutation {
    Permutation::from_images(images.to_vec()).expect("bijection")
}

/// Isomorphism of reduced bracoids. `N'` is first relabelled onto `N` by a
/// group isomorphism `sigma` (the identity when the tables agree); then the
/// least `theta` in `Aut(N)` (by image array) with
/// `theta lambda(G) theta^-1 = sigma lambda'(G') sigma^-1` gives
/// `phi_N = sigma^-1 theta`. Non-reduced inputs are rejected.
pub fn find_isomorphism(b1: &SkewBracoid, b2: &SkewBracoid, limits: &Limits) -> Result<Option<BracoidHom>> {
    if !b1.is_reduced() || !b2.is_reduced() {
        return Err(Error::NotReduced);
    }
    if b1.g().order() != b2.g().order() {
        return Ok(None);
    }
    let sigma = if b1.n() == b2.n() {
        Permutation::identity(b1.n().order())
    } else {
        match homsearch::find_isomorphism(b2.n(), b1.n()) {
            Some(sigma) => as_perm(sigma.images()),
            None => return Ok(None),
        }
    };
    limits.check_automorphisms(b1.n().order())?;
    let sigma_inv = sigma.inverse();
    let l1 = b1.lambda_image();
    let l2 = b2.lambda_image().conjugate_by(&sigma);
    for theta in homsearch::automorphisms(b1.n()) {
        let theta = as_perm(&theta);
        if l1.conjugate_by(&theta) != l2 {
            continue;
        }
        let back: HashMap<&Permutation, usize> = b2.action().iter().enumerate().map(|(g, p)| (p, g)).collect();
        let transfer = sigma_inv.compose(&theta);
        let phi_images = b1
            .action()
            .iter()
            .map(|p| back[&transfer.conjugate(p)])
            .collect();
        let phi = GroupHom::new(b1.g().clone(), b2.g().clone(), phi_images)?;
        let hom = BracoidHom::make(b1, b2, phi)?;
        debug_assert_eq!(hom.phi_n(), transfer.images());
        return Ok(Some(hom));
    }
    Ok(None)
}

/// Isomorphism search without reducing: tries every group isomorphism
/// `G -> G'` and keeps the first whose induced map on `N` is bijective.
pub fn find_isomorphism_exhaustive(b1: &SkewBracoid, b2: &SkewBracoid, limits: &Limits) -> Result<Option<BracoidHom>> {
    limits.check_exhaustive(b1.g().order())?;
    if b1.g().order() != b2.g().order() || b1.n().order() != b2.n().order() {
        return Ok(None);
    }
    let mut found = None;
    homsearch::for_each_hom(b1.g(), b2.g(), HomKind::Injective, |images| {
        let phi = GroupHom::new(b1.g().clone(), b2.g().clone(), images.to_vec()).expect("search yields homomorphisms");
        match BracoidHom::make(b1, b2, phi) {
            Ok(h) if h.is_isomorphism() => {
                found = Some(h);
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        }
    });
    Ok(found)
}

/// Reduces `(G, N/M)` for `M = ker(phi_N)` and the image of `h`, and reports
/// whether the two reduced forms are isomorphic.
pub fn first_isomorphism_check(h: &BracoidHom, limits: &Limits) -> Result<bool> {
    let (quotient, _) = substructure::quotient_bracoid(h.source(), &h.kernel())?;
    let (image, _, _) = h.image()?;
    let (q, _) = quotient.reduced_form();
    let (i, _) = image.reduced_form();
    Ok(find_isomorphism(&q, &i, limits)?.is_some())
}

/// `|Aut(N)| / |Aut_o(N)|`, where `Aut_o(N)` is the stabilizer of `lambda(G)`
/// under conjugation.
pub fn count_equivalence_classes_in_iso_class(b: &SkewBracoid, limits: &Limits) -> Result<usize> {
    if !b.is_reduced() {
        return Err(Error::NotReduced);
    }
    limits.check_automorphisms(b.n().order())?;
    let image = b.lambda_image();
    let auts = homsearch::automorphisms(b.n());
    let normalizing = auts
        .iter()
        .filter(|theta| image.is_normalized_by(&as_perm(theta)))
        .count();
    Ok(auts.len() / normalizing)
}

/// Whether the reduced forms admit an isomorphism whose map on `N` is the
/// identity, found by scanning group isomorphisms of the reduced groups.
pub fn equivalence_as_identity_iso(b1: &SkewBracoid, b2: &SkewBracoid) -> Result<bool> {
    if b1.n() != b2.n() {
        return Err(Error::DifferentN);
    }
    let (r1, _) = b1.reduced_form();
    let (r2, _) = b2.reduced_form();
    if r1.g().order() != r2.g().order() || r1.g().order_profile() != r2.g().order_profile() {
        return Ok(false);
    }
    let mut found = false;
    homsearch::for_each_hom(r1.g(), r2.g(), HomKind::Injective, |images| {
        let phi = GroupHom::new(r1.g().clone(), r2.g().clone(), images.to_vec()).expect("search yields homomorphisms");
        match BracoidHom::make(&r1, &r2, phi) {
            Ok(h) if h.phi_n().iter().enumerate().all(|(i, &x)| i == x) => {
                found = true;
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        }
    });
    Ok(found)
}
