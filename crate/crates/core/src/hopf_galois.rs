//! Hopf-Galois structures at the level of Galois groups.
//!
//! A Galois extension `E/K` with group `G` and an intermediate field `L`
//! fixed by `G'` is represented by the pair `(G, G')`. Hopf-Galois structures
//! on `L/K` correspond to `G`-stable regular subgroups of `Perm(X)` with
//! `X = G/G'`, and equally to group operations `*` on `X` making
//! `(G, X, *)` a skew bracoid under left translation of cosets. Intermediate
//! fields appear only through their fixing subgroups.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::group::{is_sorted_set, is_subset, to_element_set, ElementSet, FiniteGroup};
use crate::homsearch;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::permgroup::{self, PermGroup};
use crate::small_groups;
use crate::substructure;

/// The left coset space `X = G/G'` with `G` acting by translation.
/// Cosets are indexed in order of their least element, so `G'` is coset 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    g: FiniteGroup,
    g_prime: ElementSet,
    cosets: Vec<ElementSet>,
    coset_of: Vec<usize>,
    translation: Vec<Permutation>,
}

impl CosetSpace {
    pub fn new(g: &FiniteGroup, g_prime: &[usize]) -> Result<Self> {
        let cosets = g.left_cosets(g_prime)?;
        let mut coset_of = vec![0; g.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x] = i;
            }
        }
        let translation = g
            .elements()
            .map(|a| {
                let images = cosets.iter().map(|c| coset_of[g.mul(a, c[0])]).collect();
                Permutation::from_images(images).expect("translation permutes cosets")
            })
            .collect();
        Ok(CosetSpace {
            g: g.clone(),
            g_prime: g_prime.to_vec(),
            cosets,
            coset_of,
            translation,
        })
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn g_prime(&self) -> &[usize] {
        &self.g_prime
    }

    pub fn cosets(&self) -> &[ElementSet] {
        &self.cosets
    }

    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    /// Least element of coset `x`.
    pub fn rep(&self, x: usize) -> usize {
        self.cosets[x][0]
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// `lambda(g)`: the permutation of cosets induced by `g`.
    pub fn translation(&self) -> &[Permutation] {
        &self.translation
    }

    /// The permutation `gG' -> phi(g)G'` of `X`, for `phi` preserving `G'`.
    fn induced(&self, phi: &[usize]) -> Permutation {
        Permutation::from_images(self.cosets.iter().map(|c| self.coset_of[phi[c[0]]]).collect())
            .expect("automorphism preserving G' permutes cosets")
    }
}

/// `rho(X) = {x -> x * y^-1}` for a group table on `X`.
pub fn right_regular(star: &FiniteGroup) -> PermGroup {
    let elems = star
        .elements()
        .map(|y| {
            let yi = star.inv(y);
            Permutation::from_images(star.elements().map(|x| star.mul(x, yi)).collect()).expect("row")
        })
        .collect();
    PermGroup::from_group_elements(star.order(), elems)
}

/// Recovers `*` from a regular subgroup via `a(eta) = eta^-1(e)`:
/// `a(eta) * a(mu) = a(eta mu)`.
pub fn star_from_regular(rho: &PermGroup) -> Result<FiniteGroup> {
    if !rho.is_regular() {
        return Err(Error::NotRegular);
    }
    let m = rho.degree();
    let mut by_point = vec![None; m];
    for p in rho.elements() {
        by_point[p.inverse().apply(0)] = Some(p);
    }
    let mut table = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            let (px, py) = (by_point[x].unwrap(), by_point[y].unwrap());
            table[x * m + y] = px.compose(py).inverse().apply(0);
        }
    }
    FiniteGroup::from_flat(m, table)
}

/// One Hopf-Galois structure: a group operation on `X` and the matching
/// regular subgroup `rho(X)` of `Perm(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgsStructure {
    star: FiniteGroup,
    rho: PermGroup,
    bracoid: SkewBracoid,
}

impl HgsStructure {
    /// Validates `star` against the translation action of `space`.
    pub fn new(space: &CosetSpace, star: FiniteGroup) -> Result<Self> {
        let bracoid = SkewBracoid::new(space.g().clone(), star.clone(), space.translation().to_vec())?;
        let rho = right_regular(&star);
        let structure = HgsStructure { star, rho, bracoid };
        structure.check_stability()?;
        Ok(structure)
    }

    /// `lambda(g) rho(x) lambda(g)^-1 = rho(gamma(g) x)` for all `g` and `x`.
    fn check_stability(&self) -> Result<()> {
        let star = &self.star;
        let rho_of = |y: usize| {
            let yi = star.inv(y);
            Permutation::from_images(star.elements().map(|x| star.mul(x, yi)).collect()).expect("row")
        };
        for (g, l) in self.bracoid.action().iter().enumerate() {
            let gamma = self.bracoid.gamma_of(g);
            for x in star.elements() {
                if l.conjugate(&rho_of(x)) != rho_of(gamma.apply(x)) {
                    return Err(Error::Inconsistent(format!("rho(X) is not stable at ({g}, {x})")));
                }
            }
        }
        Ok(())
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn rho(&self) -> &PermGroup {
        &self.rho
    }

    pub fn bracoid(&self) -> &SkewBracoid {
        &self.bracoid
    }
}

/// Every Hopf-Galois structure on `X`, in lexicographic order of the star
/// tables. Candidate operations come from relabelling each abstract group of
/// order `|X|` along bijections fixing the identity; a candidate is kept when
/// the translation generators normalize its `rho(X)` and the full bracoid
/// check passes.
pub fn enumerate_hgs(space: &CosetSpace, limits: &Limits) -> Result<Vec<HgsStructure>> {
    let m = space.degree();
    limits.check_hgs(m)?;
    let gens: Vec<&Permutation> = space
        .g()
        .generating_set()
        .into_iter()
        .map(|g| &space.translation()[g])
        .collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found: Vec<(Vec<usize>, FiniteGroup)> = Vec::new();
    for (_, t) in small_groups::groups_of_order(m)? {
        for tail in itertools::Itertools::permutations(1..m, m.saturating_sub(1)) {
            // f: T -> X with f(0) = 0
            let mut f = vec![0; m];
            f[1..].copy_from_slice(&tail);
            let mut table = vec![0; m * m];
            for a in 0..m {
                for b in 0..m {
                    table[f[a] * m + f[b]] = f[t.mul(a, b)];
                }
            }
            if !seen.insert(table.clone()) {
                continue;
            }
            let star = FiniteGroup::from_flat_trusted(m, table.clone());
            if gens.iter().all(|p| permgroup::is_in_holomorph(&star, p)) {
                found.push((table, star));
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
        .into_iter()
        .map(|(_, star)| HgsStructure::new(space, star))
        .collect()
}

/// The structure with `*` replaced by its opposite. The new `rho(X)` is
/// computed from the transposed table and checked against the centralizer of
/// the old one in `Perm(X)`.
pub fn opposite_hgs(space: &CosetSpace, h: &HgsStructure, limits: &Limits) -> Result<HgsStructure> {
    let op = HgsStructure::new(space, h.star.opposite())?;
    let centralizer = h.rho.centralizer_in_symmetric(limits)?;
    if centralizer != op.rho {
        return Err(Error::Inconsistent("rho of the opposite is not the centralizer".into()));
    }
    Ok(op)
}

/// Automorphisms of `G` mapping `G'` onto itself.
fn automorphisms_fixing(space: &CosetSpace, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    limits.check_automorphisms(space.g().order())?;
    Ok(homsearch::automorphisms(space.g())
        .into_iter()
        .filter(|phi| {
            let image = to_element_set(space.g_prime().iter().map(|&x| phi[x]).collect());
            image == space.g_prime()
        })
        .collect())
}

/// Isomorphism classes: `i` and `j` are isomorphic when some automorphism
/// `phi` of `G` with `phi(G') = G'` conjugates `rho_i` to `rho_j` through the
/// induced permutation of `X`. Returns a class id per structure, numbered by
/// first occurrence. Each class size is checked to equal
/// `|Aut_{G'}(G)| / |Aut_{G',*}(G)|`.
pub fn hgs_isomorphism_classes(space: &CosetSpace, structures: &[HgsStructure], limits: &Limits) -> Result<Vec<usize>> {
    let auts: Vec<Permutation> = automorphisms_fixing(space, limits)?
        .iter()
        .map(|phi| space.induced(phi))
        .collect();
    let mut class = vec![usize::MAX; structures.len()];
    let mut next = 0;
    for i in 0..structures.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let rho = &structures[i].rho;
        let mut orbit: Vec<PermGroup> = auts.iter().map(|t| rho.conjugate_by(t)).collect();
        let stabilizer = orbit.iter().filter(|c| *c == rho).count();
        orbit.sort();
        orbit.dedup();
        for c in &orbit {
            let j = structures
                .iter()
                .position(|s| &s.rho == c)
                .ok_or_else(|| Error::Inconsistent("conjugate structure missing from the list".into()))?;
            class[j] = next;
        }
        if orbit.len() * stabilizer != auts.len() {
            return Err(Error::Inconsistent("class size disagrees with the index formula".into()));
        }
        next += 1;
    }
    Ok(class)
}

/// The Hopf-Galois correspondence entry of a left ideal `Y` of `(G, X)`:
/// `Y` is realizable with fixed field `E^{G_Y}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceEntry {
    #[serde(rename = "Y")]
    pub y: ElementSet,
    #[serde(rename = "G_Y")]
    pub g_y: ElementSet,
    pub realizable_field: ElementSet,
    pub has_quotient_structure: bool,
    #[serde(rename = "field_is_galois_over_K")]
    pub field_is_galois: bool,
}

/// One entry per left ideal, ordered by `|Y|`.
pub fn hg_correspondence(space: &CosetSpace, h: &HgsStructure, limits: &Limits) -> Result<Vec<CorrespondenceEntry>> {
    let mut entries = Vec::new();
    for report in substructure::enumerate_ideals(&h.bracoid, limits)? {
        if !report.is_left_ideal {
            continue;
        }
        let g_y = report.g_m;
        let image = to_element_set(g_y.iter().map(|&g| space.coset_of(g)).collect());
        if image != report.subset
            || !is_subset(space.g_prime(), &g_y)
            || g_y.len() != space.g_prime().len() * report.subset.len()
        {
            return Err(Error::Inconsistent("G_Y does not project onto Y".into()));
        }
        entries.push(CorrespondenceEntry {
            y: report.subset,
            realizable_field: g_y.clone(),
            has_quotient_structure: report.is_ideal,
            field_is_galois: space.g().is_normal(&g_y),
            g_y,
        });
    }
    Ok(entries)
}

/// `ker(lambda)`, checked to be the normal core of `G'` (the group of `E`
/// over the Galois closure of `L/K`).
pub fn galois_closure_check(space: &CosetSpace, h: &HgsStructure) -> Result<ElementSet> {
    let kernel = h.bracoid.kernel_lambda();
    if kernel != space.g().normal_core(space.g_prime())? {
        return Err(Error::Inconsistent("ker(lambda) is not the core of G'".into()));
    }
    Ok(kernel)
}

/// A skew brace on `G` with `G'` a strong left ideal whose quotient bracoid
/// is equivalent to a given Hopf-Galois structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceQuotientWitness {
    pub brace: SkewBrace,
    pub ideal: ElementSet,
}

/// Searches the skew braces with multiplicative group `G` (the structures on
/// `G/{e}`) in enumeration order for one realizing `h` as a brace quotient.
/// `None` only means that no witness exists among those braces.
pub fn detect_brace_quotient(space: &CosetSpace, h: &HgsStructure, limits: &Limits) -> Result<Option<BraceQuotientWitness>> {
    limits.check_exhaustive(space.g().order())?;
    let regular = CosetSpace::new(space.g(), &[0])?;
    for s in enumerate_hgs(&regular, limits)? {
        // cosets of {e} are singletons, so X is G with the same labels
        let brace = SkewBrace::new(s.star.clone(), space.g().clone())?;
        if !brace.is_strong_left_ideal(space.g_prime()) {
            continue;
        }
        let (quotient, _) = brace.quotient_bracoid(space.g_prime())?;
        if quotient.is_equivalent(&h.bracoid) {
            return Ok(Some(BraceQuotientWitness {
                brace,
                ideal: space.g_prime().to_vec(),
            }));
        }
    }
    Ok(None)
}

/// Convenience: the coset space of `G` by the subgroup generated by `gens`.
pub fn coset_space_from_generators(g: &FiniteGroup, gens: &[usize]) -> Result<CosetSpace> {
    if gens.iter().any(|&x| x >= g.order()) {
        return Err(Error::InvalidParameter("generator out of range".into()));
    }
    let sub = g.generate(gens);
    debug_assert!(is_sorted_set(&sub));
    CosetSpace::new(g, &sub)
}
