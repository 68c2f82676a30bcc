//! Enumeration drivers producing the records printed by the command-line tool.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bracoid::SkewBracoid;
use crate::error::Result;
use crate::group::{ElementSet, FiniteGroup, GroupHom};
use crate::homsearch::{self, HomKind};
use crate::hopf_galois::{self, CorrespondenceEntry, CosetSpace};
use crate::limits::Limits;
use crate::morphism;
use crate::notation::BracoidJson;
use crate::permgroup::{self, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    #[serde(rename = "N_spec")]
    pub n_spec: String,
    #[serde(rename = "G_spec")]
    pub g_spec: Option<String>,
    pub equivalence_class_id: usize,
    pub isomorphism_class_id: usize,
    pub lambda_image_order: usize,
    pub reduced: bool,
    pub bracoid: BracoidJson,
}

/// First surjection `g -> a` in search order.
fn first_surjection(g: &FiniteGroup, a: &FiniteGroup) -> Option<GroupHom> {
    let mut found = None;
    homsearch::for_each_hom(g, a, HomKind::Surjective, |images| {
        found = Some(images.to_vec());
        ControlFlow::Break(())
    });
    found.map(|images| GroupHom::new(g.clone(), a.clone(), images).expect("search yields homomorphisms"))
}

/// One bracoid per equivalence class on `N`, i.e. per transitive subgroup `A`
/// of `Hol(N)` in canonical order. With `G` given, only classes admitting a
/// surjection `G -> A` are kept, realized through the first one found.
/// Isomorphism class ids are assigned by first occurrence, comparing reduced
/// forms.
pub fn enumerate_classes(
    n_spec: &str,
    n: &FiniteGroup,
    g: Option<(&str, &FiniteGroup)>,
    limits: &Limits,
) -> Result<Vec<ClassificationRecord>> {
    let hol = permgroup::holomorph(n, limits)?;
    let mut records = Vec::new();
    let mut representatives: Vec<SkewBracoid> = Vec::new();
    for (class_id, a) in hol.transitive_subgroups(limits)?.iter().enumerate() {
        let bracoid = match g {
            None => SkewBracoid::from_hol_subgroup(n, a, None)?,
            Some((_, g)) => match first_surjection(g, &a.to_finite_group()) {
                Some(delta) => SkewBracoid::from_hol_subgroup(n, a, Some(&delta))?,
                None => continue,
            },
        };
        let (reduced, _) = bracoid.reduced_form();
        let mut iso_id = None;
        for (i, rep) in representatives.iter().enumerate() {
            if morphism::find_isomorphism(rep, &reduced, limits)?.is_some() {
                iso_id = Some(i);
                break;
            }
        }
        let iso_id = iso_id.unwrap_or_else(|| {
            representatives.push(reduced);
            representatives.len() - 1
        });
        records.push(ClassificationRecord {
            n_spec: n_spec.to_string(),
            g_spec: g.map(|(spec, _)| spec.to_string()),
            equivalence_class_id: class_id,
            isomorphism_class_id: iso_id,
            lambda_image_order: a.order(),
            reduced: bracoid.is_reduced(),
            bracoid: BracoidJson::of(&bracoid),
        });
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HgsRecord {
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "G_prime")]
    pub g_prime: ElementSet,
    pub star_table: Vec<Vec<usize>>,
    pub rho_gens: Vec<String>,
    pub iso_class: usize,
    pub correspondence: Vec<CorrespondenceEntry>,
}

/// Every Hopf-Galois structure on `G/G'` with its isomorphism class and
/// correspondence data.
pub fn hgs_records(g_spec: &str, space: &CosetSpace, limits: &Limits) -> Result<Vec<HgsRecord>> {
    let structures = hopf_galois::enumerate_hgs(space, limits)?;
    let classes = hopf_galois::hgs_isomorphism_classes(space, &structures, limits)?;
    structures
        .iter()
        .zip(classes)
        .map(|(h, iso_class)| {
            Ok(HgsRecord {
                g: g_spec.to_string(),
                g_prime: space.g_prime().to_vec(),
                star_table: h.star().rows(),
                rho_gens: rho_generators(h.rho()),
                iso_class,
                correspondence: hopf_galois::hg_correspondence(space, h, limits)?,
            })
        })
        .collect()
}

fn rho_generators(rho: &PermGroup) -> Vec<String> {
    rho.generators().iter().map(|p| p.to_cycle_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, dihedral};

    #[test]
    fn classes_on_c4() {
        let l = Limits::default();
        let c4 = cyclic(4).unwrap();
        let records = enumerate_classes("C4", &c4, None, &l).unwrap();
        assert_eq!(records.len(), 3);
        let orders: Vec<usize> = records.iter().map(|r| r.lambda_image_order).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 2);
        let d4 = dihedral(4).unwrap();
        let with_g = enumerate_classes("C4", &c4, Some(("D4", &d4)), &l).unwrap();
        let family = SkewBracoid::dihedral_on_cyclic(4, 4).unwrap();
        assert!(with_g.iter().any(|r| r.bracoid.build().unwrap().is_equivalent(&family)));
        let trivial = enumerate_classes("C1", &FiniteGroup::trivial(), None, &l).unwrap();
        assert_eq!(trivial.len(), 1);
    }
}
