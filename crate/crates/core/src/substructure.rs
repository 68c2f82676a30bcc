//! Left ideals, ideals and enhanced ideals of a skew bracoid, with the
//! sub-bracoids and quotient bracoids they determine.

use serde::{Deserialize, Serialize};

use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::group::{is_sorted_set, is_subset, ElementSet, GroupHom};
use crate::limits::Limits;
use crate::perm::Permutation;

/// How a subset `M` of `N` sits in the bracoid. `g_m` is `{g : g o e in M}`
/// for left ideals and empty otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub subset: ElementSet,
    #[serde(rename = "left_ideal")]
    pub is_left_ideal: bool,
    #[serde(rename = "ideal")]
    pub is_ideal: bool,
    #[serde(rename = "enhanced_left_ideal")]
    pub is_enhanced_left_ideal: bool,
    #[serde(rename = "enhanced_ideal")]
    pub is_enhanced_ideal: bool,
    #[serde(rename = "G_M")]
    pub g_m: ElementSet,
}

impl IdealReport {
    fn flags(&self) -> [bool; 4] {
        [
            self.is_left_ideal,
            self.is_ideal,
            self.is_enhanced_left_ideal,
            self.is_enhanced_ideal,
        ]
    }

    /// Whether both reports carry the same four classification flags.
    pub fn same_flags(&self, other: &IdealReport) -> bool {
        self.flags() == other.flags()
    }
}

fn is_gamma_stable(b: &SkewBracoid, m: &[usize]) -> bool {
    b.g().elements().all(|g| {
        let gamma = b.gamma_of(g);
        m.iter().all(|&x| m.binary_search(&gamma.apply(x)).is_ok())
    })
}

/// Classifies `m`. Never fails: anything that is not a subgroup gets an
/// all-false report.
pub fn classify_subset(b: &SkewBracoid, m: &[usize]) -> IdealReport {
    let mut report = IdealReport {
        subset: m.to_vec(),
        is_left_ideal: false,
        is_ideal: false,
        is_enhanced_left_ideal: false,
        is_enhanced_ideal: false,
        g_m: Vec::new(),
    };
    if !is_sorted_set(m) || !b.n().is_subgroup(m) || !is_gamma_stable(b, m) {
        return report;
    }
    report.is_left_ideal = true;
    report.is_ideal = b.n().is_normal(m);
    report.g_m = b.g().elements().filter(|&g| m.binary_search(&b.pi(g)).is_ok()).collect();
    report.is_enhanced_left_ideal = b.g().is_normal(&report.g_m);
    report.is_enhanced_ideal = report.is_ideal && report.is_enhanced_left_ideal;
    report
}

/// The sub-bracoid `(G_M, M)`. Elements of both groups are relabelled by
/// their rank in `G_M` and `M`; the embeddings are returned alongside.
pub fn sub_bracoid(b: &SkewBracoid, m: &[usize]) -> Result<(SkewBracoid, ElementSet, ElementSet)> {
    let report = classify_subset(b, m);
    if !report.is_left_ideal {
        return Err(Error::NotLeftIdeal);
    }
    let (gm, g_embed) = b.g().subgroup_as_group(&report.g_m)?;
    let (mm, m_embed) = b.n().subgroup_as_group(m)?;
    let action = g_embed
        .iter()
        .map(|&g| {
            let images = m_embed
                .iter()
                .map(|&eta| m_embed.binary_search(&b.act(g, eta)).expect("G_M preserves M"))
                .collect();
            Permutation::from_images(images).expect("restriction of a permutation")
        })
        .collect();
    Ok((SkewBracoid::new(gm, mm, action)?, g_embed, m_embed))
}

/// `M_H = {h o e : h in H}` for a subgroup `H` of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSubgroup {
    pub subset: ElementSet,
    pub gamma_stable: bool,
}

impl OrbitSubgroup {
    /// `M_H` when it is stable under `gamma(G)`, in which case it is a left ideal.
    pub fn left_ideal(&self) -> Option<&ElementSet> {
        self.gamma_stable.then_some(&self.subset)
    }
}

pub fn orbit_subgroup(b: &SkewBracoid, h: &[usize]) -> Result<OrbitSubgroup> {
    if !is_sorted_set(h) || !b.g().is_subgroup(h) {
        return Err(Error::NotSubgroup);
    }
    let subset = crate::group::to_element_set(h.iter().map(|&x| b.pi(x)).collect());
    let gamma_stable = is_gamma_stable(b, &subset);
    Ok(OrbitSubgroup { subset, gamma_stable })
}

/// The bracoid `(G, N/M)` with `g o (eta M) = (g o eta) M`, and the
/// projection `N -> N/M`. Cosets are labelled by their least element.
pub fn quotient_bracoid(b: &SkewBracoid, m: &[usize]) -> Result<(SkewBracoid, GroupHom)> {
    if !classify_subset(b, m).is_ideal {
        return Err(Error::NotIdeal);
    }
    let (quotient, projection) = b.n().quotient(m)?;
    let cosets = b.n().left_cosets(m)?;
    let action = b
        .g()
        .elements()
        .map(|g| {
            let images = cosets.iter().map(|c| projection.apply(b.act(g, c[0]))).collect();
            Permutation::from_images(images).expect("action permutes cosets")
        })
        .collect();
    Ok((SkewBracoid::new(b.g().clone(), quotient, action)?, projection))
}

/// For an ideal `M`: whether `M` is enhanced, and, computed separately,
/// whether the reduced form of `(G, N/M)` is essentially a skew brace.
pub fn enhanced_iff_brace_check(b: &SkewBracoid, m: &[usize]) -> Result<(bool, bool)> {
    let report = classify_subset(b, m);
    if !report.is_ideal {
        return Err(Error::NotIdeal);
    }
    let (quotient, _) = quotient_bracoid(b, m)?;
    let (reduced, _) = quotient.reduced_form();
    Ok((report.is_enhanced_left_ideal, reduced.is_essentially_brace()))
}

/// A subgroup `P` of `N` containing `M`, classified in `(G, N)`, next to its
/// image `P/M` classified in `(G, N/M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondingPair {
    pub upper: IdealReport,
    pub lower: IdealReport,
}

/// Pairs every subgroup of `N` containing the ideal `M` with its image in
/// `N/M`, after checking that this is a bijection onto the subgroups of `N/M`.
pub fn ideal_correspondence(b: &SkewBracoid, m: &[usize], limits: &Limits) -> Result<Vec<CorrespondingPair>> {
    let (quotient, projection) = quotient_bracoid(b, m)?;
    let above: Vec<ElementSet> = b
        .n()
        .subgroups(limits)?
        .into_iter()
        .filter(|p| is_subset(m, p))
        .collect();
    let mut images: Vec<ElementSet> = above
        .iter()
        .map(|p| crate::group::to_element_set(p.iter().map(|&x| projection.apply(x)).collect()))
        .collect();
    let pairs = above
        .iter()
        .zip(&images)
        .map(|(p, q)| CorrespondingPair {
            upper: classify_subset(b, p),
            lower: classify_subset(&quotient, q),
        })
        .collect();
    images.sort();
    let mut below = quotient.n().subgroups(limits)?;
    below.sort();
    if images != below {
        return Err(Error::Inconsistent(
            "subgroups containing M do not match the subgroups of N/M".into(),
        ));
    }
    Ok(pairs)
}

/// One report per subgroup of `N`, ordered by (order, elements).
pub fn enumerate_ideals(b: &SkewBracoid, limits: &Limits) -> Result<Vec<IdealReport>> {
    Ok(b.n()
        .subgroups(limits)?
        .iter()
        .map(|m| classify_subset(b, m))
        .collect())
}
