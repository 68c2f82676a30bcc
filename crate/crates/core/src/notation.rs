//! Textual and JSON notation for groups and bracoids.
//!
//! A group is written as `C<n>`, `D<n>` (order `2n`), `S<n>`, `Q8`, or a
//! product of these joined by `x` such as `C2xC4`. In JSON it may also be
//! `{"cayley": [[...], ...]}` or `{"perm_gens": ["(0 1 2)", ...], "degree": k}`.

use serde::{Deserialize, Serialize};

use crate::bracoid::SkewBracoid;
use crate::error::{Error, Result};
use crate::families::{cyclic, dihedral, direct_product, quaternion, symmetric};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Cayley { cayley: Vec<Vec<usize>> },
    Permutations { perm_gens: Vec<String>, degree: usize },
}

impl GroupSpec {
    pub fn of(group: &FiniteGroup) -> Self {
        GroupSpec::Cayley { cayley: group.rows() }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Name(name) => parse_group_name(name),
            GroupSpec::Cayley { cayley } => FiniteGroup::from_rows(cayley),
            GroupSpec::Permutations { perm_gens, degree } => {
                let gens = perm_gens
                    .iter()
                    .map(|s| Permutation::parse_cycles(*degree, s))
                    .collect::<Result<Vec<_>>>()?;
                Ok(PermGroup::closure(*degree, &gens)?.to_finite_group())
            }
        }
    }
}

fn parse_factor(text: &str) -> Result<FiniteGroup> {
    let bad = || Error::Parse(format!("unknown group {text:?}"));
    if text == "Q8" {
        return Ok(quaternion());
    }
    let mut chars = text.chars();
    let family = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    match family {
        'C' => cyclic(n),
        'D' => dihedral(n),
        'S' => symmetric(n),
        _ => Err(bad()),
    }
}

/// Parses a group name such as `D4` or `C2xC2xC2`.
pub fn parse_group_name(text: &str) -> Result<FiniteGroup> {
    let mut factors = text.trim().split('x').map(|f| parse_factor(f.trim()));
    let first = factors.next().ok_or_else(|| Error::Parse("empty group name".into()))??;
    factors.try_fold(first, |acc, f| Ok(direct_product(&acc, &f?)))
}

/// Parses either a group name or a JSON group object.
pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let text = text.trim();
    if text.starts_with('{') {
        let spec: GroupSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.build()
    } else {
        parse_group_name(text)
    }
}

/// `{"G": spec, "N": spec, "action": [[images of N under g] for g in G]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracoidJson {
    #[serde(rename = "G")]
    pub g: GroupSpec,
    #[serde(rename = "N")]
    pub n: GroupSpec,
    pub action: Vec<Vec<usize>>,
}

impl BracoidJson {
    pub fn of(b: &SkewBracoid) -> Self {
        BracoidJson {
            g: GroupSpec::of(b.g()),
            n: GroupSpec::of(b.n()),
            action: b.action().iter().map(|p| p.images().to_vec()).collect(),
        }
    }

    pub fn build(&self) -> Result<SkewBracoid> {
        let g = self.g.build()?;
        let n = self.n.build()?;
        let action = self
            .action
            .iter()
            .map(|row| Permutation::from_images(row.clone()))
            .collect::<Result<Vec<_>>>()?;
        SkewBracoid::new(g, n, action)
    }
}

/// Parses bracoid JSON. Malformed JSON is a [`Error::Parse`]; a well-formed
/// file describing something that is not a bracoid fails validation instead.
pub fn parse_bracoid(text: &str) -> Result<SkewBracoid> {
    let json: BracoidJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    json.build()
}

/// `{"phi": [...], "phi_n": [...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomJson {
    pub phi: Vec<usize>,
    pub phi_n: Vec<usize>,
}

impl HomJson {
    pub fn of(h: &crate::morphism::BracoidHom) -> Self {
        HomJson {
            phi: h.phi().images().to_vec(),
            phi_n: h.phi_n().to_vec(),
        }
    }
}
