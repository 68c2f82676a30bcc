//! One representative of every isomorphism class of groups of order at most 8.

use crate::error::{Error, Result};
use crate::families::{cyclic, dihedral, direct_product, quaternion, symmetric};
use crate::group::FiniteGroup;

/// Largest order covered by [`groups_of_order`].
pub const MAX_CATALOG_ORDER: usize = 8;

/// Names (in the group notation accepted by the CLI) of the groups of order `n`.
pub fn names_of_order(n: usize) -> Result<&'static [&'static str]> {
    Ok(match n {
        1 => &["C1"],
        2 => &["C2"],
        3 => &["C3"],
        4 => &["C4", "C2xC2"],
        5 => &["C5"],
        6 => &["C6", "S3"],
        7 => &["C7"],
        8 => &["C8", "C4xC2", "C2xC2xC2", "D4", "Q8"],
        0 => return Err(Error::ZeroOrder),
        _ => {
            return Err(Error::BoundExceeded {
                what: "small group catalog",
                size: n,
                bound: MAX_CATALOG_ORDER,
            })
        }
    })
}

/// The groups of order `n`, pairwise non-isomorphic, with their names.
pub fn groups_of_order(n: usize) -> Result<Vec<(&'static str, FiniteGroup)>> {
    let c2 = || cyclic(2).expect("C2");
    names_of_order(n)?
        .iter()
        .map(|&name| {
            let g = match name {
                "C2xC2" => direct_product(&c2(), &c2()),
                "C4xC2" => direct_product(&cyclic(4)?, &c2()),
                "C2xC2xC2" => direct_product(&c2(), &direct_product(&c2(), &c2())),
                "S3" => symmetric(3)?,
                "D4" => dihedral(4)?,
                "Q8" => quaternion(),
                _ => cyclic(name[1..].parse().expect("catalog name"))?,
            };
            Ok((name, g))
        })
        .collect()
}
