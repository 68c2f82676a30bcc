//! Finite groups stored as Cayley tables over `0..order`, identity at index 0.
//!
//! Subsets of a group (subgroups, cosets, kernels) are passed around as sorted,
//! duplicate-free `Vec<usize>`; see [`ElementSet`].

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Sorted, duplicate-free list of element indices.
pub type ElementSet = Vec<usize>;

/// Largest order for which associativity is checked on every triple.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps a Cayley table given as rows (`rows[a][b] = a * b`).
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {x} out of range")));
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(Error::InvalidTable(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let x = table[a * order + b];
                if seen[x] == a {
                    return Err(Error::InvalidTable(format!("row {a} repeats {x}")));
                }
                seen[x] = a;
            }
        }
        let mut seen = vec![usize::MAX; order];
        for b in 0..order {
            for a in 0..order {
                let x = table[a * order + b];
                if seen[x] == b {
                    return Err(Error::InvalidTable(format!("column {b} repeats {x}")));
                }
                seen[x] = b;
            }
        }
        let group = Self::from_flat_trusted(order, table);
        group.check_associativity()?;
        Ok(group)
    }

    /// Skips validation; the caller guarantees a group table with identity 0.
    pub(crate) fn from_flat_trusted(order: usize, table: Vec<usize>) -> Self {
        let mut inverses = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverses[a] = b;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            table,
            inverses,
        }
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let sample: Vec<usize> = if n <= EXHAUSTIVE_ASSOCIATIVITY {
            (0..n).collect()
        } else {
            // all pairs against a spread of third elements
            (0..n).step_by(n / 16).collect()
        };
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for &c in &sample {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_flat_trusted(1, vec![0])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Multiset of element orders, sorted; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        p.sort_unstable();
        p
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The opposite group: `a *op b = b * a`, i.e. the transposed table.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        Self::from_flat_trusted(n, table)
    }

    /// Subgroup generated by `gens`, as a sorted element set.
    pub fn generate(&self, gens: &[usize]) -> ElementSet {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if set.is_empty() || set.iter().any(|&x| x >= self.order) {
            return false;
        }
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        member[0] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    fn require_subgroup(&self, set: &[usize]) -> Result<()> {
        if is_sorted_set(set) && self.is_subgroup(set) {
            Ok(())
        } else {
            Err(Error::NotSubgroup)
        }
    }

    /// `g H g^-1` as a sorted set.
    pub fn conjugate_set(&self, g: usize, set: &[usize]) -> ElementSet {
        let gi = self.inv(g);
        let mut out: Vec<usize> = set.iter().map(|&h| self.mul(self.mul(g, h), gi)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        self.is_subgroup(set) && {
            let mut member = vec![false; self.order];
            for &x in set {
                member[x] = true;
            }
            self.elements().all(|g| {
                let gi = self.inv(g);
                set.iter().all(|&h| member[self.mul(self.mul(g, h), gi)])
            })
        }
    }

    /// Left cosets `gH`, each sorted, ordered by their least element (so `H` is first).
    pub fn left_cosets(&self, subgroup: &[usize]) -> Result<Vec<ElementSet>> {
        self.require_subgroup(subgroup)?;
        let mut assigned = vec![false; self.order];
        let mut cosets = Vec::with_capacity(self.order / subgroup.len());
        for g in 0..self.order {
            if assigned[g] {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                assigned[x] = true;
            }
            cosets.push(coset);
        }
        Ok(cosets)
    }

    /// Largest normal subgroup contained in `subgroup`.
    pub fn normal_core(&self, subgroup: &[usize]) -> Result<ElementSet> {
        self.require_subgroup(subgroup)?;
        let mut core: Vec<usize> = subgroup.to_vec();
        for g in self.elements() {
            let conj = self.conjugate_set(g, subgroup);
            core.retain(|x| conj.binary_search(x).is_ok());
        }
        Ok(core)
    }

    pub fn centralizer(&self, set: &[usize]) -> ElementSet {
        self.elements()
            .filter(|&g| set.iter().all(|&h| self.mul(g, h) == self.mul(h, g)))
            .collect()
    }

    /// Quotient by a normal subgroup. Cosets are labelled in order of their
    /// least element, so the label of `gK` is the rank of `min(gK)`.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, GroupHom)> {
        self.require_subgroup(normal)?;
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let cosets = self.left_cosets(normal)?;
        let mut label = vec![0; self.order];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                label[x] = i;
            }
        }
        let m = cosets.len();
        let mut table = vec![0; m * m];
        for (i, ci) in cosets.iter().enumerate() {
            for (j, cj) in cosets.iter().enumerate() {
                table[i * m + j] = label[self.mul(ci[0], cj[0])];
            }
        }
        let quotient = FiniteGroup::from_flat_trusted(m, table);
        let projection = GroupHom::new(self.clone(), quotient.clone(), label)?;
        Ok((quotient, projection))
    }

    /// Relabels a subgroup as a group in its own right. Element `i` of the
    /// result is `subgroup[i]`; the embedding is returned alongside.
    pub fn subgroup_as_group(&self, subgroup: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        self.require_subgroup(subgroup)?;
        let m = subgroup.len();
        let mut table = vec![0; m * m];
        for (i, &a) in subgroup.iter().enumerate() {
            for (j, &b) in subgroup.iter().enumerate() {
                table[i * m + j] = subgroup.binary_search(&self.mul(a, b)).unwrap();
            }
        }
        Ok((FiniteGroup::from_flat_trusted(m, table), subgroup.to_vec()))
    }

    /// A small generating set, built greedily by always adding the element
    /// that enlarges the generated subgroup the most (least index on ties).
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        while current.len() < self.order {
            let mut best: Option<(usize, ElementSet)> = None;
            for a in 0..self.order {
                if current.binary_search(&a).is_ok() {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(a);
                let sub = self.generate(&trial);
                if best.as_ref().is_none_or(|(_, b)| sub.len() > b.len()) {
                    let full = sub.len() == self.order;
                    best = Some((a, sub));
                    if full {
                        break;
                    }
                }
            }
            let (a, sub) = best.expect("proper subgroup has an outside element");
            gens.push(a);
            current = sub;
        }
        gens
    }

    /// All subgroups, each as a sorted element set, ordered by (order, elements).
    pub fn subgroups(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        limits.check_subgroup_search(self.order)?;
        Ok(crate::subgroups::all_subgroups(self))
    }

    pub fn normal_subgroups(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        Ok(self
            .subgroups(limits)?
            .into_iter()
            .filter(|s| self.is_normal(s))
            .collect())
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}

pub(crate) fn is_sorted_set(set: &[usize]) -> bool {
    set.windows(2).all(|w| w[0] < w[1])
}

/// Sorted copy with duplicates removed.
pub fn to_element_set(mut v: Vec<usize>) -> ElementSet {
    v.sort_unstable();
    v.dedup();
    v
}

pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// A verified group homomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.order() || images.iter().any(|&x| x >= codomain.order()) {
            return Err(Error::InvalidTable("homomorphism image array has wrong shape".into()));
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if images[domain.mul(a, b)] != codomain.mul(images[a], images[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        Ok(GroupHom {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            domain: group.clone(),
            codomain: group.clone(),
            images: group.elements().collect(),
        }
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn kernel(&self) -> ElementSet {
        self.domain.elements().filter(|&a| self.images[a] == 0).collect()
    }

    pub fn image(&self) -> ElementSet {
        to_element_set(self.images.clone())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.codomain.order()
    }

    /// `self o first`
    pub fn after(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.codomain != self.domain {
            return Err(Error::InvalidTable("homomorphisms do not compose".into()));
        }
        Ok(GroupHom {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            images: first.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !(self.is_injective() && self.is_surjective()) {
            return Err(Error::NotSurjective);
        }
        let mut images = vec![0; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            images[b] = a;
        }
        Ok(GroupHom {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            images,
        })
    }
}
