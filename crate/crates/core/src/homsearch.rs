//! Backtracking search for homomorphisms between Cayley-table groups.
//!
//! A homomorphism is determined by the images of a generating set. Every
//! element of the domain is reached from the identity by right multiplication
//! with generators; images are propagated along that tree and the candidate is
//! accepted when `f(x * s) = f(x) * f(s)` holds for every `x` and generator `s`.

use std::ops::ControlFlow;

use crate::group::{FiniteGroup, GroupHom};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomKind {
    Any,
    Injective,
    Surjective,
}

struct WordTree {
    gens: Vec<usize>,
    /// `(element, parent, generator index)` in breadth-first order, identity omitted.
    steps: Vec<(usize, usize, usize)>,
}

impl WordTree {
    fn new(group: &FiniteGroup) -> Self {
        let gens = group.generating_set();
        let mut seen = vec![false; group.order()];
        seen[0] = true;
        let mut queue = vec![0];
        let mut steps = Vec::with_capacity(group.order());
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (k, &s) in gens.iter().enumerate() {
                let y = group.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                    steps.push((y, x, k));
                }
            }
            i += 1;
        }
        WordTree { gens, steps }
    }
}

/// Calls `visit` with the image array of every homomorphism of the requested
/// kind, in lexicographic order of the generator images. Stops early when
/// `visit` breaks.
pub fn for_each_hom<F>(domain: &FiniteGroup, codomain: &FiniteGroup, kind: HomKind, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    match kind {
        HomKind::Injective if codomain.order() % domain.order() != 0 => return,
        HomKind::Surjective if domain.order() % codomain.order() != 0 => return,
        _ => {}
    }
    let tree = WordTree::new(domain);
    let candidates: Vec<Vec<usize>> = tree
        .gens
        .iter()
        .map(|&s| {
            let ord = domain.element_order(s);
            codomain
                .elements()
                .filter(|&y| {
                    let oy = codomain.element_order(y);
                    match kind {
                        HomKind::Injective => oy == ord,
                        _ => ord % oy == 0,
                    }
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut choice = vec![0usize; tree.gens.len()];
    let mut images = vec![0usize; domain.order()];
    let mut hit = vec![u32::MAX; codomain.order()];
    let mut stamp = 0u32;
    loop {
        for &(y, x, k) in &tree.steps {
            images[y] = codomain.mul(images[x], candidates[k][choice[k]]);
        }
        let is_hom = domain.elements().all(|x| {
            tree.gens.iter().enumerate().all(|(k, &s)| {
                images[domain.mul(x, s)] == codomain.mul(images[x], candidates[k][choice[k]])
            })
        });
        if is_hom {
            let accept = match kind {
                HomKind::Any => true,
                HomKind::Injective | HomKind::Surjective => {
                    stamp += 1;
                    let mut distinct = 0;
                    for &v in &images {
                        if hit[v] != stamp {
                            hit[v] = stamp;
                            distinct += 1;
                        }
                    }
                    if kind == HomKind::Injective {
                        distinct == domain.order()
                    } else {
                        distinct == codomain.order()
                    }
                }
            };
            if accept && visit(&images).is_break() {
                return;
            }
        }
        // odometer, last generator fastest
        let mut k = tree.gens.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn collect(domain: &FiniteGroup, codomain: &FiniteGroup, kind: HomKind) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_hom(domain, codomain, kind, |imgs| {
        out.push(imgs.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Every homomorphism `domain -> codomain` as an image array.
pub fn homomorphisms(domain: &FiniteGroup, codomain: &FiniteGroup) -> Vec<Vec<usize>> {
    collect(domain, codomain, HomKind::Any)
}

pub fn surjections(domain: &FiniteGroup, codomain: &FiniteGroup) -> Vec<Vec<usize>> {
    collect(domain, codomain, HomKind::Surjective)
}

pub fn isomorphisms(a: &FiniteGroup, b: &FiniteGroup) -> Vec<Vec<usize>> {
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return Vec::new();
    }
    collect(a, b, HomKind::Injective)
}

/// Automorphisms as image arrays, sorted lexicographically.
pub fn automorphisms(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut all = collect(group, group, HomKind::Injective);
    all.sort();
    all
}

/// First isomorphism found, after an element-order prefilter.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return None;
    }
    let mut found = None;
    for_each_hom(a, b, HomKind::Injective, |imgs| {
        found = Some(imgs.to_vec());
        ControlFlow::Break(())
    });
    found.map(|imgs| GroupHom::new(a.clone(), b.clone(), imgs).expect("search yields homomorphisms"))
}

pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}
