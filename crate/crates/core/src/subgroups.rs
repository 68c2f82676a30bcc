//! Exhaustive subgroup enumeration by cyclic extension.
//!
//! Every subgroup is generated by its cyclic subgroups of prime-power order
//! ("zuppos"). Numbering the zuppos, each subgroup `K` has a greedy generating
//! sequence: scan the zuppos of `K` in increasing order and keep those not yet
//! in the span. Subgroups are produced as a search tree in which the children
//! of `H` are the joins `<H, z>` whose greedy sequence is that of `H` followed
//! by `z`, so every subgroup appears exactly once and no deduplication is needed.

use fixedbitset::FixedBitSet;

use crate::group::{ElementSet, FiniteGroup};

const NONE: usize = usize::MAX;

fn is_prime_power(mut n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while n % p != 0 {
        p += 1;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

struct Node {
    bits: FixedBitSet,
    elems: Vec<usize>,
    gens: Vec<usize>,
    /// Index of the last zuppo in the greedy sequence.
    last: usize,
}

/// `<H, z>` as a union of right cosets of `H`, or `None` as soon as it picks
/// up a zuppo with index below `z` that `H` lacks.
fn child(group: &FiniteGroup, zuppo_of: &[usize], h: &Node, z: usize, a: usize) -> Option<Node> {
    let mut bits = h.bits.clone();
    let mut gens = h.gens.clone();
    gens.push(a);
    let mut reps = vec![0];
    let mut i = 0;
    while i < reps.len() {
        let x = reps[i];
        for &s in &gens {
            let y = group.mul(x, s);
            if !bits.contains(y) {
                for &e in &h.elems {
                    let w = group.mul(e, y);
                    if zuppo_of[w] < z {
                        return None;
                    }
                    bits.insert(w);
                }
                reps.push(y);
            }
        }
        i += 1;
    }
    let elems = bits.ones().collect();
    Some(Node {
        bits,
        elems,
        gens,
        last: z,
    })
}

pub(crate) fn all_subgroups(group: &FiniteGroup) -> Vec<ElementSet> {
    let n = group.order();
    // zuppos numbered by their least non-identity element
    let mut zuppo_of = vec![NONE; n];
    let mut zuppo_gen = Vec::new();
    for a in 1..n {
        if zuppo_of[a] != NONE || !is_prime_power(group.element_order(a)) {
            continue;
        }
        let id = zuppo_gen.len();
        zuppo_gen.push(a);
        let mut x = a;
        while x != 0 {
            // generators of <a> are exactly the powers coprime to the order,
            // which all share the zuppo; other powers have smaller order
            if group.element_order(x) == group.element_order(a) {
                zuppo_of[x] = id;
            }
            x = group.mul(x, a);
        }
    }

    let mut root_bits = FixedBitSet::with_capacity(n);
    root_bits.insert(0);
    let mut stack = vec![Node {
        bits: root_bits,
        elems: vec![0],
        gens: Vec::new(),
        last: NONE,
    }];
    let mut out = Vec::new();
    while let Some(h) = stack.pop() {
        let first = if h.last == NONE { 0 } else { h.last + 1 };
        for (z, &a) in zuppo_gen.iter().enumerate().skip(first) {
            if h.bits.contains(a) {
                continue;
            }
            if let Some(k) = child(group, &zuppo_of, &h, z, a) {
                stack.push(k);
            }
        }
        out.push(h.elems);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, dihedral, direct_product, quaternion, symmetric};

    /// Oracle: every subset closed under multiplication, by bitmask.
    fn brute_force_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                g.is_subgroup(&set)
            })
            .count()
    }

    #[test]
    fn counts_match_brute_force() {
        let c2 = cyclic(2).unwrap();
        for g in [
            FiniteGroup::trivial(),
            cyclic(6).unwrap(),
            direct_product(&c2, &c2),
            dihedral(3).unwrap(),
            dihedral(4).unwrap(),
            quaternion(),
            direct_product(&c2, &direct_product(&c2, &c2)),
            dihedral(6).unwrap(),
        ] {
            assert_eq!(all_subgroups(&g).len(), brute_force_count(&g), "{g:?}");
        }
    }

    #[test]
    fn known_counts() {
        // S_4 has 30 subgroups; C_12 has one per divisor
        assert_eq!(all_subgroups(&symmetric(4).unwrap()).len(), 30);
        assert_eq!(all_subgroups(&cyclic(12).unwrap()).len(), 6);
        assert_eq!(all_subgroups(&FiniteGroup::trivial()), vec![vec![0]]);
    }

    #[test]
    fn output_is_sorted_and_valid() {
        let g = dihedral(4).unwrap();
        let subs = all_subgroups(&g);
        assert!(subs.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        assert!(subs.iter().all(|s| g.is_subgroup(s)));
    }
}
