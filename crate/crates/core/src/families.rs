//! Standard families of finite groups.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Largest `n` accepted by [`symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

/// `C_n`, element `i` standing for `eta^i`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    FiniteGroup::from_flat(n, table)
}

/// `D_n` of order `2n` with `r^n = s^2 = e` and `s r s^-1 = r^-1`.
/// Element `2i + j` stands for `r^i s^j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let m = 2 * n;
    let mut table = vec![0; m * m];
    for a in 0..m {
        let (i, j) = (a / 2, a % 2);
        for b in 0..m {
            let (k, l) = (b / 2, b % 2);
            // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j + l)
            let exp = if j == 0 { i + k } else { i + n - k % n };
            table[a * m + b] = 2 * (exp % n) + (j + l) % 2;
        }
    }
    FiniteGroup::from_flat(m, table)
}

/// `A x B` on pairs, `(a, b)` stored at index `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
        }
    }
    FiniteGroup::from_flat_trusted(n, table)
}

/// `S_n` on the permutations of `0..n` in lexicographic order
/// (so the identity comes first), multiplied as `(p * q)(x) = p(q(x))`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::BoundExceeded {
            what: "symmetric group degree",
            size: n,
            bound: MAX_SYMMETRIC_DEGREE,
        });
    }
    let mut perms: Vec<Permutation> = itertools::Itertools::permutations(0..n, n)
        .map(|p| Permutation::from_images(p).expect("itertools yields permutations"))
        .collect();
    perms.sort();
    Ok(crate::permgroup::cayley_table_of(&perms))
}

/// The quaternion group. Index `2k + s` is `(-1)^s * u_k` with `u = (1, i, j, k)`.
pub fn quaternion() -> FiniteGroup {
    // unit products u_a u_b = sign * u_c, encoded as (c, negative)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (c, neg) = UNIT[x / 2][y / 2];
            let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
            table[x * 8 + y] = 2 * c + sign;
        }
    }
    FiniteGroup::from_flat(8, table).expect("quaternion table is a group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homsearch::are_isomorphic;

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic(1).unwrap().rows(), vec![vec![0]]);
        let c4 = cyclic(4).unwrap();
        assert_eq!(c4.mul(1, 3), 0);
        let c6 = cyclic(6).unwrap();
        // order by repeated multiplication
        let mut x = 2;
        let mut k = 1;
        while x != 0 {
            x = c6.mul(x, 2);
            k += 1;
        }
        assert_eq!(k, 3);
        assert_eq!(c6.element_order(2), 3);
        assert_eq!(cyclic(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn dihedral_presentation() {
        let d4 = dihedral(4).unwrap();
        let (r, s) = (2, 1);
        // s r s = r^-1 = r^3 = index 6
        assert_eq!(d4.mul(d4.mul(s, r), s), 6);
        assert_eq!(d4.element_order(r), 4);
        assert_eq!(d4.element_order(s), 2);
        assert_eq!(dihedral(1).unwrap().order(), 2);
        assert!(are_isomorphic(&dihedral(3).unwrap(), &symmetric(3).unwrap()));
        assert!(!dihedral(3).unwrap().is_abelian());
        assert_eq!(dihedral(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn products() {
        let c2 = cyclic(2).unwrap();
        let v = direct_product(&c2, &c2);
        assert!((1..4).all(|a| v.element_order(a) == 2));
        let c4c2 = direct_product(&cyclic(4).unwrap(), &c2);
        assert_eq!(c4c2.order_profile(), vec![1, 2, 2, 2, 4, 4, 4, 4]);
        assert!(are_isomorphic(
            &direct_product(&c2, &cyclic(3).unwrap()),
            &cyclic(6).unwrap()
        ));
    }

    #[test]
    fn quaternion_and_symmetric() {
        let q = quaternion();
        assert_eq!(q.order_profile(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q.is_abelian());
        let s4 = symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert!(symmetric(7).is_err());
    }
}
