use std::collections::HashMap;

use itertools::Itertools;

use super::{FiniteGroup, HomToAut, ORDER_CAP};
use crate::error::{Error, Result};

fn check_cap(order: u64) -> Result<usize> {
    if order == 0 || order > ORDER_CAP as u64 {
        return Err(Error::InvalidOrder {
            order,
            cap: ORDER_CAP,
        });
    }
    Ok(order as usize)
}

/// Names for pairs: plain concatenation when both factors use fixed-width
/// digit names (so `((1,0),1)` in `(Z3 x Z3) x Z2` reads `101`), otherwise
/// `(h,k)`.
fn pair_names(h: &FiniteGroup, k: &FiniteGroup) -> Vec<String> {
    let fixed_digits = |g: &FiniteGroup| {
        let width = g.names()[0].len();
        g.names()
            .iter()
            .all(|n| n.len() == width && n.bytes().all(|b| b.is_ascii_digit()))
    };
    let concat = fixed_digits(h) && fixed_digits(k);
    h.names()
        .iter()
        .cartesian_product(k.names())
        .map(|(a, b)| {
            if concat {
                format!("{a}{b}")
            } else {
                format!("({a},{b})")
            }
        })
        .collect()
}

impl FiniteGroup {
    /// The additive group of integers mod `n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        let n = check_cap(n)?;
        let table = (0..n)
            .flat_map(|g| (0..n).map(move |h| (g + h) % n))
            .collect();
        Ok(Self::from_trusted_table(
            n,
            table,
            (0..n).map(|g| g.to_string()).collect(),
        ))
    }

    /// `H x K` on pairs, indexed lexicographically: `(a, b)` is `a * |K| + b`.
    pub fn direct_product(h: &Self, k: &Self) -> Result<Self> {
        let (nh, nk) = (h.order(), k.order());
        let n = check_cap((nh * nk) as u64)?;
        let mut table = Vec::with_capacity(n * n);
        for (a, b) in (0..nh).cartesian_product(0..nk) {
            for (a2, b2) in (0..nh).cartesian_product(0..nk) {
                table.push(h.mul(a, a2) * nk + k.mul(b, b2));
            }
        }
        Ok(Self::from_trusted_table(n, table, pair_names(h, k)))
    }

    /// `H x_phi K` with `(a, b)(a', b') = (a phi_b(a'), b b')`, indexed like
    /// [`FiniteGroup::direct_product`].
    pub fn semidirect(h: &Self, k: &Self, phi: &HomToAut) -> Result<Self> {
        phi.validate(k, h)?;
        let (nh, nk) = (h.order(), k.order());
        let n = check_cap((nh * nk) as u64)?;
        let mut table = Vec::with_capacity(n * n);
        for (a, b) in (0..nh).cartesian_product(0..nk) {
            let act = phi.image(b);
            for (a2, b2) in (0..nh).cartesian_product(0..nk) {
                table.push(h.mul(a, act.apply(a2)) * nk + k.mul(b, b2));
            }
        }
        Ok(Self::from_trusted_table(n, table, pair_names(h, k)))
    }

    /// Dihedral group of order `2n`, as `Z_n x Z_2` with `Z_2` acting by
    /// inversion. Rotations are `(r, 0)`, reflections `(r, 1)`.
    pub fn dihedral(n: u64) -> Result<Self> {
        check_cap(2 * n)?;
        let rotations = Self::cyclic(n)?;
        let flip = Self::cyclic(2)?;
        let phi = HomToAut::new(
            &flip,
            &rotations,
            vec![
                super::Automorphism::identity(&rotations),
                super::Automorphism::inversion(&rotations)?,
            ],
        )?;
        Self::semidirect(&rotations, &flip, &phi)
    }

    /// Symmetric group on `n` letters.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::permutation_group(n, false)
    }

    /// Alternating group on `n` letters.
    pub fn alternating(n: usize) -> Result<Self> {
        Self::permutation_group(n, true)
    }

    /// Permutations in lexicographic order of their images (so the
    /// identity is element 0). The product `g h` applies `h` first.
    fn permutation_group(n: usize, even_only: bool) -> Result<Self> {
        if n > 26 {
            return Err(Error::InvalidArgument(format!("too many letters: {n}")));
        }
        let full: u64 = (1..=n as u64).product();
        let expected = if even_only && n >= 2 { full / 2 } else { full };
        if expected > ORDER_CAP as u64 {
            return Err(Error::InvalidOrder {
                order: expected,
                cap: ORDER_CAP,
            });
        }
        let perms: Vec<Vec<usize>> = (0..n)
            .permutations(n)
            .filter(|p| !even_only || is_even(p))
            .collect();
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let order = perms.len();
        let mut table = Vec::with_capacity(order * order);
        let mut prod = vec![0; n];
        for g in &perms {
            for h in &perms {
                for x in 0..n {
                    prod[x] = g[h[x]];
                }
                table.push(index[prod.as_slice()]);
            }
        }
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::from_trusted_table(order, table, names))
    }
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// Cycle notation over the letters `a, b, c, ...`; the identity is `e`.
pub(crate) fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push((b'a' + x as u8) as char);
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AssociativityCheck;

    fn order_counts(g: &FiniteGroup) -> std::collections::BTreeMap<u64, usize> {
        let mut m = std::collections::BTreeMap::new();
        for x in g.elements() {
            *m.entry(g.element_order(x)).or_default() += 1;
        }
        m
    }

    #[test]
    fn cyclic_bounds() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        assert!(matches!(
            FiniteGroup::cyclic(0),
            Err(Error::InvalidOrder { .. })
        ));
        assert!(matches!(
            FiniteGroup::cyclic(ORDER_CAP as u64 + 1),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn direct_products() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let g = FiniteGroup::direct_product(&z3, &z4).unwrap();
        assert_eq!(g.order(), 12);
        // (1, 1)
        assert_eq!(g.element_order(4 + 1), 12);
        let sq = FiniteGroup::direct_product(&z3, &z3).unwrap();
        assert_eq!(order_counts(&sq), [(1, 1), (3, 8)].into_iter().collect());
        assert_eq!(sq.name(3 + 2), "12");
        let trivial = FiniteGroup::cyclic(1).unwrap();
        let same = FiniteGroup::direct_product(&trivial, &z4).unwrap();
        assert_eq!(same.table(), z4.table());
    }

    #[test]
    fn dihedral_groups() {
        let d18 = FiniteGroup::dihedral(9).unwrap();
        assert_eq!(d18.order(), 18);
        for r in 0..9 {
            assert_eq!(d18.element_order(r * 2 + 1), 2);
        }
        let d2 = FiniteGroup::dihedral(1).unwrap();
        assert!(d2.is_isomorphic(&FiniteGroup::cyclic(2).unwrap()));
        let d6 = FiniteGroup::dihedral(3).unwrap();
        assert!(d6.is_isomorphic(&FiniteGroup::symmetric(3).unwrap()));
        assert!(!d6.is_isomorphic(&FiniteGroup::cyclic(6).unwrap()));
        assert!(matches!(
            FiniteGroup::dihedral(1001),
            Err(Error::InvalidOrder { .. })
        ));
    }

    #[test]
    fn permutation_groups() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(
            order_counts(&a5),
            [(1, 1), (2, 15), (3, 20), (5, 24)].into_iter().collect()
        );
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let a3 = FiniteGroup::alternating(3).unwrap();
        assert!(a3.is_isomorphic(&FiniteGroup::cyclic(3).unwrap()));
        assert_eq!(a5.name(a5.identity()), "e");
        let c = a5.find_by_name("(abcde)").unwrap();
        assert_eq!(a5.name(a5.power(c, 2)), "(acebd)");
        assert_eq!(a5.name(a5.power(c, 7)), "(acebd)");
        assert_eq!(a5.element_order(c), 5);
        assert!(FiniteGroup::symmetric(7).is_err());
    }

    #[test]
    fn constructors_pass_the_checker() {
        let groups = [
            FiniteGroup::cyclic(17).unwrap(),
            FiniteGroup::dihedral(10).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::alternating(5).unwrap(),
        ];
        for g in &groups {
            g.verify(AssociativityCheck::Full).unwrap();
        }
    }
}
