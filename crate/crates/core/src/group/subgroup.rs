use std::collections::{BTreeSet, HashSet};

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numth::{gcd, is_power_of, is_prime};

/// The cyclic subgroup generated by one element, with its generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroup {
    /// The least element index that generates the subgroup.
    pub generator: usize,
    /// `e, g, g^2, ...` in power order.
    pub elements: Vec<usize>,
    pub order: u64,
    pub generators: BTreeSet<usize>,
}

impl CyclicSubgroup {
    pub fn contains(&self, g: usize) -> bool {
        self.elements.contains(&g)
    }

    pub fn sorted_elements(&self) -> Vec<usize> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }
}

impl FiniteGroup {
    /// `<g>` together with `{ g^m : gcd(m, o(g)) = 1 }`.
    pub fn cyclic_subgroup(&self, g: usize) -> CyclicSubgroup {
        let order = self.element_order(g);
        let mut elements = Vec::with_capacity(order as usize);
        let mut x = self.identity();
        for _ in 0..order {
            elements.push(x);
            x = self.mul(x, g);
        }
        let generators: BTreeSet<usize> = (1..=order)
            .filter(|&m| gcd(order, m) == 1)
            .map(|m| elements[(m % order) as usize])
            .collect();
        CyclicSubgroup {
            generator: *generators
                .iter()
                .next()
                .expect("every cyclic group has a generator"),
            elements,
            order,
            generators,
        }
    }

    /// Each distinct cyclic subgroup once, ordered by order and then by
    /// least generator.
    pub fn cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let mut covered = vec![false; self.order()];
        let mut out = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            let c = self.cyclic_subgroup(g);
            for &x in &c.generators {
                covered[x] = true;
            }
            out.push(c);
        }
        out.sort_by_key(|c| (c.order, c.generator));
        out
    }

    /// Closure of `gens` under multiplication, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![self.identity()];
        seen[self.identity()] = true;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// True iff `elements` is nonempty and closed under multiplication.
    /// For a finite group that makes it a subgroup.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: HashSet<usize> = elements.iter().copied().collect();
        !set.is_empty()
            && set
                .iter()
                .all(|&g| set.iter().all(|&h| set.contains(&self.mul(g, h))))
    }

    /// The subgroup on `elements` as a group of its own. The returned
    /// embedding maps each new index to the element of `self`; new indices
    /// follow the sorted order of `elements`.
    pub fn restrict(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut embedding = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        if !self.is_subgroup(&embedding) {
            return Err(Error::InvalidArgument(
                "element set is not closed under multiplication".into(),
            ));
        }
        let mut back = vec![usize::MAX; self.order()];
        for (i, &g) in embedding.iter().enumerate() {
            back[g] = i;
        }
        let n = embedding.len();
        let table = embedding
            .iter()
            .flat_map(|&g| embedding.iter().map(move |&h| (g, h)))
            .map(|(g, h)| back[self.mul(g, h)])
            .collect();
        let names = embedding
            .iter()
            .map(|&g| self.name(g).to_string())
            .collect();
        Ok((FiniteGroup::from_trusted_table(n, table, names), embedding))
    }

    /// True iff `|G|` is a power of `p` (including `|G| = 1`).
    pub fn is_p_group(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(is_power_of(self.order() as u64, p))
    }

    /// Elements whose order is a power of `q`, identity included.
    pub fn primary_elements(&self, q: u64) -> Vec<usize> {
        self.elements()
            .filter(|&g| is_power_of(self.element_order(g), q))
            .collect()
    }

    /// True iff `elements` is exactly some cyclic subgroup `<g>`.
    pub fn is_cyclic_subgroup(&self, elements: &[usize]) -> bool {
        let n = elements.len() as u64;
        elements
            .iter()
            .find(|&&g| self.element_order(g) == n)
            .is_some_and(|&g| {
                let mut a = self.cyclic_subgroup(g).sorted_elements();
                let mut b = elements.to_vec();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            })
    }

    /// `by` normalizes the subgroup `elements`.
    pub fn normalizes(&self, by: usize, elements: &[usize]) -> bool {
        let set: HashSet<usize> = elements.iter().copied().collect();
        elements
            .iter()
            .all(|&g| set.contains(&self.conjugate(g, by)))
    }

    /// `by` commutes with every member of `elements`.
    pub fn centralizes(&self, by: usize, elements: &[usize]) -> bool {
        elements.iter().all(|&g| self.mul(by, g) == self.mul(g, by))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::{divisors, totient};

    #[test]
    fn z12_subgroups() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let subs = z12.cyclic_subgroups();
        let gens: Vec<usize> = subs.iter().map(|c| c.generator).collect();
        assert_eq!(gens, vec![0, 6, 4, 3, 2, 1]);
        let c = z12.cyclic_subgroup(1);
        assert_eq!(c.generators, [1, 5, 7, 11].into_iter().collect());
        let z7 = FiniteGroup::cyclic(7).unwrap();
        assert_eq!(z7.cyclic_subgroup(1).generators.len(), 6);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().cyclic_subgroups().len(), 1);
        assert_eq!(
            FiniteGroup::alternating(5)
                .unwrap()
                .cyclic_subgroups()
                .len(),
            32
        );
        for n in 1..=60u64 {
            let g = FiniteGroup::cyclic(n).unwrap();
            assert_eq!(g.cyclic_subgroups().len(), divisors(n).len());
            for c in g.cyclic_subgroups() {
                assert_eq!(c.generators.len() as u64, totient(c.order));
            }
        }
    }

    #[test]
    fn p_groups_and_primary_elements() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(z8.is_p_group(2).unwrap());
        assert!(!FiniteGroup::alternating(5).unwrap().is_p_group(2).unwrap());
        assert!(FiniteGroup::cyclic(1).unwrap().is_p_group(7).unwrap());
        assert!(matches!(z8.is_p_group(4), Err(Error::InvalidArgument(_))));

        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.primary_elements(3), vec![0, 2, 4]);
        let d18 = FiniteGroup::dihedral(9).unwrap();
        let rotations: Vec<usize> = (0..9).map(|r| 2 * r).collect();
        assert_eq!(d18.primary_elements(3), rotations);
        assert!(d18.is_cyclic_subgroup(&rotations));
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let sq = FiniteGroup::direct_product(&z3, &z3).unwrap();
        assert_eq!(sq.primary_elements(3).len(), 9);
        assert!(!sq.is_cyclic_subgroup(&sq.primary_elements(3)));
    }

    #[test]
    fn restriction() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let a = s4.find_by_name("(abc)").unwrap();
        let b = s4.find_by_name("(ab)").unwrap();
        let sub = s4.generated_subgroup(&[a, b]);
        assert_eq!(sub.len(), 6);
        let (s3, emb) = s4.restrict(&sub).unwrap();
        assert!(s3.is_isomorphic(&FiniteGroup::symmetric(3).unwrap()));
        assert_eq!(emb, sub);
        assert!(s4.restrict(&[a]).is_err());
    }
}
