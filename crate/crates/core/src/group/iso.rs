//! Brute-force group isomorphism for small groups: pick a generating set,
//! try every order-preserving assignment of generator images and extend.

use super::FiniteGroup;

impl FiniteGroup {
    /// Greedy generating set: repeatedly add an element of largest order
    /// outside the subgroup generated so far.
    fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated_subgroup(&gens);
        while span.len() < self.order() {
            let g = self
                .elements()
                .filter(|g| span.binary_search(g).is_err())
                .max_by_key(|&g| (self.element_order(g), std::cmp::Reverse(g)))
                .expect("span is a proper subset");
            gens.push(g);
            span = self.generated_subgroup(&gens);
        }
        gens
    }

    /// Tries to extend `gens -> images` to a homomorphism by breadth-first
    /// expansion over words; succeeds only on a bijective homomorphism.
    fn extend_to_isomorphism(
        &self,
        other: &Self,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[self.identity()] = other.identity();
        let mut queue = std::collections::VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let target = other.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = target;
                    queue.push_back(y);
                } else if map[y] != target {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &m in &map {
            if hit[m] {
                return None;
            }
            hit[m] = true;
        }
        for g in 0..n {
            for h in 0..n {
                if map[self.mul(g, h)] != other.mul(map[g], map[h]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Exhaustive search; intended for the small orders the catalog checks
    /// need (up to about 12).
    pub fn isomorphism_to(&self, other: &Self) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let mut lhs: Vec<u64> = self.elements().map(|g| self.element_order(g)).collect();
        let mut rhs: Vec<u64> = other.elements().map(|g| other.element_order(g)).collect();
        lhs.sort_unstable();
        rhs.sort_unstable();
        if lhs != rhs {
            return None;
        }
        let gens = self.generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                other
                    .elements()
                    .filter(|&h| other.element_order(h) == self.element_order(g))
                    .collect()
            })
            .collect();
        let mut images = vec![0; gens.len()];
        self.search(other, &gens, &candidates, &mut images, 0)
    }

    fn search(
        &self,
        other: &Self,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        if depth == gens.len() {
            return self.extend_to_isomorphism(other, gens, images);
        }
        for &c in &candidates[depth] {
            images[depth] = c;
            if let Some(m) = self.search(other, gens, candidates, images, depth + 1) {
                return Some(m);
            }
        }
        None
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_isomorphisms() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z6 = FiniteGroup::direct_product(&z2, &z3).unwrap();
        assert!(z6.is_isomorphic(&FiniteGroup::cyclic(6).unwrap()));
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert!(!v4.is_isomorphic(&z4));
        assert!(v4.is_isomorphic(&FiniteGroup::dihedral(2).unwrap()));
        let d12 = FiniteGroup::dihedral(6).unwrap();
        let a4 = FiniteGroup::alternating(4).unwrap();
        assert!(!d12.is_isomorphic(&a4));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(d12.is_isomorphic(&FiniteGroup::direct_product(&s3, &z2).unwrap()));
    }
}
