use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numth::gcd;

/// A permutation of a group's element indices that respects multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    map: Vec<usize>,
}

impl Automorphism {
    /// Validates `map` against `group`: bijective, fixes the identity and is
    /// multiplicative on every pair.
    pub fn new(group: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if map.len() != n {
            return Err(Error::NotAnAutomorphism(format!(
                "map has {} entries for a group of order {n}",
                map.len()
            )));
        }
        let mut hit = vec![false; n];
        for (g, &img) in map.iter().enumerate() {
            if img >= n || hit[img] {
                return Err(Error::NotAnAutomorphism(format!(
                    "not a bijection at element {g}"
                )));
            }
            hit[img] = true;
        }
        if map[group.identity()] != group.identity() {
            return Err(Error::NotAnAutomorphism("identity is moved".into()));
        }
        for g in 0..n {
            for h in 0..n {
                if map[group.mul(g, h)] != group.mul(map[g], map[h]) {
                    return Err(Error::NotAnAutomorphism(format!(
                        "not multiplicative at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(Self { map })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self {
            map: group.elements().collect(),
        }
    }

    /// `g -> g^-1`, which is a homomorphism only for abelian groups.
    pub fn inversion(group: &FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAnAutomorphism(
                "inversion of a nonabelian group is not a homomorphism".into(),
            ));
        }
        Ok(Self {
            map: group.elements().map(|g| group.inverse(g)).collect(),
        })
    }

    /// Multiplication by `k` on `Z_n`.
    pub fn cyclic_mult(n: u64, k: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z_0 is not finite".into()));
        }
        if gcd(n, k % n) != 1 {
            return Err(Error::NotAnAutomorphism(format!(
                "multiplication by {k} on Z_{n}: gcd({k}, {n}) != 1"
            )));
        }
        Ok(Self {
            map: (0..n).map(|a| (a * k % n) as usize).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(g, &h)| g == h)
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            map: other.map.iter().map(|&g| self.map[g]).collect(),
        }
    }

    /// Order in the automorphism group.
    pub fn order(&self) -> u64 {
        let mut power = self.clone();
        let mut t = 1;
        while !power.is_identity() {
            power = self.compose(&power);
            t += 1;
        }
        t
    }
}

/// A homomorphism `K -> Aut(H)` given by one automorphism per element of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomToAut {
    images: Vec<Automorphism>,
}

impl HomToAut {
    pub fn new(
        domain: &FiniteGroup,
        target: &FiniteGroup,
        images: Vec<Automorphism>,
    ) -> Result<Self> {
        let phi = Self { images };
        phi.validate(domain, target)?;
        Ok(phi)
    }

    /// Every `b` acts trivially.
    pub fn trivial(domain: &FiniteGroup, target: &FiniteGroup) -> Self {
        Self {
            images: vec![Automorphism::identity(target); domain.order()],
        }
    }

    /// `Z_m -> Aut(Z_n)` sending `b` to multiplication by `k^b`.
    pub fn cyclic_power(n: u64, m: u64, k: u64) -> Result<Self> {
        let base = Automorphism::cyclic_mult(n, k)?;
        let mut images = Vec::with_capacity(m as usize);
        let mut current = Automorphism::cyclic_mult(n, 1)?;
        for _ in 0..m {
            images.push(current.clone());
            current = base.compose(&current);
        }
        Self::new(&FiniteGroup::cyclic(m)?, &FiniteGroup::cyclic(n)?, images)
    }

    /// Checks that every image is an automorphism of `target`, the identity
    /// of `domain` maps to the identity automorphism, and
    /// `phi(b b') = phi(b) . phi(b')`.
    pub(crate) fn validate(&self, domain: &FiniteGroup, target: &FiniteGroup) -> Result<()> {
        if self.images.len() != domain.order() {
            return Err(Error::InvalidHomomorphism(format!(
                "{} images for a domain of order {}",
                self.images.len(),
                domain.order()
            )));
        }
        for (b, img) in self.images.iter().enumerate() {
            Automorphism::new(target, img.map.clone())
                .map_err(|e| Error::InvalidHomomorphism(format!("image of {b}: {e}")))?;
        }
        if !self.images[domain.identity()].is_identity() {
            return Err(Error::InvalidHomomorphism(
                "identity does not act trivially".into(),
            ));
        }
        for b in domain.elements() {
            for b2 in domain.elements() {
                if self.images[domain.mul(b, b2)] != self.images[b].compose(&self.images[b2]) {
                    return Err(Error::InvalidHomomorphism(format!(
                        "phi({b} * {b2}) != phi({b}) . phi({b2})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn image(&self, b: usize) -> &Automorphism {
        &self.images[b]
    }

    pub fn images(&self) -> &[Automorphism] {
        &self.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_mult() {
        let a = Automorphism::cyclic_mult(7, 2).unwrap();
        assert_eq!(a.order(), 3);
        assert!(Automorphism::cyclic_mult(9, 1).unwrap().is_identity());
        assert!(matches!(
            Automorphism::cyclic_mult(6, 2),
            Err(Error::NotAnAutomorphism(_))
        ));
        let z7 = FiniteGroup::cyclic(7).unwrap();
        assert!(Automorphism::new(&z7, a.map().to_vec()).is_ok());
    }

    #[test]
    fn inversion() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let sq = FiniteGroup::direct_product(&z3, &z3).unwrap();
        assert_eq!(Automorphism::inversion(&sq).unwrap().order(), 2);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(Automorphism::inversion(&s3).is_err());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(Automorphism::new(&z4, vec![0, 2, 1, 3]).is_err());
        assert!(Automorphism::new(&z4, vec![1, 0, 3, 2]).is_err());
        assert!(Automorphism::new(&z4, vec![0, 0, 2, 3]).is_err());
    }

    #[test]
    fn homomorphism_validation() {
        assert!(HomToAut::cyclic_power(7, 3, 2).is_ok());
        // 2^3 = 8 = 1 mod 7 but 2^2 != 1 mod 7.
        assert!(matches!(
            HomToAut::cyclic_power(7, 2, 2),
            Err(Error::InvalidHomomorphism(_))
        ));
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z5 = FiniteGroup::cyclic(5).unwrap();
        let id = Automorphism::identity(&z5);
        let inv = Automorphism::inversion(&z5).unwrap();
        assert!(HomToAut::new(&z2, &z5, vec![id.clone(), inv.clone()]).is_ok());
        assert!(HomToAut::new(&z2, &z5, vec![inv, id]).is_err());
    }
}
