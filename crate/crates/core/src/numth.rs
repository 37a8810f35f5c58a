//! Elementary number theory behind the edge criteria.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Greatest common divisor. `gcd(a, 0) == a`.
pub const fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        return a;
    }
    gcd(b, a % b)
}

pub const fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Euler's totient, by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut result = n;
    for (p, _) in factorize(n) {
        result = result / p * (p - 1);
    }
    result
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// True iff `n` is `p^e` for some `e >= 0`.
pub fn is_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `c` modulo `n`. Requires `gcd(c, n) == 1`.
pub fn multiplicative_order(c: u64, n: u64) -> u64 {
    assert_eq!(gcd(n, c % n), 1, "{c} is not a unit mod {n}");
    if n == 1 {
        return 1;
    }
    let c = c % n;
    let mut x = c;
    let mut k = 1;
    while x != 1 {
        x = x * c % n;
        k += 1;
    }
    k
}

/// Inverse of `a` modulo `n`, when it exists.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a % n), i128::from(n));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(i128::from(n)) as u64)
}

/// A finite set of integers greater than one whose multiples are excluded
/// as power exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ExclusionSet(BTreeSet<u64>);

impl ExclusionSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = u64>>(members: I) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for m in members {
            if m < 2 {
                return Err(Error::InvalidArgument(format!(
                    "exclusion set members must be >= 2, got {m}"
                )));
            }
            set.insert(m);
        }
        Ok(Self(set))
    }

    /// The prime divisors of `n`.
    pub fn primes_of(n: u64) -> Self {
        Self(prime_divisors(n).into_iter().collect())
    }

    /// Parses a comma-separated list; the empty string is the empty set.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let members = text
            .split(',')
            .map(|s| {
                s.trim().parse::<u64>().map_err(|_| {
                    Error::InvalidArgument(format!("bad exclusion member {:?}", s.trim()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(members)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.contains(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Product of the members (1 for the empty set).
    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }

    /// True iff some member divides `n`.
    pub fn divides_any(&self, n: u64) -> bool {
        self.0.iter().any(|&x| n.is_multiple_of(x))
    }

    /// Every subset, ordered by size then lexicographically.
    pub fn subsets(&self) -> Vec<Self> {
        let members: Vec<u64> = self.iter().collect();
        let mut out: Vec<Self> = (0u32..(1 << members.len()))
            .map(|mask| {
                Self(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &m)| m)
                        .collect(),
                )
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl TryFrom<Vec<u64>> for ExclusionSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self, Error> {
        Self::new(v)
    }
}

impl From<ExclusionSet> for Vec<u64> {
    fn from(x: ExclusionSet) -> Self {
        x.0.into_iter().collect()
    }
}

impl fmt::Display for ExclusionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// True iff no member of `exclusion` divides both `m` and `n`.
///
/// Equivalently, some term of the progression `m, m + n, m + 2n, ...` is
/// divisible by no member of `exclusion`.
pub fn admissible(m: u64, n: u64, exclusion: &ExclusionSet) -> bool {
    debug_assert!(1 <= m && m <= n);
    !exclusion
        .iter()
        .any(|x| m.is_multiple_of(x) && n.is_multiple_of(x))
}
