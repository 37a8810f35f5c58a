//! Finite groups stored as dense multiplication tables.
//!
//! Elements are identified by their index in `0..order`; names are only
//! used for display.

mod auto;
mod construct;
mod iso;
mod subgroup;
mod table;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Axiom, Error, Result};

pub use auto::{Automorphism, HomToAut};
pub use subgroup::CyclicSubgroup;

/// Largest group order any constructor will build.
pub const ORDER_CAP: usize = 2000;

/// Tables up to this order get a full O(n^3) associativity check; larger
/// ones get a randomized spot check.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

const ASSOCIATIVITY_SAMPLES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    names: Vec<String>,
}

/// How thoroughly [`check_axioms`] tests associativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociativityCheck {
    /// Every triple.
    Full,
    /// Every triple up to [`FULL_ASSOCIATIVITY_LIMIT`], sampled above it.
    Auto,
}

/// Validates a row-major `order x order` table and returns the identity.
///
/// Failures carry the triple of element indices that witnesses them.
pub fn check_axioms(order: usize, table: &[usize], assoc: AssociativityCheck) -> Result<usize> {
    if order == 0 {
        return Err(Error::InvalidOrder {
            order: 0,
            cap: ORDER_CAP,
        });
    }
    if table.len() != order * order {
        return Err(Error::InvalidArgument(format!(
            "table has {} entries, expected {}",
            table.len(),
            order * order
        )));
    }
    if let Some(pos) = table.iter().position(|&x| x >= order) {
        return Err(Error::NotAGroup {
            axiom: Axiom::Closure,
            witness: (pos / order, pos % order, table[pos]),
        });
    }
    let mul = |g: usize, h: usize| table[g * order + h];

    let identity = (0..order)
        .find(|&e| (0..order).all(|g| mul(e, g) == g && mul(g, e) == g))
        .ok_or_else(|| {
            // Report the first element whose row is the identity row but
            // whose column is not, or (0, 0, 0) when no row qualifies.
            let candidate = (0..order).find(|&e| (0..order).all(|g| mul(e, g) == g));
            let witness = match candidate {
                Some(e) => {
                    let g = (0..order).find(|&g| mul(g, e) != g).unwrap_or(0);
                    (g, e, mul(g, e))
                }
                None => (0, 0, mul(0, 0)),
            };
            Error::NotAGroup {
                axiom: Axiom::Identity,
                witness,
            }
        })?;

    for g in 0..order {
        let has_inverse = (0..order).any(|h| mul(g, h) == identity && mul(h, g) == identity);
        if !has_inverse {
            return Err(Error::NotAGroup {
                axiom: Axiom::Inverse,
                witness: (g, identity, identity),
            });
        }
    }

    let assoc_fails = |g: usize, h: usize, k: usize| mul(mul(g, h), k) != mul(g, mul(h, k));
    if assoc == AssociativityCheck::Full || order <= FULL_ASSOCIATIVITY_LIMIT {
        for g in 0..order {
            for h in 0..order {
                for k in 0..order {
                    if assoc_fails(g, h, k) {
                        return Err(Error::NotAGroup {
                            axiom: Axiom::Associativity,
                            witness: (g, h, k),
                        });
                    }
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5_eed0_fa55);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let (g, h, k) = (
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            );
            if assoc_fails(g, h, k) {
                return Err(Error::NotAGroup {
                    axiom: Axiom::Associativity,
                    witness: (g, h, k),
                });
            }
        }
    }
    Ok(identity)
}

impl FiniteGroup {
    /// Builds a group from a validated table.
    pub fn from_table(order: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Result<Self> {
        if order > ORDER_CAP {
            return Err(Error::InvalidOrder {
                order: order as u64,
                cap: ORDER_CAP,
            });
        }
        let identity = check_axioms(order, &table, AssociativityCheck::Auto)?;
        Ok(Self::assemble(order, table, identity, names))
    }

    /// For constructors whose output is a group by construction. Debug
    /// builds still run the checker.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<usize>, names: Vec<String>) -> Self {
        debug_assert!(order <= ORDER_CAP);
        let identity = if cfg!(debug_assertions) && order <= 64 {
            check_axioms(order, &table, AssociativityCheck::Full)
                .expect("constructor produced a non-group table")
        } else {
            (0..order)
                .find(|&e| (0..order).all(|g| table[e * order + g] == g))
                .expect("constructor produced a table without identity")
        };
        Self::assemble(order, table, identity, Some(names))
    }

    fn assemble(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut inverses = vec![usize::MAX; order];
        for g in 0..order {
            for h in 0..order {
                if table[g * order + h] == identity {
                    inverses[g] = h;
                    break;
                }
            }
        }
        let orders = (0..order)
            .map(|g| {
                let mut x = g;
                let mut t = 1u64;
                while x != identity {
                    x = table[x * order + g];
                    t += 1;
                }
                t
            })
            .collect();
        let names = match names {
            Some(n) if n.len() == order => n,
            _ => (0..order).map(|g| g.to_string()).collect(),
        };
        Self {
            order,
            table,
            identity,
            inverses,
            orders,
            names,
        }
    }

    /// Reruns the axiom checker on this group's table.
    pub fn verify(&self, assoc: AssociativityCheck) -> Result<()> {
        let e = check_axioms(self.order, &self.table, assoc)?;
        if e != self.identity {
            return Err(Error::Contract(format!(
                "stored identity {} differs from detected identity {e}",
                self.identity
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Least `t >= 1` with `g^t` equal to the identity.
    pub fn element_order(&self, g: usize) -> u64 {
        self.orders[g]
    }

    /// `g^k` by repeated squaring; `g^0` is the identity.
    pub fn power(&self, g: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// `h g h^-1`.
    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(by, g), self.inverse(by))
    }

    pub fn find_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same table, new display names.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "{} names for a group of order {}",
                names.len(),
                self.order
            )));
        }
        self.names = names;
        Ok(self)
    }
}
