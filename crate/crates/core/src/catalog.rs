//! A deterministic catalog of small groups built from the constructors.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::expr::{Action, BuiltGroup, Evaluator, GroupExpr};
use crate::group::ORDER_CAP;
use crate::numth::{gcd, pow_mod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub description: String,
    pub expr: GroupExpr,
}

#[derive(Clone, Debug)]
pub struct GroupCatalog {
    max_order: usize,
    entries: Vec<CatalogEntry>,
    evaluator: Evaluator,
}

fn entry(expr: GroupExpr) -> CatalogEntry {
    CatalogEntry {
        description: expr.to_string(),
        expr,
    }
}

/// Catalog of all enabled families up to `max_order`:
///
/// * `Z<n>`;
/// * `Z<a> x Z<b>` for `2 <= a <= b`;
/// * dihedral groups;
/// * `S3`, `S4`, `A4`, `A5`;
/// * `sdp(Z<n>, Z<m>, mult=k)` for every nontrivial `k` with `k^m = 1 (mod n)`;
/// * `sdp(Z<a> x Z<b>, Z2, inv)` for `2 <= a <= b`;
/// * the built-in quaternion table `file:q8.tbl`.
pub fn catalog(max_order: usize) -> Result<GroupCatalog> {
    if max_order == 0 || max_order > ORDER_CAP {
        return Err(Error::InvalidOrder {
            order: max_order as u64,
            cap: ORDER_CAP,
        });
    }
    let max = max_order as u64;
    let z = |n: u64| Box::new(GroupExpr::Cyclic(n));
    let mut entries = Vec::new();

    for n in 1..=max {
        entries.push(entry(GroupExpr::Cyclic(n)));
    }
    for a in 2..=max {
        for b in a..=max / a {
            entries.push(entry(GroupExpr::Product(z(a), z(b))));
        }
    }
    for n in (2..=max).step_by(2) {
        entries.push(entry(GroupExpr::Dihedral(n)));
    }
    for (expr, order) in [
        (GroupExpr::Sym(3), 6),
        (GroupExpr::Alt(4), 12),
        (GroupExpr::Sym(4), 24),
        (GroupExpr::Alt(5), 60),
    ] {
        if order <= max {
            entries.push(entry(expr));
        }
    }
    for n in 3..=max {
        for m in 2..=max / n {
            for k in 2..n {
                if gcd(n, k) == 1 && pow_mod(k, m, n) == 1 {
                    entries.push(entry(GroupExpr::Sdp(z(n), z(m), Action::Mult(k))));
                }
            }
        }
    }
    for a in 2..=max {
        for b in a..=max / (2 * a) {
            entries.push(entry(GroupExpr::Sdp(
                Box::new(GroupExpr::Product(z(a), z(b))),
                z(2),
                Action::Inv,
            )));
        }
    }
    if 8 <= max {
        entries.push(entry(GroupExpr::File("q8.tbl".into())));
    }

    Ok(GroupCatalog {
        max_order,
        entries,
        evaluator: Evaluator::new(),
    })
}

impl GroupCatalog {
    /// Appends every `*.tbl` file in `dir`, in file-name order.
    pub fn with_fixture_dir(mut self, dir: &Path) -> Result<Self> {
        let io = |source| Error::Io {
            path: dir.display().to_string(),
            source,
        };
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "tbl"))
            .collect();
        files.sort();
        for f in files {
            let e = entry(GroupExpr::File(f.display().to_string()));
            if !self.entries.contains(&e) {
                self.entries.push(e);
            }
        }
        Ok(self)
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn build(&self, e: &CatalogEntry) -> Result<BuiltGroup> {
        self.evaluator.build(&e.expr)
    }

    /// Builds the groups lazily, in catalog order.
    pub fn iter(&self) -> impl Iterator<Item = (&CatalogEntry, Result<BuiltGroup>)> + '_ {
        self.entries.iter().map(move |e| (e, self.build(e)))
    }
}
