//! Plain-text Cayley tables.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! # 0 e
//! # 1 r
//! ```
//!
//! Line 1 holds the order `n`; the next `n` lines hold row `g` of the
//! table, whose column `h` is the index of `g h`. Optional trailing lines
//! `# i <name>` name element `i`.

use std::fmt::Write as _;
use std::path::Path;

use super::{check_axioms, AssociativityCheck, FiniteGroup, ORDER_CAP};
use crate::error::{Error, Result};

impl FiniteGroup {
    /// Parses and fully validates a table. Associativity is checked on
    /// every triple regardless of size.
    pub fn from_cayley_table(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::TableParse { line, message };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

        let (first_no, first) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| err(1, "empty input".into()))?;
        let order: usize = first.parse().map_err(|_| {
            err(
                first_no,
                format!("expected the group order, found {first:?}"),
            )
        })?;
        if order == 0 || order > ORDER_CAP {
            return Err(Error::InvalidOrder {
                order: order as u64,
                cap: ORDER_CAP,
            });
        }

        let mut table = Vec::with_capacity(order * order);
        for row in 0..order {
            let (no, line) = lines
                .next()
                .ok_or_else(|| err(first_no + row + 1, format!("missing row {row}")))?;
            let before = table.len();
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(no, format!("bad entry {tok:?}")))?;
                table.push(v);
            }
            if table.len() - before != order {
                return Err(err(
                    no,
                    format!(
                        "row {row} has {} entries, expected {order}",
                        table.len() - before
                    ),
                ));
            }
        }

        let mut names: Vec<String> = (0..order).map(|g| g.to_string()).collect();
        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let rest = line
                .strip_prefix('#')
                .ok_or_else(|| err(no, format!("unexpected trailing line {line:?}")))?
                .trim_start();
            let (idx, name) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| err(no, "name line must be `# <index> <name>`".into()))?;
            let idx: usize = idx
                .parse()
                .ok()
                .filter(|&i| i < order)
                .ok_or_else(|| err(no, format!("bad element index {idx:?}")))?;
            names[idx] = name.trim().to_string();
        }

        let identity = check_axioms(order, &table, AssociativityCheck::Full)?;
        Ok(Self::assemble(order, table, identity, Some(names)))
    }

    pub fn from_cayley_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_cayley_table(&text)
    }

    /// Writes the table in the format [`FiniteGroup::from_cayley_table`] reads.
    pub fn to_cayley_table(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for g in self.elements() {
            let row: Vec<String> = self
                .elements()
                .map(|h| self.mul(g, h).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        for g in self.elements() {
            let _ = writeln!(out, "# {g} {}", self.name(g));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Axiom;

    const Q8: &str = include_str!("../../fixtures/q8.tbl");

    #[test]
    fn quaternion_fixture() {
        let q8 = FiniteGroup::from_cayley_table(Q8).unwrap();
        assert_eq!(q8.order(), 8);
        let involutions = q8.elements().filter(|&g| q8.element_order(g) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q8.is_abelian());
        assert_eq!(q8.name(q8.identity()), "1");
    }

    #[test]
    fn z4_table_matches_constructor() {
        let text = "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
        let g = FiniteGroup::from_cayley_table(text).unwrap();
        assert_eq!(g.table(), FiniteGroup::cyclic(4).unwrap().table());
        let renamed = "4\n2 3 0 1\n3 0 1 2\n0 1 2 3\n1 2 3 0\n";
        let h = FiniteGroup::from_cayley_table(renamed).unwrap();
        assert_eq!(h.identity(), 2);
        assert!(h.is_isomorphic(&FiniteGroup::cyclic(4).unwrap()));
    }

    #[test]
    fn round_trip() {
        let a4 = FiniteGroup::alternating(4).unwrap();
        let back = FiniteGroup::from_cayley_table(&a4.to_cayley_table()).unwrap();
        assert_eq!(back, a4);
    }

    #[test]
    fn corrupted_entry_names_the_axiom() {
        let mut rows: Vec<Vec<usize>> = (0..4)
            .map(|g| (0..4).map(|h| (g + h) % 4).collect())
            .collect();
        rows[1][1] = 3;
        let text = std::iter::once("4".to_string())
            .chain(rows.iter().map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .collect::<Vec<_>>()
            .join("\n");
        match FiniteGroup::from_cayley_table(&text) {
            Err(Error::NotAGroup { axiom, .. }) => assert_ne!(axiom, Axiom::Closure),
            other => panic!("expected a non-group error, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            FiniteGroup::from_cayley_table(""),
            Err(Error::TableParse { line: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table("2\n0 1\n1"),
            Err(Error::TableParse { line: 3, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table("2\n0 1\n1 x"),
            Err(Error::TableParse { line: 3, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table("2\n0 1\n1 0\nextra"),
            Err(Error::TableParse { line: 4, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table("2\n0 1\n1 5"),
            Err(Error::NotAGroup {
                axiom: Axiom::Closure,
                ..
            })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table("0"),
            Err(Error::InvalidOrder { .. })
        ));
    }
}
