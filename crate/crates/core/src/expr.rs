//! Group expressions.
//!
//! ```text
//! expr   := term ( "x" term )*              left-associative
//! term   := "Z" n | "D" n | "S" n | "A" n
//!         | "sdp(" expr "," expr "," action ")"
//!         | "file:" path
//!         | "(" expr ")"
//! action := "mult=" k | "inv" | "table=" path
//! ```
//!
//! `D<n>` is the dihedral group of order `n`. Whitespace is ignored between
//! tokens. `mult=k` needs `Z<n>` acting on by `Z<m>` with `gcd(k, n) = 1`
//! and `k^m = 1 (mod n)`; the generator `b` of `Z<m>` then acts as
//! multiplication by `k^b`.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::group::{Automorphism, FiniteGroup, HomToAut};
use crate::numth::{gcd, pow_mod};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(u64),
    /// Dihedral group of the given (even) order.
    Dihedral(u64),
    Sym(usize),
    Alt(usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Sdp(Box<GroupExpr>, Box<GroupExpr>, Action),
    File(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    Mult(u64),
    Inv,
    Table(String),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "Z{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Sym(n) => write!(f, "S{n}"),
            GroupExpr::Alt(n) => write!(f, "A{n}"),
            GroupExpr::Product(l, r) => match **r {
                GroupExpr::Product(..) => write!(f, "{l} x ({r})"),
                _ => write!(f, "{l} x {r}"),
            },
            GroupExpr::Sdp(h, k, a) => write!(f, "sdp({h}, {k}, {a})"),
            GroupExpr::File(p) => write!(f, "file:{}", quote_path(p)),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Mult(k) => write!(f, "mult={k}"),
            Action::Inv => write!(f, "inv"),
            Action::Table(p) => write!(f, "table={}", quote_path(p)),
        }
    }
}

fn quote_path(p: &str) -> String {
    if p.is_empty()
        || p.chars()
            .any(|c| c.is_whitespace() || c == ',' || c == ')' || c == '"')
    {
        format!("{p:?}")
    } else {
        p.to_string()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            expected: expected.into(),
            found: self.found(),
        })
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.fail(&format!("{s:?}"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits: String = self.src[self.pos..]
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return self.fail("a number");
        }
        let start = self.pos;
        self.pos += digits.len();
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            expected: "a number that fits in 64 bits".into(),
            found: digits.clone(),
        })
    }

    fn path(&mut self) -> Result<String> {
        self.skip_ws();
        if self.peek() == Some('"') {
            self.pos += 1;
            let rest = &self.src[self.pos..];
            let Some(end) = rest.find('"') else {
                return self.fail("closing '\"'");
            };
            let p = rest[..end].to_string();
            self.pos += end + 1;
            return Ok(p);
        }
        let p: String = self.src[self.pos..]
            .chars()
            .take_while(|c| !c.is_whitespace() && *c != ',' && *c != ')')
            .collect();
        if p.is_empty() {
            return self.fail("a path");
        }
        self.pos += p.len();
        Ok(p)
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut lhs = self.term()?;
        while self.eat("x") {
            let rhs = self.term()?;
            lhs = GroupExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("sdp") {
            self.expect("(")?;
            let h = self.expr()?;
            self.expect(",")?;
            let k = self.expr()?;
            self.expect(",")?;
            let action = if self.eat("mult") {
                self.expect("=")?;
                Action::Mult(self.number()?)
            } else if self.eat("inv") {
                Action::Inv
            } else if self.eat("table") {
                self.expect("=")?;
                Action::Table(self.path()?)
            } else {
                return self.fail("an action (mult=<k>, inv, table=<path>)");
            };
            self.expect(")")?;
            let e = GroupExpr::Sdp(Box::new(h), Box::new(k), action);
            validate_action(&e)
                .map_err(|msg| Error::Semantic(format!("at offset {start}: {msg}")))?;
            return Ok(e);
        }
        if self.eat("file:") {
            return Ok(GroupExpr::File(self.path()?));
        }
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        let family = match self.peek() {
            Some(c @ ('Z' | 'D' | 'S' | 'A')) => c,
            _ => return self.fail("a group (Z<n>, D<n>, S<n>, A<n>, sdp(...), file:<path>)"),
        };
        self.pos += 1;
        let n = self.number()?;
        let semantic = |msg: String| Error::Semantic(format!("at offset {start}: {msg}"));
        Ok(match family {
            'Z' if n >= 1 => GroupExpr::Cyclic(n),
            'Z' => return Err(semantic("Z0 is not a finite group".into())),
            'D' if n >= 2 && n % 2 == 0 => GroupExpr::Dihedral(n),
            'D' => {
                return Err(semantic(format!(
                    "dihedral order {n} must be even and positive"
                )))
            }
            'S' => GroupExpr::Sym(n as usize),
            _ => GroupExpr::Alt(n as usize),
        })
    }
}

/// Checks the numeric side conditions of `mult=k`.
fn validate_action(e: &GroupExpr) -> std::result::Result<(), String> {
    let GroupExpr::Sdp(h, k, Action::Mult(mult)) = e else {
        return Ok(());
    };
    let (GroupExpr::Cyclic(n), GroupExpr::Cyclic(m)) = (&**h, &**k) else {
        return Err("mult=<k> needs the form sdp(Z<n>, Z<m>, mult=<k>)".into());
    };
    if gcd(*n, mult % n) != 1 {
        return Err(format!(
            "mult={mult} is not an automorphism of Z{n}: gcd({mult}, {n}) != 1"
        ));
    }
    if pow_mod(*mult, *m, *n) != 1 % n {
        return Err(format!(
            "mult={mult} does not define a homomorphism from Z{m}: {mult}^{m} != 1 mod {n}"
        ));
    }
    Ok(())
}

/// Parses a group expression.
pub fn parse_group(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.fail("'x' or end of input");
    }
    Ok(e)
}

/// The factors and action of a group built as `H x_phi K` (a direct
/// product is recorded with the trivial action).
#[derive(Clone, Debug)]
pub struct SemidirectParts {
    pub base: FiniteGroup,
    pub acting: FiniteGroup,
    pub action: HomToAut,
    pub base_expr: GroupExpr,
    pub acting_expr: GroupExpr,
}

#[derive(Clone, Debug)]
pub struct BuiltGroup {
    pub group: FiniteGroup,
    pub parts: Option<SemidirectParts>,
}

/// Built-in fixture tables, addressable as `file:<name>` when no file of
/// that name exists.
pub const BUILTIN_FIXTURES: &[(&str, &str)] = &[("q8.tbl", include_str!("../fixtures/q8.tbl"))];

/// Resolves `file:` and `table=` paths and builds groups.
#[derive(Clone, Debug, Default)]
pub struct Evaluator {
    base_dir: Option<PathBuf>,
    builtins: HashMap<String, &'static str>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self {
            base_dir: None,
            builtins: BUILTIN_FIXTURES
                .iter()
                .map(|&(n, t)| (n.to_string(), t))
                .collect(),
        }
    }

    /// Relative paths resolve against `dir`.
    pub fn with_base_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.base_dir = Some(dir.into());
        self
    }

    fn read(&self, path: &str) -> Result<String> {
        let p = Path::new(path);
        let full = match &self.base_dir {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p.to_path_buf(),
        };
        match std::fs::read_to_string(&full) {
            Ok(text) => Ok(text),
            Err(source) => self
                .builtins
                .get(path)
                .map(|t| t.to_string())
                .ok_or(Error::Io {
                    path: full.display().to_string(),
                    source,
                }),
        }
    }

    pub fn build(&self, e: &GroupExpr) -> Result<BuiltGroup> {
        let plain = |group| Ok(BuiltGroup { group, parts: None });
        match e {
            GroupExpr::Cyclic(n) => plain(FiniteGroup::cyclic(*n)?),
            GroupExpr::Dihedral(n) => {
                let rot = FiniteGroup::cyclic(n / 2)?;
                let flip = FiniteGroup::cyclic(2)?;
                let action = HomToAut::new(
                    &flip,
                    &rot,
                    vec![Automorphism::identity(&rot), Automorphism::inversion(&rot)?],
                )?;
                Ok(BuiltGroup {
                    group: FiniteGroup::dihedral(n / 2)?,
                    parts: Some(SemidirectParts {
                        base: rot,
                        acting: flip,
                        action,
                        base_expr: GroupExpr::Cyclic(n / 2),
                        acting_expr: GroupExpr::Cyclic(2),
                    }),
                })
            }
            GroupExpr::Sym(n) => plain(FiniteGroup::symmetric(*n)?),
            GroupExpr::Alt(n) => plain(FiniteGroup::alternating(*n)?),
            GroupExpr::File(path) => plain(FiniteGroup::from_cayley_table(&self.read(path)?)?),
            GroupExpr::Product(l, r) => {
                let h = self.build(l)?.group;
                let k = self.build(r)?.group;
                let group = FiniteGroup::direct_product(&h, &k)?;
                let action = HomToAut::trivial(&k, &h);
                Ok(BuiltGroup {
                    group,
                    parts: Some(SemidirectParts {
                        base: h,
                        acting: k,
                        action,
                        base_expr: (**l).clone(),
                        acting_expr: (**r).clone(),
                    }),
                })
            }
            GroupExpr::Sdp(l, r, act) => {
                validate_action(e).map_err(Error::Semantic)?;
                let h = self.build(l)?.group;
                let k = self.build(r)?.group;
                let action = match act {
                    Action::Mult(mult) => {
                        let (GroupExpr::Cyclic(n), GroupExpr::Cyclic(m)) = (&**l, &**r) else {
                            unreachable!("validated above");
                        };
                        HomToAut::cyclic_power(*n, *m, *mult)?
                    }
                    Action::Inv => {
                        let inv = Automorphism::inversion(&h)?;
                        inversion_action(&k, &h, inv)?
                    }
                    Action::Table(path) => action_from_table(&self.read(path)?, &k, &h)?,
                };
                let group = FiniteGroup::semidirect(&h, &k, &action)?;
                Ok(BuiltGroup {
                    group,
                    parts: Some(SemidirectParts {
                        base: h,
                        acting: k,
                        action,
                        base_expr: (**l).clone(),
                        acting_expr: (**r).clone(),
                    }),
                })
            }
        }
    }
}

/// `K -> {id, inv}` through the unique map to `Z_2` whose kernel is the
/// subgroup of index 2 generated by squares. Fails when `K` has no such
/// quotient (for instance, when `|K|` is odd).
fn inversion_action(k: &FiniteGroup, h: &FiniteGroup, inv: Automorphism) -> Result<HomToAut> {
    let squares: Vec<usize> = k.elements().map(|b| k.mul(b, b)).collect();
    let kernel = k.generated_subgroup(&squares);
    if kernel.len() * 2 != k.order() {
        return Err(Error::Semantic(format!(
            "inv needs an acting group whose squares generate a subgroup of index 2 (got index {})",
            k.order() / kernel.len()
        )));
    }
    let id = Automorphism::identity(h);
    let images = k
        .elements()
        .map(|b| {
            if kernel.binary_search(&b).is_ok() {
                id.clone()
            } else {
                inv.clone()
            }
        })
        .collect();
    HomToAut::new(k, h, images)
}

/// One line per element `b` of `K`: the images of `0..|H|` under phi_b.
pub fn action_from_table(text: &str, k: &FiniteGroup, h: &FiniteGroup) -> Result<HomToAut> {
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if rows.len() != k.order() {
        return Err(Error::TableParse {
            line: rows.len() + 1,
            message: format!(
                "action table has {} rows, expected {}",
                rows.len(),
                k.order()
            ),
        });
    }
    let mut images = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let map = row
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::TableParse {
                    line: i + 1,
                    message: format!("bad entry {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(
            Automorphism::new(h, map)
                .map_err(|e| Error::InvalidHomomorphism(format!("row {i}: {e}")))?,
        );
    }
    HomToAut::new(k, h, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u64) -> Box<GroupExpr> {
        Box::new(GroupExpr::Cyclic(n))
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_group("Z3 x Z4").unwrap(),
            GroupExpr::Product(z(3), z(4))
        );
        assert_eq!(
            parse_group(" Z3xZ4 ").unwrap(),
            GroupExpr::Product(z(3), z(4))
        );
        assert_eq!(
            parse_group("sdp(Z7, Z3, mult=2)").unwrap(),
            GroupExpr::Sdp(z(7), z(3), Action::Mult(2))
        );
        assert_eq!(
            parse_group("Z2 x Z3 x Z5").unwrap(),
            GroupExpr::Product(Box::new(GroupExpr::Product(z(2), z(3))), z(5))
        );
        assert_eq!(
            parse_group("sdp(Z3xZ3, Z2, inv)").unwrap(),
            GroupExpr::Sdp(Box::new(GroupExpr::Product(z(3), z(3))), z(2), Action::Inv)
        );
        assert_eq!(
            parse_group("file:q8.tbl").unwrap(),
            GroupExpr::File("q8.tbl".into())
        );
        assert_eq!(parse_group("D18").unwrap(), GroupExpr::Dihedral(18));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_group("sdp(Z6, Z3, mult=2)"),
            Err(Error::Semantic(_))
        ));
        assert!(matches!(
            parse_group("sdp(Z7, Z2, mult=2)"),
            Err(Error::Semantic(_))
        ));
        assert!(matches!(
            parse_group("sdp(S3, Z2, mult=1)"),
            Err(Error::Semantic(_))
        ));
        assert!(matches!(parse_group("D7"), Err(Error::Semantic(_))));
        assert!(matches!(parse_group("Z0"), Err(Error::Semantic(_))));
        match parse_group("Z3 x") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_group("Z3 Z4") {
            Err(Error::Syntax { pos, expected, .. }) => {
                assert_eq!(pos, 3);
                assert!(expected.contains("'x'"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_group("sdp(Z7, Z3, foo)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_group("Q8"),
            Err(Error::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn builds_groups() {
        let ev = Evaluator::new();
        let g = ev
            .build(&parse_group("sdp(Z7, Z3, mult=2)").unwrap())
            .unwrap();
        assert_eq!(g.group.order(), 21);
        assert!(!g.group.is_abelian());
        let q8 = ev.build(&parse_group("file:q8.tbl").unwrap()).unwrap();
        assert_eq!(q8.group.order(), 8);
        let gd = ev
            .build(&parse_group("sdp(Z3 x Z3, Z2, inv)").unwrap())
            .unwrap()
            .group;
        for a in 0..9 {
            let x = a * 2 + 1;
            assert_eq!(gd.mul(x, x), gd.identity());
        }
        // Z4 acting on Z3 by inversion through Z4 -> Z2.
        let dic = ev
            .build(&parse_group("sdp(Z3, Z4, inv)").unwrap())
            .unwrap()
            .group;
        assert_eq!(dic.order(), 12);
        assert!(!dic.is_abelian());
        assert!(ev.build(&parse_group("sdp(Z5, Z3, inv)").unwrap()).is_err());
        assert!(ev.build(&parse_group("sdp(S3, Z2, inv)").unwrap()).is_err());
        assert!(ev
            .build(&parse_group("file:/nonexistent/x.tbl").unwrap())
            .is_err());
        let trivial_action = ev
            .build(&parse_group("sdp(Z3, Z4, mult=1)").unwrap())
            .unwrap()
            .group;
        let product = ev.build(&parse_group("Z3 x Z4").unwrap()).unwrap().group;
        assert_eq!(trivial_action.table(), product.table());
    }

    #[test]
    fn action_tables() {
        let dir = std::env::temp_dir().join(format!("powergraph-expr-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("swap.act"),
            "0 1 2 3 4 5 6 7 8\n0 3 6 1 4 7 2 5 8\n",
        )
        .unwrap();
        let ev = Evaluator::new().with_base_dir(&dir);
        let g = ev
            .build(&parse_group("sdp(Z3 x Z3, Z2, table=swap.act)").unwrap())
            .unwrap();
        assert_eq!(g.group.order(), 18);
        let s3z3 = FiniteGroup::direct_product(
            &FiniteGroup::symmetric(3).unwrap(),
            &FiniteGroup::cyclic(3).unwrap(),
        )
        .unwrap();
        let mut a: Vec<u64> = g
            .group
            .elements()
            .map(|x| g.group.element_order(x))
            .collect();
        let mut b: Vec<u64> = s3z3.elements().map(|x| s3z3.element_order(x)).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        std::fs::write(
            dir.join("bad.act"),
            "0 1 2 3 4 5 6 7 8\n0 2 1 3 4 5 6 7 8\n",
        )
        .unwrap();
        assert!(ev
            .build(&parse_group("sdp(Z3 x Z3, Z2, table=bad.act)").unwrap())
            .is_err());
        std::fs::remove_dir_all(&dir).ok();
    }

    fn arb_expr() -> impl Strategy<Value = GroupExpr> {
        let leaf = prop_oneof![
            (1u64..50).prop_map(GroupExpr::Cyclic),
            (1u64..20).prop_map(|n| GroupExpr::Dihedral(2 * n)),
            (1usize..6).prop_map(GroupExpr::Sym),
            (1usize..6).prop_map(GroupExpr::Alt),
            "[a-z][a-z0-9_./ ]{0,8}".prop_map(GroupExpr::File),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| GroupExpr::Product(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| GroupExpr::Sdp(
                    Box::new(a),
                    Box::new(b),
                    Action::Inv
                )),
                (inner, "[a-z]{1,6}").prop_map(|(a, p)| GroupExpr::Sdp(
                    Box::new(a),
                    Box::new(GroupExpr::Cyclic(2)),
                    Action::Table(p)
                )),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(e in arb_expr()) {
            prop_assert_eq!(parse_group(&e.to_string()).unwrap(), e);
        }
    }
}
