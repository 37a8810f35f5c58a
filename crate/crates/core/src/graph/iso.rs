//! Exact digraph isomorphism by backtracking.
//!
//! Vertices are first coloured by iterated neighbourhood refinement run on
//! both graphs at once, so equal colours mean equal local structure. Weak
//! components are then matched pairwise by fingerprint and a backtracking
//! search maps vertices only onto candidates of the same colour.

use std::collections::HashMap;

use super::{weak_components, Digraph, LabeledDigraph};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;

/// Upper bound on backtracking steps for one isomorphism query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoBudget(pub u64);

impl Default for IsoBudget {
    fn default() -> Self {
        Self(DEFAULT_ISO_BUDGET)
    }
}

/// Dense view used by the search. `adj[u * n + v]` is 0 for no edge and
/// `label + 1` otherwise (unlabelled edges use label 0).
struct Dense {
    n: usize,
    adj: Vec<u64>,
    out: Vec<Vec<(usize, u64)>>,
    inn: Vec<Vec<(usize, u64)>>,
}

impl Dense {
    fn new(n: usize, edges: impl Iterator<Item = (usize, usize, u64)>) -> Self {
        let mut adj = vec![0; n * n];
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v, l) in edges {
            adj[u * n + v] = l + 1;
            out[u].push((v, l));
            inn[v].push((u, l));
        }
        Self { n, adj, out, inn }
    }

    #[inline]
    fn edge(&self, u: usize, v: usize) -> u64 {
        self.adj[u * self.n + v]
    }
}

/// Colour refinement over both graphs with a shared colour table, so a
/// colour id means the same thing on either side. Returns stable colours.
fn refine(a: &Dense, b: &Dense) -> (Vec<usize>, Vec<usize>) {
    type Signature = (usize, Vec<(usize, u64)>, Vec<(usize, u64)>);
    let mut ca = vec![0usize; a.n];
    let mut cb = vec![0usize; b.n];
    let mut classes = 1;
    loop {
        let mut table: HashMap<Signature, usize> = HashMap::new();
        let mut recolor = |g: &Dense, colors: &[usize]| -> Vec<usize> {
            (0..g.n)
                .map(|u| {
                    let mut outs: Vec<(usize, u64)> =
                        g.out[u].iter().map(|&(v, l)| (colors[v], l)).collect();
                    let mut ins: Vec<(usize, u64)> =
                        g.inn[u].iter().map(|&(v, l)| (colors[v], l)).collect();
                    outs.sort_unstable();
                    ins.sort_unstable();
                    let sig = (colors[u], outs, ins);
                    let next = table.len();
                    *table.entry(sig).or_insert(next)
                })
                .collect()
        };
        let na = recolor(a, &ca);
        let nb = recolor(b, &cb);
        let count = table.len();
        ca = na;
        cb = nb;
        if count == classes {
            return (ca, cb);
        }
        classes = count;
    }
}

struct Search<'a> {
    a: &'a Dense,
    b: &'a Dense,
    ca: &'a [usize],
    cb: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl Search<'_> {
    fn consistent(&self, order: &[usize], depth: usize, u: usize, v: usize) -> bool {
        order[..depth].iter().all(|&u2| {
            let v2 = self.map[u2];
            self.a.edge(u, u2) == self.b.edge(v, v2) && self.a.edge(u2, u) == self.b.edge(v2, v)
        })
    }

    fn extend(&mut self, order: &[usize], targets: &[usize], depth: usize) -> Result<bool> {
        if depth == order.len() {
            return Ok(true);
        }
        let u = order[depth];
        for &v in targets {
            if self.used[v] || self.ca[u] != self.cb[v] {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::ResourceExhausted {
                    budget: self.budget,
                });
            }
            if !self.consistent(order, depth, u, v) {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.extend(order, targets, depth + 1)? {
                return Ok(true);
            }
            self.used[v] = false;
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}

/// Breadth-first order over the undirected skeleton, rarest colour first,
/// so each new vertex is constrained by already-mapped neighbours.
fn search_order(g: &Dense, colors: &[usize], cell: &[usize]) -> Vec<usize> {
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &u in cell {
        *freq.entry(colors[u]).or_default() += 1;
    }
    let start = *cell
        .iter()
        .min_by_key(|&&u| (freq[&colors[u]], u))
        .expect("nonempty component");
    let mut seen = vec![false; g.n];
    let mut order = vec![start];
    seen[start] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        let mut next: Vec<usize> = g.out[u]
            .iter()
            .chain(&g.inn[u])
            .map(|&(v, _)| v)
            .filter(|&v| !seen[v])
            .collect();
        next.sort_by_key(|&v| (freq[&colors[v]], v));
        next.dedup();
        for v in next {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
        i += 1;
    }
    order
}

fn isomorphic_dense(a: &Dense, b: &Dense, budget: IsoBudget) -> Result<bool> {
    if a.n != b.n
        || a.out.iter().map(Vec::len).sum::<usize>() != b.out.iter().map(Vec::len).sum::<usize>()
    {
        return Ok(false);
    }
    let (ca, cb) = refine(a, b);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(false);
    }

    let skeleton = |g: &Dense| {
        Digraph::from_edges(
            g.n,
            g.out
                .iter()
                .enumerate()
                .flat_map(|(u, vs)| vs.iter().map(move |&(v, _)| (u, v))),
        )
        .expect("dense view holds a valid digraph")
    };
    let comps_a = weak_components(&skeleton(a));
    let comps_b = weak_components(&skeleton(b));
    if comps_a.len() != comps_b.len() {
        return Ok(false);
    }
    let fingerprint = |cell: &[usize], colors: &[usize]| {
        let mut c: Vec<usize> = cell.iter().map(|&u| colors[u]).collect();
        c.sort_unstable();
        c
    };
    let prints_b: Vec<Vec<usize>> = comps_b
        .cells()
        .iter()
        .map(|c| fingerprint(c, &cb))
        .collect();
    let mut matched = vec![false; comps_b.len()];

    let mut search = Search {
        a,
        b,
        ca: &ca,
        cb: &cb,
        map: vec![usize::MAX; a.n],
        used: vec![false; b.n],
        steps: 0,
        budget: budget.0,
    };
    'components: for cell in comps_a.cells() {
        let print = fingerprint(cell, &ca);
        let order = search_order(a, &ca, cell);
        for (j, target) in comps_b.cells().iter().enumerate() {
            if matched[j] || prints_b[j] != print {
                continue;
            }
            if search.extend(&order, target, 0)? {
                matched[j] = true;
                continue 'components;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Unlabelled digraph isomorphism.
pub fn isomorphic(g1: &Digraph, g2: &Digraph, budget: IsoBudget) -> Result<bool> {
    let a = Dense::new(g1.vertex_count(), g1.edges().map(|(u, v)| (u, v, 0)));
    let b = Dense::new(g2.vertex_count(), g2.edges().map(|(u, v)| (u, v, 0)));
    isomorphic_dense(&a, &b, budget)
}

/// Isomorphism that must also preserve edge labels.
pub fn isomorphic_labeled(
    g1: &LabeledDigraph,
    g2: &LabeledDigraph,
    budget: IsoBudget,
) -> Result<bool> {
    let a = Dense::new(g1.vertex_count(), g1.labeled_edges());
    let b = Dense::new(g2.vertex_count(), g2.labeled_edges());
    isomorphic_dense(&a, &b, budget)
}

/// `Some(k)` when `g` is isomorphic to `k >= 1` disjoint copies of `h`.
pub fn disjoint_copies_of(g: &Digraph, h: &Digraph, budget: IsoBudget) -> Result<Option<usize>> {
    copies_generic(
        g,
        h,
        |x| weak_components(x).cells().to_vec(),
        |x, cell| x.induced(cell),
        |x| x.vertex_count(),
        |x, y| x.disjoint_union(y),
        |x, y| isomorphic(x, y, budget),
    )
}

/// Label-preserving variant of [`disjoint_copies_of`].
pub fn disjoint_copies_of_labeled(
    g: &LabeledDigraph,
    h: &LabeledDigraph,
    budget: IsoBudget,
) -> Result<Option<usize>> {
    copies_generic(
        g,
        h,
        |x| weak_components(x.graph()).cells().to_vec(),
        |x, cell| x.induced(cell),
        |x| x.vertex_count(),
        |x, y| x.disjoint_union(y),
        |x, y| isomorphic_labeled(x, y, budget),
    )
}

fn copies_generic<G: Clone>(
    g: &G,
    h: &G,
    components: impl Fn(&G) -> Vec<Vec<usize>>,
    induced: impl Fn(&G, &[usize]) -> G,
    size: impl Fn(&G) -> usize,
    union: impl Fn(&G, &G) -> G,
    iso: impl Fn(&G, &G) -> Result<bool>,
) -> Result<Option<usize>> {
    let (ng, nh) = (size(g), size(h));
    if ng == 0 || nh == 0 || ng % nh != 0 {
        return Ok(None);
    }
    if components(h).len() == 1 {
        let comps = components(g);
        for cell in &comps {
            if cell.len() != nh || !iso(&induced(g, cell), h)? {
                return Ok(None);
            }
        }
        return Ok(Some(comps.len()));
    }
    let k = ng / nh;
    let mut copies = h.clone();
    for _ in 1..k {
        copies = union(&copies, h);
    }
    Ok(iso(g, &copies)?.then_some(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> IsoBudget {
        IsoBudget::default()
    }

    #[test]
    fn basic_cases() {
        let cycle = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let path = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(isomorphic(&cycle, &cycle, b()).unwrap());
        assert!(!isomorphic(&cycle, &path, b()).unwrap());
        let relabeled = Digraph::from_edges(3, [(2, 0), (0, 1)]).unwrap();
        assert!(isomorphic(&path, &relabeled, b()).unwrap());
        let reversed = Digraph::from_edges(3, [(1, 0), (2, 1)]).unwrap();
        assert!(isomorphic(&path, &reversed, b()).unwrap());
        let fork_out = Digraph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let fork_in = Digraph::from_edges(3, [(1, 0), (2, 0)]).unwrap();
        assert!(!isomorphic(&fork_out, &fork_in, b()).unwrap());
    }

    #[test]
    fn regular_graphs_need_search() {
        // 6-cycle vs two triangles: same degrees everywhere.
        let hexagon = super::super::undirect(
            &Digraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap(),
        );
        let triangles = super::super::undirect(
            &Digraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
        );
        assert!(!isomorphic(&hexagon, &triangles, b()).unwrap());
        let shuffled = super::super::undirect(
            &Digraph::from_edges(6, [(0, 3), (3, 1), (1, 5), (5, 2), (2, 4), (4, 0)]).unwrap(),
        );
        assert!(isomorphic(&hexagon, &shuffled, b()).unwrap());
    }

    #[test]
    fn labels_matter_in_labeled_mode() {
        let x = LabeledDigraph::from_edges(2, [(0, 1, 2)]).unwrap();
        let y = LabeledDigraph::from_edges(2, [(1, 0, 3)]).unwrap();
        assert!(isomorphic(x.graph(), y.graph(), b()).unwrap());
        assert!(!isomorphic_labeled(&x, &y, b()).unwrap());
    }

    #[test]
    fn copies() {
        let edge = Digraph::from_edges(2, [(0, 1)]).unwrap();
        let three = Digraph::from_edges(6, [(0, 3), (4, 1), (2, 5)]).unwrap();
        assert_eq!(disjoint_copies_of(&three, &edge, b()).unwrap(), Some(3));
        assert_eq!(disjoint_copies_of(&edge, &edge, b()).unwrap(), Some(1));
        let mixed = Digraph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(disjoint_copies_of(&mixed, &edge, b()).unwrap(), None);
        let two_points = Digraph::new(2);
        assert_eq!(
            disjoint_copies_of(&Digraph::new(6), &two_points, b()).unwrap(),
            Some(3)
        );
        assert_eq!(disjoint_copies_of(&three, &two_points, b()).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let n = 8;
        let complete = Digraph::from_edges(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap();
        let r = isomorphic(&complete, &complete, IsoBudget(3));
        assert!(matches!(r, Err(Error::ResourceExhausted { budget: 3 })));
    }
}
