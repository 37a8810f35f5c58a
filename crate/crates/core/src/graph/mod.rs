//! Directed graphs, partitions and quotients.
//!
//! Simple graphs are stored as symmetric digraphs.

mod iso;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use iso::{
    disjoint_copies_of, disjoint_copies_of_labeled, isomorphic, isomorphic_labeled, IsoBudget,
    DEFAULT_ISO_BUDGET,
};

/// A loop-free digraph on `0..vertex_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(
        vertex_count: usize,
        edges: I,
    ) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Contract(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::Contract(format!("loop at vertex {u}")));
            }
            g.edges.insert((u, v));
        }
        Ok(g)
    }

    /// Inserts `u -> v`; returns false if it was already present.
    ///
    /// Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "vertex out of range"
        );
        assert_ne!(u, v, "digraphs here have no loops");
        self.edges.insert((u, v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((u, 0)..(u + 1, 0)).map(|&(_, v)| v)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_neighbors(u).count()
    }

    /// Out-adjacency lists, sorted.
    pub fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            lists[u].push(v);
        }
        lists
    }

    /// In-adjacency lists, sorted.
    pub fn in_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            lists[v].push(u);
        }
        lists
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.edges.contains(&(v, u)))
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Digraph::new(vertices.len());
        for &u in vertices {
            for v in self.out_neighbors(u) {
                if pos[v] != usize::MAX {
                    g.edges.insert((pos[u], pos[v]));
                }
            }
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.vertex_count;
        let mut g = self.clone();
        g.vertex_count += other.vertex_count;
        g.edges
            .extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        g
    }
}

/// A digraph whose every edge carries an integer label of at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledDigraph {
    graph: Digraph,
    labels: BTreeMap<(usize, usize), u64>,
}

impl LabeledDigraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            graph: Digraph::new(vertex_count),
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize, u64)>>(
        vertex_count: usize,
        edges: I,
    ) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v, label) in edges {
            if u >= vertex_count || v >= vertex_count || u == v {
                return Err(Error::Contract(format!("bad edge ({u}, {v})")));
            }
            g.try_add_edge(u, v, label)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize, label: u64) -> Result<()> {
        if label < 2 {
            return Err(Error::Contract(format!(
                "label {label} on ({u}, {v}) is below 2"
            )));
        }
        if let Some(&old) = self.labels.get(&(u, v)) {
            if old != label {
                return Err(Error::Contract(format!(
                    "edge ({u}, {v}) labelled both {old} and {label}"
                )));
            }
        }
        self.graph.add_edge(u, v);
        self.labels.insert((u, v), label);
        Ok(())
    }

    /// Panics if the label is below 2 or conflicts with an existing one.
    pub fn add_edge(&mut self, u: usize, v: usize, label: u64) {
        self.try_add_edge(u, v, label)
            .expect("invalid labelled edge");
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u64> {
        self.labels.get(&(u, v)).copied()
    }

    /// `(u, v, label)` in lexicographic edge order.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.labels.iter().map(|(&(u, v), &l)| (u, v, l))
    }

    /// Keeps all vertices and the edges whose label satisfies `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(u64) -> bool) -> Self {
        let mut g = Self::new(self.vertex_count());
        for (u, v, l) in self.labeled_edges() {
            if keep(l) {
                g.add_edge(u, v, l);
            }
        }
        g
    }

    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Self::new(vertices.len());
        for (u, v, l) in self.labeled_edges() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                g.add_edge(pos[u], pos[v], l);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertex_count();
        let mut g = self.clone();
        g.graph.vertex_count += other.vertex_count();
        for (u, v, l) in other.labeled_edges() {
            g.add_edge(u + shift, v + shift, l);
        }
        g
    }
}

/// Disjoint nonempty cells covering every vertex exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(vertex_count: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut cell_of = vec![usize::MAX; vertex_count];
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::Contract(format!("cell {i} is empty")));
            }
            for &v in cell {
                if v >= vertex_count {
                    return Err(Error::Contract(format!("vertex {v} out of range")));
                }
                if cell_of[v] != usize::MAX {
                    return Err(Error::Contract(format!("vertex {v} lies in two cells")));
                }
                cell_of[v] = i;
            }
        }
        if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Contract(format!("vertex {v} lies in no cell")));
        }
        Ok(Self { cells, cell_of })
    }

    pub fn singletons(vertex_count: usize) -> Self {
        Self::new(vertex_count, (0..vertex_count).map(|v| vec![v]).collect())
            .expect("singletons partition")
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    fn check_fits(&self, g: &Digraph) -> Result<()> {
        if self.vertex_count() != g.vertex_count() {
            return Err(Error::Contract(format!(
                "partition covers {} vertices but the graph has {}",
                self.vertex_count(),
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Adds the reverse of every edge.
pub fn undirect(g: &Digraph) -> Digraph {
    let mut out = g.clone();
    for &(u, v) in &g.edges {
        out.edges.insert((v, u));
    }
    out
}

/// Weakly connected components, each sorted, ordered by least vertex.
pub fn weak_components(g: &Digraph) -> VertexPartition {
    let n = g.vertex_count();
    let mut nbrs = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    let mut cells = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = cells.len();
        let mut cell = vec![start];
        comp[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &nbrs[u] {
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    cell.push(v);
                    queue.push_back(v);
                }
            }
        }
        cell.sort_unstable();
        cells.push(cell);
    }
    VertexPartition {
        cells,
        cell_of: comp,
    }
}

pub fn is_directed_clique(g: &Digraph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .all(|&u| vertices.iter().all(|&v| u == v || g.has_edge(u, v)))
}

/// Every weak component is a directed clique.
pub fn is_directed_clique_union(g: &Digraph) -> bool {
    // Each component of size s must carry s(s-1) edges, all inside it.
    let comps = weak_components(g);
    let expected: usize = comps.cells().iter().map(|c| c.len() * (c.len() - 1)).sum();
    expected == g.edge_count()
}

/// Every weak component of a symmetric digraph is complete.
pub fn is_clique_union(g: &Digraph) -> Result<bool> {
    if !g.is_symmetric() {
        return Err(Error::Contract(
            "is_clique_union needs a symmetric digraph".into(),
        ));
    }
    Ok(is_directed_clique_union(g))
}

/// For every ordered pair of cells `(A, B)`, all vertices of `A` have the
/// same number of out-neighbours in `B` and the same number of in-neighbours
/// in `B`.
pub fn is_equitable(g: &Digraph, p: &VertexPartition) -> Result<bool> {
    p.check_fits(g)?;
    let k = p.len();
    let mut out_counts = vec![vec![0usize; k]; g.vertex_count()];
    let mut in_counts = vec![vec![0usize; k]; g.vertex_count()];
    for (u, v) in g.edges() {
        out_counts[u][p.cell_of(v)] += 1;
        in_counts[v][p.cell_of(u)] += 1;
    }
    Ok(p.cells().iter().all(|cell| {
        let first = cell[0];
        cell.iter()
            .all(|&v| out_counts[v] == out_counts[first] && in_counts[v] == in_counts[first])
    }))
}

/// Cell-level digraph with an edge `A -> B` (A != B) whenever some edge of
/// `g` runs from `A` into `B`.
pub fn quotient(g: &Digraph, p: &VertexPartition) -> Result<Digraph> {
    p.check_fits(g)?;
    let mut q = Digraph::new(p.len());
    for (u, v) in g.edges() {
        let (a, b) = (p.cell_of(u), p.cell_of(v));
        if a != b {
            q.edges.insert((a, b));
        }
    }
    Ok(q)
}
