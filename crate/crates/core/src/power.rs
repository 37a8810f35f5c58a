//! Power graphs, excluded power graphs and their quotients.
//!
//! `g -> g^k` survives the exclusion of `X` exactly when no member of `X`
//! divides `gcd(k, o(g))`, so every edge is found by scanning `k` over
//! `1..=o(g)` only.

use crate::graph::{undirect, Digraph, LabeledDigraph, VertexPartition};
use crate::group::{CyclicSubgroup, FiniteGroup};
use crate::numth::{admissible, divisors, ExclusionSet};

/// Directed `X`-excluded power graph on the elements of `group`.
pub fn directed_power_graph(group: &FiniteGroup, exclusion: &ExclusionSet) -> Digraph {
    let mut graph = Digraph::new(group.order());
    for g in group.elements() {
        let order = group.element_order(g);
        let mut power = group.identity();
        for k in 1..=order {
            power = group.mul(power, g);
            if power != g && admissible(k, order, exclusion) {
                graph.add_edge(g, power);
            }
        }
    }
    graph
}

/// Symmetrization of [`directed_power_graph`].
pub fn undirected_power_graph(group: &FiniteGroup, exclusion: &ExclusionSet) -> Digraph {
    undirect(&directed_power_graph(group, exclusion))
}

/// Cells are the generator sets of the cyclic subgroups, in the order of
/// [`FiniteGroup::cyclic_subgroups`].
pub fn generator_partition(group: &FiniteGroup) -> VertexPartition {
    partition_from(group, &group.cyclic_subgroups())
}

fn partition_from(group: &FiniteGroup, subgroups: &[CyclicSubgroup]) -> VertexPartition {
    VertexPartition::new(
        group.order(),
        subgroups
            .iter()
            .map(|c| c.generators.iter().copied().collect())
            .collect(),
    )
    .expect("generator sets partition the group")
}

/// Quotient power graph: one vertex per cyclic subgroup `C` and, for each
/// divisor `d >= 2` of `|C|`, an edge to `{ h^d : h in C }` labelled `d`.
pub fn quotient_power_graph(group: &FiniteGroup) -> LabeledDigraph {
    let subgroups = group.cyclic_subgroups();
    let mut owner = vec![usize::MAX; group.order()];
    for (i, c) in subgroups.iter().enumerate() {
        for &g in &c.generators {
            owner[g] = i;
        }
    }
    let mut q = LabeledDigraph::new(subgroups.len());
    for (i, c) in subgroups.iter().enumerate() {
        for d in divisors(c.order).into_iter().filter(|&d| d >= 2) {
            // The d-th powers of C form the cyclic subgroup generated by g^d.
            let target = owner[group.power(c.generator, d)];
            q.add_edge(i, target, d);
        }
    }
    q
}

/// Drops the edges whose label some member of `exclusion` divides; keeps
/// every vertex.
pub fn excluded_quotient(q: &LabeledDigraph, exclusion: &ExclusionSet) -> LabeledDigraph {
    q.filter_edges(|label| !exclusion.divides_any(label))
}

/// `excluded_quotient(quotient_power_graph(group), exclusion)`.
pub fn excluded_quotient_power_graph(
    group: &FiniteGroup,
    exclusion: &ExclusionSet,
) -> LabeledDigraph {
    excluded_quotient(&quotient_power_graph(group), exclusion)
}

/// Display names for quotient vertices: `<g>` for each subgroup's least
/// generator.
pub fn subgroup_names(group: &FiniteGroup) -> Vec<String> {
    group
        .cyclic_subgroups()
        .iter()
        .map(|c| format!("<{}>", group.name(c.generator)))
        .collect()
}
