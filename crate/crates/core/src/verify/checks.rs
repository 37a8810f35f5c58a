//! One checker per structural claim. Each evaluates its hypothesis from the
//! group structure and its conclusion from the graphs, separately.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::expr::{BuiltGroup, GroupExpr, SemidirectParts};
use crate::graph::{
    disjoint_copies_of, disjoint_copies_of_labeled, is_clique_union, weak_components, Digraph,
    IsoBudget,
};
use crate::group::{Automorphism, FiniteGroup};
use crate::numth::{
    divisors, factorize, gcd, inverse_mod, is_prime, multiplicative_order, pow_mod, prime_divisors,
    ExclusionSet,
};
use crate::power::{
    directed_power_graph, excluded_quotient_power_graph, generator_partition, quotient_power_graph,
    undirected_power_graph,
};

use super::report::{Claim, VerificationReport, Witness};

fn names(group: &FiniteGroup, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| group.name(x).to_string()).collect()
}

fn missing(group: &FiniteGroup, (u, v): (usize, usize)) -> Witness {
    Witness::MissingEdge {
        from: group.name(u).into(),
        to: group.name(v).into(),
    }
}

fn extra(group: &FiniteGroup, (u, v): (usize, usize)) -> Witness {
    Witness::ExtraEdge {
        from: group.name(u).into(),
        to: group.name(v).into(),
    }
}

/// First edge on which `actual` departs from `expected`.
fn first_difference(group: &FiniteGroup, expected: &Digraph, actual: &Digraph) -> Option<Witness> {
    if let Some(&e) = expected.edge_set().difference(actual.edge_set()).next() {
        return Some(missing(group, e));
    }
    actual
        .edge_set()
        .difference(expected.edge_set())
        .next()
        .map(|&e| extra(group, e))
}

fn missing_clique_edge(g: &Digraph, cell: &[usize]) -> Option<(usize, usize)> {
    cell.iter()
        .flat_map(|&u| cell.iter().map(move |&v| (u, v)))
        .find(|&(u, v)| u != v && !g.has_edge(u, v))
}

/// A missing edge inside some weak component, if any component is not a
/// clique.
fn non_clique_witness(group: &FiniteGroup, g: &Digraph) -> Option<Witness> {
    weak_components(g)
        .cells()
        .iter()
        .find_map(|cell| missing_clique_edge(g, cell))
        .map(|e| missing(group, e))
}

fn only_primes(x: &ExclusionSet) -> bool {
    x.iter().all(is_prime)
}

fn budget_exceeded(e: &Error) -> Option<u64> {
    match e {
        Error::ResourceExhausted { budget } => Some(*budget),
        _ => None,
    }
}

/// Excluding primes that do not divide `|G|` leaves the power graph
/// unchanged.
pub fn check_no_divisor(group: &FiniteGroup, desc: &str, x: &ExclusionSet) -> VerificationReport {
    let full = directed_power_graph(group, &ExclusionSet::empty());
    let excluded = directed_power_graph(group, x);
    no_divisor_report(group, desc, x, &full, &excluded)
}

pub(crate) fn no_divisor_report(
    group: &FiniteGroup,
    desc: &str,
    x: &ExclusionSet,
    full: &Digraph,
    excluded: &Digraph,
) -> VerificationReport {
    let r = VerificationReport::new(Claim::NoDivisor, desc).param("X", x);
    if !only_primes(x) {
        return r.not_applicable("exclusion set must consist of primes");
    }
    let hypothesis = !x.divides_any(group.order() as u64);
    let w = first_difference(group, full, excluded);
    r.implication(hypothesis, w.is_none(), w)
}

/// Excluding every prime divisor of `|G|` leaves exactly the generator
/// sets, each a directed clique.
pub fn check_all_primes(group: &FiniteGroup, desc: &str, x: &ExclusionSet) -> VerificationReport {
    all_primes_report(group, desc, x, &directed_power_graph(group, x))
}

pub(crate) fn all_primes_report(
    group: &FiniteGroup,
    desc: &str,
    x: &ExclusionSet,
    excluded: &Digraph,
) -> VerificationReport {
    let r = VerificationReport::new(Claim::AllPrimes, desc).param("X", x);
    if !only_primes(x) {
        return r.not_applicable("exclusion set must consist of primes");
    }
    let hypothesis = prime_divisors(group.order() as u64)
        .into_iter()
        .all(|p| x.contains(p));

    let components = weak_components(excluded);
    let comps: BTreeSet<&Vec<usize>> = components.cells().iter().collect();
    let partition = generator_partition(group);
    let gens: BTreeSet<&Vec<usize>> = partition.cells().iter().collect();
    let witness = comps
        .symmetric_difference(&gens)
        .next()
        .map(|cell| Witness::Elements {
            elements: names(group, cell.iter().copied()),
        })
        .or_else(|| non_clique_witness(group, excluded));
    let note = format!(
        "{} components, {} edges",
        components.len(),
        excluded.edge_count()
    );
    r.implication(hypothesis, witness.is_none(), witness)
        .with_note(note)
}

/// Excluding `X u Y` keeps exactly the edges kept by both exclusions.
pub fn check_intersection(
    group: &FiniteGroup,
    desc: &str,
    x: &ExclusionSet,
    y: &ExclusionSet,
) -> VerificationReport {
    let gx = directed_power_graph(group, x);
    let gy = directed_power_graph(group, y);
    let gxy = directed_power_graph(group, &x.union(y));
    intersection_report(group, desc, x, y, &gx, &gy, &gxy)
}

pub(crate) fn intersection_report(
    group: &FiniteGroup,
    desc: &str,
    x: &ExclusionSet,
    y: &ExclusionSet,
    gx: &Digraph,
    gy: &Digraph,
    gxy: &Digraph,
) -> VerificationReport {
    let mut both = Digraph::new(group.order());
    for (u, v) in gx.edge_set().intersection(gy.edge_set()) {
        both.add_edge(*u, *v);
    }
    let w = first_difference(group, &both, gxy);
    VerificationReport::new(Claim::EdgeIntersection, desc)
        .param("X", x)
        .param("Y", y)
        .implication(true, w.is_none(), w)
}

/// Directed side: `Delta_{-{p}}(G)` is a union of directed cliques iff `G`
/// is a `p`-group.
pub fn classify_directed(group: &FiniteGroup, desc: &str, p: u64) -> VerificationReport {
    let r = VerificationReport::new(Claim::DirectedClassification, desc).param("p", p);
    if !is_prime(p) {
        return r.not_applicable("p must be prime");
    }
    let x = ExclusionSet::primes_of(p);
    let g = directed_power_graph(group, &x);
    let graph_witness = non_clique_witness(group, &g);
    let left = graph_witness.is_none();
    let right = group.is_p_group(p).expect("p is prime");
    let witness = graph_witness.or_else(|| {
        Some(Witness::Message {
            text: format!("order {} is not a power of {p}", group.order()),
        })
    });
    r.equivalence(left, right, witness)
}

/// `|G| = q^s p^t` for at most one prime `q != p`, with the `q`-primary
/// elements forming a cyclic subgroup.
fn cyclic_sylow_times_p_group(group: &FiniteGroup, p: u64) -> (bool, Witness) {
    let others: Vec<u64> = prime_divisors(group.order() as u64)
        .into_iter()
        .filter(|&q| q != p)
        .collect();
    match others.as_slice() {
        [] => (
            true,
            Witness::Message {
                text: format!("order {} is a power of {p}", group.order()),
            },
        ),
        [q] => {
            let primary = group.primary_elements(*q);
            (
                group.is_cyclic_subgroup(&primary),
                Witness::Elements {
                    elements: names(group, primary),
                },
            )
        }
        _ => (
            false,
            Witness::Message {
                text: format!("order {} has primes {others:?} besides {p}", group.order()),
            },
        ),
    }
}

/// Undirected side: `Pi_{-{p}}(G)` is a union of cliques iff `G` is a
/// cyclic normal Sylow subgroup extended by a `p`-group.
pub fn classify_undirected(group: &FiniteGroup, desc: &str, p: u64) -> VerificationReport {
    let r = VerificationReport::new(Claim::UndirectedClassification, desc).param("p", p);
    if !is_prime(p) {
        return r.not_applicable("p must be prime");
    }
    let u = undirected_power_graph(group, &ExclusionSet::primes_of(p));
    let left = is_clique_union(&u).expect("symmetrized graph");
    let (right, structural) = cyclic_sylow_times_p_group(group, p);
    let witness = if left {
        structural
    } else {
        non_clique_witness(group, &u).expect("not a clique union")
    };
    r.equivalence(left, right, Some(witness))
}

/// A group built as `H x| K`, indexed by `(a, b) -> a * |K| + b`.
pub(crate) struct SdpView<'a> {
    pub group: &'a FiniteGroup,
    pub parts: &'a SemidirectParts,
    pub pi: ExclusionSet,
}

impl<'a> SdpView<'a> {
    pub fn new(built: &'a BuiltGroup) -> Result<Self> {
        let parts = built.parts.as_ref().ok_or_else(|| {
            Error::InvalidArgument("group was not built as a product of two factors".into())
        })?;
        Ok(Self {
            group: &built.group,
            parts,
            pi: ExclusionSet::primes_of(parts.base.order() as u64),
        })
    }

    fn h(&self) -> &FiniteGroup {
        &self.parts.base
    }

    fn k(&self) -> &FiniteGroup {
        &self.parts.acting
    }

    pub fn coprime(&self) -> bool {
        gcd(self.h().order() as u64, self.k().order() as u64) == 1
    }

    fn pair(&self, a: usize, b: usize) -> usize {
        a * self.k().order() + b
    }

    fn check_indices(&self, a: usize, b: usize) -> Result<()> {
        if a >= self.h().order() || b >= self.k().order() {
            return Err(Error::InvalidArgument(format!(
                "element pair ({a}, {b}) out of range for factors of order {} and {}",
                self.h().order(),
                self.k().order()
            )));
        }
        Ok(())
    }

    fn report(&self, claim: Claim, desc: &str, a: usize, b: usize) -> VerificationReport {
        VerificationReport::new(claim, desc)
            .param("a", self.h().name(a))
            .param("b", self.k().name(b))
            .param("pi", &self.pi)
    }
}

/// Checks both parts of the coprime normalizing/centralizing claim for the
/// pair `(a, b)` of factor elements. Returns the normalizer report and the
/// centralizer report.
pub fn check_hall_semidirect(
    built: &BuiltGroup,
    desc: &str,
    a: usize,
    b: usize,
    budget: IsoBudget,
) -> Result<Vec<VerificationReport>> {
    let view = SdpView::new(built)?;
    view.check_indices(a, b)?;
    let delta_pi = directed_power_graph(view.group, &view.pi);
    let delta_k = directed_power_graph(view.k(), &ExclusionSet::empty());
    Ok(hall_reports(&view, desc, &delta_pi, &delta_k, a, b, budget))
}

pub(crate) fn hall_reports(
    view: &SdpView,
    desc: &str,
    delta_pi: &Digraph,
    delta_k: &Digraph,
    a: usize,
    b: usize,
    budget: IsoBudget,
) -> Vec<VerificationReport> {
    let normalizer = view.report(Claim::HallNormalizer, desc, a, b);
    let centralizer = view.report(Claim::HallCentralizer, desc, a, b);
    if !view.coprime() {
        return vec![
            normalizer.not_applicable("factor orders are not coprime"),
            centralizer.not_applicable("factor orders are not coprime"),
        ];
    }
    let (h, k, g) = (view.h(), view.k(), view.group);
    let a_cyc = h.cyclic_subgroup(a);
    let b_cyc = k.cyclic_subgroup(b);
    let a_in_g: Vec<usize> = a_cyc
        .elements
        .iter()
        .map(|&x| view.pair(x, k.identity()))
        .collect();
    let b_in_g = view.pair(h.identity(), b);

    let normal = g.normalizes(b_in_g, &a_in_g);
    let central = g.centralizes(b_in_g, &a_in_g);
    if !normal {
        return vec![
            normalizer.not_applicable("b does not normalize <a>"),
            centralizer.not_applicable("b does not normalize <a>"),
        ];
    }

    let mut j: Vec<usize> = a_cyc
        .elements
        .iter()
        .flat_map(|&x| b_cyc.elements.iter().map(move |&y| (x, y)))
        .map(|(x, y)| view.pair(x, y))
        .collect();
    j.sort_unstable();
    let in_j: BTreeSet<usize> = j.iter().copied().collect();

    let Ok((sub, embedding)) = g.restrict(&j) else {
        let w = Witness::Elements {
            elements: names(g, j),
        };
        return vec![
            normalizer.implication(true, false, Some(w)),
            centralizer.not_applicable("<a><b> is not a subgroup"),
        ];
    };
    let intrinsic = directed_power_graph(&sub, &view.pi);

    // (i) closure and restriction
    let escaping = j
        .iter()
        .flat_map(|&u| delta_pi.out_neighbors(u).map(move |v| (u, v)))
        .find(|(_, v)| !in_j.contains(v))
        .map(|e| extra(g, e));
    let restricted = delta_pi.induced(&embedding);
    let witness = escaping.or_else(|| first_difference(&sub, &intrinsic, &restricted));
    let normalizer = normalizer.implication(true, witness.is_none(), witness);

    if !central {
        return vec![
            normalizer,
            centralizer.not_applicable("b does not centralize <a>"),
        ];
    }

    // (ii) out-neighbours of ab inside J
    let ab = view.pair(a, b);
    let b_targets: Vec<usize> = std::iter::once(b).chain(delta_k.out_neighbors(b)).collect();
    let expected: BTreeSet<usize> = a_cyc
        .generators
        .iter()
        .flat_map(|&x| b_targets.iter().map(move |&y| (x, y)))
        .map(|(x, y)| view.pair(x, y))
        .filter(|&v| v != ab)
        .collect();
    let ab_sub = embedding.binary_search(&ab).expect("ab lies in J");
    let actual: BTreeSet<usize> = intrinsic
        .out_neighbors(ab_sub)
        .map(|v| embedding[v])
        .collect();
    if expected != actual {
        let w = Witness::Neighbors {
            vertex: g.name(ab).into(),
            expected: names(g, expected),
            actual: names(g, actual),
        };
        return vec![normalizer, centralizer.implication(true, false, Some(w))];
    }

    // (ii) quotient: one copy of the quotient graph of <b> per cyclic
    // subgroup of <a>
    let qj = excluded_quotient_power_graph(&sub, &view.pi);
    let (b_group, _) = k.restrict(&b_cyc.elements).expect("cyclic subgroup");
    let qb = quotient_power_graph(&b_group);
    let want = divisors(a_cyc.order).len();
    let centralizer = match disjoint_copies_of(qj.graph(), qb.graph(), budget) {
        Ok(found) => {
            let labelled = disjoint_copies_of_labeled(&qj, &qb, budget).ok().flatten();
            let ok = found == Some(want);
            centralizer
                .param("copies", want)
                .implication(
                    true,
                    ok,
                    Some(Witness::CopyCount {
                        expected: want,
                        actual: found,
                    }),
                )
                .with_note(format!("label-preserving copies: {labelled:?}"))
        }
        Err(e) => match budget_exceeded(&e) {
            Some(n) => centralizer.exhausted(true, n),
            None => centralizer.implication(
                true,
                false,
                Some(Witness::Message {
                    text: e.to_string(),
                }),
            ),
        },
    };
    vec![normalizer, centralizer]
}

/// `H x K` with coprime orders and `pi` the primes of `|H|`: the
/// `pi`-excluded quotient graph is one copy of the quotient graph of `K`
/// per cyclic subgroup of `H`.
pub fn check_direct_product_quotient(
    h: &FiniteGroup,
    k: &FiniteGroup,
    desc: &str,
    budget: IsoBudget,
) -> Result<VerificationReport> {
    let pi = ExclusionSet::primes_of(h.order() as u64);
    let r = VerificationReport::new(Claim::DirectProductQuotient, desc).param("pi", &pi);
    if gcd(h.order() as u64, k.order() as u64) != 1 {
        return Ok(r.not_applicable("factor orders are not coprime"));
    }
    let g = FiniteGroup::direct_product(h, k)?;
    let q = excluded_quotient_power_graph(&g, &pi);
    let qk = quotient_power_graph(k);
    let want = h.cyclic_subgroups().len();
    Ok(copies_report(r, q.graph(), qk.graph(), want, budget))
}

fn copies_report(
    r: VerificationReport,
    g: &Digraph,
    h: &Digraph,
    want: usize,
    budget: IsoBudget,
) -> VerificationReport {
    let r = r.param("copies", want);
    match disjoint_copies_of(g, h, budget) {
        Ok(found) => r.implication(
            true,
            found == Some(want),
            Some(Witness::CopyCount {
                expected: want,
                actual: found,
            }),
        ),
        Err(e) => match budget_exceeded(&e) {
            Some(n) => r.exhausted(true, n),
            None => r.implication(
                true,
                false,
                Some(Witness::Message {
                    text: e.to_string(),
                }),
            ),
        },
    }
}

/// Out-neighbours of `(a, b)` in `H x| K` for abelian `H` acted on by the
/// identity or by inversion.
pub fn check_inversion_sdp(
    built: &BuiltGroup,
    desc: &str,
    a: usize,
    b: usize,
) -> Result<VerificationReport> {
    let view = SdpView::new(built)?;
    view.check_indices(a, b)?;
    let delta_pi = directed_power_graph(view.group, &view.pi);
    let delta = directed_power_graph(view.group, &ExclusionSet::empty());
    Ok(inversion_report(&view, desc, &delta_pi, &delta, a, b))
}

/// Whether every `phi_b` is the identity or inversion on an abelian base.
pub(crate) fn inversion_applicable(
    view: &SdpView,
) -> std::result::Result<Automorphism, &'static str> {
    if !view.coprime() {
        return Err("factor orders are not coprime");
    }
    let inv = Automorphism::inversion(view.h()).map_err(|_| "base group is not abelian")?;
    if view
        .parts
        .action
        .images()
        .iter()
        .all(|f| f.is_identity() || f.map() == inv.map())
    {
        Ok(inv)
    } else {
        Err("action is not by identity and inversion")
    }
}

pub(crate) fn inversion_report(
    view: &SdpView,
    desc: &str,
    delta_pi: &Digraph,
    delta: &Digraph,
    a: usize,
    b: usize,
) -> VerificationReport {
    let r = view.report(Claim::InversionSemidirect, desc, a, b);
    if let Err(why) = inversion_applicable(view) {
        return r.not_applicable(why);
    }
    let (h, k, g) = (view.h(), view.k(), view.group);
    let ab = view.pair(a, b);
    let out = |d: &Digraph| d.out_neighbors(ab).collect::<BTreeSet<usize>>();
    let neighbours_witness =
        |expected: &BTreeSet<usize>, actual: &BTreeSet<usize>| Witness::Neighbors {
            vertex: g.name(ab).into(),
            expected: names(g, expected.iter().copied()),
            actual: names(g, actual.iter().copied()),
        };

    if view.parts.action.image(b).is_identity() {
        let expected: BTreeSet<usize> = h
            .cyclic_subgroup(a)
            .generators
            .iter()
            .flat_map(|&x| {
                k.cyclic_subgroup(b)
                    .elements
                    .into_iter()
                    .map(move |y| (x, y))
            })
            .map(|(x, y)| view.pair(x, y))
            .filter(|&v| v != ab)
            .collect();
        let actual = out(delta_pi);
        let w = (expected != actual).then(|| neighbours_witness(&expected, &actual));
        return r
            .param("action", "identity")
            .implication(true, w.is_none(), w);
    }

    let o = k.element_order(b);
    let odd = (1..o / 2).map(|l| view.pair(a, k.power(b, 2 * l + 1)));
    let even = (0..o / 2).map(|l| view.pair(h.identity(), k.power(b, 2 * l)));
    let expected: BTreeSet<usize> = odd.chain(even).collect();
    let w = [delta_pi, delta]
        .into_iter()
        .map(out)
        .find(|actual| *actual != expected)
        .map(|actual| neighbours_witness(&expected, &actual));
    r.param("action", "inversion")
        .implication(true, w.is_none(), w)
}

/// Nilpotent `G` as the product of Sylow subgroups with distinct primes:
/// excluding `rho` leaves one copy of the quotient graph of the Sylow
/// subgroups outside `rho` per cyclic subgroup of those inside.
pub fn check_nilpotent(
    sylows: &[(String, FiniteGroup)],
    rho: &ExclusionSet,
    budget: IsoBudget,
) -> Result<VerificationReport> {
    let desc = sylows
        .iter()
        .map(|(d, _)| d.as_str())
        .collect::<Vec<_>>()
        .join(" x ");
    let r = VerificationReport::new(Claim::NilpotentQuotient, &desc).param("rho", rho);
    let mut primes = BTreeSet::new();
    for (d, s) in sylows {
        match factorize(s.order() as u64).as_slice() {
            [(p, _)] if primes.insert(*p) => {}
            _ => return Ok(r.not_applicable(format!("{d} is not a p-group for a new prime p"))),
        }
    }
    if rho.is_empty() || rho.len() >= primes.len() || !rho.iter().all(|p| primes.contains(&p)) {
        return Ok(r.not_applicable("rho must be a proper nonempty subset of the primes"));
    }
    let product = |keep: &dyn Fn(u64) -> bool| -> Result<FiniteGroup> {
        let mut acc = FiniteGroup::cyclic(1)?;
        for (_, s) in sylows {
            if keep(prime_divisors(s.order() as u64)[0]) {
                acc = FiniteGroup::direct_product(&acc, s)?;
            }
        }
        Ok(acc)
    };
    let g = product(&|_| true)?;
    let inside = product(&|p| rho.contains(p))?;
    let outside = product(&|p| !rho.contains(p))?;
    let q = excluded_quotient_power_graph(&g, rho);
    let q_out = quotient_power_graph(&outside);
    Ok(copies_report(
        r,
        q.graph(),
        q_out.graph(),
        inside.cyclic_subgroups().len(),
        budget,
    ))
}

/// `(q, s)` when the base factor is `Z<q^s>` with `s >= 1` and the acting
/// factor is a nontrivial `p`-group for a prime `p != q`.
pub(crate) fn sdp_component_primes(parts: &SemidirectParts) -> Option<(u64, u64, u64)> {
    let GroupExpr::Cyclic(n) = parts.base_expr else {
        return None;
    };
    let (qs, ps) = (factorize(n), factorize(parts.acting.order() as u64));
    let ([(q, _)], [(p, _)]) = (qs.as_slice(), ps.as_slice()) else {
        return None;
    };
    (p != q).then_some((n, *q, *p))
}

/// Weak components of `Delta_{-{p}}(Z<q^s> x| P)`, one report per `b` in `P`.
pub fn check_sdp_components(built: &BuiltGroup, desc: &str) -> Result<Vec<VerificationReport>> {
    let view = SdpView::new(built)?;
    let Some((_, _, p)) = sdp_component_primes(view.parts) else {
        return Err(Error::InvalidArgument(
            "expected a cyclic group of prime power order acted on by a p-group for another prime p".into(),
        ));
    };
    let delta = directed_power_graph(view.group, &ExclusionSet::primes_of(p));
    Ok(view
        .k()
        .elements()
        .map(|b| sdp_component_report(&view, desc, &delta, b))
        .collect())
}

pub(crate) fn sdp_component_report(
    view: &SdpView,
    desc: &str,
    delta: &Digraph,
    b: usize,
) -> VerificationReport {
    let (n, q, p) = sdp_component_primes(view.parts).expect("checked by caller");
    let (k, g) = (view.k(), view.group);
    let phi = view.parts.action.image(b);
    let c = phi.apply(1) as u64;
    let r = VerificationReport::new(Claim::SdpComponents, desc)
        .param("b", k.name(b))
        .param("p", p)
        .param("q", q)
        .param("c", c);
    let components = weak_components(delta);
    let comps: BTreeSet<&Vec<usize>> = components.cells().iter().collect();
    let b_cyc = k.cyclic_subgroup(b);

    if phi.is_identity() {
        let mut s: Vec<usize> = (0..n as usize)
            .flat_map(|a| b_cyc.generators.iter().map(move |&y| (a, y)))
            .map(|(a, y)| view.pair(a, y))
            .collect();
        s.sort_unstable();
        if !comps.contains(&s) {
            return r.implication(
                true,
                false,
                Some(Witness::Elements {
                    elements: names(g, s),
                }),
            );
        }
        let dz = directed_power_graph(view.h(), &ExclusionSet::empty());
        let w = dz
            .edges()
            .flat_map(|(a, a2)| {
                b_cyc
                    .generators
                    .iter()
                    .map(move |&y| (view.pair(a, b), view.pair(a2, y)))
            })
            .find(|&(u, v)| !delta.has_edge(u, v))
            .map(|e| missing(g, e));
        return r.implication(true, w.is_none(), w);
    }

    let Some(inv) = inverse_mod((c + n - 1) % n, n) else {
        return r.not_applicable("c - 1 is not invertible modulo q^s");
    };
    let o = k.element_order(b);
    let m_b = multiplicative_order(c, n);
    let s_k = |k: u64| (pow_mod(c, k, n) + n - 1) % n * inv % n;
    let set_for = |a: usize, ks: &mut dyn Iterator<Item = u64>| -> Vec<usize> {
        let mut t: Vec<usize> = std::iter::once(view.pair(a, b))
            .chain(ks.map(|e| view.pair((a as u64 * s_k(e) % n) as usize, k.power(b, e))))
            .collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    let mut narrower = false;
    for a in 0..n as usize {
        let t = set_for(a, &mut (1..=o).filter(|e| e % p != 0));
        narrower |= set_for(a, &mut (2..m_b).filter(|e| e % p != 0)) != t;
        if !comps.contains(&t) {
            return r.implication(
                true,
                false,
                Some(Witness::Elements {
                    elements: names(g, t),
                }),
            );
        }
        if let Some(e) = missing_clique_edge(delta, &t) {
            return r.implication(true, false, Some(missing(g, e)));
        }
    }
    let r = r.param("m_b", m_b).implication(true, true, None);
    if narrower {
        r.with_note(format!(
            "exponents 1 < k < m_b alone miss powers up to o(b) = {o}"
        ))
    } else {
        r
    }
}
