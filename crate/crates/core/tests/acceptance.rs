//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use powergraph::catalog::catalog;
use powergraph::emit::labeled_to_dot;
use powergraph::expr::{parse_group, BuiltGroup, Evaluator};
use powergraph::graph::{
    disjoint_copies_of, is_directed_clique, is_equitable, quotient, weak_components, Digraph,
    IsoBudget,
};
use powergraph::numth::{admissible, gcd, ExclusionSet};
use powergraph::power::{
    directed_power_graph, excluded_quotient, excluded_quotient_power_graph, generator_partition,
    quotient_power_graph, subgroup_names,
};
use powergraph::verify::{
    check_all_primes, check_direct_product_quotient, check_intersection, check_inversion_sdp,
    check_no_divisor, classify_directed, classify_undirected, run_catalog, Verdict,
};
use powergraph::FiniteGroup;

type Outcome = Result<String, String>;

fn xs(v: &[u64]) -> ExclusionSet {
    ExclusionSet::new(v.iter().copied()).unwrap()
}

fn build(text: &str) -> BuiltGroup {
    Evaluator::new().build(&parse_group(text).unwrap()).unwrap()
}

fn catalog_groups(max: usize) -> Vec<(String, FiniteGroup)> {
    let c = catalog(max).unwrap();
    c.iter()
        .map(|(e, b)| (e.description.clone(), b.unwrap().group))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn a5_structure() -> Outcome {
    let a5 = FiniteGroup::alternating(5).unwrap();
    let count = |o: u64| a5.elements().filter(|&g| a5.element_order(g) == o).count();
    let counts = (count(2), count(3), count(5));
    ensure(counts == (15, 20, 24), || {
        format!("element order counts {counts:?}")
    })?;
    let p = generator_partition(&a5);
    let cells = |s: usize| p.cells().iter().filter(|c| c.len() == s).count();
    ensure((cells(2), cells(4)) == (10, 6), || {
        format!("{} two-cells, {} four-cells", cells(2), cells(4))
    })?;
    let c = a5.find_by_name("(abcde)").ok_or("no (abcde)")?;
    let c2 = a5.power(c, 2);
    ensure(directed_power_graph(&a5, &xs(&[2])).has_edge(c, c2), || {
        "missing (abcde) -> (abcde)^2".into()
    })?;
    Ok(format!(
        "15/20/24 elements of order 2/3/5, 10+6 generator cells, edge (abcde) -> {}",
        a5.name(c2)
    ))
}

/// Some term of `m, m + n, m + 2n, ...` avoids every member of `x`.
/// Residues modulo each member repeat with period dividing their product.
fn progression_scan(m: u64, n: u64, x: &ExclusionSet) -> bool {
    (0..x.product()).any(|t| x.iter().all(|d| !(m + t * n).is_multiple_of(d)))
}

fn progression_oracle() -> Outcome {
    let mut checked = 0;
    for x in xs(&[2, 3, 5, 7]).subsets() {
        for n in 1..=100 {
            for m in 1..=n {
                checked += 1;
                ensure(admissible(m, n, &x) == progression_scan(m, n, &x), || {
                    format!("disagreement at m={m} n={n} X={x}")
                })?;
            }
        }
    }
    Ok(format!("{checked} cases, zero disagreements"))
}

/// Edges `g -> g^k` over every exponent `k` that no member of `x` divides,
/// scanning a full period of both `o(g)` and the members of `x`.
fn naive_power_graph(g: &FiniteGroup, x: &ExclusionSet) -> Digraph {
    let mut d = Digraph::new(g.order());
    for a in g.elements() {
        let limit = g.element_order(a) * x.product();
        let mut p = g.identity();
        for k in 1..=limit {
            p = g.mul(p, a);
            if p != a && x.iter().all(|d| k % d != 0) {
                d.add_edge(a, p);
            }
        }
    }
    d
}

fn gcd_criterion_oracle() -> Outcome {
    let groups = catalog_groups(60);
    let subsets = xs(&[2, 3, 5]).subsets();
    for (desc, g) in &groups {
        for x in &subsets {
            ensure(
                directed_power_graph(g, x) == naive_power_graph(g, x),
                || format!("{desc} with X={x}"),
            )?;
        }
    }
    Ok(format!(
        "{} groups x {} exclusion sets, zero disagreements",
        groups.len(),
        subsets.len()
    ))
}

fn exclusion_laws() -> Outcome {
    let groups = catalog_groups(60);
    let subsets = xs(&[2, 3, 5]).subsets();
    let mut applicable = 0;
    for (desc, g) in &groups {
        for x in &subsets {
            for r in [check_no_divisor(g, desc, x), check_all_primes(g, desc, x)]
                .into_iter()
                .chain(subsets.iter().map(|y| check_intersection(g, desc, x, y)))
            {
                ensure(r.verdict != Verdict::Counterexample, || r.line())?;
                applicable += usize::from(r.verdict == Verdict::Pass);
            }
        }
    }
    let a5 = FiniteGroup::alternating(5).unwrap();
    let edges = directed_power_graph(&a5, &xs(&[2, 3, 5])).edge_count();
    ensure(edges == 92, || {
        format!("A5 excluding {{2,3,5}} has {edges} edges")
    })?;
    Ok(format!(
        "{applicable} applicable instances pass; A5 excluding {{2,3,5}} has 92 edges"
    ))
}

fn z12_copies() -> Outcome {
    let z12 = FiniteGroup::cyclic(12).unwrap();
    let q = quotient_power_graph(&z12);
    let b = IsoBudget::default();
    let q4 = quotient_power_graph(&FiniteGroup::cyclic(4).unwrap());
    let q3 = quotient_power_graph(&FiniteGroup::cyclic(3).unwrap());
    let c3 = disjoint_copies_of(excluded_quotient(&q, &xs(&[3])).graph(), q4.graph(), b).unwrap();
    let c2 = disjoint_copies_of(excluded_quotient(&q, &xs(&[2])).graph(), q3.graph(), b).unwrap();
    ensure((c3, c2) == (Some(2), Some(3)), || {
        format!("copies {c3:?} and {c2:?}")
    })?;
    Ok("Z12 excluding 3: 2 copies of Z4 quotient; excluding 2: 3 copies of Z3 quotient".into())
}

fn direct_product_sweep() -> Outcome {
    let groups = catalog_groups(60);
    let mut pairs = 0;
    for (hd, h) in &groups {
        for (kd, k) in &groups {
            if h.order() * k.order() > 60 || gcd(h.order() as u64, k.order() as u64) != 1 {
                continue;
            }
            pairs += 1;
            let r =
                check_direct_product_quotient(h, k, &format!("{hd} x {kd}"), IsoBudget::default())
                    .unwrap();
            ensure(r.verdict == Verdict::Pass, || r.line())?;
        }
    }
    Ok(format!("{pairs} coprime pairs, zero failures"))
}

fn inversion_figures() -> Outcome {
    let built = build("sdp(Z3 x Z3, Z2, inv)");
    for a in 0..9 {
        for b in 0..2 {
            let r = check_inversion_sdp(&built, "sdp(Z3 x Z3, Z2, inv)", a, b).unwrap();
            ensure(r.verdict == Verdict::Pass, || r.line())?;
        }
    }
    let g = &built.group;
    let q = excluded_quotient_power_graph(g, &xs(&[3]));
    let dot = labeled_to_dot(&q, &subgroup_names(g), "sdp(Z3 x Z3, Z2, inv) -{3}").unwrap();
    let golden = include_str!("golden/fig3_quotient.dot");
    ensure(dot == golden, || {
        format!("quotient differs from golden file:\n{dot}")
    })?;
    let sinks = q
        .labeled_edges()
        .filter(|&(_, v, l)| v == 0 && l == 2)
        .count();
    let isolated = (0..q.vertex_count())
        .filter(|&v| q.graph().out_degree(v) == 0 && v != 0)
        .count();
    ensure((q.edge_count(), sinks, isolated) == (9, 9, 4), || {
        format!(
            "{} edges, {sinks} into identity, {isolated} isolated",
            q.edge_count()
        )
    })?;
    Ok("18 out-neighbour sets match; quotient excluding 3 matches golden (9 edges into <000>, 4 isolated)".into())
}

fn semidirect_components() -> Outcome {
    let g = build("sdp(Z7, Z3, mult=2)").group;
    let delta = directed_power_graph(&g, &xs(&[3]));
    let pair = |a: usize, b: usize| a * 3 + b;
    let mut expected: BTreeSet<Vec<usize>> = (0..7)
        .map(|a| vec![pair(a, 1), pair(3 * a % 7, 2)])
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    expected.insert((0..7).map(|a| pair(a, 0)).collect());
    let actual: BTreeSet<Vec<usize>> = weak_components(&delta).cells().iter().cloned().collect();
    ensure(actual == expected, || format!("components {actual:?}"))?;
    for c in actual.iter().filter(|c| c.len() == 2) {
        ensure(is_directed_clique(&delta, c), || {
            format!("{c:?} is not a clique")
        })?;
    }
    Ok("seven 2-cliques {(a,1),(3a,2)} plus Z7 x {0}".into())
}

fn classification() -> Outcome {
    let groups = catalog_groups(60);
    for (desc, g) in &groups {
        for p in [2, 3, 5] {
            for r in [
                classify_directed(g, desc, p),
                classify_undirected(g, desc, p),
            ] {
                ensure(r.verdict == Verdict::Pass, || r.line())?;
            }
        }
    }
    for (text, p, both) in [
        ("D18", 2, true),
        ("D18", 3, false),
        ("file:q8.tbl", 2, true),
        ("Z3 x Z3", 2, false),
    ] {
        let g = build(text).group;
        let r = classify_undirected(&g, text, p);
        ensure(
            (r.hypothesis_holds, r.conclusion_holds) == (both, both),
            || r.line(),
        )?;
    }
    let run = run_catalog(60, &xs(&[2, 3, 5])).unwrap();
    ensure(run.is_clean(), || run.to_text(false))?;
    Ok(format!(
        "{} groups x 3 primes agree; anchors hold; full catalog run: {} pass, 0 counterexamples",
        groups.len(),
        run.summary.totals.pass
    ))
}

fn property_suites() -> Outcome {
    let groups = catalog_groups(60);
    let subsets = xs(&[2, 3, 5]).subsets();
    let mut restricted = 0;
    for (desc, g) in &groups {
        let partition = generator_partition(g);
        let q = quotient_power_graph(g);
        let graphs: Vec<Digraph> = subsets.iter().map(|x| directed_power_graph(g, x)).collect();
        for (x, d) in subsets.iter().zip(&graphs) {
            for cell in partition.cells() {
                ensure(is_directed_clique(d, cell), || {
                    format!("{desc} X={x}: generator cell {cell:?}")
                })?;
            }
            ensure(is_equitable(d, &partition).unwrap(), || {
                format!("{desc} X={x}: not equitable")
            })?;
            ensure(
                quotient(d, &partition).unwrap() == *excluded_quotient(&q, x).graph(),
                || format!("{desc} X={x}: quotient mismatch"),
            )?;
        }
        let cyclic = g.cyclic_subgroups();
        let mut subgroups: BTreeSet<Vec<usize>> =
            cyclic.iter().map(|c| c.sorted_elements()).collect();
        for c in &cyclic {
            for d in &cyclic {
                subgroups.insert(g.generated_subgroup(&[c.generator, d.generator]));
            }
        }
        for s in &subgroups {
            let (sub, emb) = g.restrict(s).unwrap();
            for (x, d) in subsets.iter().zip(&graphs) {
                ensure(d.induced(&emb) == directed_power_graph(&sub, x), || {
                    format!("{desc} X={x}: restriction to {s:?}")
                })?;
            }
            restricted += 1;
        }
    }
    Ok(format!(
        "{} groups: generator cliques, equitable partitions, quotient coherence; {restricted} subgroup restrictions",
        groups.len()
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("A5 structure", a5_structure),
        ("admissibility oracle", progression_oracle),
        ("gcd edge criterion oracle", gcd_criterion_oracle),
        ("exclusion laws", exclusion_laws),
        ("Z12 quotient copies", z12_copies),
        ("coprime direct product sweep", direct_product_sweep),
        (
            "inversion semidirect neighbours and quotient",
            inversion_figures,
        ),
        ("Z7 x| Z3 components", semidirect_components),
        ("classification biconditionals", classification),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = std::time::Instant::now();
        match f() {
            Ok(detail) => println!(
                "PASS criterion {:>2} {name}: {detail} ({:.2?})",
                i + 1,
                t.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
