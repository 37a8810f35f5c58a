//! Executable checks of structural claims about excluded power graphs, and
//! a driver that sweeps them over the group catalog.

mod checks;
mod report;

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::expr::{BuiltGroup, GroupExpr};
use crate::graph::{Digraph, IsoBudget};
use crate::group::FiniteGroup;
use crate::numth::{factorize, gcd, ExclusionSet};
use crate::power::directed_power_graph;

pub use checks::{
    check_all_primes, check_direct_product_quotient, check_hall_semidirect, check_intersection,
    check_inversion_sdp, check_nilpotent, check_no_divisor, check_sdp_components,
    classify_directed, classify_undirected,
};
pub use report::{Claim, Verdict, VerificationReport, Witness};

use checks::{
    all_primes_report, hall_reports, intersection_report, inversion_applicable, inversion_report,
    no_divisor_report, sdp_component_primes, sdp_component_report, SdpView,
};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub max_order: usize,
    pub primes: ExclusionSet,
    /// Extra `*.tbl` groups to include.
    pub fixture_dir: Option<PathBuf>,
    pub budget: IsoBudget,
}

impl RunOptions {
    pub fn new(max_order: usize, primes: ExclusionSet) -> Self {
        Self {
            max_order,
            primes,
            fixture_dir: None,
            budget: IsoBudget::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub counterexample: usize,
    pub not_applicable: usize,
    pub resource_exhausted: usize,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Counterexample => self.counterexample += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::ResourceExhausted => self.resource_exhausted += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.counterexample + self.not_applicable + self.resource_exhausted
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: usize,
    pub totals: VerdictCounts,
    pub by_claim: BTreeMap<String, VerdictCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRun {
    pub summary: Summary,
    pub reports: Vec<VerificationReport>,
}

impl CatalogRun {
    fn new(groups: usize, mut reports: Vec<VerificationReport>) -> Self {
        reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut summary = Summary {
            groups,
            ..Summary::default()
        };
        for r in &reports {
            summary.totals.add(r.verdict);
            summary
                .by_claim
                .entry(r.claim.id().to_string())
                .or_default()
                .add(r.verdict);
        }
        Self { summary, reports }
    }

    /// No counterexamples and no exhausted budgets.
    pub fn is_clean(&self) -> bool {
        self.summary.totals.counterexample == 0 && self.summary.totals.resource_exhausted == 0
    }

    /// Line-oriented report. Passing and not-applicable lines are included
    /// only when `all` is set.
    pub fn to_text(&self, all: bool) -> String {
        let mut out = String::new();
        for r in &self.reports {
            if all
                || matches!(
                    r.verdict,
                    Verdict::Counterexample | Verdict::ResourceExhausted
                )
            {
                out.push_str(&r.line());
                out.push('\n');
            }
        }
        let t = &self.summary.totals;
        out.push_str(&format!(
            "groups={} reports={} pass={} counterexample={} not-applicable={} resource-exhausted={}\n",
            self.summary.groups,
            t.total(),
            t.pass,
            t.counterexample,
            t.not_applicable,
            t.resource_exhausted
        ));
        for (claim, c) in &self.summary.by_claim {
            out.push_str(&format!(
                "  {claim:<26} pass={} counterexample={} not-applicable={} resource-exhausted={}\n",
                c.pass, c.counterexample, c.not_applicable, c.resource_exhausted
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("report document: {e}")))
    }
}

/// Every checker over `catalog(max_order)` with parameters drawn from
/// `primes`.
pub fn run_catalog(max_order: usize, primes: &ExclusionSet) -> Result<CatalogRun> {
    run_catalog_with(&RunOptions::new(max_order, primes.clone()))
}

pub fn run_catalog_with(opts: &RunOptions) -> Result<CatalogRun> {
    if let Some(x) = opts.primes.iter().find(|&x| !crate::numth::is_prime(x)) {
        return Err(Error::InvalidArgument(format!("{x} is not prime")));
    }
    let mut cat = catalog(opts.max_order)?;
    if let Some(dir) = &opts.fixture_dir {
        cat = cat.with_fixture_dir(dir)?;
    }
    let built: Vec<(&CatalogEntry, Result<BuiltGroup>)> = cat
        .entries()
        .par_iter()
        .map(|e| (e, cat.build(e)))
        .collect();

    let mut reports: Vec<VerificationReport> = built
        .par_iter()
        .flat_map_iter(|(e, b)| match b {
            Ok(b) => group_reports(&e.description, b, opts),
            Err(err) => vec![table_report(&e.description, err)],
        })
        .collect();

    let good: Vec<(&CatalogEntry, &FiniteGroup)> = built
        .iter()
        .filter_map(|(e, b)| b.as_ref().ok().map(|b| (*e, &b.group)))
        .collect();
    reports.extend(direct_product_sweep(&good, opts)?);
    reports.extend(nilpotent_sweep(&good, opts)?);
    Ok(CatalogRun::new(built.len(), reports))
}

fn table_report(desc: &str, err: &Error) -> VerificationReport {
    let witness = match err {
        Error::NotAGroup { axiom, witness } => Witness::TableAxiom {
            axiom: axiom.to_string(),
            triple: [witness.0, witness.1, witness.2],
        },
        other => Witness::Message {
            text: other.to_string(),
        },
    };
    VerificationReport::new(Claim::CayleyTable, desc).implication(true, false, Some(witness))
}

fn group_reports(desc: &str, built: &BuiltGroup, opts: &RunOptions) -> Vec<VerificationReport> {
    let g = &built.group;
    let subsets = opts.primes.subsets();
    let graphs: HashMap<&ExclusionSet, Digraph> = subsets
        .iter()
        .map(|x| (x, directed_power_graph(g, x)))
        .collect();
    let empty = ExclusionSet::empty();
    let full = &graphs[&empty];
    let mut out = Vec::new();

    for x in &subsets {
        out.push(no_divisor_report(g, desc, x, full, &graphs[x]));
        out.push(all_primes_report(g, desc, x, &graphs[x]));
    }
    for (i, x) in subsets.iter().enumerate() {
        for y in &subsets[i..] {
            let xy = x.union(y);
            out.push(intersection_report(
                g,
                desc,
                x,
                y,
                &graphs[x],
                &graphs[y],
                &graphs[&xy],
            ));
        }
    }
    for p in opts.primes.iter() {
        out.push(classify_directed(g, desc, p));
        out.push(classify_undirected(g, desc, p));
    }

    let Ok(view) = SdpView::new(built) else {
        return out;
    };
    if !view.coprime() {
        return out;
    }
    let (h, k) = (&view.parts.base, &view.parts.acting);
    let pairs: Vec<(usize, usize)> = h
        .elements()
        .flat_map(|a| k.elements().map(move |b| (a, b)))
        .collect();
    let delta_pi = directed_power_graph(g, &view.pi);
    let delta_k = directed_power_graph(k, &empty);
    for &(a, b) in &pairs {
        out.extend(hall_reports(
            &view,
            desc,
            &delta_pi,
            &delta_k,
            a,
            b,
            opts.budget,
        ));
    }
    if inversion_applicable(&view).is_ok() {
        for &(a, b) in &pairs {
            out.push(inversion_report(&view, desc, &delta_pi, full, a, b));
        }
    }
    if let Some((_, _, p)) = sdp_component_primes(view.parts) {
        let delta_p = directed_power_graph(g, &ExclusionSet::primes_of(p));
        for b in k.elements() {
            out.push(sdp_component_report(&view, desc, &delta_p, b));
        }
    }
    out
}

/// Coprime pairs `(H, K)` of catalog groups with `|H| |K|` within the
/// order bound.
fn direct_product_sweep(
    good: &[(&CatalogEntry, &FiniteGroup)],
    opts: &RunOptions,
) -> Result<Vec<VerificationReport>> {
    let pairs: Vec<_> = good
        .iter()
        .flat_map(|h| good.iter().map(move |k| (h, k)))
        .filter(|((_, h), (_, k))| {
            h.order() * k.order() <= opts.max_order && gcd(h.order() as u64, k.order() as u64) == 1
        })
        .collect();
    pairs
        .into_par_iter()
        .map(|((he, h), (ke, k))| {
            let desc = GroupExpr::Product(Box::new(he.expr.clone()), Box::new(ke.expr.clone()))
                .to_string();
            check_direct_product_quotient(h, k, &desc, opts.budget)
        })
        .collect()
}

/// Products of catalog `p`-groups for two or three distinct primes, with
/// every proper nonempty set of excluded primes.
fn nilpotent_sweep(
    good: &[(&CatalogEntry, &FiniteGroup)],
    opts: &RunOptions,
) -> Result<Vec<VerificationReport>> {
    let mut by_prime: BTreeMap<u64, Vec<(&CatalogEntry, &FiniteGroup)>> = BTreeMap::new();
    for &(e, g) in good {
        if let [(p, _)] = factorize(g.order() as u64).as_slice() {
            by_prime.entry(*p).or_default().push((e, g));
        }
    }
    let primes: Vec<u64> = by_prime.keys().copied().collect();
    let mut combos: Vec<Vec<(&CatalogEntry, &FiniteGroup)>> = Vec::new();
    fn extend<'a>(
        start: usize,
        primes: &[u64],
        by_prime: &BTreeMap<u64, Vec<(&'a CatalogEntry, &'a FiniteGroup)>>,
        current: &mut Vec<(&'a CatalogEntry, &'a FiniteGroup)>,
        order: usize,
        max: usize,
        out: &mut Vec<Vec<(&'a CatalogEntry, &'a FiniteGroup)>>,
    ) {
        if current.len() >= 2 {
            out.push(current.clone());
        }
        if current.len() == 3 {
            return;
        }
        for (i, p) in primes.iter().enumerate().skip(start) {
            for &(e, g) in &by_prime[p] {
                if order * g.order() <= max {
                    current.push((e, g));
                    extend(
                        i + 1,
                        primes,
                        by_prime,
                        current,
                        order * g.order(),
                        max,
                        out,
                    );
                    current.pop();
                }
            }
        }
    }
    extend(
        0,
        &primes,
        &by_prime,
        &mut Vec::new(),
        1,
        opts.max_order,
        &mut combos,
    );

    let jobs: Vec<(Vec<(String, FiniteGroup)>, ExclusionSet)> = combos
        .into_iter()
        .flat_map(|combo| {
            let all =
                ExclusionSet::new(combo.iter().map(|(_, g)| factorize(g.order() as u64)[0].0))
                    .expect("primes are at least 2");
            let sylows: Vec<(String, FiniteGroup)> = combo
                .iter()
                .map(|(e, g)| (parenthesize(&e.expr), (*g).clone()))
                .collect();
            all.subsets()
                .into_iter()
                .filter(move |rho| !rho.is_empty() && rho.len() < all.len())
                .map(move |rho| (sylows.clone(), rho))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(sylows, rho)| check_nilpotent(&sylows, &rho, opts.budget))
        .collect()
}

fn parenthesize(e: &GroupExpr) -> String {
    match e {
        GroupExpr::Product(..) => format!("({e})"),
        _ => e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_run() {
        let run = run_catalog(1, &ExclusionSet::new([2]).unwrap()).unwrap();
        assert!(run.is_clean());
        assert_eq!(run.summary.groups, 1);
        assert!(run.reports.iter().all(|r| r.group.starts_with("Z1")));
        assert!(run.summary.totals.pass > 0);
    }

    #[test]
    fn small_run_is_clean_and_sorted() {
        let run = run_catalog(24, &ExclusionSet::new([2, 3]).unwrap()).unwrap();
        assert!(run.is_clean(), "{}", run.to_text(false));
        assert!(run
            .reports
            .windows(2)
            .all(|w| w[0].sort_key() <= w[1].sort_key()));
        for claim in [
            "hall-normalizer",
            "hall-centralizer",
            "inversion-semidirect",
            "sdp-components",
            "direct-product-quotient",
            "nilpotent-quotient",
        ] {
            assert!(run.summary.by_claim[claim].pass > 0, "{claim}");
        }
        let again = run_catalog(24, &ExclusionSet::new([2, 3]).unwrap()).unwrap();
        assert_eq!(run, again);
    }

    #[test]
    fn corrupted_fixture_is_reported() {
        let dir = std::env::temp_dir().join(format!("pg-fixture-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("bad.tbl"), "3\n0 1 2\n1 2 0\n2 1 0\n").unwrap();
        let mut opts = RunOptions::new(4, ExclusionSet::new([2]).unwrap());
        opts.fixture_dir = Some(dir.clone());
        let run = run_catalog_with(&opts).unwrap();
        std::fs::remove_dir_all(&dir).unwrap();
        assert!(!run.is_clean());
        let bad: Vec<_> = run
            .reports
            .iter()
            .filter(|r| r.verdict == Verdict::Counterexample)
            .collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].claim, Claim::CayleyTable);
        assert!(matches!(bad[0].witness, Some(Witness::TableAxiom { .. })));
        let json = run.to_json();
        let back: CatalogRun = serde_json::from_str(&json).unwrap();
        assert_eq!(back, run);
    }
}
