use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Which structural claim a report checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Excluding integers that divide no element order changes nothing.
    NoDivisor,
    /// Excluding every prime divisor leaves only the generator cliques.
    AllPrimes,
    /// Excluding `X u Y` keeps exactly the edges kept by both exclusions.
    EdgeIntersection,
    /// Normalizing complement element: `J = <a><b>` is closed under
    /// out-edges and carries its own excluded power graph.
    HallNormalizer,
    /// Centralizing complement element: out-edges of `ab` inside `J` follow
    /// the power graph of the complement.
    HallCentralizer,
    /// Coprime direct product: one copy of the complement's quotient graph
    /// per cyclic subgroup of the excluded factor.
    DirectProductQuotient,
    /// Out-neighbours in an abelian group extended by identity/inversion.
    InversionSemidirect,
    /// Nilpotent groups: excluding some primes leaves copies of the
    /// quotient graph of the remaining Sylow subgroups.
    NilpotentQuotient,
    /// Weak components of `Z_{q^s} x| P` with `p` excluded.
    SdpComponents,
    /// Directed clique union iff p-group.
    DirectedClassification,
    /// Undirected clique union iff cyclic normal Sylow subgroup times a
    /// p-group.
    UndirectedClassification,
    /// A catalog entry failed to build as a group.
    CayleyTable,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::NoDivisor => "no-divisor",
            Claim::AllPrimes => "all-primes",
            Claim::EdgeIntersection => "edge-intersection",
            Claim::HallNormalizer => "hall-normalizer",
            Claim::HallCentralizer => "hall-centralizer",
            Claim::DirectProductQuotient => "direct-product-quotient",
            Claim::InversionSemidirect => "inversion-semidirect",
            Claim::NilpotentQuotient => "nilpotent-quotient",
            Claim::SdpComponents => "sdp-components",
            Claim::DirectedClassification => "directed-classification",
            Claim::UndirectedClassification => "undirected-classification",
            Claim::CayleyTable => "cayley-table",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Counterexample,
    NotApplicable,
    ResourceExhausted,
}

impl Verdict {
    /// Verdict for "hypothesis implies conclusion".
    pub fn implication(hypothesis: bool, conclusion: bool) -> Self {
        match (hypothesis, conclusion) {
            (false, _) => Verdict::NotApplicable,
            (true, true) => Verdict::Pass,
            (true, false) => Verdict::Counterexample,
        }
    }

    /// Verdict for "left iff right".
    pub fn equivalence(left: bool, right: bool) -> Self {
        if left == right {
            Verdict::Pass
        } else {
            Verdict::Counterexample
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Counterexample => "counterexample",
            Verdict::NotApplicable => "not-applicable",
            Verdict::ResourceExhausted => "resource-exhausted",
        })
    }
}

/// Concrete evidence for a counterexample, in element names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An edge the claim requires but the graph lacks.
    MissingEdge {
        from: String,
        to: String,
    },
    /// An edge the graph has but the claim forbids.
    ExtraEdge {
        from: String,
        to: String,
    },
    /// A vertex set that should have been a component, a clique or a
    /// cyclic subgroup.
    Elements {
        elements: Vec<String>,
    },
    /// Expected against actual neighbour sets.
    Neighbors {
        vertex: String,
        expected: Vec<String>,
        actual: Vec<String>,
    },
    /// Expected against actual number of isomorphic copies.
    CopyCount {
        expected: usize,
        actual: Option<usize>,
    },
    /// A group axiom failing on the given element triple.
    TableAxiom {
        axiom: String,
        triple: [usize; 3],
    },
    Message {
        text: String,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MissingEdge { from, to } => write!(f, "missing edge {from} -> {to}"),
            Witness::ExtraEdge { from, to } => write!(f, "unexpected edge {from} -> {to}"),
            Witness::Elements { elements } => write!(f, "elements {{{}}}", elements.join(", ")),
            Witness::Neighbors {
                vertex,
                expected,
                actual,
            } => write!(
                f,
                "out-neighbours of {vertex}: expected {{{}}}, got {{{}}}",
                expected.join(", "),
                actual.join(", ")
            ),
            Witness::CopyCount { expected, actual } => match actual {
                Some(k) => write!(f, "expected {expected} copies, found {k}"),
                None => write!(
                    f,
                    "expected {expected} copies, graph is not a union of copies"
                ),
            },
            Witness::TableAxiom { axiom, triple } => {
                write!(
                    f,
                    "{axiom} fails at ({}, {}, {})",
                    triple[0], triple[1], triple[2]
                )
            }
            Witness::Message { text } => f.write_str(text),
        }
    }
}

/// Outcome of one checker on one group and parameter choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub group: String,
    pub parameters: BTreeMap<String, String>,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(claim: Claim, group: impl Into<String>) -> Self {
        Self {
            claim,
            group: group.into(),
            parameters: BTreeMap::new(),
            hypothesis_holds: false,
            conclusion_holds: false,
            verdict: Verdict::NotApplicable,
            witness: None,
            note: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Sets both sides and the implication verdict. The witness is kept
    /// only for counterexamples.
    pub fn implication(
        mut self,
        hypothesis: bool,
        conclusion: bool,
        witness: Option<Witness>,
    ) -> Self {
        self.hypothesis_holds = hypothesis;
        self.conclusion_holds = conclusion;
        self.verdict = Verdict::implication(hypothesis, conclusion);
        self.witness = witness.filter(|_| self.verdict == Verdict::Counterexample);
        self
    }

    /// Sets both sides and the equivalence verdict.
    pub fn equivalence(mut self, left: bool, right: bool, witness: Option<Witness>) -> Self {
        self.hypothesis_holds = left;
        self.conclusion_holds = right;
        self.verdict = Verdict::equivalence(left, right);
        self.witness = witness.filter(|_| self.verdict == Verdict::Counterexample);
        self
    }

    pub fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::NotApplicable;
        self.note = Some(why.into());
        self
    }

    pub fn exhausted(mut self, hypothesis: bool, budget: u64) -> Self {
        self.hypothesis_holds = hypothesis;
        self.verdict = Verdict::ResourceExhausted;
        self.note = Some(format!("isomorphism budget of {budget} steps exhausted"));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Sort key: group, claim, parameters.
    pub fn sort_key(&self) -> (&str, Claim, &BTreeMap<String, String>) {
        (&self.group, self.claim, &self.parameters)
    }

    /// One-line rendering for text reports.
    pub fn line(&self) -> String {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut s = format!(
            "{:<18} {:<26} {:<40} [{}] hypothesis={} conclusion={}",
            self.verdict.to_string(),
            self.claim.id(),
            self.group,
            params.join(" "),
            self.hypothesis_holds,
            self.conclusion_holds
        );
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness: {w}"));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" ({n})"));
        }
        s
    }
}
