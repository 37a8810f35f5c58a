use std::fmt;

use thiserror::Error;

/// Which group axiom a table violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group order {order} (must be in 1..={cap})")]
    InvalidOrder { order: u64, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cayley table parse error at line {line}: {message}")]
    TableParse { line: usize, message: String },

    /// The witness triple is `(g, h, k)`; only the entries the axiom needs
    /// are meaningful.
    #[error("not a group: {axiom} fails at ({}, {}, {})", witness.0, witness.1, witness.2)]
    NotAGroup {
        axiom: Axiom,
        witness: (usize, usize, usize),
    },

    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("invalid homomorphism into the automorphism group: {0}")]
    InvalidHomomorphism(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("isomorphism search exhausted its budget of {budget} steps")]
    ResourceExhausted { budget: u64 },

    #[error("syntax error at offset {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },

    #[error("semantic error: {0}")]
    Semantic(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
