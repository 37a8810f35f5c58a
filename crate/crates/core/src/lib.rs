//! Excluded power graphs of finite groups.
//!
//! The directed power graph of a group joins each element to its distinct
//! powers. Excluding a set `X` of integers keeps only the edges reachable by
//! an exponent that no member of `X` divides. This crate builds those graphs
//! and their quotients by generator classes, and runs executable checks of
//! their structure over a catalog of small groups.

pub mod catalog;
pub mod emit;
pub mod error;
pub mod expr;
pub mod graph;
pub mod group;
pub mod numth;
pub mod power;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Automorphism, CyclicSubgroup, FiniteGroup, HomToAut};
pub use numth::ExclusionSet;
