//! Finite quandles and biquandles.
//!
//! Elements are dense indices `0..n`. Operation tables are row-major with
//! `table[a][b] = a ∘ b`, so the right translation `S_b` is column `b`.
//! Permutations compose as functions: `f.compose(&g)` applies `g` first.

#![allow(clippy::needless_range_loop)]

pub mod automorphisms;
pub mod biquandle;
pub mod combinators;
pub mod constructions;
pub mod coverings;
pub mod enumeration;
pub mod error;
pub mod groups;
pub mod links;
pub mod perm;
pub mod quandle;
pub mod report;
pub mod search;
pub mod structures;
pub mod verbal;

pub use biquandle::{
    associated_quandle, biquandle_of_quandle, check_biquandle, check_ybe, is_involutory_biquandle, yang_baxter_map,
    FiniteBiquandle,
};
pub use error::{Error, Result};
pub use groups::{FiniteGroup, GroupAutomorphism};
pub use links::VirtualLinkDiagram;
pub use perm::{Permutation, PermutationGroup};
pub use quandle::{
    check_quandle, inner_group, is_connected, is_faithful, is_involutory_quandle, orbits, FiniteQuandle,
};
pub use report::{AxiomReport, Violation};
pub use structures::BiquandleStructure;
pub use verbal::FreeWord;
