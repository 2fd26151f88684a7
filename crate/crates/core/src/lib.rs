//! domkit: exact domination analysis for prism graphs and the small
//! comparison families around them.
//!
//! The crate computes domination numbers, dominion counts (how many
//! minimum dominating sets a graph has) and the full set lists by three
//! independent routes — subset brute force, a transfer automaton over
//! cyclic column words, and closed forms — plus Laplacian spectra,
//! vertex connectivity and a family of flexibility/robustness indices.
//! A golden-data harness cross-checks all routes against embedded
//! reference tables.

mod bits;
mod error;

pub mod domination;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod spectra;
pub mod verify;
pub mod words;

pub use error::{Error, Result};

pub use domination::{
    is_dominating, load_profile, min_overlap, solve, DominionResult, LoadProfile, DEFAULT_BUDGET,
};
pub use formulas::{gamma_formula, prism_formula, zeta_formula, PrismFormulaResult, Regime};
pub use graph::{build_family, build_family_str, FamilySpec, Graph, VertexId, VertexSet};
pub use indices::{composite_report, flexibility, p_gamma, RobustnessReport};
pub use spectra::{
    algebraic_connectivity, eigenvalues, laplacian, vertex_connectivity, Spectrum, SymMatrix,
};
pub use verify::{
    cross_check, verify_explicit_sets, verify_prism_table, verify_robustness_tables, DiffCell,
    DiffReport,
};
pub use words::{
    check_structure, count_min_words, decode, encode, end_set, enumerate_min_words, gap_profile,
    rotate, satisfies_constraints, EndSet, GapProfile, Letter, StructureCheck, StructureReport,
    Word,
};
