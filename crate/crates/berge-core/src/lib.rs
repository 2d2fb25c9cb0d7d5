//! Exact Turán numbers for Berge paths in r-uniform hypergraphs.
//!
//! The crate provides, as one coherent toolkit:
//! - the data model: r-graphs, simple graphs, and red-blue graphs, with a
//!   plain-text interchange format ([`hypergraph`], [`graph`], [`redblue`],
//!   [`format`]);
//! - Berge-path/cycle detection with verifiable witnesses, longest-path
//!   computation, and hamiltonian-connectedness ([`detect`]);
//! - closed-form extremal values with the constructions attaining them, the
//!   red-blue weight function, and exact inequality utilities ([`extremal`]);
//! - good-set machinery and checkable structural lemmas ([`structure`]);
//! - exhaustive branch-and-bound oracles that recompute the extremal values
//!   independently at desk scale ([`search`], [`enumerate`]).
//!
//! All verdicts are exact: integer arithmetic with checked overflow, and
//! cross-multiplied threshold comparisons. Nothing is decided by floats.

#![forbid(unsafe_code)]

pub mod binom;
pub mod budget;
pub mod detect;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod redblue;
pub mod search;
pub mod structure;

pub use binom::binom;
pub use budget::Budget;
pub use detect::{
    check_witness, find_berge_cycle, find_berge_cycle_with, find_berge_path, find_berge_path_with,
    hamiltonian_degree_condition, hamiltonian_degree_condition_values, is_hamiltonian_connected,
    longest_berge_path, longest_berge_path_with, verify_witness, BergeWitness, LongestBergePath,
    SearchOutcome, WitnessKind,
};
pub use error::{Error, Result};
pub use extremal::{
    berge_cycle_free_bound, construct_extremal, construct_redblue_extremal, construct_small_k,
    g_upper_bound, g_value, karamata_check, kr_count_bound, lemi_check, turan_formula,
    turan_formula_detailed, FormulaRegime, FormulaValue, InequalityReport, InequalityStatus,
    KaramataReport, TuranParams,
};
pub use graph::{count_cliques, has_path_of_length, is_pk_free, longest_path, Graph};
pub use hypergraph::{Hyperedge, Hypergraph, VertexId, MAX_VERTICES};
pub use redblue::RedBlueGraph;
pub use search::{
    graph_kr_oracle, redblue_g_oracle, turan_oracle, verify_range, OracleOptions, OracleResult,
    OracleStatus, OracleWitness, VerifyCell, VerifyRegime, VerifyReport,
};
pub use structure::{
    check_endpoint_confinement, check_good_set_disjunction, find_good_sets,
    find_low_degree_cluster, find_small_neighborhood_set, is_good_set, is_very_good_pair,
    DisjunctionBullet, GoodSetReport, GoodVerdict, LemmaId, LemmaReport,
};
