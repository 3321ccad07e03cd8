//! Labelled rooted trees and the operads built on them.
//!
//! Covers the pre-Lie composition of labelled rooted trees, its degree-extremal
//! set operads (max, min and NAP), factorization of trees over the free
//! generators of the max operad, and the Hilbert series that count those
//! generators. Everything is exact and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod enumerate;
pub mod error;
pub mod freeness;
pub mod prelie;
pub mod series;
pub mod set_operads;
pub mod tree;

pub use enumerate::{cayley_count, enumerate_trees, trees_by_arity, TreeIter};
pub use error::{Error, Result};
pub use freeness::{
    count_indecomposables, decomposition_witnesses, evaluate, factorize, factorize_with, find_collision,
    find_collision_with, indecomposables, indecomposables_by_image, is_indecomposable, split, verify_freeness,
    DecompositionWitness, FreenessReport, OperationTree, OperationTreeCatalog, ScanOrder, Slot,
};
pub use prelie::{
    associator, check_pre_lie_relation, compose_pl, compose_pl_linear, compose_pl_terms, degree_bounds,
    degree_spectrum, graft_compose, graft_maps, max_term, min_term, GraftMap, TreeSum,
};
pub use series::{cayley_series, generator_series, verify_functional_equation, PowerSeries};
pub use set_operads::{
    bases, check_associativity_from, check_axioms, check_unit_laws, compose_max, compose_min, compose_nap, f_max_map,
    f_min_map, f_nap_map, Axiom, AxiomReport, Operad, PreLie, SetOperad, Violation,
};
pub use tree::{canonical_cmp, parse_tree, AdjacentPair, Forest, Label, Tree};
