//! Exact computation around matching polynomials of small graphs: root
//! multiplicities as proved algebraic quantities, vertex decompositions at a
//! root, multiplicity-shift edge operators, set families certified by
//! constructive matchings, and a reproducible verification harness.
//!
//! Nothing in the decision paths uses floating point; every equality and
//! every multiplicity is established with integer polynomial arithmetic.

pub mod algebraic;
pub mod book;
pub mod classify;
pub mod corpus;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod operators;
pub mod poly;
pub mod rng;
pub mod roots;
pub mod tutte;
pub mod verify;

pub use algebraic::AlgebraicNumber;
pub use classify::{decomposition, ThetaDecomposition, VertexClass};
pub use graph::{Graph, GraphError, VertexSet, View};
pub use matching::{matching_polynomial, theta_candidates, MatchPolyCache, ThetaCache};
pub use operators::{
    d_graph, d_graph_closed_form, d_r_closed_form_on_s, d_r_graph, pair_mult_on_g,
    pair_mult_on_s, s_graph, DGraphBundle, OperatorError,
};
pub use tutte::{
    embed_check, embed_premise, heilmann_lieb_check, is_extreme, is_nice, is_tutte,
    maximal_nice_sets, nice_matching, path_criterion, NiceMatchingResult, TutteError,
};
pub use poly::{Polynomial, Rational};
pub use roots::{sturm_count, IsolatedRoot};
pub use verify::{
    explore_iterated_d, has_failures, property_names, reports_to_json, run_single, run_suite,
    thetas_for_graph, Caps, PropertyReport, Status, VerifyError,
};
