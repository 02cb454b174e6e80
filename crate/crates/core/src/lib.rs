//! Half-rate additive codes over GF(4).
//!
//! An additive (n, 2^n) code is a GF(2)-linear subspace of GF(4)^n with 2^n
//! codewords. Up to equivalence, every such code that is not a direct sum
//! with a trivial length-1 piece is a *graph code*: its generator matrix can
//! be brought to the form Γ + ωI for the adjacency matrix Γ of a simple
//! directed graph, after swapping the roles of the two binary coordinate
//! planes at some positions and conjugating at others. This crate provides:
//!
//! - GF(4) scalar and bit-packed vector arithmetic ([`gf4`]),
//! - additive codes with duals, weight enumeration, and a text format
//!   ([`code`]),
//! - the reduction to graph form and distance bounds that exploit it
//!   ([`graphform`], [`digraph`]),
//! - canonical forms and automorphism orders via colored code graphs
//!   ([`canon`]),
//! - classification of all codes of a given length up to equivalence
//!   ([`classify`]),
//! - circulant, bordered-circulant, and quadratic-residue constructions and
//!   exhaustive seed searches ([`constructions`]).
//!
//! Long-running kernels take an [`exec::ExecMode`] to choose between
//! sequential and rayon-parallel execution (the `parallel` feature, on by
//! default).

pub mod canon;
pub mod classify;
pub mod code;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod exec;
pub mod gf2;
pub mod gf4;
pub mod graphform;

pub use canon::{code_canonical_form, equivalent, CanonicalForm, CodeCanon, ColoredGraph};
pub use classify::{classify_codes, euler_transform, CensusRecord, CensusSummary};
pub use code::{AdditiveCode, SingletonClass, SymbolOp, WeightDistribution};
pub use constructions::{
    bordered_circulant_code, bordered_qr_code, circulant_code, qr_code, search_best,
    search_best_opts, CirculantSeed, SearchOptions, SearchReport,
};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use gf4::{GF4Vector, GF4};
pub use graphform::{graph_code, to_graph_form, BoundedDistance, GraphForm};
