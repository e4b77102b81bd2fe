//! Exact maximum G-free vertex subsets on small graphs, and verified bounds.
//!
//! A set S of vertices of a host graph H is *free* for a forbidden pattern
//! when H[S] contains no copy of it: a fixed graph G, any cycle (free sets
//! induce forests), or any clique of a threshold size. This crate computes
//! certified maximum free subsets by exhaustive search, evaluates the
//! classical and profile-based lower/upper bounds on their size exactly (in
//! rational arithmetic), and exposes the pieces campaigns need to verify
//! every bound against ground truth on generated corpora.
//!
//! Organization:
//! - [`graph`], [`graph6`], [`generate`], [`profile`]: representation,
//!   parsing, families, attachment profiles.
//! - [`pattern`], [`cliques`]: freeness tests, embeddings, clique machinery.
//! - [`solver`], [`coloring`], [`layered`]: exact searches.
//! - [`bounds`], [`rfamily`]: bound evaluators and maximality-witness
//!   families.

pub mod bounds;
pub mod cliques;
pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod layered;
pub mod pattern;
pub mod profile;
pub mod rfamily;
pub mod solver;

pub use bounds::{BoundKind, BoundReport, Rational};
pub use error::{Error, Result};
pub use generate::GraphFamily;
pub use graph::{DegreeStats, Graph, VertexSet, MAX_VERTICES};
pub use layered::LayeredDecomposition;
pub use pattern::{CopyMode, Embedding, FreeWitness, PatternSpec};
pub use profile::NeighborProfile;
pub use rfamily::{RFamily, RFamilyEntry};
pub use solver::{QuickCase, QuickExactAnswer, SolveMode, SolveResult, SolverConfig};
