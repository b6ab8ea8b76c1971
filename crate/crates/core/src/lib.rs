//! Biobjective optimization on matroids where the second objective is
//! binary.
//!
//! Given a matroid with element costs `c >= 0` and `b ∈ {0, 1}`, the
//! [efficient swap algorithm](esa::run_esa) computes the complete
//! non-dominated set of `min (c(B), b(B))` over all bases `B`, together with
//! one efficient basis per point, from a single sorted sequence of minimal
//! swaps.
//!
//! The [`oracles`] module holds independent reference algorithms (complete
//! enumeration, a knapsack-style DP for uniform matroids, a step-by-step
//! minimal swap solver, convex hull classification, adjacency
//! connectivity and a Kirchhoff tree counter) used to validate the solver.

pub mod error;
pub mod esa;
pub mod generate;
pub mod greedy;
pub mod impls;
pub mod instance;
pub mod matroid;
pub mod oracles;

pub use error::{Error, Result};
pub use esa::{run_esa, EsaResult, FrontPoint, ParetoFront, Swap, SwapSequence};
pub use greedy::BasisPair;
pub use impls::{GraphicMatroid, PartitionMatroid, UniformMatroid};
pub use instance::{Basis, BicriteriaInstance, CostPair, OutcomeVector, Sense};
pub use matroid::{ElementId, Matroid, MatroidKind, MatroidMinor};
