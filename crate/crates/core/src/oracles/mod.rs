//! Independent reference algorithms used to validate the swap algorithm.
//!
//! None of these use the swap generation in [`crate::esa`]; they share only
//! the data model and the independence oracles.

mod adjacency;
mod complete;
mod dp;
mod enumerate;
mod hull;
mod kirchhoff;
mod naive;
mod pareto;

pub use adjacency::{adjacency_connected, AdjacencyGraph, Connectivity};
pub use complete::{complete_enumeration, CompleteEnumeration};
pub use dp::{dp_uniform, DpOptions, DpSelection};
pub use enumerate::{enumerate_bases, for_each_basis};
pub use hull::{classify_supported, SupportLabel};
pub use kirchhoff::{binomial, count_bases, count_bases_of};
pub use naive::{naive_minimal_swap_solver, NaiveSwapRun};
pub use pareto::{pareto_filter, Dominance, EfficientSet};
