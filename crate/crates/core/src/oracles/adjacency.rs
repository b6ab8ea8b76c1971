use crate::error::{Error, Result};
use crate::impls::UnionFind;
use crate::instance::Basis;

use super::pareto::EfficientSet;

/// Efficient bases joined whenever they differ by a single exchange.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub nodes: Vec<Basis>,
    pub edges: Vec<(usize, usize)>,
}

impl AdjacencyGraph {
    /// Duplicate bases are merged. Every basis must have `rank` elements.
    pub fn build(bases: &[Basis], rank: usize) -> Self {
        let mut nodes = bases.to_vec();
        nodes.sort();
        nodes.dedup();
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i].common_count(&nodes[j]) + 1 == rank {
                    edges.push((i, j));
                }
            }
        }
        AdjacencyGraph { nodes, edges }
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.nodes.len());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.sets()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
}

/// Whether the complete efficient set is connected under single exchanges.
pub fn adjacency_connected(eff: &EfficientSet, rank: usize) -> Result<Connectivity> {
    if eff.is_empty() {
        return Err(Error::EmptyEfficientSet);
    }
    let components = AdjacencyGraph::build(&eff.bases, rank).components();
    Ok(Connectivity {
        connected: components == 1,
        components,
    })
}
