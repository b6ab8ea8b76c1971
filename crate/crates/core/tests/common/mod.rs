#![allow(dead_code)]

use matroid_biopt::{
    BicriteriaInstance, CostPair, ElementId, GraphicMatroid, Sense, UniformMatroid,
};

/// Edges of the seven-vertex example graph as `(u, v, c, b)`, 1-based.
pub const EXAMPLE_EDGES: [(usize, usize, u64, u32); 11] = [
    (1, 2, 1, 1),
    (2, 3, 2, 1),
    (1, 4, 4, 1),
    (2, 4, 2, 1),
    (4, 5, 8, 0),
    (2, 5, 9, 0),
    (5, 6, 3, 1),
    (2, 6, 7, 0),
    (3, 6, 5, 0),
    (3, 7, 4, 0),
    (6, 7, 6, 1),
];

pub fn example_graph() -> BicriteriaInstance<GraphicMatroid> {
    let edges = EXAMPLE_EDGES.iter().map(|&(u, v, _, _)| (u - 1, v - 1)).collect();
    let costs = EXAMPLE_EDGES.iter().map(|&(_, _, c, b)| CostPair::new(c, b)).collect();
    BicriteriaInstance::new(GraphicMatroid::new(7, edges).unwrap(), costs, Sense::Minimize).unwrap()
}

/// Id of the example edge `[u, v]`.
pub fn edge(u: usize, v: usize) -> ElementId {
    let i = EXAMPLE_EDGES
        .iter()
        .position(|&(a, b, _, _)| (a, b) == (u, v))
        .unwrap_or_else(|| panic!("no edge [{u},{v}]"));
    ElementId(i)
}

pub fn edges(list: &[(usize, usize)]) -> Vec<ElementId> {
    let mut v: Vec<ElementId> = list.iter().map(|&(a, b)| edge(a, b)).collect();
    v.sort();
    v
}

/// Six-item knapsack over `U_{3,6}` with `b` in `0..=2`, maximized.
pub fn knapsack() -> BicriteriaInstance<UniformMatroid> {
    let c = [6, 5, 2, 2, 2, 0];
    let b = [0, 0, 0, 1, 2, 2];
    let costs = c.iter().zip(b).map(|(&c, b)| CostPair::new(c, b)).collect();
    BicriteriaInstance::with_beta(UniformMatroid::new(6, 3).unwrap(), costs, Sense::Maximize, 2).unwrap()
}

pub fn ids(v: &[usize]) -> Vec<ElementId> {
    v.iter().copied().map(ElementId).collect()
}
