use crate::error::{Error, Result};
use crate::impls::UnionFind;
use crate::matroid::{ElementId, Matroid, MatroidKind};

/// Cycle matroid of an undirected multigraph: independent sets are forests.
///
/// Vertices are `0..n_vertices`; element `i` is `edges[i]`. Parallel edges
/// are allowed, a self-loop is a dependent singleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphicMatroid {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n_vertices || v >= n_vertices) {
            return Err(Error::InvalidParameters(format!(
                "edge ({u},{v}) references a vertex outside 0..{n_vertices}"
            )));
        }
        Ok(GraphicMatroid { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: ElementId) -> (usize, usize) {
        self.edges[e.index()]
    }

    /// Number of connected components (isolated vertices count).
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.n_vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.sets()
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        if set.len() >= self.n_vertices.max(1) {
            return false;
        }
        let mut uf = UnionFind::new(self.n_vertices);
        set.iter().all(|&e| {
            let (u, v) = self.edges[e.index()];
            uf.union(u, v)
        })
    }

    fn greedy_extend(&self, start: &[ElementId], candidates: &[ElementId]) -> Vec<ElementId> {
        let mut uf = UnionFind::new(self.n_vertices);
        for &e in start {
            let (u, v) = self.edges[e.index()];
            uf.union(u, v);
        }
        candidates
            .iter()
            .copied()
            .filter(|&e| {
                let (u, v) = self.edges[e.index()];
                uf.union(u, v)
            })
            .collect()
    }

    fn kind(&self) -> MatroidKind<'_> {
        MatroidKind::Graphic(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forests_and_cycles() {
        let g = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (2, 0), (1, 1), (0, 1)]).unwrap();
        assert!(g.is_independent(&[ElementId(0), ElementId(1)]));
        assert!(!g.is_independent(&[ElementId(0), ElementId(1), ElementId(2)]));
        assert!(!g.is_independent(&[ElementId(3)]));
        assert!(!g.is_independent(&[ElementId(0), ElementId(4)]));
        assert!(g.is_independent(&[]));
    }

    #[test]
    fn rejects_bad_vertices() {
        assert!(GraphicMatroid::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(GraphicMatroid::new(3, vec![(0, 1), (1, 2)]).unwrap().is_connected());
        assert_eq!(GraphicMatroid::new(4, vec![(0, 1)]).unwrap().components(), 3);
    }
}
