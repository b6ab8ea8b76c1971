use crate::error::{Error, Result};
use crate::matroid::{ElementId, Matroid, MatroidKind};

/// Independent iff at most `bounds[i]` elements are taken from block `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroid {
    block_of: Vec<usize>,
    bounds: Vec<usize>,
}

impl PartitionMatroid {
    /// `blocks` must partition `0..n` for some `n`.
    pub fn new(blocks: Vec<Vec<ElementId>>, bounds: Vec<usize>) -> Result<Self> {
        if blocks.len() != bounds.len() {
            return Err(Error::InvalidParameters(format!(
                "{} blocks but {} bounds",
                blocks.len(),
                bounds.len()
            )));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &e in block {
                if e.index() >= n || block_of[e.index()] != usize::MAX {
                    return Err(Error::InvalidParameters(
                        "blocks must be disjoint and cover 0..n".into(),
                    ));
                }
                block_of[e.index()] = i;
            }
        }
        Ok(PartitionMatroid { block_of, bounds })
    }

    pub fn block_of(&self, e: ElementId) -> usize {
        self.block_of[e.index()]
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        let mut used = vec![0usize; self.bounds.len()];
        for &e in set {
            let blk = self.block_of[e.index()];
            used[blk] += 1;
            if used[blk] > self.bounds[blk] {
                return false;
            }
        }
        true
    }

    fn greedy_extend(&self, start: &[ElementId], candidates: &[ElementId]) -> Vec<ElementId> {
        let mut used = vec![0usize; self.bounds.len()];
        for &e in start {
            used[self.block_of[e.index()]] += 1;
        }
        let mut kept = Vec::new();
        for &e in candidates {
            let blk = self.block_of[e.index()];
            if used[blk] < self.bounds[blk] {
                used[blk] += 1;
                kept.push(e);
            }
        }
        kept
    }

    fn kind(&self) -> MatroidKind<'_> {
        MatroidKind::Partition(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    #[test]
    fn block_bounds() {
        let p = PartitionMatroid::new(vec![ids(&[0, 1, 2]), ids(&[3, 4])], vec![1, 2]).unwrap();
        assert!(p.is_independent(&ids(&[0, 3, 4])));
        assert!(!p.is_independent(&ids(&[0, 1])));
        assert_eq!(p.greedy_extend(&ids(&[3]), &ids(&[4, 0, 1, 2])), ids(&[4, 0]));
    }

    #[test]
    fn rejects_overlapping_blocks() {
        assert!(PartitionMatroid::new(vec![ids(&[0, 1]), ids(&[1])], vec![1, 1]).is_err());
        assert!(PartitionMatroid::new(vec![ids(&[0])], vec![1, 1]).is_err());
    }
}
