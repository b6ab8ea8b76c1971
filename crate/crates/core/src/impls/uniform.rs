use crate::error::{Error, Result};
use crate::matroid::{ElementId, Matroid, MatroidKind};

/// `U_{k,n}`: every set of at most `k` elements is independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    k: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameters(format!(
                "uniform matroid needs 0 < k <= n, got k = {k}, n = {n}"
            )));
        }
        Ok(UniformMatroid { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        set.len() <= self.k
    }

    fn greedy_extend(&self, start: &[ElementId], candidates: &[ElementId]) -> Vec<ElementId> {
        let room = self.k.saturating_sub(start.len());
        candidates.iter().copied().take(room).collect()
    }

    fn kind(&self) -> MatroidKind<'_> {
        MatroidKind::Uniform(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_rank() {
        assert!(UniformMatroid::new(3, 0).is_err());
        assert!(UniformMatroid::new(3, 4).is_err());
    }

    #[test]
    fn table_four_basis_is_independent() {
        let u = UniformMatroid::new(6, 3).unwrap();
        assert!(u.is_independent(&[ElementId(0), ElementId(3), ElementId(4)]));
        assert!(u.is_independent(&[]));
        assert!(!u.is_independent(&[ElementId(0), ElementId(1), ElementId(2), ElementId(3)]));
    }
}
