//! Costs, bases, outcome vectors and the biobjective instance model.

use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::{ElementId, Matroid, MatroidKind, MatroidMinor};

/// General cost `c` and second (usually binary) cost `b` of one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CostPair {
    pub c: u64,
    pub b: u32,
}

impl CostPair {
    pub fn new(c: u64, b: u32) -> Self {
        CostPair { c, b }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Sense {
    #[default]
    Minimize,
    Maximize,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Minimize => "min",
            Sense::Maximize => "max",
        })
    }
}

/// `(c(B), b(B))` for a basis `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutcomeVector {
    pub c: u64,
    pub b: u64,
}

impl OutcomeVector {
    pub fn new(c: u64, b: u64) -> Self {
        OutcomeVector { c, b }
    }

    /// Componentwise `<=` and not equal (minimization).
    pub fn dominates(&self, other: &OutcomeVector) -> bool {
        self.c <= other.c && self.b <= other.b && self != other
    }

    /// Componentwise `<` (minimization).
    pub fn strictly_dominates(&self, other: &OutcomeVector) -> bool {
        self.c < other.c && self.b < other.b
    }
}

impl fmt::Display for OutcomeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.b)
    }
}

/// A basis in canonical (sorted, duplicate-free) form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Basis(Vec<ElementId>);

impl Basis {
    pub fn new(mut elements: Vec<ElementId>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Basis(elements)
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.0
    }

    pub fn into_elements(self) -> Vec<ElementId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    /// `self - out + inc`.
    pub fn exchange(&self, out: ElementId, inc: ElementId) -> Basis {
        let mut v: Vec<ElementId> = self.0.iter().copied().filter(|&e| e != out).collect();
        v.push(inc);
        Basis::new(v)
    }

    pub fn intersection(&self, other: &Basis) -> Vec<ElementId> {
        self.0.iter().copied().filter(|&e| other.contains(e)).collect()
    }

    pub fn difference(&self, other: &Basis) -> Vec<ElementId> {
        self.0.iter().copied().filter(|&e| !other.contains(e)).collect()
    }

    pub fn common_count(&self, other: &Basis) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

impl FromIterator<ElementId> for Basis {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Basis::new(iter.into_iter().collect())
    }
}

/// A matroid together with costs `c` and `b`.
///
/// Costs are stored in minimization form. A maximization instance is
/// rewritten at construction as `c' = c_max - c`, `b' = beta - b`; since every
/// basis has the same cardinality this is an affine, order-reversing map on
/// outcome vectors and [`BicriteriaInstance::to_original`] undoes it.
#[derive(Clone, Debug)]
pub struct BicriteriaInstance<M> {
    matroid: M,
    costs: Vec<CostPair>,
    original: Vec<CostPair>,
    sense: Sense,
    beta: u32,
    c_max: u64,
    rank: usize,
}

impl<M: Matroid> BicriteriaInstance<M> {
    /// Instance with a binary second objective.
    pub fn new(matroid: M, costs: Vec<CostPair>, sense: Sense) -> Result<Self> {
        Self::with_beta(matroid, costs, sense, 1)
    }

    /// Instance whose second costs lie in `0..=beta`.
    pub fn with_beta(matroid: M, costs: Vec<CostPair>, sense: Sense, beta: u32) -> Result<Self> {
        let n = matroid.ground_size();
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if costs.len() != n {
            return Err(Error::CostLength {
                expected: n,
                got: costs.len(),
            });
        }
        if beta == 0 {
            return Err(Error::InvalidParameters("beta must be at least 1".into()));
        }
        if let Some((i, cp)) = costs.iter().enumerate().find(|(_, cp)| cp.b > beta) {
            return Err(Error::CostOutOfRange {
                id: ElementId(i),
                b: cp.b,
                beta,
            });
        }
        if let MatroidKind::Graphic(g) = matroid.kind() {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
        }
        let rank = MatroidMinor::new(&matroid).rank();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let c_max = costs.iter().map(|cp| cp.c).max().unwrap_or(0);
        let working = match sense {
            Sense::Minimize => costs.clone(),
            Sense::Maximize => costs
                .iter()
                .map(|cp| CostPair::new(c_max - cp.c, beta - cp.b))
                .collect(),
        };
        Ok(BicriteriaInstance {
            matroid,
            costs: working,
            original: costs,
            sense,
            beta,
            c_max,
            rank,
        })
    }

    pub fn matroid(&self) -> &M {
        &self.matroid
    }

    /// Working (minimization) costs.
    pub fn costs(&self) -> &[CostPair] {
        &self.costs
    }

    /// Costs as given at construction.
    pub fn original_costs(&self) -> &[CostPair] {
        &self.original
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.beta == 1
    }

    pub fn require_binary(&self) -> Result<()> {
        if self.is_binary() {
            Ok(())
        } else {
            Err(Error::NotBinary(self.beta))
        }
    }

    #[inline]
    pub fn c(&self, e: ElementId) -> u64 {
        self.costs[e.index()].c
    }

    #[inline]
    pub fn b(&self, e: ElementId) -> u32 {
        self.costs[e.index()].b
    }

    /// Green elements have working second cost 0.
    #[inline]
    pub fn is_green(&self, e: ElementId) -> bool {
        self.costs[e.index()].b == 0
    }

    #[inline]
    pub fn is_red(&self, e: ElementId) -> bool {
        !self.is_green(e)
    }

    pub fn outcome(&self, elements: &[ElementId]) -> OutcomeVector {
        elements.iter().fold(OutcomeVector::new(0, 0), |acc, &e| {
            let cp = self.costs[e.index()];
            OutcomeVector::new(acc.c + cp.c, acc.b + u64::from(cp.b))
        })
    }

    /// Maps a working outcome of a basis back to the instance's own sense.
    pub fn to_original(&self, working: OutcomeVector) -> OutcomeVector {
        match self.sense {
            Sense::Minimize => working,
            Sense::Maximize => {
                let m = self.rank as u64;
                OutcomeVector::new(
                    m * self.c_max - working.c,
                    m * u64::from(self.beta) - working.b,
                )
            }
        }
    }

    /// Position of every green element in the order (c ascending, id
    /// ascending); `None` for red elements.
    pub fn green_ranks(&self) -> Vec<Option<usize>> {
        let mut greens: Vec<ElementId> = (0..self.len())
            .map(ElementId)
            .filter(|&e| self.is_green(e))
            .collect();
        greens.sort_by_key(|&e| (self.c(e), e));
        let mut ranks = vec![None; self.len()];
        for (r, e) in greens.into_iter().enumerate() {
            ranks[e.index()] = Some(r);
        }
        ranks
    }

    pub fn full_minor(&self) -> MatroidMinor<'_, M> {
        MatroidMinor::new(&self.matroid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::impls::{GraphicMatroid, UniformMatroid};

    #[test]
    fn rejects_bad_inputs() {
        let u = UniformMatroid::new(3, 1).unwrap();
        let costs = vec![CostPair::new(1, 0); 2];
        assert!(matches!(
            BicriteriaInstance::new(u.clone(), costs, Sense::Minimize),
            Err(Error::CostLength { .. })
        ));
        let costs = vec![CostPair::new(1, 2); 3];
        assert!(matches!(
            BicriteriaInstance::new(u, costs, Sense::Minimize),
            Err(Error::CostOutOfRange { .. })
        ));
        let g = GraphicMatroid::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            BicriteriaInstance::new(g, vec![CostPair::new(0, 0); 2], Sense::Minimize).unwrap_err(),
            Error::Disconnected
        );
        let loops = GraphicMatroid::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(
            BicriteriaInstance::new(loops, vec![CostPair::new(0, 0)], Sense::Minimize).unwrap_err(),
            Error::ZeroRank
        );
        let empty = GraphicMatroid::new(1, vec![]).unwrap();
        assert_eq!(
            BicriteriaInstance::new(empty, vec![], Sense::Minimize).unwrap_err(),
            Error::EmptyGroundSet
        );
    }

    #[test]
    fn max_transform_round_trips() {
        let u = UniformMatroid::new(3, 2).unwrap();
        let costs = vec![CostPair::new(5, 1), CostPair::new(3, 0), CostPair::new(9, 1)];
        let inst = BicriteriaInstance::new(u, costs.clone(), Sense::Maximize).unwrap();
        let basis = [ElementId(0), ElementId(2)];
        let working = inst.outcome(&basis);
        assert_eq!(working, OutcomeVector::new(4, 0));
        assert_eq!(inst.to_original(working), OutcomeVector::new(14, 2));
    }

    #[test]
    fn basis_set_operations() {
        let a = Basis::new(vec![ElementId(3), ElementId(1), ElementId(2)]);
        let b = Basis::new(vec![ElementId(2), ElementId(4), ElementId(3)]);
        assert_eq!(a.common_count(&b), 2);
        assert_eq!(a.difference(&b), vec![ElementId(1)]);
        assert_eq!(a.exchange(ElementId(1), ElementId(4)), b);
    }
}
