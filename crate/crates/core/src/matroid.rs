//! The independence-oracle abstraction and deletion/contraction minors.
//!
//! Every algorithm in this crate talks to a matroid only through
//! [`Matroid::is_independent`] (and the greedy helper built on top of it).
//! Minors are cheap views that keep a sorted ground set and a sorted
//! contracted set; the deleted set is whatever is left of the base ground
//! set.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::impls::{GraphicMatroid, PartitionMatroid, UniformMatroid};
use crate::instance::Basis;

/// Dense 0-based index of an element of the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl From<usize> for ElementId {
    fn from(value: usize) -> Self {
        ElementId(value)
    }
}

/// Borrowed view of the concrete matroid behind an oracle.
///
/// Only the reference oracles (enumeration, DP) dispatch on this; the
/// solvers never do.
#[derive(Clone, Copy, Debug)]
pub enum MatroidKind<'a> {
    Graphic(&'a GraphicMatroid),
    Uniform(&'a UniformMatroid),
    Partition(&'a PartitionMatroid),
    Opaque,
}

/// An independence oracle over the ground set `0..ground_size()`.
pub trait Matroid: Send + Sync {
    fn ground_size(&self) -> usize;

    /// Whether `set` is independent. Ids must be in range; callers going
    /// through [`MatroidMinor::is_independent`] get that checked.
    fn is_independent(&self, set: &[ElementId]) -> bool;

    /// Scans `candidates` in order and keeps every element that can be added
    /// to `start` (plus the elements kept so far) without creating a
    /// dependency. `start` must be independent. Returns the kept elements.
    ///
    /// Implementations may override this with an incremental structure but
    /// must return exactly what the plain oracle loop returns.
    fn greedy_extend(&self, start: &[ElementId], candidates: &[ElementId]) -> Vec<ElementId> {
        let mut current = start.to_vec();
        for &e in candidates {
            current.push(e);
            if !self.is_independent(&current) {
                current.pop();
            }
        }
        current.split_off(start.len())
    }

    fn kind(&self) -> MatroidKind<'_> {
        MatroidKind::Opaque
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        (**self).is_independent(set)
    }

    fn greedy_extend(&self, start: &[ElementId], candidates: &[ElementId]) -> Vec<ElementId> {
        (**self).greedy_extend(start, candidates)
    }

    fn kind(&self) -> MatroidKind<'_> {
        (**self).kind()
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        (**self).is_independent(set)
    }

    fn greedy_extend(&self, start: &[ElementId], candidates: &[ElementId]) -> Vec<ElementId> {
        (**self).greedy_extend(start, candidates)
    }

    fn kind(&self) -> MatroidKind<'_> {
        (**self).kind()
    }
}

/// `(base - deleted) / contracted`, stored as its ground set and the
/// contracted elements.
pub struct MatroidMinor<'a, M: Matroid + ?Sized> {
    base: &'a M,
    ground: Vec<ElementId>,
    contracted: Vec<ElementId>,
    rank: OnceLock<usize>,
}

impl<M: Matroid + ?Sized> Clone for MatroidMinor<'_, M> {
    fn clone(&self) -> Self {
        let rank = OnceLock::new();
        if let Some(&r) = self.rank.get() {
            let _ = rank.set(r);
        }
        MatroidMinor {
            base: self.base,
            ground: self.ground.clone(),
            contracted: self.contracted.clone(),
            rank,
        }
    }
}

impl<M: Matroid + ?Sized> fmt::Debug for MatroidMinor<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatroidMinor")
            .field("ground", &self.ground)
            .field("contracted", &self.contracted)
            .finish()
    }
}

impl<'a, M: Matroid + ?Sized> MatroidMinor<'a, M> {
    /// The trivial minor: nothing deleted, nothing contracted.
    pub fn new(base: &'a M) -> Self {
        MatroidMinor {
            base,
            ground: (0..base.ground_size()).map(ElementId).collect(),
            contracted: Vec::new(),
            rank: OnceLock::new(),
        }
    }

    pub fn base(&self) -> &'a M {
        self.base
    }

    /// Sorted ground set of the minor.
    pub fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    /// Sorted contracted set.
    pub fn contracted(&self) -> &[ElementId] {
        &self.contracted
    }

    /// Elements of the base that are neither in the ground set nor contracted.
    pub fn deleted(&self) -> Vec<ElementId> {
        (0..self.base.ground_size())
            .map(ElementId)
            .filter(|e| !self.contains(*e) && self.contracted.binary_search(e).is_err())
            .collect()
    }

    #[inline]
    pub fn contains(&self, e: ElementId) -> bool {
        self.ground.binary_search(&e).is_ok()
    }

    fn check_range(&self, set: &[ElementId]) -> Result<()> {
        let size = self.base.ground_size();
        match set.iter().find(|e| e.index() >= size) {
            Some(&id) => Err(Error::IdOutOfRange { id, size }),
            None => Ok(()),
        }
    }

    /// Independence in the minor: every element must belong to the ground
    /// set, and `subset ∪ contracted` must be independent in the base.
    pub fn is_independent(&self, subset: &[ElementId]) -> Result<bool> {
        self.check_range(subset)?;
        if !subset.iter().all(|&e| self.contains(e)) {
            return Ok(false);
        }
        Ok(self.independent(subset))
    }

    /// Unchecked variant for callers that already know `subset ⊆ ground`.
    pub(crate) fn independent(&self, subset: &[ElementId]) -> bool {
        if self.contracted.is_empty() {
            return self.base.is_independent(subset);
        }
        let mut buf = Vec::with_capacity(subset.len() + self.contracted.len());
        buf.extend_from_slice(&self.contracted);
        buf.extend_from_slice(subset);
        self.base.is_independent(&buf)
    }

    /// Greedy scan over `order` (elements of the ground set), returning the
    /// accepted elements in scan order.
    pub fn greedy(&self, order: &[ElementId]) -> Vec<ElementId> {
        debug_assert!(order.iter().all(|&e| self.contains(e)));
        self.base.greedy_extend(&self.contracted, order)
    }

    /// Cardinality of every basis, computed once by greedy extension.
    pub fn rank(&self) -> usize {
        *self.rank.get_or_init(|| self.greedy(&self.ground).len())
    }

    pub fn is_basis(&self, set: &[ElementId]) -> bool {
        set.iter().all(|&e| self.contains(e))
            && set.len() == self.rank()
            && self.independent(set)
    }

    /// Removes `set` from the ground set. Elements that are already gone
    /// are ignored.
    pub fn delete(&self, set: &[ElementId]) -> Result<Self> {
        self.check_range(set)?;
        let mut drop = set.to_vec();
        drop.sort_unstable();
        let ground = self
            .ground
            .iter()
            .copied()
            .filter(|e| drop.binary_search(e).is_err())
            .collect();
        Ok(MatroidMinor {
            base: self.base,
            ground,
            contracted: self.contracted.clone(),
            rank: OnceLock::new(),
        })
    }

    /// Contracts an independent subset of the ground set.
    pub fn contract(&self, set: &[ElementId]) -> Result<Self> {
        self.check_range(set)?;
        let mut add = set.to_vec();
        add.sort_unstable();
        add.dedup();
        if let Some(&e) = add.iter().find(|&&e| !self.contains(e)) {
            return Err(Error::NotInGroundSet(e));
        }
        if !self.independent(&add) {
            return Err(Error::NotIndependent);
        }
        let ground = self
            .ground
            .iter()
            .copied()
            .filter(|e| add.binary_search(e).is_err())
            .collect();
        let mut contracted = self.contracted.clone();
        contracted.extend_from_slice(&add);
        contracted.sort_unstable();
        // Contracting I drops the rank by exactly |I|.
        let rank = OnceLock::new();
        if let Some(&r) = self.rank.get() {
            let _ = rank.set(r - add.len());
        }
        Ok(MatroidMinor {
            base: self.base,
            ground,
            contracted,
            rank,
        })
    }

    /// The unique circuit in `basis ∪ {e}`. It always contains `e`.
    pub fn fundamental_circuit(&self, basis: &Basis, e: ElementId) -> Result<Vec<ElementId>> {
        self.check_range(&[e])?;
        self.check_range(basis.elements())?;
        if !self.contains(e) {
            return Err(Error::NotInGroundSet(e));
        }
        if basis.contains(e) {
            return Err(Error::ElementInBasis(e));
        }
        if !self.is_basis(basis.elements()) {
            return Err(Error::NotABasis);
        }
        Ok(self.circuit_unchecked(basis.elements(), e))
    }

    /// `basis` must be a basis of the minor and `e` a ground element outside it.
    pub(crate) fn circuit_unchecked(&self, basis: &[ElementId], e: ElementId) -> Vec<ElementId> {
        // x is on the circuit iff basis - x + e is again a basis
        let mut trial: Vec<ElementId> = basis.to_vec();
        let mut circuit = vec![e];
        for (i, &x) in basis.iter().enumerate() {
            trial[i] = e;
            if self.independent(&trial) {
                circuit.push(x);
            }
            trial[i] = x;
        }
        circuit.sort_unstable();
        circuit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::impls::UniformMatroid;

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    #[test]
    fn uniform_independence_through_minor() {
        let u = UniformMatroid::new(6, 3).unwrap();
        let m = MatroidMinor::new(&u);
        assert!(m.is_independent(&ids(&[0, 1, 2])).unwrap());
        assert!(!m.is_independent(&ids(&[0, 1, 2, 3])).unwrap());
        assert!(m.is_independent(&[]).unwrap());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn out_of_range_is_an_error() {
        let u = UniformMatroid::new(4, 2).unwrap();
        let m = MatroidMinor::new(&u);
        assert_eq!(
            m.is_independent(&ids(&[0, 9])),
            Err(Error::IdOutOfRange {
                id: ElementId(9),
                size: 4
            })
        );
    }

    #[test]
    fn deleted_elements_are_not_independent() {
        let u = UniformMatroid::new(4, 2).unwrap();
        let m = MatroidMinor::new(&u).delete(&ids(&[1])).unwrap();
        assert!(!m.is_independent(&ids(&[1])).unwrap());
        assert_eq!(m.deleted(), ids(&[1]));
    }

    #[test]
    fn uniform_circuit_is_whole_set() {
        let u = UniformMatroid::new(4, 2).unwrap();
        let m = MatroidMinor::new(&u);
        let b = Basis::new(ids(&[0, 1]));
        assert_eq!(m.fundamental_circuit(&b, ElementId(2)).unwrap(), ids(&[0, 1, 2]));
        assert_eq!(
            m.fundamental_circuit(&b, ElementId(0)),
            Err(Error::ElementInBasis(ElementId(0)))
        );
        let not_basis = Basis::new(ids(&[0]));
        assert_eq!(m.fundamental_circuit(&not_basis, ElementId(2)), Err(Error::NotABasis));
    }

    #[test]
    fn contract_empty_is_identity() {
        let u = UniformMatroid::new(5, 2).unwrap();
        let m = MatroidMinor::new(&u);
        let c = m.contract(&[]).unwrap();
        assert_eq!(c.ground(), m.ground());
        assert_eq!(c.rank(), m.rank());
    }

    #[test]
    fn contract_dependent_fails() {
        let u = UniformMatroid::new(5, 2).unwrap();
        let m = MatroidMinor::new(&u);
        assert_eq!(m.contract(&ids(&[0, 1, 2])).unwrap_err(), Error::NotIndependent);
        let c = m.contract(&ids(&[0])).unwrap();
        assert_eq!(c.rank(), 1);
        assert!(!c.is_independent(&ids(&[1, 2])).unwrap());
        assert!(c.is_independent(&ids(&[4])).unwrap());
    }

    #[test]
    fn delete_and_contract_commute() {
        let u = UniformMatroid::new(6, 3).unwrap();
        let m = MatroidMinor::new(&u);
        let a = m.delete(&ids(&[5])).unwrap().contract(&ids(&[0, 1])).unwrap();
        let b = m.contract(&ids(&[0, 1])).unwrap().delete(&ids(&[5])).unwrap();
        assert_eq!(a.ground(), b.ground());
        assert_eq!(a.contracted(), b.contracted());
        assert_eq!(a.rank(), b.rank());
    }
}
