use crate::instance::{Basis, BicriteriaInstance, OutcomeVector};
use crate::matroid::{ElementId, Matroid, MatroidKind};

use super::enumerate::{for_each_basis, spanning_forests};
use super::pareto::{pareto_filter, Dominance, EfficientSet};

/// Result of enumerating every basis of an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteEnumeration {
    /// Number of bases visited.
    pub total: u64,
    /// All efficient bases (working outcomes).
    pub efficient: EfficientSet,
    /// For every `b`-level the `c`-optimal bases, restricted to levels whose
    /// optimum is not strictly dominated.
    pub level_optimal: EfficientSet,
}

impl CompleteEnumeration {
    /// Distinct non-dominated outcomes in `c` order.
    pub fn front(&self) -> Vec<OutcomeVector> {
        self.efficient.distinct_outcomes()
    }
}

/// Visits every basis and keeps, per value of `b`, the least `c` with all
/// the bases attaining it. Those are the only candidates for efficiency.
pub fn complete_enumeration<M: Matroid>(instance: &BicriteriaInstance<M>) -> CompleteEnumeration {
    let levels = instance.rank() * instance.beta() as usize + 1;
    let mut best: Vec<(u64, Vec<Vec<ElementId>>)> = vec![(u64::MAX, Vec::new()); levels];
    let mut total = 0u64;
    let mut record = |basis: &[ElementId], (c, b): (u64, u64)| {
        total += 1;
        let slot = &mut best[b as usize];
        if c < slot.0 {
            slot.0 = c;
            slot.1.clear();
        }
        if c == slot.0 {
            slot.1.push(basis.to_vec());
        }
    };
    match instance.matroid().kind() {
        MatroidKind::Graphic(g) => spanning_forests(
            g,
            |e| (instance.c(e), u64::from(instance.b(e))),
            &mut record,
        ),
        _ => for_each_basis(instance.matroid(), |basis| {
            let o = instance.outcome(basis);
            record(basis, (o.c, o.b))
        }),
    }
    let mut entries = Vec::new();
    for (t, (c, bases)) in best.into_iter().enumerate() {
        for b in bases {
            entries.push((OutcomeVector::new(c, t as u64), Basis::new(b)));
        }
    }
    let efficient = EfficientSet::from_entries(pareto_filter(entries.clone(), Dominance::Pareto));
    let level_optimal = EfficientSet::from_entries(pareto_filter(entries, Dominance::Weak));
    CompleteEnumeration {
        total,
        efficient,
        level_optimal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::impls::UniformMatroid;
    use crate::instance::{CostPair, Sense};

    #[test]
    fn small_uniform() {
        let u = UniformMatroid::new(4, 2).unwrap();
        let costs = vec![CostPair::new(1, 1), CostPair::new(1, 1), CostPair::new(3, 0), CostPair::new(6, 0)];
        let inst = BicriteriaInstance::new(u, costs, Sense::Minimize).unwrap();
        let ce = complete_enumeration(&inst);
        assert_eq!(ce.total, 6);
        assert_eq!(
            ce.front(),
            vec![OutcomeVector::new(2, 2), OutcomeVector::new(4, 1), OutcomeVector::new(9, 0)]
        );
        // (4,1) is reached from either red element
        assert_eq!(ce.efficient.len(), 4);
    }
}
