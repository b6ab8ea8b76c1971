use crate::instance::{Basis, OutcomeVector};

/// Which entries survive [`pareto_filter`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// Not dominated: no other outcome is `<=` in both and different.
    Pareto,
    /// Not strictly dominated: no other outcome is `<` in both.
    Weak,
}

/// Efficient bases with their outcomes, ordered by `(c, b)` and then basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EfficientSet {
    pub bases: Vec<Basis>,
    pub outcomes: Vec<OutcomeVector>,
}

impl EfficientSet {
    pub fn from_entries(mut entries: Vec<(OutcomeVector, Basis)>) -> Self {
        entries.sort();
        entries.dedup();
        let (outcomes, bases) = entries.into_iter().unzip();
        EfficientSet { bases, outcomes }
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Distinct outcomes in `(c, b)` order.
    pub fn distinct_outcomes(&self) -> Vec<OutcomeVector> {
        let mut v = self.outcomes.clone();
        v.dedup();
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OutcomeVector, &Basis)> {
        self.outcomes.iter().zip(&self.bases)
    }
}

/// Keeps the entries whose outcome survives `mode`, sorted by `(c, b)`.
/// Entries sharing an outcome are all kept or all dropped.
pub fn pareto_filter<P>(mut entries: Vec<(OutcomeVector, P)>, mode: Dominance) -> Vec<(OutcomeVector, P)> {
    entries.sort_by_key(|(o, _)| *o);
    let mut kept = Vec::with_capacity(entries.len());
    // min b over all outcomes with a strictly smaller c
    let mut best_before = u64::MAX;
    let mut iter = entries.into_iter().peekable();
    while let Some((first, payload)) = iter.next() {
        let c = first.c;
        let group_min = first.b;
        let mut group = vec![(first, payload)];
        while let Some((o, _)) = iter.peek() {
            if o.c != c {
                break;
            }
            group.push(iter.next().unwrap());
        }
        for (o, p) in group {
            let keep = match mode {
                Dominance::Pareto => o.b == group_min && group_min < best_before,
                Dominance::Weak => o.b <= best_before,
            };
            if keep {
                kept.push((o, p));
            }
        }
        best_before = best_before.min(group_min);
    }
    kept
}
