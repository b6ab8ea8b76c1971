use crate::error::{Error, Result};
use crate::instance::{Basis, BicriteriaInstance, OutcomeVector};
use crate::matroid::{ElementId, Matroid, MatroidKind};

use super::pareto::{pareto_filter, Dominance, EfficientSet};

/// Which `b`-levels the DP reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DpSelection {
    /// Bases whose outcome is non-dominated.
    #[default]
    Efficient,
    /// For every `b`-level the `c`-optimal bases, minus the levels whose
    /// optimum is strictly dominated by another level's optimum.
    LevelOptimal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DpOptions {
    pub selection: DpSelection,
    /// Recover every optimal basis per reported level, or only one.
    pub all_representatives: bool,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            selection: DpSelection::Efficient,
            all_representatives: true,
        }
    }
}

const INF: u64 = u64::MAX;

struct Table {
    count: usize,
    levels: usize,
    values: Vec<u64>,
}

impl Table {
    fn idx(&self, i: usize, j: usize, t: usize) -> usize {
        (i * (self.count + 1) + j) * self.levels + t
    }

    fn get(&self, i: usize, j: usize, t: usize) -> u64 {
        self.values[self.idx(i, j, t)]
    }
}

/// Exact efficient set of an instance over a uniform matroid `U_{k,n}`.
///
/// `f[i][j][t]` is the least working `c` of a `j`-subset of the first `i`
/// elements with working `b`-total `t`. Works for any `beta`. Bases are
/// recovered by walking back through every transition that attains the
/// stored optimum. Outcomes are in working orientation.
pub fn dp_uniform<M: Matroid>(instance: &BicriteriaInstance<M>, options: DpOptions) -> Result<EfficientSet> {
    let MatroidKind::Uniform(u) = instance.matroid().kind() else {
        return Err(Error::NotUniform("dp_uniform"));
    };
    let (n, k) = (u.n(), u.k());
    let levels = k * instance.beta() as usize + 1;
    let mut table = Table {
        count: k,
        levels,
        values: vec![INF; (n + 1) * (k + 1) * levels],
    };
    let origin = table.idx(0, 0, 0);
    table.values[origin] = 0;
    for i in 1..=n {
        let e = ElementId(i - 1);
        let (c, b) = (instance.c(e), instance.b(e) as usize);
        for j in 0..=k.min(i) {
            for t in 0..levels {
                let mut best = table.get(i - 1, j, t);
                if j > 0 && t >= b {
                    let prev = table.get(i - 1, j - 1, t - b);
                    if prev != INF {
                        best = best.min(prev + c);
                    }
                }
                let at = table.idx(i, j, t);
                table.values[at] = best;
            }
        }
    }

    let level_best: Vec<(OutcomeVector, usize)> = (0..levels)
        .filter(|&t| table.get(n, k, t) != INF)
        .map(|t| (OutcomeVector::new(table.get(n, k, t), t as u64), t))
        .collect();
    let mode = match options.selection {
        DpSelection::Efficient => Dominance::Pareto,
        DpSelection::LevelOptimal => Dominance::Weak,
    };
    let mut entries = Vec::new();
    for (outcome, t) in pareto_filter(level_best, mode) {
        let mut found = Vec::new();
        collect(
            instance,
            &table,
            (n, k, t),
            outcome.c,
            &mut Vec::new(),
            &mut found,
            options.all_representatives,
        );
        entries.extend(found.into_iter().map(|b| (outcome, b)));
    }
    Ok(EfficientSet::from_entries(entries))
}

fn collect<M: Matroid>(
    instance: &BicriteriaInstance<M>,
    table: &Table,
    (i, j, t): (usize, usize, usize),
    value: u64,
    chosen: &mut Vec<ElementId>,
    out: &mut Vec<Basis>,
    all: bool,
) {
    if !all && !out.is_empty() {
        return;
    }
    if i == 0 {
        out.push(Basis::new(chosen.clone()));
        return;
    }
    if table.get(i - 1, j, t) == value {
        collect(instance, table, (i - 1, j, t), value, chosen, out, all);
    }
    let e = ElementId(i - 1);
    let (c, b) = (instance.c(e), instance.b(e) as usize);
    if j > 0 && t >= b && value >= c && table.get(i - 1, j - 1, t - b) == value - c {
        chosen.push(e);
        collect(instance, table, (i - 1, j - 1, t - b), value - c, chosen, out, all);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::impls::{GraphicMatroid, UniformMatroid};
    use crate::instance::{CostPair, Sense};

    #[test]
    fn full_rank_is_single_basis() {
        let u = UniformMatroid::new(4, 4).unwrap();
        let costs = vec![CostPair::new(3, 1), CostPair::new(1, 0), CostPair::new(2, 1), CostPair::new(5, 0)];
        let inst = BicriteriaInstance::new(u, costs, Sense::Minimize).unwrap();
        let eff = dp_uniform(&inst, DpOptions::default()).unwrap();
        assert_eq!(eff.len(), 1);
        assert_eq!(eff.bases[0].len(), 4);
        assert_eq!(eff.outcomes[0], OutcomeVector::new(11, 2));
    }

    #[test]
    fn ties_yield_every_optimal_subset() {
        let u = UniformMatroid::new(3, 1).unwrap();
        let costs = vec![CostPair::new(1, 0); 3];
        let inst = BicriteriaInstance::new(u, costs, Sense::Minimize).unwrap();
        let eff = dp_uniform(&inst, DpOptions::default()).unwrap();
        assert_eq!(eff.len(), 3);
        let one = dp_uniform(
            &inst,
            DpOptions {
                all_representatives: false,
                ..DpOptions::default()
            },
        )
        .unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn rejects_non_uniform() {
        let g = GraphicMatroid::new(2, vec![(0, 1)]).unwrap();
        let inst = BicriteriaInstance::new(g, vec![CostPair::new(1, 0)], Sense::Minimize).unwrap();
        assert_eq!(
            dp_uniform(&inst, DpOptions::default()).unwrap_err(),
            Error::NotUniform("dp_uniform")
        );
    }
}
