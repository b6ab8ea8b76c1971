use crate::error::Result;
use crate::esa::Swap;
use crate::greedy::min_weight_basis;
use crate::instance::{Basis, BicriteriaInstance, OutcomeVector};
use crate::matroid::{ElementId, Matroid};

/// Bases visited by repeatedly applying a minimal swap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveSwapRun {
    /// `B_l, ..., B_u`, one fewer red element per step.
    pub bases: Vec<Basis>,
    /// Working outcomes, parallel to `bases`.
    pub outcomes: Vec<OutcomeVector>,
    /// `swaps[i]` turns `bases[i]` into `bases[i + 1]`.
    pub swaps: Vec<Swap>,
}

impl NaiveSwapRun {
    /// Outcomes from the basis reached by the leading non-positive swaps on.
    pub fn front(&self) -> Vec<OutcomeVector> {
        let skip = self.swaps.iter().take_while(|s| s.cost <= 0).count();
        self.outcomes[skip..].to_vec()
    }
}

/// Starts at a `c`-minimal basis among those with the most red elements and
/// applies, as long as one exists, a swap of least cost among all feasible
/// red-out/green-in exchanges. Ties go to the entering element that comes
/// first in the green order, then to the smaller leaving id.
///
/// Every candidate swap is found through the fundamental circuit of each
/// green element outside the current basis.
pub fn naive_minimal_swap_solver<M: Matroid>(instance: &BicriteriaInstance<M>) -> Result<NaiveSwapRun> {
    instance.require_binary()?;
    let minor = instance.full_minor();
    let green_rank = instance.green_ranks();
    let mut basis = min_weight_basis(&minor, |e| (std::cmp::Reverse(instance.b(e)), instance.c(e)));
    let mut run = NaiveSwapRun {
        outcomes: vec![instance.outcome(basis.elements())],
        bases: vec![basis.clone()],
        swaps: Vec::new(),
    };
    loop {
        let mut best: Option<((i64, usize, ElementId), Swap)> = None;
        for f in (0..instance.len()).map(ElementId) {
            if instance.is_red(f) || basis.contains(f) {
                continue;
            }
            for e in minor.circuit_unchecked(basis.elements(), f) {
                if e == f || instance.is_green(e) {
                    continue;
                }
                let swap = Swap::new(instance, e, f);
                let key = (swap.cost, green_rank[f.index()].unwrap_or(usize::MAX), e);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, swap));
                }
            }
        }
        let Some((_, swap)) = best else {
            break;
        };
        basis = basis.exchange(swap.leaving, swap.entering);
        run.outcomes.push(instance.outcome(basis.elements()));
        run.bases.push(basis.clone());
        run.swaps.push(swap);
    }
    Ok(run)
}
