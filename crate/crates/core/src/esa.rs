//! The efficient swap algorithm.
//!
//! Starting from the lexicographically optimal basis `B_j`, the algorithm
//! computes one minimal swap per green element of `B_u \ B_j` with the
//! bisection procedure [`ssg`], sorts the swaps by cost and applies them in
//! order. Every intermediate basis is efficient and each one lowers `b` by
//! exactly one, so the resulting points form the whole non-dominated set.

use crate::error::{Error, Result};
use crate::greedy::BasisPair;
use crate::instance::{BicriteriaInstance, Basis, OutcomeVector};
use crate::matroid::{ElementId, Matroid, MatroidMinor};

/// Exchange of the red element `leaving` for the green element `entering`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Swap {
    pub leaving: ElementId,
    pub entering: ElementId,
    /// `c(entering) - c(leaving)`
    pub cost: i64,
}

impl Swap {
    pub fn new<M: Matroid>(
        instance: &BicriteriaInstance<M>,
        leaving: ElementId,
        entering: ElementId,
    ) -> Self {
        Swap {
            leaving,
            entering,
            cost: instance.c(entering) as i64 - instance.c(leaving) as i64,
        }
    }
}

/// Swaps ordered by `(cost, green rank of the entering element)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwapSequence(Vec<Swap>);

impl SwapSequence {
    pub fn swaps(&self) -> &[Swap] {
        &self.0
    }

    pub fn costs(&self) -> Vec<i64> {
        self.0.iter().map(|s| s.cost).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Stable sort by cost, ties by the position of the entering element in the
/// global green order (c ascending, id ascending).
pub fn sort_swaps(mut swaps: Vec<Swap>, green_rank: &[Option<usize>]) -> SwapSequence {
    swaps.sort_by_key(|s| (s.cost, green_rank[s.entering.index()]));
    SwapSequence(swaps)
}

/// One efficient basis per non-dominated outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontPoint {
    pub outcome: OutcomeVector,
    pub basis: Basis,
}

/// Points ordered by `c` strictly increasing and `b` strictly decreasing,
/// in working (minimization) orientation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParetoFront {
    points: Vec<FrontPoint>,
}

impl ParetoFront {
    pub fn new(points: Vec<FrontPoint>) -> Result<Self> {
        for w in points.windows(2) {
            let (a, b) = (w[0].outcome, w[1].outcome);
            if !(a.c < b.c && a.b > b.b) {
                return Err(Error::Invariant(format!(
                    "front points {a} and {b} are not strictly monotone"
                )));
            }
        }
        Ok(ParetoFront { points })
    }

    pub fn points(&self) -> &[FrontPoint] {
        &self.points
    }

    pub fn outcomes(&self) -> Vec<OutcomeVector> {
        self.points.iter().map(|p| p.outcome).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether consecutive slopes `Δb/Δc` never decrease.
    pub fn slopes_non_decreasing(&self) -> bool {
        let deltas: Vec<(i128, i128)> = self
            .points
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].outcome, w[1].outcome);
                (b.b as i128 - a.b as i128, b.c as i128 - a.c as i128)
            })
            .collect();
        // db1/dc1 <= db2/dc2 with dc > 0
        deltas
            .windows(2)
            .all(|w| w[0].0 * w[1].1 <= w[1].0 * w[0].1)
    }
}

/// Everything [`run_esa`] computes along the way.
#[derive(Clone, Debug)]
pub struct EsaResult {
    pub front: ParetoFront,
    /// All swaps produced by the bisection, sorted.
    pub swaps: SwapSequence,
    pub pair: BasisPair,
    /// Leading swaps with cost <= 0 that were applied without emitting a
    /// point. Zero whenever `B_j` really is lexicographically optimal.
    pub nonpositive_skipped: usize,
}

impl EsaResult {
    /// The swaps that produced front points.
    pub fn applied_swaps(&self) -> &[Swap] {
        &self.swaps.swaps()[self.nonpositive_skipped..]
    }
}

/// Swap sequence generation on `minor`, whose ground set must be exactly
/// `red ∪ green` with `|red| = |green| >= 1` and `red` a basis of it.
///
/// Returns one swap per green element; the pairing is a perfect matching
/// between `red` and `green`.
pub fn ssg<M: Matroid>(
    instance: &BicriteriaInstance<M>,
    minor: &MatroidMinor<'_, M>,
    red: &[ElementId],
    green: &[ElementId],
) -> Result<Vec<Swap>> {
    let green_rank = instance.green_ranks();
    ssg_with_ranks(instance, minor, red, green, &green_rank)
}

fn ssg_with_ranks<M: Matroid>(
    instance: &BicriteriaInstance<M>,
    minor: &MatroidMinor<'_, M>,
    red: &[ElementId],
    green: &[ElementId],
    green_rank: &[Option<usize>],
) -> Result<Vec<Swap>> {
    if red.len() != green.len() || red.is_empty() {
        return Err(Error::Invariant(format!(
            "swap generation needs |J| = |U| >= 1, got {} and {}",
            red.len(),
            green.len()
        )));
    }
    if red.iter().any(|&e| instance.is_green(e)) || green.iter().any(|&e| instance.is_red(e)) {
        return Err(Error::Invariant("J must be red and U green".into()));
    }
    let mut union: Vec<ElementId> = red.iter().chain(green).copied().collect();
    union.sort_unstable();
    if union != minor.ground() {
        return Err(Error::Invariant("J ∪ U is not the ground set of the minor".into()));
    }
    let mut swaps = Vec::with_capacity(green.len());
    bisect(instance, minor, red.to_vec(), green.to_vec(), green_rank, &mut swaps)?;
    Ok(swaps)
}

fn bisect<M: Matroid>(
    instance: &BicriteriaInstance<M>,
    minor: &MatroidMinor<'_, M>,
    red: Vec<ElementId>,
    mut green: Vec<ElementId>,
    green_rank: &[Option<usize>],
    out: &mut Vec<Swap>,
) -> Result<()> {
    debug_assert_eq!(red.len(), green.len());
    if green.len() == 1 {
        out.push(Swap::new(instance, red[0], green[0]));
        return Ok(());
    }

    green.sort_unstable_by_key(|e| green_rank[e.index()]);
    let green_rest = green.split_off(green.len() / 2);
    let green_first = green;

    // Cheapest red completion of the first half to a basis. Those reds get
    // paired with the second half, the remaining reds with the first half.
    let restricted = minor
        .delete(&green_rest)?
        .contract(&green_first)
        .map_err(|_| Error::Invariant("U_1 is dependent in the minor".into()))?;
    let mut red_order = red.clone();
    red_order.sort_unstable_by_key(|&e| (instance.c(e), e));
    let red_for_rest = restricted.greedy(&red_order);
    if red_for_rest.len() != green_rest.len() {
        return Err(Error::Invariant(format!(
            "J_1 has {} elements, expected {}",
            red_for_rest.len(),
            green_rest.len()
        )));
    }
    let mut red_for_rest_sorted = red_for_rest.clone();
    red_for_rest_sorted.sort_unstable();
    let red_for_first: Vec<ElementId> = red
        .iter()
        .copied()
        .filter(|e| red_for_rest_sorted.binary_search(e).is_err())
        .collect();

    let left = minor
        .delete(&green_rest)?
        .contract(&red_for_rest)
        .map_err(|_| Error::Invariant("J_1 is dependent after deleting U_2".into()))?;
    bisect(instance, &left, red_for_first.clone(), green_first.clone(), green_rank, out)?;

    let right = minor
        .delete(&red_for_first)?
        .contract(&green_first)
        .map_err(|_| Error::Invariant("U_1 is dependent after deleting J_2".into()))?;
    bisect(instance, &right, red_for_rest, green_rest, green_rank, out)
}

/// Computes the non-dominated set and one efficient basis per point.
pub fn run_esa<M: Matroid>(instance: &BicriteriaInstance<M>) -> Result<EsaResult> {
    instance.require_binary()?;
    let pair = BasisPair::compute(instance)?;
    let green_rank = instance.green_ranks();
    let full = instance.full_minor();

    let swaps = if pair.green_in.is_empty() {
        SwapSequence::default()
    } else {
        let mut union: Vec<ElementId> = pair.b_j.elements().to_vec();
        union.extend_from_slice(&pair.green_in);
        union.sort_unstable();
        let outside: Vec<ElementId> = (0..instance.len())
            .map(ElementId)
            .filter(|e| union.binary_search(e).is_err())
            .collect();
        let reduced = full.delete(&outside)?.contract(&pair.common)?;
        let raw = ssg_with_ranks(instance, &reduced, &pair.red_out, &pair.green_in, &green_rank)?;
        sort_swaps(raw, &green_rank)
    };

    let mut basis = pair.b_j.clone();
    let mut outcome = instance.outcome(basis.elements());
    let apply = |basis: &mut Basis, outcome: &mut OutcomeVector, swap: &Swap| -> Result<()> {
        *basis = basis.exchange(swap.leaving, swap.entering);
        *outcome = OutcomeVector::new((outcome.c as i64 + swap.cost) as u64, outcome.b - 1);
        if full.is_basis(basis.elements()) {
            Ok(())
        } else {
            Err(Error::Invariant(format!(
                "applying swap ({}, {}) left a non-basis",
                swap.leaving, swap.entering
            )))
        }
    };

    let skipped = swaps.swaps().iter().take_while(|s| s.cost <= 0).count();
    for swap in &swaps.swaps()[..skipped] {
        apply(&mut basis, &mut outcome, swap)?;
    }
    let mut points = Vec::with_capacity(swaps.len() + 1 - skipped);
    points.push(FrontPoint {
        outcome,
        basis: basis.clone(),
    });
    for swap in &swaps.swaps()[skipped..] {
        apply(&mut basis, &mut outcome, swap)?;
        points.push(FrontPoint {
            outcome,
            basis: basis.clone(),
        });
    }
    if basis != pair.b_u {
        return Err(Error::Invariant("the swap sequence does not end in B_u".into()));
    }
    debug_assert_eq!(instance.outcome(basis.elements()), outcome);

    Ok(EsaResult {
        front: ParetoFront::new(points)?,
        swaps,
        pair,
        nonpositive_skipped: skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::impls::UniformMatroid;
    use crate::instance::{CostPair, Sense};

    fn uniform(costs: &[(u64, u32)], k: usize) -> BicriteriaInstance<UniformMatroid> {
        let u = UniformMatroid::new(costs.len(), k).unwrap();
        let costs = costs.iter().map(|&(c, b)| CostPair::new(c, b)).collect();
        BicriteriaInstance::new(u, costs, Sense::Minimize).unwrap()
    }

    #[test]
    fn sort_breaks_ties_by_green_rank() {
        let inst = uniform(&[(1, 1), (2, 1), (5, 0), (6, 0)], 2);
        let ranks = inst.green_ranks();
        let first = Swap::new(&inst, ElementId(0), ElementId(2));
        let second = Swap::new(&inst, ElementId(1), ElementId(3));
        assert_eq!(first.cost, second.cost);
        let sorted = sort_swaps(vec![second, first], &ranks);
        assert_eq!(sorted.swaps(), &[first, second]);
        assert_eq!(sort_swaps(sorted.swaps().to_vec(), &ranks), sorted);
    }

    #[test]
    fn singleton_bisection_pairs_the_two_elements() {
        let inst = uniform(&[(3, 1), (8, 0)], 1);
        let minor = inst.full_minor();
        let swaps = ssg(&inst, &minor, &[ElementId(0)], &[ElementId(1)]).unwrap();
        assert_eq!(swaps, vec![Swap::new(&inst, ElementId(0), ElementId(1))]);
        assert_eq!(swaps[0].cost, 5);
    }

    #[test]
    fn ssg_rejects_mismatched_sides() {
        let inst = uniform(&[(3, 1), (8, 0), (1, 0)], 1);
        let minor = inst.full_minor();
        assert!(matches!(
            ssg(&inst, &minor, &[ElementId(0)], &[ElementId(1), ElementId(2)]),
            Err(Error::Invariant(_))
        ));
    }

    #[test]
    fn all_green_is_a_single_point() {
        let inst = uniform(&[(3, 0), (1, 0), (2, 0)], 2);
        let res = run_esa(&inst).unwrap();
        assert_eq!(res.front.outcomes(), vec![OutcomeVector::new(3, 0)]);
        assert!(res.swaps.is_empty());
    }

    #[test]
    fn all_red_is_a_single_point() {
        let inst = uniform(&[(3, 1), (1, 1), (2, 1)], 2);
        let res = run_esa(&inst).unwrap();
        assert_eq!(res.front.outcomes(), vec![OutcomeVector::new(3, 2)]);
        assert!(res.swaps.is_empty());
    }

    #[test]
    fn uniform_front_by_hand() {
        // k = 2: B_j = {0, 1} (c = 2, b = 2); greens cost 3 and 6.
        let inst = uniform(&[(1, 1), (1, 1), (3, 0), (6, 0)], 2);
        let res = run_esa(&inst).unwrap();
        assert_eq!(
            res.front.outcomes(),
            vec![
                OutcomeVector::new(2, 2),
                OutcomeVector::new(4, 1),
                OutcomeVector::new(9, 0)
            ]
        );
        assert_eq!(res.swaps.costs(), vec![2, 5]);
        assert!(res.front.slopes_non_decreasing());
    }

    #[test]
    fn non_binary_instances_are_rejected() {
        let u = UniformMatroid::new(2, 1).unwrap();
        let inst = BicriteriaInstance::with_beta(
            u,
            vec![CostPair::new(1, 2), CostPair::new(1, 0)],
            Sense::Minimize,
            2,
        )
        .unwrap();
        assert_eq!(run_esa(&inst).unwrap_err(), Error::NotBinary(2));
    }
}
