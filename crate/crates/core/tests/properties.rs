use matroid_biopt::generate::{random_graphic, rng_from_seed};
use matroid_biopt::greedy::{check_pair_properties, min_weight_basis, BasisPair};
use matroid_biopt::oracles::{
    adjacency_connected, classify_supported, complete_enumeration, count_bases, enumerate_bases,
    naive_minimal_swap_solver,
};
use matroid_biopt::{
    run_esa, Basis, BicriteriaInstance, CostPair, ElementId, GraphicMatroid, Matroid, MatroidMinor,
    PartitionMatroid, Sense, UniformMatroid,
};
use proptest::prelude::*;

fn multigraph() -> impl Strategy<Value = GraphicMatroid> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=9)
            .prop_map(move |edges| GraphicMatroid::new(n, edges).unwrap())
    })
}

fn subset(mask: u32, n: usize) -> Vec<ElementId> {
    (0..n).filter(|i| mask >> i & 1 == 1).map(ElementId).collect()
}

/// Forest test by depth-first search: every component with `k` vertices
/// may hold at most `k - 1` of the chosen edges, and no loops.
fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u == v {
            return false;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    edges.len() + components == n
}

fn all_subsets<M: Matroid>(m: &M) -> Vec<(u32, bool)> {
    let n = m.ground_size();
    (0..1u32 << n).map(|mask| (mask, m.is_independent(&subset(mask, n)))).collect()
}

fn check_axioms<M: Matroid>(m: &M) {
    let n = m.ground_size();
    let table = all_subsets(m);
    assert!(table[0].1, "empty set must be independent");
    for &(mask, ind) in &table {
        if !ind {
            continue;
        }
        for i in 0..n {
            if mask >> i & 1 == 1 {
                assert!(table[(mask & !(1 << i)) as usize].1, "subsets of independent sets");
            }
        }
        for &(other, ind2) in &table {
            if ind2 && other.count_ones() > mask.count_ones() {
                let grows = (0..n)
                    .filter(|&i| other >> i & 1 == 1 && mask >> i & 1 == 0)
                    .any(|i| table[(mask | 1 << i) as usize].1);
                assert!(grows, "augmentation fails for {mask:b} from {other:b}");
            }
        }
    }
}

fn check_strong_exchange<M: Matroid>(m: &M) {
    let bases = enumerate_bases(m);
    let minor = MatroidMinor::new(m);
    for b1 in &bases {
        for b2 in &bases {
            for e in b1.difference(b2) {
                let ok = b2.difference(b1).into_iter().any(|f| {
                    minor.is_basis(b1.exchange(e, f).elements())
                        && minor.is_basis(b2.exchange(f, e).elements())
                });
                assert!(ok, "no symmetric partner for {e}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graphic_independence_matches_dfs(g in multigraph()) {
        for (mask, ind) in all_subsets(&g) {
            let chosen: Vec<_> = subset(mask, g.n_edges()).iter().map(|&e| g.edge(e)).collect();
            prop_assert_eq!(ind, is_forest(g.n_vertices(), &chosen));
        }
    }

    #[test]
    fn graphic_axioms_and_exchange(g in multigraph()) {
        check_axioms(&g);
        check_strong_exchange(&g);
    }

    #[test]
    fn partition_axioms(sizes in prop::collection::vec(1usize..=3, 1..=3), seed in any::<u64>()) {
        let mut next = 0;
        let mut blocks = Vec::new();
        let mut bounds = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            blocks.push((next..next + s).map(ElementId).collect::<Vec<_>>());
            next += s;
            bounds.push((seed as usize >> i) % (s + 1));
        }
        let p = PartitionMatroid::new(blocks, bounds).unwrap();
        check_axioms(&p);
        check_strong_exchange(&p);
    }

    #[test]
    fn single_block_partition_is_uniform(n in 1usize..=7, k in 1usize..=7) {
        prop_assume!(k <= n);
        let u = UniformMatroid::new(n, k).unwrap();
        let p = PartitionMatroid::new(vec![(0..n).map(ElementId).collect()], vec![k]).unwrap();
        prop_assert_eq!(all_subsets(&u), all_subsets(&p));
        prop_assert_eq!(enumerate_bases(&u), enumerate_bases(&p));
        check_axioms(&u);
    }

    #[test]
    fn greedy_is_optimal(g in multigraph(), weights in prop::collection::vec(0u64..6, 9)) {
        let minor = MatroidMinor::new(&g);
        let basis = min_weight_basis(&minor, |e| weights[e.index()]);
        let weight = |b: &Basis| b.elements().iter().map(|e| weights[e.index()]).sum::<u64>();
        let best = enumerate_bases(&g).iter().map(weight).min().unwrap();
        prop_assert!(minor.is_basis(basis.elements()));
        prop_assert_eq!(weight(&basis), best);
    }

    #[test]
    fn fundamental_circuits_are_minimal(g in multigraph()) {
        let minor = MatroidMinor::new(&g);
        let Some(basis) = enumerate_bases(&g).into_iter().next() else { return Ok(()) };
        for e in (0..g.n_edges()).map(ElementId).filter(|&e| !basis.contains(e)) {
            let circuit = minor.fundamental_circuit(&basis, e).unwrap();
            prop_assert!(circuit.contains(&e));
            prop_assert!(!g.is_independent(&circuit));
            for &x in &circuit {
                let rest: Vec<_> = circuit.iter().copied().filter(|&y| y != x).collect();
                prop_assert!(g.is_independent(&rest));
            }
        }
    }

    #[test]
    fn minor_bases_match_definition(g in multigraph(), del in any::<u32>(), con in any::<u32>()) {
        let n = g.n_edges();
        let deleted = subset(del & ((1 << n) - 1), n);
        let minor = MatroidMinor::new(&g).delete(&deleted).unwrap();
        // contract a greedy-independent part of a random set
        let wanted: Vec<_> = subset(con & ((1 << n) - 1), n)
            .into_iter()
            .filter(|e| minor.contains(*e))
            .collect();
        let contracted = minor.greedy(&wanted);
        let minor = minor.contract(&contracted).unwrap();
        // rank of E - D by brute force
        let free = |mask: u32| subset(mask, n).iter().all(|e| !deleted.contains(e));
        let table = all_subsets(&g);
        let full_rank = table.iter().filter(|(m, i)| *i && free(*m)).map(|(m, _)| m.count_ones()).max().unwrap();
        let cmask: u32 = contracted.iter().map(|e| 1u32 << e.index()).sum();
        for &(mask, _) in &table {
            let expected = free(mask)
                && mask & cmask == 0
                && table[(mask | cmask) as usize].1
                && (mask | cmask).count_ones() == full_rank;
            prop_assert_eq!(minor.is_basis(&subset(mask, n)), expected, "mask {:b}", mask);
        }
        prop_assert_eq!(minor.rank(), full_rank as usize - contracted.len());
    }

    #[test]
    fn count_matches_enumeration(g in multigraph()) {
        // enumeration yields spanning forests, the count only spanning trees
        let expected = if g.is_connected() { enumerate_bases(&g).len() as u64 } else { 0 };
        prop_assert_eq!(count_bases(&g), expected.into());
    }

    #[test]
    fn solvers_agree_on_tied_graphs(seed in any::<u64>(), n in 2usize..=7, c_max in 1u64..=6) {
        let mut rng = rng_from_seed(seed);
        let m = n - 1 + (seed as usize % (n * (n - 1) / 2 + 2 - n));
        let inst = random_graphic(n, m, c_max, &mut rng).unwrap();
        let ce = complete_enumeration(&inst);
        let esa = run_esa(&inst).unwrap();
        prop_assert_eq!(esa.front.outcomes(), ce.front());
        prop_assert_eq!(esa.nonpositive_skipped, 0);
        for p in esa.front.points() {
            prop_assert_eq!(inst.outcome(p.basis.elements()), p.outcome);
        }
        let naive = naive_minimal_swap_solver(&inst).unwrap();
        prop_assert_eq!(naive.front(), ce.front());
        prop_assert!(naive.swaps.windows(2).all(|w| w[0].cost <= w[1].cost));

        let labels = classify_supported(&ce.front()).unwrap();
        prop_assert!(labels.iter().all(|l| l.is_supported()));
        prop_assert!(adjacency_connected(&ce.efficient, inst.rank()).unwrap().connected);
    }

    #[test]
    fn extreme_pair_is_lexicographically_optimal(seed in any::<u64>(), n in 2usize..=6, c_max in 1u64..=4) {
        let mut rng = rng_from_seed(seed);
        let inst = random_graphic(n, n * (n - 1) / 2, c_max, &mut rng).unwrap();
        let pair = BasisPair::compute(&inst).unwrap();
        check_pair_properties(&inst, &pair.b_j, &pair.b_u).unwrap();
        let all = enumerate_bases(inst.matroid());
        let cb = |b: &Basis| { let o = inst.outcome(b.elements()); (o.c, o.b) };
        let bc = |b: &Basis| { let o = inst.outcome(b.elements()); (o.b, o.c) };
        prop_assert_eq!(cb(&pair.b_j), all.iter().map(cb).min().unwrap());
        prop_assert_eq!(bc(&pair.b_u), all.iter().map(bc).min().unwrap());
    }

    #[test]
    fn maximization_maps_back(costs in prop::collection::vec((0u64..20, 0u32..=1), 2..=8), k in 1usize..=8) {
        prop_assume!(k <= costs.len());
        let costs: Vec<_> = costs.into_iter().map(|(c, b)| CostPair::new(c, b)).collect();
        let n = costs.len();
        let inst = BicriteriaInstance::new(UniformMatroid::new(n, k).unwrap(), costs.clone(), Sense::Maximize).unwrap();
        let esa = run_esa(&inst).unwrap();
        // brute-force maximization front
        let mut outcomes: Vec<(u64, u64)> = enumerate_bases(inst.matroid())
            .iter()
            .map(|b| b.elements().iter().fold((0, 0), |(c, s), e| (c + costs[e.index()].c, s + u64::from(costs[e.index()].b))))
            .collect();
        outcomes.sort();
        outcomes.dedup();
        let front: Vec<_> = outcomes
            .iter()
            .copied()
            .filter(|&(c, b)| !outcomes.iter().any(|&(c2, b2)| c2 >= c && b2 >= b && (c2, b2) != (c, b)))
            .collect();
        let mut got: Vec<_> = esa.front.outcomes().into_iter().map(|o| { let o = inst.to_original(o); (o.c, o.b) }).collect();
        got.sort();
        prop_assert_eq!(got, front);
    }
}
