//! Seeded random instance generators.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::impls::{GraphicMatroid, UniformMatroid};
use crate::instance::{BicriteriaInstance, CostPair, Sense};

/// Upper end of the raw `c` range for random graphs.
pub const DEFAULT_C_MAX: u64 = 50_000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected simple graph with `n` vertices and `m` edges: a random
/// spanning tree plus `m - n + 1` further distinct edges, in random order.
/// `c` is drawn from `1..=c_max` and shifted so the least value is 0; `b` is
/// a fair coin.
pub fn random_graphic<R: Rng>(
    n: usize,
    m: usize,
    c_max: u64,
    rng: &mut R,
) -> Result<BicriteriaInstance<GraphicMatroid>> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need at least 2 vertices, got {n}")));
    }
    let max_edges = n * (n - 1) / 2;
    if m < n - 1 || m > max_edges {
        return Err(Error::InvalidParameters(format!(
            "a connected simple graph on {n} vertices has {}..={max_edges} edges, got {m}",
            n - 1
        )));
    }
    if c_max == 0 {
        return Err(Error::InvalidParameters("c_max must be positive".into()));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut present = vec![false; max_edges];
    let pair_index = |u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        // row-major index into the strict upper triangle
        u * (2 * n - u - 1) / 2 + (v - u - 1)
    };
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let (u, v) = (perm[i], perm[rng.gen_range(0..i)]);
        present[pair_index(u, v)] = true;
        edges.push((u.min(v), u.max(v)));
    }
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[pair_index(u, v)])
        .collect();
    let extra = m - (n - 1);
    for i in index::sample(rng, free.len(), extra) {
        edges.push(free[i]);
    }
    edges.shuffle(rng);

    let raw: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=c_max)).collect();
    let low = raw.iter().copied().min().unwrap_or(0);
    let costs = raw
        .into_iter()
        .map(|c| CostPair::new(c - low, rng.gen_range(0..=1)))
        .collect();
    let g = GraphicMatroid::new(n, edges)?;
    BicriteriaInstance::new(g, costs, Sense::Minimize)
}

/// Knapsack-style instance over `U_{k,n}` in maximization form: `c` drawn
/// from `0..=10n` and sorted non-decreasing, `b` drawn from `0..=beta` and
/// sorted non-increasing.
pub fn random_uniform<R: Rng>(
    n: usize,
    k: usize,
    beta: u32,
    rng: &mut R,
) -> Result<BicriteriaInstance<UniformMatroid>> {
    let u = UniformMatroid::new(n, k)?;
    let mut c: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=10 * n as u64)).collect();
    let mut b: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=beta)).collect();
    c.sort_unstable();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let costs = c.into_iter().zip(b).map(|(c, b)| CostPair::new(c, b)).collect();
    BicriteriaInstance::with_beta(u, costs, Sense::Maximize, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::ElementId;

    #[test]
    fn graphic_is_connected_and_simple() {
        let mut rng = rng_from_seed(7);
        for (n, m) in [(2, 1), (5, 4), (6, 15), (10, 20)] {
            let inst = random_graphic(n, m, 100, &mut rng).unwrap();
            let g = inst.matroid();
            assert!(g.is_connected());
            assert_eq!(g.n_edges(), m);
            let mut seen: Vec<_> = g.edges().to_vec();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), m);
            assert!(inst.costs().iter().any(|cp| cp.c == 0));
            assert!(inst.costs().iter().all(|cp| cp.c < 100 && cp.b <= 1));
        }
    }

    #[test]
    fn graphic_rejects_impossible_sizes() {
        let mut rng = rng_from_seed(1);
        assert!(random_graphic(4, 2, 10, &mut rng).is_err());
        assert!(random_graphic(4, 7, 10, &mut rng).is_err());
        assert!(random_graphic(1, 0, 10, &mut rng).is_err());
    }

    #[test]
    fn same_seed_same_instance() {
        let a = random_graphic(8, 12, 50, &mut rng_from_seed(3)).unwrap();
        let b = random_graphic(8, 12, 50, &mut rng_from_seed(3)).unwrap();
        assert_eq!(a.matroid(), b.matroid());
        assert_eq!(a.costs(), b.costs());
    }

    #[test]
    fn uniform_costs_are_sorted() {
        let inst = random_uniform(12, 6, 3, &mut rng_from_seed(5)).unwrap();
        let orig = inst.original_costs();
        assert!(orig.windows(2).all(|w| w[0].c <= w[1].c && w[0].b >= w[1].b));
        assert!(orig.iter().all(|cp| cp.c <= 120 && cp.b <= 3));
        assert_eq!(inst.rank(), 6);
        assert_eq!(inst.sense(), Sense::Maximize);
        assert!(inst.c(ElementId(0)) >= inst.c(ElementId(11)));
    }
}
