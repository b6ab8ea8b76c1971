//! Seeded benchmark inputs.

use matroid_biopt::generate::{random_graphic, random_uniform, rng_from_seed, DEFAULT_C_MAX};
use matroid_biopt::{BicriteriaInstance, GraphicMatroid, UniformMatroid};

pub fn graphic(n: usize, m: usize, seed: u64) -> BicriteriaInstance<GraphicMatroid> {
    random_graphic(n, m, DEFAULT_C_MAX, &mut rng_from_seed(seed)).expect("valid graph size")
}

pub fn uniform(n: usize, k: usize, seed: u64) -> BicriteriaInstance<UniformMatroid> {
    random_uniform(n, k, 1, &mut rng_from_seed(seed)).expect("valid uniform size")
}
