//! Benchmark fixtures.

use mlsub_core::{MultiLayerGraph, SimpleGraph, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_layer(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).expect("valid edges")
}

pub fn random_multi(seed: u64, n: usize, t: usize, p: f64) -> MultiLayerGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layers = (0..t).map(|_| random_layer(&mut rng, n, p)).collect();
    MultiLayerGraph::new(n, layers).expect("valid layers")
}

pub fn random_weighted(seed: u64, m: usize, p: f64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(0..100)));
            }
        }
    }
    WeightedGraph::new(m, edges).expect("valid edges")
}
