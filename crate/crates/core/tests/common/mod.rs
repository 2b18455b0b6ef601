#![allow(dead_code)]

use mlsub_core::{MultiLayerGraph, SimpleGraph};
use proptest::prelude::*;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

pub fn random_multi<R: Rng>(rng: &mut R, n: usize, t: usize, p: f64) -> MultiLayerGraph {
    MultiLayerGraph::new(n, (0..t).map(|_| random_graph(rng, n, p)).collect()).unwrap()
}

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn multi_strategy(max_n: usize, max_t: usize) -> impl Strategy<Value = MultiLayerGraph> {
    (0..=max_n, 1..=max_t).prop_flat_map(|(n, t)| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), pairs), t).prop_map(
            move |layers| {
                MultiLayerGraph::new(n, layers.iter().map(|bits| from_bits(n, bits)).collect())
                    .unwrap()
            },
        )
    })
}

fn from_bits(n: usize, bits: &[bool]) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// All `m`-subsets of `0..n` as bitmasks.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}
