//! Fixed inputs shared by the benchmarks.

use outerdom::outerplanar::{gen_path_power, gen_random_outerplanar, GeneratorSeed};
use outerdom::Graph;

pub fn path_power(n: usize) -> Graph {
    gen_path_power(n).expect("n >= 3")
}

/// `count` random outerplanar graphs on `n` vertices, seeds `0..count`.
pub fn random_corpus(n: usize, keep_prob: f64, count: u64) -> Vec<Graph> {
    (0..count)
        .map(|s| gen_random_outerplanar(n, keep_prob, GeneratorSeed(s)).expect("valid parameters"))
        .collect()
}
