//! Deterministic graph families and seeded random outerplanar generators.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`; a seed together
//! with the generator parameters fixes the output bit for bit on a given
//! build.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GeneratorSeed(pub u64);

impl GeneratorSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for GeneratorSeed {
    fn from(seed: u64) -> Self {
        GeneratorSeed(seed)
    }
}

/// Path `0, 1, ..., n-1` plus every edge between vertices at distance two.
pub fn gen_path_power(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("path power needs n >= 3, got {n}")));
    }
    let edges = (0..n - 1)
        .map(|i| (i, i + 1))
        .chain((0..n - 2).map(|i| (i, i + 2)));
    Graph::from_edges(n, edges)
}

/// Outer cycle of the path power: every other vertex going out, the rest
/// coming back.
pub fn path_power_outer_cycle(n: usize) -> Vec<usize> {
    (0..n).step_by(2).chain((1..n).step_by(2).rev()).collect()
}

/// Vertex roles in the planar gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub apex: usize,
    pub branches: Vec<usize>,
    /// `leaves[i]` are the `q` private leaves of `branches[i]`.
    pub leaves: Vec<Vec<usize>>,
    pub collector: usize,
}

impl GadgetLayout {
    /// Apex is `0`, branch `i` is `1 + i`, leaf `(i, j)` is
    /// `1 + p + i*q + j`, and the collector is last.
    pub fn new(p: usize, q: usize) -> Self {
        GadgetLayout {
            apex: 0,
            branches: (1..=p).collect(),
            leaves: (0..p)
                .map(|i| (0..q).map(|j| 1 + p + i * q + j).collect())
                .collect(),
            collector: 1 + p + p * q,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.collector + 1
    }
}

/// Planar graph with domination number two but `p` vertices of degree
/// `q + 1`: an apex joined to `p` branch vertices, each branch vertex joined
/// to its own `q` leaves, and one collector joined to every leaf.
pub fn gen_planar_gadget(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::input(format!("gadget needs p, q >= 1, got p={p}, q={q}")));
    }
    let layout = GadgetLayout::new(p, q);
    let mut edges = Vec::with_capacity(p + 2 * p * q);
    for (i, &b) in layout.branches.iter().enumerate() {
        edges.push((layout.apex, b));
        for &c in &layout.leaves[i] {
            edges.push((b, c));
            edges.push((c, layout.collector));
        }
    }
    Graph::from_edges(layout.vertex_count(), edges)
}

/// Uniform random Dyck word with `k` pairs (`true` = open), via the cycle
/// lemma: a uniform arrangement of `k` opens and `k + 1` closes has exactly
/// one rotation whose proper prefixes are all non-negative.
fn random_dyck_word(k: usize, rng: &mut ChaCha8Rng) -> Vec<bool> {
    let mut steps: Vec<bool> = std::iter::repeat_n(true, k)
        .chain(std::iter::repeat_n(false, k + 1))
        .collect();
    steps.shuffle(rng);
    let mut sum = 0i64;
    let mut min = 0i64;
    let mut at = 0;
    for (i, &up) in steps.iter().enumerate() {
        sum += if up { 1 } else { -1 };
        if sum < min {
            min = sum;
            at = i + 1;
        }
    }
    steps.rotate_left(at);
    steps.pop();
    steps
}

/// Polygon triangulation encoded by a Dyck word: the word `( A ) B` on the
/// polygon `i..=j` places the apex of the triangle on base `i-j` at
/// `i + |A|/2 + 1`, then recurses on both sides.
fn triangulation_edges(n: usize, word: &[bool]) -> Vec<(usize, usize)> {
    let mut partner = vec![0; word.len()];
    let mut open = Vec::new();
    for (i, &up) in word.iter().enumerate() {
        if up {
            open.push(i);
        } else {
            let o = open.pop().expect("balanced word");
            partner[o] = i;
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    // (word start, word end, polygon start, polygon end)
    let mut stack = vec![(0, word.len(), 0, n - 1)];
    while let Some((lo, hi, i, j)) = stack.pop() {
        if lo == hi {
            continue;
        }
        let close = partner[lo];
        let left = (close - lo - 1) / 2;
        let apex = i + left + 1;
        edges.push((i, apex));
        edges.push((apex, j));
        stack.push((lo + 1, close, i, apex));
        stack.push((close + 1, hi, apex, j));
    }
    edges
}

/// Uniformly random triangulation of the convex `n`-gon on `0..n` in
/// circular order: the polygon cycle plus `n - 3` non-crossing chords.
pub fn gen_random_maximal_outerplanar(n: usize, seed: GeneratorSeed) -> Result<Graph> {
    let mut rng = seed.rng();
    maximal_with(n, &mut rng)
}

fn maximal_with(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("maximal outerplanar graph needs n >= 3, got {n}")));
    }
    let word = random_dyck_word(n - 2, rng);
    Graph::from_edges_dedup(n, triangulation_edges(n, &word))
}

/// Random triangulation with each edge then kept independently with
/// probability `keep_prob`. `keep_prob = 1` reproduces
/// [`gen_random_maximal_outerplanar`] for the same seed.
pub fn gen_random_outerplanar(n: usize, keep_prob: f64, seed: GeneratorSeed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&keep_prob) {
        return Err(Error::input(format!("keep probability must lie in [0, 1], got {keep_prob}")));
    }
    let mut rng = seed.rng();
    let full = maximal_with(n, &mut rng)?;
    let kept: Vec<_> = full.edges().filter(|_| rng.gen_bool(keep_prob)).collect();
    Graph::from_edges(n, kept)
}
