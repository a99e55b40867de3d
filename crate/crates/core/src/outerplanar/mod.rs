//! Outerplanarity recognition, generators and exhaustive enumeration.

mod enumerate;
mod generators;

pub use enumerate::{enumerate_connected_outerplanar, ENUMERATION_RANGE};
pub use generators::{
    gen_path_power, gen_planar_gadget, path_power_outer_cycle, gen_random_maximal_outerplanar, gen_random_outerplanar,
    GadgetLayout, GeneratorSeed,
};

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::graph::{biconnected_components, find_minor, Graph, MinorModel, Pattern, MINOR_MAX_VERTICES};

/// Recognition result.
///
/// `embedding` is a cyclic vertex order in which all edges can be drawn as
/// non-crossing chords of a circle; it is present exactly when the verdict
/// is positive. `forbidden` carries branch sets of a `K_4` or `K_{2,3}`
/// minor when the verdict is negative and the offending block is small
/// enough for the exhaustive minor search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterplanarWitness {
    pub verdict: bool,
    pub embedding: Option<Vec<usize>>,
    pub forbidden: Option<MinorModel>,
}

/// Whether `order` is a permutation of the vertices under which no two
/// edges interleave around the circle.
pub fn is_noncrossing_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    let mut intervals: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    // Chords are pairwise non-crossing iff their position intervals are
    // laminar (nested or internally disjoint).
    intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut open: Vec<(usize, usize)> = Vec::new();
    for (a, b) in intervals {
        while open.last().is_some_and(|&(_, end)| end <= a) {
            open.pop();
        }
        if let Some(&(start, end)) = open.last() {
            if start < a && end < b {
                return false;
            }
        }
        open.push((a, b));
    }
    true
}

/// Recovers the outer Hamiltonian cycle of a 2-connected block by peeling
/// degree-2 vertices (adding the chord between their neighbours) down to a
/// triangle and re-inserting them in reverse. `None` means the block is not
/// outerplanar.
fn block_cycle(g: &Graph, block: &[usize]) -> Option<Vec<usize>> {
    let k = block.len();
    match k {
        1 | 2 => return Some(block.to_vec()),
        _ => {}
    }
    if g.induced(block).m() > 2 * k - 3 {
        return None;
    }
    let local = g.induced(block);
    let mut adj: Vec<HashSet<usize>> = (0..k).map(|v| local.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; k];
    let mut remaining = k;
    let mut queue: VecDeque<usize> = (0..k).filter(|&v| adj[v].len() == 2).collect();
    let mut peeled: Vec<(usize, usize, usize)> = Vec::with_capacity(k);
    while remaining > 3 {
        let v = queue.pop_front()?;
        if !alive[v] || adj[v].len() != 2 {
            continue;
        }
        let mut it = adj[v].iter().copied();
        let (a, b) = (it.next()?, it.next()?);
        alive[v] = false;
        remaining -= 1;
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[a].insert(b);
        adj[b].insert(a);
        for x in [a, b] {
            if adj[x].len() == 2 {
                queue.push_back(x);
            }
        }
        peeled.push((v, a, b));
    }
    let rest: Vec<usize> = (0..k).filter(|&v| alive[v]).collect();
    if rest.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let mut next = vec![usize::MAX; k];
    let mut prev = vec![usize::MAX; k];
    for i in 0..3 {
        next[rest[i]] = rest[(i + 1) % 3];
        prev[rest[(i + 1) % 3]] = rest[i];
    }
    for &(v, a, b) in peeled.iter().rev() {
        let (left, right) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return None;
        };
        next[left] = v;
        prev[v] = left;
        next[v] = right;
        prev[right] = v;
    }
    let mut cycle = Vec::with_capacity(k);
    let mut cur = 0;
    for _ in 0..k {
        cycle.push(block[cur]);
        cur = next[cur];
    }
    (cur == 0).then_some(cycle)
}

/// Outerplanarity test with an embedding or a forbidden-minor certificate.
///
/// Disconnected inputs are handled per component; the embedding lists the
/// components by smallest vertex, each starting at its smallest vertex.
pub fn is_outerplanar(g: &Graph) -> OuterplanarWitness {
    let n = g.n();
    let blocks = biconnected_components(g);
    let mut cycles = Vec::with_capacity(blocks.blocks.len());
    for block in &blocks.blocks {
        match block_cycle(g, block) {
            Some(c) => cycles.push(c),
            None => return rejected(g, Some(block)),
        }
    }

    let blocks_of = blocks.blocks_of(n);
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    enum Step {
        Visit(usize, Option<usize>),
        Emit(usize, usize),
    }
    for root in 0..n {
        if placed[root] {
            continue;
        }
        let mut stack = vec![Step::Emit(root, usize::MAX)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Emit(v, via) => {
                    order.push(v);
                    placed[v] = true;
                    stack.push(Step::Visit(v, (via != usize::MAX).then_some(via)));
                }
                Step::Visit(v, parent) => {
                    for &b in blocks_of[v].iter().rev() {
                        if Some(b) == parent {
                            continue;
                        }
                        let cycle = &cycles[b];
                        let at = cycle.iter().position(|&x| x == v).expect("vertex in its block");
                        let len = cycle.len();
                        for i in (1..len).rev() {
                            stack.push(Step::Emit(cycle[(at + i) % len], b));
                        }
                    }
                }
            }
        }
    }

    if order.len() != n || !is_noncrossing_order(g, &order) {
        return rejected(g, None);
    }
    OuterplanarWitness {
        verdict: true,
        embedding: Some(order),
        forbidden: None,
    }
}

fn rejected(g: &Graph, block: Option<&Vec<usize>>) -> OuterplanarWitness {
    let forbidden = match block {
        Some(b) if b.len() <= MINOR_MAX_VERTICES => {
            let local = g.induced(b);
            certificate(&local).map(|model| MinorModel {
                pattern: model.pattern,
                branch_sets: model
                    .branch_sets
                    .into_iter()
                    .map(|set| set.into_iter().map(|v| b[v]).collect())
                    .collect(),
            })
        }
        None if g.n() <= MINOR_MAX_VERTICES => certificate(g),
        _ => None,
    };
    OuterplanarWitness {
        verdict: false,
        embedding: None,
        forbidden,
    }
}

fn certificate(g: &Graph) -> Option<MinorModel> {
    [Pattern::K4, Pattern::K23]
        .into_iter()
        .find_map(|p| find_minor(g, p).ok().flatten())
}
