//! Canonical codes for small graphs.
//!
//! The code is the lexicographically smallest upper-triangle adjacency
//! string over all vertex orderings. Orderings are explored by
//! individualisation and colour refinement; because refinement only looks at
//! colour classes, every explored leaf is reachable from every relabelling of
//! the input, and the minimum over leaves is an isomorphism invariant.
//! Branches on twin vertices (equal neighbourhoods apart from each other) are
//! skipped: swapping twins is an automorphism, so their subtrees yield the
//! same leaf strings.

use super::Graph;
use crate::error::{Error, Result};

pub const CANON_MAX_VERTICES: usize = 16;

type Partition = Vec<Vec<usize>>;

struct Canon {
    n: usize,
    adj: Vec<u32>,
    best: Option<(u128, Vec<usize>)>,
}

impl Canon {
    fn refine(&self, cells: &mut Partition) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c;
                }
            }
            let k = cells.len();
            let mut next: Partition = Vec::with_capacity(k);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u8; k];
                        let mut rest = self.adj[v];
                        while rest != 0 {
                            let w = rest.trailing_zeros() as usize;
                            sig[cell_of[w]] += 1;
                            rest &= rest - 1;
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let before = next.len();
                for (i, (sig, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != *sig {
                        next.push(Vec::new());
                    }
                    next.last_mut().unwrap().push(*v);
                }
                split |= next.len() - before > 1;
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }

    fn leaf_code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code <<= 1;
                code |= ((self.adj[order[i]] >> order[j]) & 1) as u128;
            }
        }
        code
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (self.adj[u] & !(1 << v)) == (self.adj[v] & !(1 << u))
    }

    fn search(&mut self, mut cells: Partition) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.leaf_code(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.search(child);
        }
    }
}

fn run(g: &Graph) -> Result<(u128, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::capability(format!(
            "canonical codes support n <= {CANON_MAX_VERTICES}, got {n}"
        )));
    }
    let adj = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect();
    let mut canon = Canon { n, adj, best: None };
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    canon.search(vec![(0..n).collect()]);
    Ok(canon.best.expect("search visits at least one leaf"))
}

/// Canonical code: the vertex count followed by the minimal adjacency
/// string packed big-endian into 16 bytes. Equal codes iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    let (code, _) = run(g)?;
    let mut out = Vec::with_capacity(17);
    out.push(g.n() as u8);
    out.extend_from_slice(&code.to_be_bytes());
    Ok(out)
}

/// Vertex order realising the canonical code: `order[i]` is the vertex
/// placed at position `i`.
pub fn canonical_ordering(g: &Graph) -> Result<Vec<usize>> {
    run(g).map(|(_, order)| order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::{HashMap, HashSet};

    /// Independent oracle: minimum adjacency string over all n! orderings.
    fn brute_code(g: &Graph) -> u128 {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut u128) {
            let n = g.n();
            if order.len() == n {
                let mut code = 0u128;
                for i in 0..n {
                    for j in i + 1..n {
                        code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
                    }
                }
                *best = (*best).min(code);
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    order.push(v);
                    rec(g, order, used, best);
                    order.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = u128::MAX;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_ne!(canonical_code(&a).unwrap(), canonical_code(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let codes: HashSet<_> = all_graphs(4).map(|g| canonical_code(&g).unwrap()).collect();
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn classes_match_brute_force_up_to_six_vertices() {
        // Known counts of unlabelled graphs: 4 -> 11, 5 -> 34, 6 -> 156.
        for (n, expected) in [(4, 11), (5, 34), (6, 156)] {
            let mut fast_to_brute: HashMap<Vec<u8>, u128> = HashMap::new();
            let mut brute_seen = HashSet::new();
            for g in all_graphs(n) {
                let fast = canonical_code(&g).unwrap();
                let brute = brute_code(&g);
                brute_seen.insert(brute);
                let prev = fast_to_brute.entry(fast).or_insert(brute);
                assert_eq!(*prev, brute);
            }
            assert_eq!(fast_to_brute.len(), expected);
            assert_eq!(brute_seen.len(), expected);
        }
    }

    #[test]
    fn invariant_under_random_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=8);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm).unwrap();
            assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        }
    }

    #[test]
    fn ordering_realises_code() {
        let g = Graph::from_edges(5, [(0, 3), (3, 4), (4, 1), (1, 2)]).unwrap();
        let order = canonical_ordering(&g).unwrap();
        let mut perm = vec![0; 5];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let h = g.permuted(&perm).unwrap();
        let mut identity_code = 0u128;
        for i in 0..5 {
            for j in i + 1..5 {
                identity_code = (identity_code << 1) | h.has_edge(i, j) as u128;
            }
        }
        assert_eq!(identity_code, brute_code(&g));
        assert_eq!(canonical_code(&g).unwrap()[1..], identity_code.to_be_bytes());
    }

    #[test]
    fn symmetric_sixteen_vertex_graphs_finish() {
        let matching = Graph::from_edges(16, (0..8).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let empty = Graph::empty(16);
        assert_ne!(canonical_code(&matching).unwrap(), canonical_code(&empty).unwrap());
        let reversed: Vec<usize> = (0..16).rev().collect();
        let cycle = Graph::cycle(16);
        assert_eq!(
            canonical_code(&cycle).unwrap(),
            canonical_code(&cycle.permuted(&reversed).unwrap()).unwrap()
        );
    }

    #[test]
    fn rejects_seventeen_vertices() {
        assert!(canonical_code(&Graph::empty(17)).unwrap_err().is_capability());
    }
}
