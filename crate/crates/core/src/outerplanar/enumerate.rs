//! Exhaustive enumeration of connected outerplanar graphs up to isomorphism.
//!
//! Every outerplanar graph on `n >= 3` vertices is a spanning subgraph of a
//! triangulated convex `n`-gon, so the union over all triangulations of all
//! their edge subsets is exactly the family of non-crossing graphs on `n`
//! points in convex position. We enumerate that family directly (each
//! labelled graph once instead of once per containing triangulation), keep
//! the connected ones and deduplicate by canonical code.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, canonical_ordering, Graph};

pub const ENUMERATION_RANGE: RangeInclusive<usize> = 3..=10;

fn chords(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Edge masks (over [`chords`]) of every non-crossing graph on the convex
/// `n`-gon.
pub(crate) fn noncrossing_masks(n: usize) -> Vec<u64> {
    let pairs = chords(n);
    assert!(pairs.len() <= 64);
    let conflict: Vec<u64> = pairs
        .iter()
        .map(|&e| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(_, &f)| crosses(e, f))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut out = Vec::new();
    // (next pair index, chosen mask, blocked mask)
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((t, chosen, blocked)) = stack.pop() {
        if t == pairs.len() {
            out.push(chosen);
            continue;
        }
        stack.push((t + 1, chosen, blocked));
        if blocked >> t & 1 == 0 {
            stack.push((t + 1, chosen | 1 << t, blocked | conflict[t]));
        }
    }
    out
}

fn mask_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("distinct pairs")
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u16; 16];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full: u16 = ((1u32 << n) - 1) as u16;
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == full
}

/// One representative per isomorphism class of connected outerplanar graphs
/// on `n` vertices, `3 <= n <= 10`.
///
/// Representatives are relabelled into canonical order and the list is
/// sorted by canonical code, so the output is identical run to run.
pub fn enumerate_connected_outerplanar(n: usize) -> Result<Vec<Graph>> {
    if !ENUMERATION_RANGE.contains(&n) {
        return Err(Error::capability(format!(
            "enumeration supports {}..={} vertices, got {n}",
            ENUMERATION_RANGE.start(),
            ENUMERATION_RANGE.end()
        )));
    }
    let pairs = chords(n);
    let mut coded: Vec<(Vec<u8>, u64)> = noncrossing_masks(n)
        .into_par_iter()
        .filter(|&mask| mask_connected(n, &pairs, mask))
        .map(|mask| {
            let code = canonical_code(&mask_graph(n, &pairs, mask)).expect("n <= 16");
            (code, mask)
        })
        .collect();
    coded.par_sort_unstable();
    coded.dedup_by(|a, b| a.0 == b.0);
    Ok(coded
        .into_par_iter()
        .map(|(_, mask)| {
            let g = mask_graph(n, &pairs, mask);
            let order = canonical_ordering(&g).expect("n <= 16");
            let mut perm = vec![0; n];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            g.permuted(&perm).expect("canonical order is a permutation")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{has_minor, Pattern};
    use std::collections::HashSet;

    /// Brute force over all labelled graphs, filtering by the forbidden-minor
    /// characterisation.
    fn brute_count(n: usize) -> usize {
        let pairs = chords(n);
        let mut codes = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            if !mask_connected(n, &pairs, mask) {
                continue;
            }
            let g = mask_graph(n, &pairs, mask);
            if has_minor(&g, Pattern::K4).unwrap() || has_minor(&g, Pattern::K23).unwrap() {
                continue;
            }
            codes.insert(canonical_code(&g).unwrap());
        }
        codes.len()
    }

    #[test]
    fn three_vertices() {
        let graphs = enumerate_connected_outerplanar(3).unwrap();
        assert_eq!(graphs.len(), 2);
        let mut edge_counts: Vec<usize> = graphs.iter().map(Graph::m).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![2, 3]);
    }

    #[test]
    fn four_vertices_are_the_five_named_graphs() {
        let graphs = enumerate_connected_outerplanar(4).unwrap();
        let codes: HashSet<_> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        let named = [
            Graph::path(4),
            Graph::star(3),
            Graph::cycle(4),
            Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(), // paw
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(), // diamond
        ];
        assert_eq!(graphs.len(), named.len());
        for g in &named {
            assert!(codes.contains(&canonical_code(g).unwrap()));
        }
        assert!(!codes.contains(&canonical_code(&Graph::complete(4)).unwrap()));
    }

    #[test]
    fn counts_match_minor_filter_brute_force() {
        for n in 3..=6 {
            assert_eq!(enumerate_connected_outerplanar(n).unwrap().len(), brute_count(n), "n={n}");
        }
    }

    #[test]
    fn noncrossing_counts_match_brute_force() {
        for n in 3..=6 {
            let pairs = chords(n);
            let brute = (0u64..1 << pairs.len())
                .filter(|&mask| {
                    let chosen: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                    chosen.iter().all(|&e| chosen.iter().all(|&f| !crosses(e, f)))
                })
                .count();
            assert_eq!(noncrossing_masks(n).len(), brute);
        }
    }

    #[test]
    fn edge_bound_and_connectivity() {
        for n in 3..=8 {
            for g in enumerate_connected_outerplanar(n).unwrap() {
                assert!(g.m() <= 2 * n - 3);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn out_of_range_is_capability_error() {
        assert!(enumerate_connected_outerplanar(2).unwrap_err().is_capability());
        assert!(enumerate_connected_outerplanar(11).unwrap_err().is_capability());
    }
}
