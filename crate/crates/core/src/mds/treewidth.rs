//! Width-two dynamic program over a polygon triangulation.
//!
//! Vertices are placed on a circle in embedding order. Adding the polygon
//! sides and then triangulating every face gives a maximal outerplanar
//! supergraph whose triangles form a tree decomposition with bags of size
//! three. Only real edges take part in domination; the added ones merely
//! shape the decomposition.
//!
//! A region `(i, j)` with `i < j` is the part of the polygon cut off by
//! the side or chord `ij`. Its table is indexed by the membership of `i`
//! and `j` and by whether each is already dominated by a chosen vertex
//! strictly inside the region, and holds the fewest chosen interior
//! vertices such that every interior vertex is chosen or dominated.

use super::{MdsResult, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::outerplanar::{is_noncrossing_order, is_outerplanar};

const INF: u32 = u32::MAX;

const IN_LEFT: usize = 1;
const IN_RIGHT: usize = 2;
const DOM_LEFT: usize = 4;
const DOM_RIGHT: usize = 8;

#[derive(Clone, Copy)]
struct Choice {
    apex_in: bool,
    left_key: usize,
    right_key: usize,
}

struct Region {
    lo: usize,
    hi: usize,
    /// Apex position and the two child regions, absent for polygon sides.
    split: Option<(usize, usize, usize)>,
    cost: [u32; 16],
    choice: [Option<Choice>; 16],
}

/// Exact domination number of an outerplanar graph.
///
/// `embedding` is an optional cyclic vertex order with no crossing edges;
/// when absent the recognizer supplies one. Runs in linear time.
pub fn exact_mds_treewidth(g: &Graph, embedding: Option<&[usize]>) -> Result<MdsResult> {
    let order: Vec<usize> = match embedding {
        Some(order) => {
            if !is_noncrossing_order(g, order) {
                return Err(Error::input(
                    "embedding is not a crossing-free cyclic order of the vertices",
                ));
            }
            order.to_vec()
        }
        None => is_outerplanar(g)
            .embedding
            .ok_or_else(|| Error::input("tree-decomposition solver needs an outerplanar graph"))?,
    };
    let n = g.n();
    let members: Vec<usize> = match n {
        0 => Vec::new(),
        1 => vec![0],
        2 if g.has_edge(0, 1) => vec![0],
        2 => vec![0, 1],
        _ => solve(g, &order),
    };
    Ok(MdsResult {
        size: members.len(),
        witness: VertexSet::from_members(n, members).expect("members in range"),
        method: Method::TreewidthDp,
    })
}

fn solve(g: &Graph, order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let real = |a: usize, b: usize| g.has_edge(order[a], order[b]);
    // Real neighbours of each position, by position.
    let near: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut ps: Vec<usize> = g.neighbors(order[i]).iter().map(|&w| pos[w]).collect();
            ps.sort_unstable();
            ps
        })
        .collect();

    // Regions are created parent-first, so reverse creation order is a
    // valid bottom-up order.
    let mut regions: Vec<Region> = Vec::with_capacity(2 * n);
    let mut pending = vec![(0usize, n - 1, usize::MAX, false)];
    while let Some((lo, hi, parent, is_right)) = pending.pop() {
        let id = regions.len();
        regions.push(Region {
            lo,
            hi,
            split: None,
            cost: [INF; 16],
            choice: [None; 16],
        });
        if parent != usize::MAX {
            let (_, l, r) = regions[parent].split.as_mut().expect("parent is split");
            if is_right {
                *r = id;
            } else {
                *l = id;
            }
        }
        if hi - lo >= 2 {
            // The largest neighbour of `lo` inside the region closes a face
            // with `lo` and `hi`; `lo + 1` is always a polygon neighbour.
            let upper = near[lo].partition_point(|&p| p < hi);
            let apex = near[lo][..upper]
                .last()
                .copied()
                .filter(|&p| p > lo)
                .unwrap_or(lo + 1);
            regions[id].split = Some((apex, usize::MAX, usize::MAX));
            pending.push((apex, hi, id, true));
            pending.push((lo, apex, id, false));
        }
    }

    for id in (0..regions.len()).rev() {
        let (lo, hi) = (regions[id].lo, regions[id].hi);
        let Some((apex, l, r)) = regions[id].split else {
            for key in 0..4 {
                regions[id].cost[key] = 0;
            }
            continue;
        };
        let (left_edge, right_edge) = (real(lo, apex), real(apex, hi));
        let mut cost = [INF; 16];
        let mut choice = [None; 16];
        for lk in 0..16 {
            let lc = regions[l].cost[lk];
            if lc == INF {
                continue;
            }
            for rk in 0..16 {
                let rc = regions[r].cost[rk];
                if rc == INF {
                    continue;
                }
                // The apex is the right end of the left child and the left
                // end of the right child; both must agree on it.
                let apex_in = lk & IN_RIGHT != 0;
                if apex_in != (rk & IN_LEFT != 0) {
                    continue;
                }
                let lo_in = lk & IN_LEFT != 0;
                let hi_in = rk & IN_RIGHT != 0;
                let apex_dom = apex_in
                    || lk & DOM_RIGHT != 0
                    || rk & DOM_LEFT != 0
                    || (left_edge && lo_in)
                    || (right_edge && hi_in);
                if !apex_dom {
                    continue;
                }
                let lo_dom = lk & DOM_LEFT != 0 || (apex_in && left_edge);
                let hi_dom = rk & DOM_RIGHT != 0 || (apex_in && right_edge);
                let key = (lo_in as usize) * IN_LEFT
                    + (hi_in as usize) * IN_RIGHT
                    + (lo_dom as usize) * DOM_LEFT
                    + (hi_dom as usize) * DOM_RIGHT;
                let total = lc + rc + apex_in as u32;
                if total < cost[key] {
                    cost[key] = total;
                    choice[key] = Some(Choice {
                        apex_in,
                        left_key: lk,
                        right_key: rk,
                    });
                }
            }
        }
        regions[id].cost = cost;
        regions[id].choice = choice;
    }

    let closing = real(0, n - 1);
    let mut best = (INF, 0);
    for key in 0..16 {
        let c = regions[0].cost[key];
        if c == INF {
            continue;
        }
        let lo_in = key & IN_LEFT != 0;
        let hi_in = key & IN_RIGHT != 0;
        let lo_ok = lo_in || key & DOM_LEFT != 0 || (closing && hi_in);
        let hi_ok = hi_in || key & DOM_RIGHT != 0 || (closing && lo_in);
        if lo_ok && hi_ok {
            let total = c + lo_in as u32 + hi_in as u32;
            if total < best.0 {
                best = (total, key);
            }
        }
    }

    let mut chosen = Vec::new();
    if best.1 & IN_LEFT != 0 {
        chosen.push(order[0]);
    }
    if best.1 & IN_RIGHT != 0 {
        chosen.push(order[n - 1]);
    }
    let mut stack = vec![(0usize, best.1)];
    while let Some((id, key)) = stack.pop() {
        let Some((apex, l, r)) = regions[id].split else {
            continue;
        };
        let pick = regions[id].choice[key].expect("reachable key has a choice");
        if pick.apex_in {
            chosen.push(order[apex]);
        }
        stack.push((l, pick.left_key));
        stack.push((r, pick.right_key));
    }
    chosen.sort_unstable();
    debug_assert_eq!(chosen.len() as u32, best.0);
    chosen
}
