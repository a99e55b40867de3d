//! Exhaustive `K_4` / `K_{2,3}` minor search over branch-set partitions.
//!
//! For a connected host graph any minor model can be grown until its branch
//! sets cover every vertex (an unused vertex adjacent to a branch set can be
//! absorbed without breaking connectivity or adjacency). Both patterns are
//! connected, so it suffices to enumerate, per connected component, the
//! partitions of the vertices into exactly `k` blocks and test whether the
//! quotient graph contains the pattern.

use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest host graph the exhaustive search accepts.
pub const MINOR_MAX_VERTICES: usize = 12;

/// The two forbidden minors of outerplanar graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    #[serde(rename = "K4")]
    K4,
    #[serde(rename = "K2,3")]
    K23,
}

impl Pattern {
    pub fn vertex_count(self) -> usize {
        match self {
            Pattern::K4 => 4,
            Pattern::K23 => 5,
        }
    }

    /// The pattern itself. For `K_{2,3}` the two-vertex side is `{0, 1}`.
    pub fn graph(self) -> Graph {
        match self {
            Pattern::K4 => Graph::complete(4),
            Pattern::K23 => Graph::complete_bipartite(2, 3),
        }
    }
}

/// Branch sets realising a pattern: `branch_sets[i]` is the preimage of
/// pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub pattern: Pattern,
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    /// Checks disjointness, connectivity of each branch set and that every
    /// pattern edge is realised by some host edge.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.pattern.vertex_count();
        if self.branch_sets.len() != k {
            return false;
        }
        let mut owner = vec![usize::MAX; g.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            for &v in set {
                if v >= g.n() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
            let Ok(vs) = VertexSet::from_members(g.n(), set.iter().copied()) else {
                return false;
            };
            if !g.is_connected_subset(&vs) {
                return false;
            }
        }
        let mut touching = vec![vec![false; k]; k];
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                touching[a][b] = true;
                touching[b][a] = true;
            }
        }
        self.pattern.graph().edges().all(|(a, b)| touching[a][b])
    }
}

/// Whether `g` has `pattern` as a minor.
pub fn has_minor(g: &Graph, pattern: Pattern) -> Result<bool> {
    find_minor(g, pattern).map(|m| m.is_some())
}

/// Finds a minor model of `pattern` in `g`, if one exists.
pub fn find_minor(g: &Graph, pattern: Pattern) -> Result<Option<MinorModel>> {
    if g.n() > MINOR_MAX_VERTICES {
        return Err(Error::capability(format!(
            "exhaustive minor search supports n <= {MINOR_MAX_VERTICES}, got {}",
            g.n()
        )));
    }
    let k = pattern.vertex_count();
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        let h = g.induced(&comp);
        // Both patterns have six edges.
        if h.m() < 6 {
            continue;
        }
        if let Some(sets) = search_component(&h, pattern) {
            let branch_sets = sets
                .into_iter()
                .map(|set| set.into_iter().map(|v| comp[v]).collect())
                .collect();
            return Ok(Some(MinorModel {
                pattern,
                branch_sets,
            }));
        }
    }
    Ok(None)
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    pattern: Pattern,
    k: usize,
    label: Vec<usize>,
}

impl PartitionSearch<'_> {
    /// Restricted-growth enumeration: vertex `v` joins an existing block or
    /// opens the next one, so every set partition is produced once.
    fn assign(&mut self, v: usize, used: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.g.n();
        if v == n {
            return if used == self.k { self.check() } else { None };
        }
        if used + (n - v) < self.k {
            return None;
        }
        let limit = (used + 1).min(self.k);
        for b in 0..limit {
            self.label[v] = b;
            let next_used = used.max(b + 1);
            if let Some(found) = self.assign(v + 1, next_used) {
                return Some(found);
            }
        }
        None
    }

    fn check(&self) -> Option<Vec<Vec<usize>>> {
        let (g, k) = (self.g, self.k);
        let mut quotient = [[false; 5]; 5];
        for (u, v) in g.edges() {
            let (a, b) = (self.label[u], self.label[v]);
            if a != b {
                quotient[a][b] = true;
                quotient[b][a] = true;
            }
        }
        let order: Vec<usize> = match self.pattern {
            Pattern::K4 => {
                let complete = (0..4).all(|a| (0..4).all(|b| a == b || quotient[a][b]));
                if !complete {
                    return None;
                }
                (0..4).collect()
            }
            Pattern::K23 => {
                let mut found = None;
                'pairs: for x in 0..5 {
                    for y in x + 1..5 {
                        if (0..5)
                            .filter(|&z| z != x && z != y)
                            .all(|z| quotient[x][z] && quotient[y][z])
                        {
                            found = Some((x, y));
                            break 'pairs;
                        }
                    }
                }
                let (x, y) = found?;
                let mut order = vec![x, y];
                order.extend((0..5).filter(|&z| z != x && z != y));
                order
            }
        };
        let mut blocks = vec![Vec::new(); k];
        for v in 0..g.n() {
            blocks[self.label[v]].push(v);
        }
        for block in &blocks {
            let set = VertexSet::from_members(g.n(), block.iter().copied()).ok()?;
            if !g.is_connected_subset(&set) {
                return None;
            }
        }
        Some(order.into_iter().map(|i| std::mem::take(&mut blocks[i])).collect())
    }
}

fn search_component(g: &Graph, pattern: Pattern) -> Option<Vec<Vec<usize>>> {
    let mut search = PartitionSearch {
        g,
        pattern,
        k: pattern.vertex_count(),
        label: vec![0; g.n()],
    };
    search.assign(0, 0)
}
