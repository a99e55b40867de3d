//! Simple undirected graphs, vertex sets and the structural primitives the
//! rest of the crate is built on.

mod blocks;
mod canon;
mod contract;
mod io;
mod minor;
mod multigraph;
mod vertex_set;

pub use blocks::{biconnected_components, Blocks};
pub use canon::{canonical_code, canonical_ordering, CANON_MAX_VERTICES};
pub use contract::contract_set;
pub use io::{parse_graph, write_graph};
pub use minor::{find_minor, has_minor, MinorModel, Pattern, MINOR_MAX_VERTICES};
pub use multigraph::Multigraph;
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Simple undirected graph on the dense vertex range `0..n`.
///
/// Neighbour lists are kept sorted, so port numbers in the simulator and
/// tie-breaking everywhere else are determined by vertex order alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges and endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    /// Self-loops and out-of-range endpoints are still rejected.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::from_edges(n, list)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    /// `K_{a,b}` with the `a` side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices; smaller `n` falls back to a path.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Graph::path(n);
        }
        let edges = (1..n).map(|v| (v - 1, v)).chain(std::iter::once((0, n - 1)));
        Graph::from_edges(n, edges).expect("cycle is simple")
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbour list. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`, or an input error for a vertex outside `0..n`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.adj
            .get(v)
            .map(Vec::len)
            .ok_or_else(|| Error::input(format!("vertex {v} out of range for n={}", self.n())))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Port of `v` in the neighbour list of `u`.
    pub fn port_of(&self, u: usize, v: usize) -> Option<usize> {
        self.adj.get(u)?.binary_search(&v).ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n())?;
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let edges = self.edges().filter(|&e| e != (u.min(v), u.max(v)));
        Graph::from_edges(self.n(), edges).expect("subgraph of a simple graph")
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .map(move |&w| index[w])
                .filter(move |&j| j != usize::MAX && j > i)
                .map(move |j| (i, j))
        });
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Whether `set` induces a connected subgraph. The empty set does not.
    pub fn is_connected_subset(&self, set: &VertexSet) -> bool {
        let Some(start) = set.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Closed-neighbourhood bit masks, for graphs with at most 64 vertices.
    pub fn closed_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::capability(format!(
                "bit masks need n <= 64, got {}",
                self.n()
            )));
        }
        Ok((0..self.n())
            .map(|v| self.adj[v].iter().fold(1u64 << v, |acc, &w| acc | (1 << w)))
            .collect())
    }
}

/// Serialised as `{"n": .., "edges": [[u, v], ..]}` with `u < v`.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<[usize; 2]> = self.edges().map(|(u, v)| [u, v]).collect();
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::input(format!("permutation has length {}, expected {n}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::input("not a permutation"));
        }
    }
    Ok(())
}
