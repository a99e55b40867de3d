use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Contracts the connected set `set` into a single vertex.
///
/// The merged vertex takes the index of the smallest member of `set`;
/// remaining vertices keep their relative order. Parallel edges and loops
/// are dropped, so the result is again a simple graph on `n - |set| + 1`
/// vertices.
pub fn contract_set(g: &Graph, set: &VertexSet) -> Result<Graph> {
    if set.universe() != g.n() {
        return Err(Error::input("vertex set does not belong to this graph"));
    }
    if set.is_empty() {
        return Err(Error::input("cannot contract an empty set"));
    }
    if !g.is_connected_subset(set) {
        return Err(Error::input("contracted set must induce a connected subgraph"));
    }
    let first = set.iter().next().expect("non-empty");
    let mut index = vec![0; g.n()];
    let mut next = 0;
    for (v, slot) in index.iter_mut().enumerate() {
        if set.contains(v) && v != first {
            continue;
        }
        *slot = next;
        next += 1;
    }
    for v in set.iter() {
        index[v] = index[first];
    }
    let edges = g
        .edges()
        .map(|(u, v)| (index[u], index[v]))
        .filter(|(u, v)| u != v);
    Graph::from_edges_dedup(next, edges)
}
