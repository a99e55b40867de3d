use std::collections::BTreeMap;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Loopless undirected multigraph stored as pair multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Multigraph {
    n: usize,
    #[serde(serialize_with = "serialize_mult")]
    mult: BTreeMap<(usize, usize), usize>,
}

fn serialize_mult<S: serde::Serializer>(
    mult: &BTreeMap<(usize, usize), usize>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(mult.iter().map(|(&(u, v), &k)| [u, v, k]))
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            mult: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds one parallel copy of `u-v`. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::input(format!("multigraph loop at {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!("edge {u}-{v} out of range for n={}", self.n)));
        }
        *self.mult.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        Ok(())
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Edge count with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.mult.values().sum()
    }

    /// Number of distinct adjacent pairs.
    pub fn simple_edge_count(&self) -> usize {
        self.mult.len()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.mult.values().copied().max().unwrap_or(0)
    }

    /// `((u, v), multiplicity)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.mult.iter().map(|(&e, &k)| (e, k))
    }

    pub fn underlying_simple(&self) -> Graph {
        Graph::from_edges(self.n, self.mult.keys().copied()).expect("pairs are distinct and loopless")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_with_and_without_multiplicity() {
        let mut h = Multigraph::new(3);
        h.add_edge(0, 1).unwrap();
        h.add_edge(1, 0).unwrap();
        h.add_edge(1, 2).unwrap();
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.simple_edge_count(), 2);
        assert_eq!(h.max_multiplicity(), 2);
        assert_eq!(h.multiplicity(1, 0), 2);
        assert_eq!(h.underlying_simple().m(), 2);
        assert!(h.add_edge(2, 2).is_err());
    }
}
