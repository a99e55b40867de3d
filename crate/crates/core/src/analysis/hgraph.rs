use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph, VertexSet};

/// How each vertex outside `S` picks the `S`-neighbour it merges into.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    SmallestIndex,
    /// Uniform choice per vertex, driven by `ChaCha8Rng`.
    Seeded(u64),
    /// Fixed choices for some vertices, smallest index for the rest.
    Prefer(BTreeMap<usize, usize>),
}

/// The multigraph obtained by merging every vertex outside `S` into a
/// chosen `S`-neighbour, dropping loops and keeping parallel edges.
///
/// `base` keeps the ids of `g`; only members of `S` carry edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HGraph {
    pub members: Vec<usize>,
    pub base: Multigraph,
    pub assignment: BTreeMap<usize, usize>,
}

impl HGraph {
    fn image(&self, v: usize) -> usize {
        self.assignment.get(&v).copied().unwrap_or(v)
    }

    /// Checks the assignment against `g` and recomputes the edge multiset.
    pub fn validate(&self, g: &Graph) -> bool {
        let in_s: VertexSet = match VertexSet::from_members(g.n(), self.members.iter().copied()) {
            Ok(s) => s,
            Err(_) => return false,
        };
        let assignment_ok = (0..g.n()).all(|u| match self.assignment.get(&u) {
            Some(&t) => !in_s.contains(u) && in_s.contains(t) && g.has_edge(u, t),
            None => in_s.contains(u),
        });
        if !assignment_ok {
            return false;
        }
        let mut expect = Multigraph::new(g.n());
        for (u, v) in g.edges() {
            let (x, y) = (self.image(u), self.image(v));
            if x != y {
                expect.add_edge(x, y).expect("distinct images");
            }
        }
        expect == self.base
    }
}

pub fn build_h_multigraph(g: &Graph, s: &VertexSet, tie_break: &TieBreak) -> Result<HGraph> {
    if s.universe() != g.n() {
        return Err(Error::input("set universe differs from the graph"));
    }
    let mut rng = match tie_break {
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut assignment = BTreeMap::new();
    for u in (0..g.n()).filter(|&u| !s.contains(u)) {
        let options: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| s.contains(w)).collect();
        if options.is_empty() {
            return Err(Error::input(format!("vertex {u} has no neighbour in the set")));
        }
        let target = match (tie_break, rng.as_mut()) {
            (TieBreak::Prefer(map), _) if map.contains_key(&u) => {
                let t = map[&u];
                if !options.contains(&t) {
                    return Err(Error::input(format!("preferred target {t} is not a set neighbour of {u}")));
                }
                t
            }
            (TieBreak::Seeded(_), Some(rng)) => *options.choose(rng).expect("non-empty"),
            _ => options[0],
        };
        assignment.insert(u, target);
    }
    if let TieBreak::Prefer(map) = tie_break {
        if let Some(u) = map.keys().find(|u| !assignment.contains_key(u)) {
            return Err(Error::input(format!("preference given for {u}, which is in the set")));
        }
    }
    let image = |v: usize| assignment.get(&v).copied().unwrap_or(v);
    let mut base = Multigraph::new(g.n());
    for (u, v) in g.edges() {
        let (x, y) = (image(u), image(v));
        if x != y {
            base.add_edge(x, y)?;
        }
    }
    Ok(HGraph {
        members: s.to_vec(),
        base,
        assignment,
    })
}
