use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::mds::{dominating_masks_of, minimal_dominating_masks};
use crate::outerplanar::enumerate_connected_outerplanar;

use super::partition::{far_from_high_set, high_degree_set};

pub const SEARCH_RANGE: RangeInclusive<usize> = 3..=10;

/// Largest `n_max` for which every dominating set, not only the minimal
/// ones, is checked.
const ALL_SETS_MAX: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOptions {
    /// The checked inequality is `constant * |S| >= |B| + |D|`.
    pub constant: usize,
    pub all_sets: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            constant: 4,
            all_sets: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub graph: Graph,
    pub set: VertexSet,
    pub set_size: usize,
    pub b_size: usize,
    pub d_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub n_max: usize,
    pub options: SearchOptions,
    pub graphs: usize,
    pub sets: usize,
    pub found: Option<Counterexample>,
}

/// Looks for a connected outerplanar graph on at most `n_max` vertices and
/// a dominating set `S` with `constant * |S| < |B| + |D|`.
///
/// Only inclusion-minimal dominating sets are tried unless `all_sets` is
/// set. That is enough: adding a vertex to `S` raises the left side by
/// `constant` and cannot raise the right side, since `B` and `D` are fixed
/// vertex classes minus `S`. So any violating set contains a violating
/// minimal one.
///
/// The first hit is the smallest by (n, canonical code of the graph,
/// set mask), independent of thread scheduling.
pub fn counterexample_search(n_max: usize, options: SearchOptions) -> Result<SearchOutcome> {
    if !SEARCH_RANGE.contains(&n_max) {
        return Err(Error::capability(format!(
            "search supports n_max in {}..={}, got {n_max}",
            SEARCH_RANGE.start(),
            SEARCH_RANGE.end()
        )));
    }
    if options.all_sets && n_max > ALL_SETS_MAX {
        return Err(Error::capability(format!(
            "checking every dominating set is limited to n_max <= {ALL_SETS_MAX}"
        )));
    }
    let mut outcome = SearchOutcome {
        n_max,
        options,
        graphs: 0,
        sets: 0,
        found: None,
    };
    for n in *SEARCH_RANGE.start()..=n_max {
        let corpus = enumerate_connected_outerplanar(n)?;
        let per_graph: Vec<(usize, Option<u64>)> = corpus
            .par_iter()
            .map(|g| scan_graph(g, options))
            .collect();
        outcome.graphs += corpus.len();
        outcome.sets += per_graph.iter().map(|(k, _)| k).sum::<usize>();
        let hit = per_graph
            .iter()
            .zip(&corpus)
            .find_map(|((_, hit), g)| hit.map(|mask| (g, mask)));
        if let Some((g, mask)) = hit {
            let set = VertexSet::from_mask(n, mask);
            let (b, d) = undominated_counts(g, mask);
            outcome.found = Some(Counterexample {
                n,
                graph: g.clone(),
                set_size: set.len(),
                set,
                b_size: b,
                d_size: d,
            });
            break;
        }
    }
    Ok(outcome)
}

fn class_masks(g: &Graph) -> (u64, u64) {
    let high = high_degree_set(g).to_mask().expect("n <= 64");
    let far = far_from_high_set(g).to_mask().expect("n <= 64");
    (high, far)
}

fn undominated_counts(g: &Graph, s: u64) -> (usize, usize) {
    let (high, far) = class_masks(g);
    ((high & !s).count_ones() as usize, (far & !s).count_ones() as usize)
}

/// Number of sets checked and the first violating mask.
fn scan_graph(g: &Graph, options: SearchOptions) -> (usize, Option<u64>) {
    let masks = if options.all_sets {
        dominating_masks_of(g)
    } else {
        minimal_dominating_masks(g)
    }
    .expect("corpus graphs are within the enumeration cap");
    let (high, far) = class_masks(g);
    let hit = masks.iter().copied().find(|&s| {
        let rhs = (high & !s).count_ones() + (far & !s).count_ones();
        (options.constant as u32) * s.count_ones() < rhs
    });
    (masks.len(), hit)
}
