use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::local::HIGH_DEGREE;
use crate::mds::is_dominating;

/// Vertices of degree at least four.
pub fn high_degree_set(g: &Graph) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in (0..g.n()).filter(|&v| g.deg(v) >= HIGH_DEGREE) {
        out.insert(v);
    }
    out
}

/// Vertices with no vertex of degree at least four in their closed
/// neighbourhood.
pub fn far_from_high_set(g: &Graph) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in 0..g.n() {
        let near_high = g.deg(v) >= HIGH_DEGREE
            || g.neighbors(v).iter().any(|&w| g.deg(w) >= HIGH_DEGREE);
        if !near_high {
            out.insert(v);
        }
    }
    out
}

/// The degree-threshold selection, computed centrally.
pub fn threshold_set(g: &Graph) -> VertexSet {
    high_degree_set(g).union(&far_from_high_set(g))
}

/// Split of `V` relative to a dominating set `s`: `b` holds the
/// high-degree vertices outside `s`, `d` the far-from-high vertices
/// outside `s`, and `a` everything else outside `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub s: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
    pub d: VertexSet,
    pub high_degree: VertexSet,
    pub far_from_high: VertexSet,
}

impl PartitionReport {
    /// Re-checks the defining properties against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let parts = [&self.s, &self.a, &self.b, &self.d];
        if parts.iter().any(|p| p.universe() != n) {
            return false;
        }
        let disjoint = (0..4).all(|i| (i + 1..4).all(|j| parts[i].is_disjoint(parts[j])));
        let covers = parts.iter().map(|p| p.len()).sum::<usize>() == n;
        let high = |v: usize| g.deg(v) >= HIGH_DEGREE;
        let b_ok = self.b.iter().all(high);
        let d_ok = self
            .d
            .iter()
            .all(|v| !high(v) && g.neighbors(v).iter().all(|&w| !high(w)));
        let a_ok = self
            .a
            .iter()
            .all(|v| !high(v) && g.neighbors(v).iter().any(|&w| high(w)));
        let d_b_apart = self
            .d
            .iter()
            .all(|v| g.neighbors(v).iter().all(|&w| !self.b.contains(w)));
        disjoint && covers && b_ok && d_ok && a_ok && d_b_apart
    }
}

/// Partition of `V` with respect to the dominating set `s`.
pub fn partition_wrt(g: &Graph, s: &VertexSet) -> Result<PartitionReport> {
    if !is_dominating(g, s) {
        return Err(Error::input("partition needs a dominating set"));
    }
    let high_degree = high_degree_set(g);
    let far_from_high = far_from_high_set(g);
    let b = high_degree.difference(s);
    let d = far_from_high.difference(s);
    let a = s.union(&b).union(&d).complement();
    Ok(PartitionReport {
        s: s.clone(),
        a,
        b,
        d,
        high_degree,
        far_from_high,
    })
}

/// `constant * |s| >= |b| + |d|`, in integers.
pub fn undominated_bound_holds_with(g: &Graph, s: &VertexSet, constant: usize) -> Result<bool> {
    let p = partition_wrt(g, s)?;
    Ok(constant * s.len() >= p.b.len() + p.d.len())
}

/// `4|s| >= |b| + |d|` for a dominating set `s` of an outerplanar graph.
pub fn undominated_bound_holds(g: &Graph, s: &VertexSet) -> Result<bool> {
    undominated_bound_holds_with(g, s, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mds::{enumerate_minimal_dominating_sets, exact_mds_bruteforce};
    use crate::outerplanar::{gen_path_power, gen_random_outerplanar, GeneratorSeed};

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied()).unwrap()
    }

    /// Worked instance: s1..s4 = 0..3, b1 = 4, a1..a4 = 5..8,
    /// d1 = 9, d2 = 10.
    fn golden_instance() -> Graph {
        Graph::from_edges(
            11,
            [
                (0, 4),
                (0, 6),
                (4, 5),
                (6, 9),
                (1, 5),
                (1, 9),
                (2, 7),
                (2, 8),
                (4, 7),
                (4, 8),
                (3, 0),
                (3, 8),
                (3, 10),
            ],
        )
        .unwrap()
    }

    #[test]
    fn golden_instance_by_definition() {
        let g = golden_instance();
        let p = partition_wrt(&g, &set(11, &[0, 1, 2, 3])).unwrap();
        assert_eq!(p.b.to_vec(), vec![4]);
        // a2 (6) has degree 2 and its neighbours have degree 3 and 2, so it
        // is far from every high-degree vertex.
        assert_eq!(p.d.to_vec(), vec![6, 9, 10]);
        assert_eq!(p.a.to_vec(), vec![5, 7, 8]);
        assert!(p.validate(&g));
        assert!(undominated_bound_holds(&g, &p.s).unwrap());
    }

    #[test]
    fn complete_graph_on_four() {
        let g = Graph::complete(4);
        let p = partition_wrt(&g, &set(4, &[2])).unwrap();
        assert!(p.b.is_empty());
        assert_eq!(p.d.to_vec(), vec![0, 1, 3]);
        assert!(p.a.is_empty());
        assert_eq!(p.far_from_high.len(), 4);
    }

    #[test]
    fn edgeless_and_non_dominating() {
        let g = Graph::empty(3);
        let p = partition_wrt(&g, &VertexSet::full(3)).unwrap();
        assert!(p.a.is_empty() && p.b.is_empty() && p.d.is_empty());
        assert!(partition_wrt(&Graph::path(3), &set(3, &[0])).is_err());
        assert!(undominated_bound_holds(&Graph::empty(1), &VertexSet::full(1)).unwrap());
    }

    #[test]
    fn path_power_with_optimum() {
        let g = gen_path_power(10).unwrap();
        let s = exact_mds_bruteforce(&g).unwrap().witness;
        let p = partition_wrt(&g, &s).unwrap();
        assert!(p.b.len() <= 6);
        assert!(4 * s.len() >= p.b.len() + p.d.len());
    }

    #[test]
    fn invariants_on_random_outerplanar() {
        for seed in 0..150 {
            let g = gen_random_outerplanar(11, 0.7, GeneratorSeed(seed)).unwrap();
            for s in enumerate_minimal_dominating_sets(&g).unwrap() {
                let p = partition_wrt(&g, &s).unwrap();
                assert!(p.validate(&g));
                assert!(undominated_bound_holds(&g, &s).unwrap());
            }
        }
    }
}
