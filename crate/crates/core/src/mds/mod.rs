//! Exact minimum dominating sets and domination checks.

mod bruteforce;
mod minimal;
mod treewidth;

pub use bruteforce::{exact_mds_bruteforce, exact_mds_within, BRUTEFORCE_MAX_VERTICES};
pub use minimal::{
    dominating_masks_of, enumerate_dominating_sets, enumerate_minimal_dominating_sets,
    minimal_dominating_masks,
    MINIMAL_MAX_VERTICES,
};
pub use treewidth::exact_mds_treewidth;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "bruteforce")]
    Bruteforce,
    #[serde(rename = "treewidth-dp")]
    TreewidthDp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::TreewidthDp => "treewidth-dp",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdsResult {
    pub size: usize,
    pub witness: VertexSet,
    pub method: Method,
}

/// `N[s] = V`. Sets over a different universe never dominate.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    if s.universe() != g.n() {
        return false;
    }
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domination_basics() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert!(is_dominating(&k4, &VertexSet::from_members(4, [v]).unwrap()));
        }
        let p3 = Graph::path(3);
        assert!(!is_dominating(&p3, &VertexSet::from_members(3, [0]).unwrap()));
        assert!(is_dominating(&p3, &VertexSet::from_members(3, [1]).unwrap()));
        assert!(is_dominating(&Graph::empty(0), &VertexSet::new(0)));
        assert!(!is_dominating(&p3, &VertexSet::full(4)));
    }

    #[test]
    fn method_names() {
        assert_eq!(serde_json::to_string(&Method::TreewidthDp).unwrap(), "\"treewidth-dp\"");
        assert_eq!(Method::Bruteforce.as_str(), "bruteforce");
    }
}
