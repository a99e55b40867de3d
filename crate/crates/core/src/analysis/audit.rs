use serde::Serialize;

use super::hgraph::{build_h_multigraph, TieBreak};
use super::partition::partition_wrt;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::outerplanar::is_outerplanar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

/// One inequality with both sides recorded.
///
/// A check is `applicable` unless its right-hand side is meaningless for
/// the instance; inapplicable checks count as holding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub applicable: bool,
    pub holds: bool,
}

impl BoundCheck {
    fn new(name: &'static str, lhs: i64, relation: Relation, rhs: i64, applicable: bool) -> Self {
        let cmp = match relation {
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
        };
        BoundCheck {
            name,
            lhs,
            relation,
            rhs,
            applicable,
            holds: !applicable || cmp,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub set_size: usize,
    pub b_size: usize,
    pub d_size: usize,
    pub b_plus_d: usize,
    pub b_union_d: usize,
    pub edges_h: usize,
    pub edges_h_simple: usize,
    pub max_multiplicity: usize,
    pub checks: Vec<BoundCheck>,
    pub all_hold: bool,
}

impl AuditReport {
    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Contraction bounds for a connected outerplanar graph and a dominating
/// set, using smallest-index merging.
pub fn audit_contraction_bounds(g: &Graph, s: &VertexSet) -> Result<AuditReport> {
    audit_contraction_bounds_with(g, s, &TieBreak::SmallestIndex)
}

pub fn audit_contraction_bounds_with(g: &Graph, s: &VertexSet, tie_break: &TieBreak) -> Result<AuditReport> {
    if !g.is_connected() {
        return Err(Error::input("contraction audit needs a connected graph"));
    }
    if !is_outerplanar(g).verdict {
        return Err(Error::input("contraction audit needs an outerplanar graph"));
    }
    audit_contraction_bounds_unchecked(g, s, tie_break)
}

/// As [`audit_contraction_bounds_with`], but trusts the caller that `g` is
/// connected and outerplanar. Domination is still checked.
pub fn audit_contraction_bounds_unchecked(
    g: &Graph,
    s: &VertexSet,
    tie_break: &TieBreak,
) -> Result<AuditReport> {
    let p = partition_wrt(g, s)?;
    let h = build_h_multigraph(g, s, tie_break)?;
    let k = s.len() as i64;
    let (b, d) = (p.b.len(), p.d.len());
    let edges_h = h.base.edge_count();
    let edges_h_simple = h.base.simple_edge_count();
    let max_multiplicity = h.base.max_multiplicity();
    use Relation::*;
    let checks = vec![
        BoundCheck::new("max_multiplicity", max_multiplicity as i64, AtMost, 9, true),
        // The simple quotient is outerplanar on |S| vertices; the 2k - 3
        // edge bound needs at least two vertices.
        BoundCheck::new("edges_h_simple", edges_h_simple as i64, AtMost, 2 * k - 3, k >= 2),
        BoundCheck::new("edges_h", edges_h as i64, AtMost, 18 * k, true),
        BoundCheck::new("twice_edges_h_vs_b", 2 * edges_h as i64, AtLeast, b as i64, true),
        BoundCheck::new("d_size", d as i64, AtMost, 3 * k, true),
        BoundCheck::new("b_plus_d", (b + d) as i64, AtMost, 39 * k, true),
    ];
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(AuditReport {
        set_size: s.len(),
        b_size: b,
        d_size: d,
        b_plus_d: b + d,
        b_union_d: p.b.union(&p.d).len(),
        edges_h,
        edges_h_simple,
        max_multiplicity,
        checks,
        all_hold,
    })
}
