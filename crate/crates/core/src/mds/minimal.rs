use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MINIMAL_MAX_VERTICES: usize = 14;

fn masks_checked(g: &Graph, what: &str) -> Result<Vec<u64>> {
    if g.n() > MINIMAL_MAX_VERTICES {
        return Err(Error::capability(format!(
            "{what} supports at most {MINIMAL_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    g.closed_masks()
}

fn coverage(closed: &[u64], mask: u64) -> u64 {
    let mut cov = 0;
    let mut rest = mask;
    while rest != 0 {
        cov |= closed[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    cov
}

/// Every dominating set as a bit mask, in increasing mask order.
pub fn dominating_masks_of(g: &Graph) -> Result<Vec<u64>> {
    let closed = masks_checked(g, "dominating-set enumeration")?;
    let full = (1u64 << g.n()) - 1;
    Ok((0..=full).filter(|&m| coverage(&closed, m) == full).collect())
}

/// Inclusion-minimal dominating sets as bit masks, in increasing mask
/// order. A dominating set is minimal iff no single member can be dropped.
pub fn minimal_dominating_masks(g: &Graph) -> Result<Vec<u64>> {
    let closed = masks_checked(g, "minimal dominating-set enumeration")?;
    let full = (1u64 << g.n()) - 1;
    Ok((0..=full)
        .filter(|&m| {
            if coverage(&closed, m) != full {
                return false;
            }
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if coverage(&closed, m ^ bit) == full {
                    return false;
                }
                rest ^= bit;
            }
            true
        })
        .collect())
}

/// Every inclusion-minimal dominating set exactly once (n ≤ 14).
pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(minimal_dominating_masks(g)?
        .into_iter()
        .map(|m| VertexSet::from_mask(g.n(), m))
        .collect())
}

/// Every dominating set (n ≤ 14).
pub fn enumerate_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(dominating_masks_of(g)?
        .into_iter()
        .map(|m| VertexSet::from_mask(g.n(), m))
        .collect())
}
