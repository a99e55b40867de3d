use super::{MdsResult, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const BRUTEFORCE_MAX_VERTICES: usize = 24;

/// Closed neighbourhoods as word masks plus the largest member of each.
struct Cover {
    n: usize,
    words: usize,
    closed: Vec<Vec<u64>>,
    reach: Vec<usize>,
    span: usize,
}

impl Cover {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut closed = vec![vec![0u64; words]; n];
        let mut reach = vec![0; n];
        for v in 0..n {
            closed[v][v / 64] |= 1 << (v % 64);
            for &w in g.neighbors(v) {
                closed[v][w / 64] |= 1 << (w % 64);
            }
            reach[v] = g.neighbors(v).last().map_or(v, |&w| w.max(v));
        }
        Cover {
            n,
            words,
            closed,
            reach,
            span: g.max_degree() + 1,
        }
    }

    fn first_uncovered(&self, covered: &[u64]) -> Option<usize> {
        for (i, &w) in covered.iter().enumerate() {
            let free = !w & self.valid(i);
            if free != 0 {
                return Some(i * 64 + free.trailing_zeros() as usize);
            }
        }
        None
    }

    fn valid(&self, word: usize) -> u64 {
        let bits = self.n - word * 64;
        if bits >= 64 {
            u64::MAX
        } else {
            (1u64 << bits) - 1
        }
    }

    fn uncovered(&self, covered: &[u64]) -> usize {
        covered
            .iter()
            .enumerate()
            .map(|(i, &w)| (!w & self.valid(i)).count_ones() as usize)
            .sum()
    }

    /// Lexicographically first dominating `k`-subset, as an increasing
    /// sequence.
    fn search(&self, k: usize) -> Option<Vec<usize>> {
        let mut layers = vec![vec![0u64; self.words]; k + 1];
        let mut picked = Vec::with_capacity(k);
        self.descend(k, 0, &mut layers, &mut picked).then_some(picked)
    }

    fn descend(&self, k: usize, next: usize, layers: &mut [Vec<u64>], picked: &mut Vec<usize>) -> bool {
        let depth = picked.len();
        let Some(u) = self.first_uncovered(&layers[depth]) else {
            return true;
        };
        let left = k - depth;
        if left == 0 || self.uncovered(&layers[depth]) > left * self.span {
            return false;
        }
        // `u` must be covered by some later pick, and every later pick is
        // at least `c`; once `c` passes the largest member of N[u] nothing
        // can cover it.
        for c in next..=self.reach[u].min(self.n - 1) {
            let (head, tail) = layers.split_at_mut(depth + 1);
            for (dst, (src, add)) in tail[0].iter_mut().zip(head[depth].iter().zip(&self.closed[c])) {
                *dst = src | add;
            }
            picked.push(c);
            if self.descend(k, c + 1, layers, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
}

fn result(n: usize, members: Vec<usize>) -> MdsResult {
    MdsResult {
        size: members.len(),
        witness: VertexSet::from_members(n, members).expect("members in range"),
        method: Method::Bruteforce,
    }
}

/// Minimum dominating set by iterative deepening over subset size.
///
/// The witness is the lexicographically smallest dominating set of minimum
/// size. Capped at 24 vertices.
pub fn exact_mds_bruteforce(g: &Graph) -> Result<MdsResult> {
    if g.n() > BRUTEFORCE_MAX_VERTICES {
        return Err(Error::capability(format!(
            "subset sweep supports at most {BRUTEFORCE_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    Ok(exact_mds_within(g, g.n())?.expect("V dominates itself"))
}

/// Same sweep without a vertex cap, stopping after size `max_size`.
///
/// Returns `None` when no dominating set of at most `max_size` vertices
/// exists. Cheap whenever the domination number is small, whatever `n` is.
pub fn exact_mds_within(g: &Graph, max_size: usize) -> Result<Option<MdsResult>> {
    let cover = Cover::new(g);
    if g.n() == 0 {
        return Ok(Some(result(0, Vec::new())));
    }
    for k in 1..=max_size.min(g.n()) {
        if let Some(members) = cover.search(k) {
            return Ok(Some(result(g.n(), members)));
        }
    }
    Ok(None)
}
