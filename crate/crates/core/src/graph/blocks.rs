use super::Graph;

/// Block decomposition of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    /// Vertex sets of the blocks, each sorted. Isolated vertices form
    /// singleton blocks.
    pub blocks: Vec<Vec<usize>>,
    /// Vertices lying in more than one block, sorted.
    pub cut_vertices: Vec<usize>,
}

impl Blocks {
    /// Block ids containing each vertex.
    pub fn blocks_of(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v].push(b);
            }
        }
        out
    }
}

/// Biconnected components via an iterative Tarjan low-link pass.
///
/// Every edge ends up in exactly one block; the edges of a block are the
/// edges of the subgraph its vertex set induces.
pub fn biconnected_components(g: &Graph) -> Blocks {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.deg(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        frames.push((root, UNSEEN, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < g.deg(v) {
                let w = g.neighbors(v)[frame.2];
                frame.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
    }

    let mut count = vec![0usize; n];
    for block in &blocks {
        for &v in block {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] > 1).collect();
    Blocks {
        blocks,
        cut_vertices,
    }
}
