use super::{run_sync, Alphabet, NodeProgram, SelectionResult, Symbol};
use crate::graph::Graph;

/// Degree at which a vertex counts as high.
pub const HIGH_DEGREE: usize = 4;

/// One-round, one-bit degree-threshold rule.
///
/// Each node announces `[degree >= 4]` on every port and joins the set iff
/// its own degree is at least four or none of its neighbours announced a
/// one. Isolated nodes hear nothing and therefore join.
#[derive(Clone, Copy, Debug, Default)]
pub struct DegreeThreshold;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdState {
    degree: usize,
    heard_high: bool,
}

impl NodeProgram for DegreeThreshold {
    type State = ThresholdState;

    fn alphabet(&self) -> Alphabet {
        Alphabet::Bounded(2)
    }

    fn init(&self, degree: usize) -> ThresholdState {
        ThresholdState {
            degree,
            heard_high: false,
        }
    }

    fn compose(&self, _round: usize, state: &ThresholdState) -> Vec<Symbol> {
        vec![(state.degree >= HIGH_DEGREE) as Symbol; state.degree]
    }

    fn absorb(&self, _round: usize, state: &ThresholdState, received: &[Symbol]) -> ThresholdState {
        ThresholdState {
            heard_high: state.heard_high || received.contains(&1),
            ..*state
        }
    }

    fn decide(&self, state: &ThresholdState) -> bool {
        state.degree >= HIGH_DEGREE || !state.heard_high
    }
}

/// Same rule, but nodes broadcast their full degree instead of one bit.
/// Produces the same set; useful for readable traces.
#[derive(Clone, Copy, Debug, Default)]
pub struct DegreeBroadcast;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BroadcastState {
    degree: usize,
    max_neighbor_degree: usize,
}

impl NodeProgram for DegreeBroadcast {
    type State = BroadcastState;

    fn alphabet(&self) -> Alphabet {
        Alphabet::Unbounded
    }

    fn init(&self, degree: usize) -> BroadcastState {
        BroadcastState {
            degree,
            max_neighbor_degree: 0,
        }
    }

    fn compose(&self, _round: usize, state: &BroadcastState) -> Vec<Symbol> {
        vec![state.degree as Symbol; state.degree]
    }

    fn absorb(&self, _round: usize, state: &BroadcastState, received: &[Symbol]) -> BroadcastState {
        let heard = received.iter().copied().max().unwrap_or(0) as usize;
        BroadcastState {
            max_neighbor_degree: state.max_neighbor_degree.max(heard),
            ..*state
        }
    }

    fn decide(&self, state: &BroadcastState) -> bool {
        state.degree >= HIGH_DEGREE || state.max_neighbor_degree < HIGH_DEGREE
    }
}

/// The degree-threshold rule as one simulated round, without a trace.
pub fn run_degree_threshold(g: &Graph) -> SelectionResult {
    run_sync(g, &DegreeThreshold, 1, false).expect("threshold program respects its alphabet")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::threshold_set;
    use crate::mds::is_dominating;
    use crate::outerplanar::gen_path_power;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
        let n = rng.gen_range(0..=max_n);
        let p: f64 = rng.gen_range(0.0..0.8);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn star_picks_centre() {
        for leaves in [4, 5] {
            let r = run_degree_threshold(&Graph::star(leaves));
            assert_eq!(r.chosen.to_vec(), vec![0]);
        }
    }

    #[test]
    fn low_degree_graphs_take_everything() {
        assert_eq!(run_degree_threshold(&Graph::path(3)).chosen.len(), 3);
        assert_eq!(run_degree_threshold(&Graph::complete(4)).chosen.len(), 4);
        assert_eq!(run_degree_threshold(&Graph::empty(1)).chosen.to_vec(), vec![0]);
    }

    #[test]
    fn path_power_selection() {
        let r = run_degree_threshold(&gen_path_power(10).unwrap());
        assert_eq!(r.chosen.to_vec(), (2..=7).collect::<Vec<_>>());
        assert_eq!(run_degree_threshold(&gen_path_power(20).unwrap()).chosen.len(), 16);
    }

    #[test]
    fn one_round_one_bit() {
        let g = gen_path_power(12).unwrap();
        let r = run_sync(&g, &DegreeThreshold, 1, true).unwrap();
        assert_eq!(r.stats.rounds, 1);
        assert_eq!(r.stats.messages, 2 * g.m());
        assert_eq!(r.stats.bits_per_message, Some(1));
        assert_eq!(r.trace.unwrap().messages.len(), 2 * g.m());
    }

    #[test]
    fn broadcast_variant_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let g = random_graph(&mut rng, 12);
            let a = run_degree_threshold(&g).chosen;
            let b = run_sync(&g, &DegreeBroadcast, 1, false).unwrap().chosen;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dominates_and_matches_central_rule_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100_000 {
            let g = random_graph(&mut rng, 10);
            let chosen = run_degree_threshold(&g).chosen;
            assert!(is_dominating(&g, &chosen));
            assert_eq!(chosen, threshold_set(&g));
        }
    }

    #[test]
    fn relabelling_commutes_with_selection() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 14);
            let base = run_degree_threshold(&g).chosen;
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                let h = g.permuted(&perm).unwrap();
                assert_eq!(run_degree_threshold(&h).chosen, base.permuted(&perm));
            }
        }
    }
}
