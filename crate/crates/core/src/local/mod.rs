//! Synchronous, anonymous, port-numbered message passing.
//!
//! A node only ever sees its own degree and the messages arriving on its
//! ports; port `i` of `v` leads to the `i`-th smallest neighbour of `v`.
//! Global vertex ids appear in traces for reporting and nowhere else.

mod threshold;

pub use threshold::{run_degree_threshold, DegreeBroadcast, DegreeThreshold, HIGH_DEGREE};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type Symbol = u64;

/// Message alphabet a program declares up front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Alphabet {
    /// Symbols `0..size`.
    Bounded(u64),
    Unbounded,
}

impl Alphabet {
    pub fn admits(self, symbol: Symbol) -> bool {
        match self {
            Alphabet::Bounded(size) => symbol < size,
            Alphabet::Unbounded => true,
        }
    }

    /// Bits needed per message, if bounded.
    pub fn bits(self) -> Option<u32> {
        match self {
            Alphabet::Bounded(size) if size <= 1 => Some(0),
            Alphabet::Bounded(size) => Some(u64::BITS - (size - 1).leading_zeros()),
            Alphabet::Unbounded => None,
        }
    }
}

/// Deterministic node behaviour. Nodes are anonymous: none of the hooks
/// receives a vertex id.
pub trait NodeProgram {
    type State: Clone;

    fn alphabet(&self) -> Alphabet;

    fn init(&self, degree: usize) -> Self::State;

    /// One message per port, in port order.
    fn compose(&self, round: usize, state: &Self::State) -> Vec<Symbol>;

    /// `received[i]` arrived on port `i`.
    fn absorb(&self, round: usize, state: &Self::State, received: &[Symbol]) -> Self::State;

    /// Whether the node joins the output set.
    fn decide(&self, state: &Self::State) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MessageRecord {
    pub round: usize,
    pub from: usize,
    pub to: usize,
    pub symbol: Symbol,
}

/// Full message log of a run: `rounds * 2m` records, ordered by round,
/// then sender, then port.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimTrace {
    pub rounds: usize,
    pub messages: Vec<MessageRecord>,
    pub decisions: Vec<bool>,
}

#[derive(Serialize)]
struct TraceDocument<'a> {
    rounds: usize,
    messages: Vec<[u64; 4]>,
    chosen: &'a [usize],
}

impl SimTrace {
    /// `{rounds, messages: [[round, u, v, symbol], ...], chosen: [ids]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let chosen: Vec<usize> = (0..self.decisions.len()).filter(|&v| self.decisions[v]).collect();
        let doc = TraceDocument {
            rounds: self.rounds,
            messages: self
                .messages
                .iter()
                .map(|m| [m.round as u64, m.from as u64, m.to as u64, m.symbol])
                .collect(),
            chosen: &chosen,
        };
        serde_json::to_value(doc).expect("trace serialises")
    }
}

/// Message accounting kept for every run, traced or not.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub rounds: usize,
    pub messages: usize,
    pub max_symbol: Symbol,
    /// Bits per message under the declared alphabet, if bounded.
    pub bits_per_message: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct SelectionResult {
    pub chosen: VertexSet,
    pub stats: RunStats,
    pub trace: Option<SimTrace>,
}

/// Runs `program` for `rounds` synchronous rounds on `g`.
///
/// Each round every node composes, then all messages are delivered, then
/// every node absorbs; no node observes a message of the current round
/// before it has composed its own.
pub fn run_sync<P: NodeProgram>(
    g: &Graph,
    program: &P,
    rounds: usize,
    record_trace: bool,
) -> Result<SelectionResult> {
    let n = g.n();
    let alphabet = program.alphabet();
    // back_port[v][i]: port at neighbours[v][i] that leads back to v.
    let back_port: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&w| g.port_of(w, v).expect("symmetric adjacency"))
                .collect()
        })
        .collect();
    let mut states: Vec<P::State> = (0..n).map(|v| program.init(g.deg(v))).collect();
    let mut inbox: Vec<Vec<Symbol>> = (0..n).map(|v| vec![0; g.deg(v)]).collect();
    let mut stats = RunStats {
        rounds,
        bits_per_message: alphabet.bits(),
        ..RunStats::default()
    };
    let mut log = Vec::new();

    for round in 1..=rounds {
        for v in 0..n {
            let out = program.compose(round, &states[v]);
            if out.len() != g.deg(v) {
                return Err(Error::Protocol(format!(
                    "round {round}: node emitted {} messages on {} ports",
                    out.len(),
                    g.deg(v)
                )));
            }
            for (port, &symbol) in out.iter().enumerate() {
                if !alphabet.admits(symbol) {
                    return Err(Error::Protocol(format!(
                        "round {round}: symbol {symbol} outside declared alphabet {alphabet:?}"
                    )));
                }
                let w = g.neighbors(v)[port];
                inbox[w][back_port[v][port]] = symbol;
                stats.messages += 1;
                stats.max_symbol = stats.max_symbol.max(symbol);
                if record_trace {
                    log.push(MessageRecord {
                        round,
                        from: v,
                        to: w,
                        symbol,
                    });
                }
            }
        }
        for v in 0..n {
            states[v] = program.absorb(round, &states[v], &inbox[v]);
        }
    }

    let decisions: Vec<bool> = states.iter().map(|s| program.decide(s)).collect();
    let mut chosen = VertexSet::new(n);
    for v in (0..n).filter(|&v| decisions[v]) {
        chosen.insert(v);
    }
    let trace = record_trace.then_some(SimTrace {
        rounds,
        messages: log,
        decisions,
    });
    Ok(SelectionResult {
        chosen,
        stats,
        trace,
    })
}
