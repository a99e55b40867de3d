use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use outerdom::analysis::{
    approximation_report, audit_contraction_bounds_with, counterexample_search, SearchOptions, TieBreak,
};
use outerdom::experiments::{
    exp_planar_gap, exp_random, exp_tightness, exp_verify, to_csv, to_json, VerifyOptions,
};
use outerdom::graph::{parse_graph, write_graph};
use outerdom::local::{run_sync, DegreeBroadcast, DegreeThreshold, NodeProgram, SelectionResult};
use outerdom::mds::{exact_mds_bruteforce, exact_mds_treewidth, MdsResult, BRUTEFORCE_MAX_VERTICES};
use outerdom::outerplanar::{
    gen_path_power, gen_planar_gadget, gen_random_maximal_outerplanar, gen_random_outerplanar,
    is_outerplanar, GeneratorSeed,
};
use outerdom::{Graph, VertexSet};

const SCHEMA: &str = "v1";

#[derive(Parser)]
#[command(name = "outerdom", version, about = "Degree-threshold dominating sets on outerplanar graphs")]
struct Cli {
    /// Table format for experiment output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write data here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph in the text format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run a node program in the synchronous simulator.
    Simulate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Program::Alg1)]
        program: Program,
        /// Write the full message trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exact minimum dominating set.
    Mds {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MdsMethod::Auto)]
        method: MdsMethod,
    },
    /// Contraction bounds for a dominating set, per connected component.
    Audit {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long)]
        set: String,
        /// Merge targets as `u:s` pairs, e.g. `8:2,9:1`.
        #[arg(long)]
        prefer: Option<String>,
        /// Random merge targets driven by --seed.
        #[arg(long, conflicts_with = "prefer")]
        random_ties: bool,
    },
    /// Selection size, optimum and ratio for one graph.
    Report {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Exhaustive search for a set violating the undominated-vertex bound.
    Search {
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        /// Check every dominating set instead of the minimal ones (n <= 7).
        #[arg(long)]
        all_sets: bool,
        #[arg(long, default_value_t = 4)]
        constant: usize,
    },
    /// Path-power sweep.
    Tightness {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 20, 50, 100, 500, 1000])]
        n: Vec<usize>,
    },
    /// Full check over the enumerated corpus.
    Verify {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 4, hide = true)]
        constant: usize,
    },
    /// Planar gadget sweep.
    PlanarGap {
        #[arg(long, value_delimiter = ',', default_values_t = [1, 5, 10, 20])]
        p: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        q: usize,
    },
    /// Random outerplanar sweep.
    Random {
        #[arg(long, default_value_t = 15)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0.9)]
        keep_prob: f64,
    },
}

#[derive(Subcommand)]
enum Family {
    PathPower {
        #[arg(long)]
        n: usize,
    },
    PlanarGadget {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    RandomMop {
        #[arg(long)]
        n: usize,
    },
    RandomOp(RandomOp),
}

#[derive(Args)]
struct RandomOp {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.8)]
    keep_prob: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Program {
    /// One round, one bit per message.
    Alg1,
    /// One round, full degrees as messages.
    Broadcast,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MdsMethod {
    Auto,
    Bf,
    Dp,
}

enum Failure {
    Lib(outerdom::Error),
    Io(String),
    Verification(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
            Failure::Verification(e) => write!(f, "verification failed: {e}"),
        }
    }
}

impl From<outerdom::Error> for Failure {
    fn from(e: outerdom::Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) if e.is_capability() => 3,
            Failure::Verification(_) => 2,
            _ => 1,
        }
    }
}

type Outcome = Result<(), Failure>;

struct Sink {
    out: Option<PathBuf>,
    format: Format,
}

impl Sink {
    fn text(&self, text: &str) -> Outcome {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> Outcome {
        let mut text = serde_json::to_string_pretty(value).expect("serialisable output");
        text.push('\n');
        self.text(&text)
    }

    fn table<T: Serialize>(&self, rows: &[T]) -> Outcome {
        let text = match self.format {
            Format::Csv => to_csv(rows)?,
            Format::Json => to_json(rows)? + "\n",
        };
        self.text(&text)
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

fn parse_ids(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::Lib(outerdom::Error::Input(format!("bad vertex id {t:?}"))))
        })
        .collect()
}

fn parse_prefer(text: &str) -> Result<BTreeMap<usize, usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|pair| {
            let bad = || Failure::Lib(outerdom::Error::Input(format!("bad preference {pair:?}, want u:s")));
            let (u, s) = pair.split_once(':').ok_or_else(bad)?;
            Ok((u.trim().parse().map_err(|_| bad())?, s.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn simulate<P: NodeProgram>(g: &Graph, program: &P, trace: bool) -> Result<SelectionResult, Failure> {
    Ok(run_sync(g, program, 1, trace)?)
}

fn solve(g: &Graph, method: MdsMethod) -> Result<MdsResult, Failure> {
    Ok(match method {
        MdsMethod::Bf => exact_mds_bruteforce(g)?,
        MdsMethod::Dp => exact_mds_treewidth(g, None)?,
        MdsMethod::Auto => {
            let w = is_outerplanar(g);
            match w.embedding {
                Some(order) if w.verdict => exact_mds_treewidth(g, Some(&order))?,
                _ if g.n() <= BRUTEFORCE_MAX_VERTICES => exact_mds_bruteforce(g)?,
                _ => {
                    return Err(Failure::Lib(outerdom::Error::Capability(format!(
                        "no exact method for a non-outerplanar graph on {} vertices",
                        g.n()
                    ))))
                }
            }
        }
    })
}

fn audit(g: &Graph, members: &[usize], tie_break: &TieBreak, sink: &Sink) -> Outcome {
    let s = VertexSet::from_members(g.n(), members.iter().copied())?;
    let mut components = Vec::new();
    let mut all_hold = true;
    for vertices in g.components() {
        let local = g.induced(&vertices);
        let index: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let local_set = VertexSet::from_members(
            local.n(),
            vertices.iter().enumerate().filter(|(_, &v)| s.contains(v)).map(|(i, _)| i),
        )?;
        let local_ties = match tie_break {
            TieBreak::Prefer(map) => TieBreak::Prefer(
                map.iter()
                    .filter_map(|(u, t)| Some((*index.get(u)?, *index.get(t)?)))
                    .collect(),
            ),
            other => other.clone(),
        };
        let report = audit_contraction_bounds_with(&local, &local_set, &local_ties)?;
        all_hold &= report.all_hold;
        components.push(json!({ "vertices": vertices, "report": report }));
    }
    sink.json(&json!({ "schema": SCHEMA, "all_hold": all_hold, "components": components }))?;
    if all_hold {
        Ok(())
    } else {
        Err(Failure::Verification("a contraction bound does not hold".into()))
    }
}

fn run(cli: Cli) -> Outcome {
    let sink = Sink {
        out: cli.out,
        format: cli.format,
    };
    match cli.command {
        Command::Generate { family } => {
            let g = match family {
                Family::PathPower { n } => gen_path_power(n)?,
                Family::PlanarGadget { p, q } => gen_planar_gadget(p, q)?,
                Family::RandomMop { n } => gen_random_maximal_outerplanar(n, GeneratorSeed(cli.seed))?,
                Family::RandomOp(RandomOp { n, keep_prob }) => {
                    gen_random_outerplanar(n, keep_prob, GeneratorSeed(cli.seed))?
                }
            };
            sink.text(&write_graph(&g))
        }
        Command::Simulate { graph, program, trace } => {
            let g = read_graph(&graph)?;
            let result = match program {
                Program::Alg1 => simulate(&g, &DegreeThreshold, trace.is_some())?,
                Program::Broadcast => simulate(&g, &DegreeBroadcast, trace.is_some())?,
            };
            if let (Some(path), Some(t)) = (&trace, &result.trace) {
                let text = serde_json::to_string(&t.to_json()).expect("trace serialises");
                fs::write(path, text + "\n").map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            sink.json(&json!({
                "schema": SCHEMA,
                "chosen": result.chosen,
                "size": result.chosen.len(),
                "stats": result.stats,
            }))
        }
        Command::Mds { graph, method } => {
            let g = read_graph(&graph)?;
            let start = Instant::now();
            let r = solve(&g, method)?;
            sink.json(&json!({
                "size": r.size,
                "witness": r.witness,
                "method": r.method,
                "millis": start.elapsed().as_millis() as u64,
            }))
        }
        Command::Audit {
            graph,
            set,
            prefer,
            random_ties,
        } => {
            let g = read_graph(&graph)?;
            let tie_break = match (prefer, random_ties) {
                (Some(p), _) => TieBreak::Prefer(parse_prefer(&p)?),
                (None, true) => TieBreak::Seeded(cli.seed),
                (None, false) => TieBreak::SmallestIndex,
            };
            audit(&g, &parse_ids(&set)?, &tie_break, &sink)
        }
        Command::Report { graph } => {
            let g = read_graph(&graph)?;
            let r = approximation_report(&g)?;
            if let Some(w) = &r.warning {
                eprintln!("warning: {w}");
            }
            sink.json(&json!({ "schema": SCHEMA, "report": r }))?;
            if r.guarantee_ok {
                Ok(())
            } else {
                Err(Failure::Verification("selection exceeds five times the optimum".into()))
            }
        }
        Command::Search {
            nmax,
            all_sets,
            constant,
        } => {
            eprintln!("searching connected outerplanar graphs up to n={nmax}");
            let out = counterexample_search(nmax, SearchOptions { constant, all_sets })?;
            eprintln!("checked {} graphs, {} sets", out.graphs, out.sets);
            sink.json(&json!({
                "schema": SCHEMA,
                "found": out.found.is_some(),
                "graphs": out.graphs,
                "sets": out.sets,
                "options": out.options,
                "instance": out.found,
            }))?;
            match out.found {
                None => Ok(()),
                Some(c) => Err(Failure::Verification(format!("counterexample on {} vertices", c.n))),
            }
        }
        Command::Tightness { n } => sink.table(&exp_tightness(&n)?),
        Command::Verify { nmax, constant } => {
            eprintln!("verifying connected outerplanar graphs up to n={nmax}");
            let summary = exp_verify(nmax, VerifyOptions { constant })?;
            sink.json(&json!({ "schema": SCHEMA, "all_ok": summary.all_ok(), "summary": summary }))?;
            if summary.all_ok() {
                Ok(())
            } else {
                Err(Failure::Verification(format!("failing instances: {:?}", summary.failures)))
            }
        }
        Command::PlanarGap { p, q } => sink.table(&exp_planar_gap(&p, q)?),
        Command::Random { n, count, keep_prob } => {
            eprintln!("sampling {count} outerplanar graphs on {n} vertices");
            let (rows, summary) = exp_random(n, count, keep_prob, cli.seed)?;
            match sink.format {
                Format::Csv => sink.table(&rows)?,
                Format::Json => sink.json(&json!({ "schema": SCHEMA, "rows": rows, "summary": summary }))?,
            }
            eprintln!(
                "max ratio {:.6}, mean ratio {:.6}, {} violations",
                summary.max_ratio, summary.mean_ratio, summary.violations
            );
            if summary.violations == 0 {
                Ok(())
            } else {
                Err(Failure::Verification(format!("{} instances above ratio 5", summary.violations)))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
