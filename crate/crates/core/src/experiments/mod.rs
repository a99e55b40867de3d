//! Experiment tables over the generator families and the enumerated corpus.
//!
//! Rows are plain serde structs. CSV output has a header row, LF line
//! endings and ratios rendered with six decimals; JSON output is an array
//! of the same rows.

mod tables;

pub use tables::{from_csv, to_csv, to_json};

use num_rational::Ratio;
use rand::RngCore;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::analysis::{
    audit_contraction_bounds_unchecked, threshold_set, undominated_bound_holds_with, TieBreak,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::local::run_degree_threshold;
use crate::mds::{
    enumerate_minimal_dominating_sets, exact_mds_bruteforce, exact_mds_treewidth, exact_mds_within,
    is_dominating,
};
use crate::outerplanar::{
    enumerate_connected_outerplanar, gen_path_power, gen_planar_gadget, gen_random_outerplanar,
    path_power_outer_cycle, GeneratorSeed,
};

fn rounded(r: Ratio<usize>) -> f64 {
    let x = *r.numer() as f64 / *r.denom() as f64;
    (x * 1e6).round() / 1e6
}

fn ratio_of(alg: usize, opt: usize) -> f64 {
    if opt == 0 {
        1.0
    } else {
        rounded(Ratio::new(alg, opt))
    }
}

fn six_places<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{x:.6}"))
}

fn parse_six<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    let text = String::deserialize(d)?;
    text.parse().map_err(serde::de::Error::custom)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TightnessRow {
    pub n: usize,
    pub alg_size: usize,
    pub opt_size: usize,
    #[serde(serialize_with = "six_places", deserialize_with = "parse_six")]
    pub ratio: f64,
}

impl TightnessRow {
    pub fn exact_ratio(&self) -> Ratio<usize> {
        Ratio::new(self.alg_size, self.opt_size)
    }
}

/// Selection size and optimum on path powers. Every `n` must be a positive
/// multiple of ten; the optimum comes from the tree-decomposition solver.
pub fn exp_tightness(n_list: &[usize]) -> Result<Vec<TightnessRow>> {
    if n_list.is_empty() {
        return Err(Error::input("tightness sweep needs at least one n"));
    }
    if let Some(&bad) = n_list.iter().find(|&&n| n < 10 || n % 10 != 0) {
        return Err(Error::input(format!("n must be a multiple of 10 and at least 10, got {bad}")));
    }
    n_list
        .par_iter()
        .map(|&n| {
            let g = gen_path_power(n)?;
            let alg_size = run_degree_threshold(&g).chosen.len();
            let opt_size = exact_mds_treewidth(&g, Some(&path_power_outer_cycle(n)))?.size;
            Ok(TightnessRow {
                n,
                alg_size,
                opt_size,
                ratio: ratio_of(alg_size, opt_size),
            })
        })
        .collect()
}

pub const VERIFY_RANGE: std::ops::RangeInclusive<usize> = 3..=9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    /// Constant in `constant * |S| >= |B| + |D|`. Anything below four is a
    /// deliberately weakened check used to prove the harness can fail.
    pub constant: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { constant: 4 }
    }
}

/// Per-graph pass counters over the enumerated corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub n_max: usize,
    pub instances: usize,
    pub sets_checked: usize,
    pub dominating_ok: usize,
    pub selection_matches_rule: usize,
    pub oracles_agree: usize,
    pub undominated_bound_ok: usize,
    pub audit_ok: usize,
    pub ratio_ok: usize,
    /// `n:index` of the first few failing corpus graphs.
    pub failures: Vec<String>,
}

impl VerifySummary {
    pub fn all_ok(&self) -> bool {
        [
            self.dominating_ok,
            self.selection_matches_rule,
            self.oracles_agree,
            self.undominated_bound_ok,
            self.audit_ok,
            self.ratio_ok,
        ]
        .iter()
        .all(|&c| c == self.instances)
    }
}

#[derive(Default)]
struct Verdict {
    sets: usize,
    dominating: bool,
    matches_rule: bool,
    oracles_agree: bool,
    bound: bool,
    audit: bool,
    ratio: bool,
}

fn verify_graph(g: &Graph, options: VerifyOptions) -> Result<Verdict> {
    let chosen = run_degree_threshold(g).chosen;
    let dp = exact_mds_treewidth(g, None)?;
    let bf = exact_mds_bruteforce(g)?;
    let mut v = Verdict {
        dominating: is_dominating(g, &chosen),
        matches_rule: chosen == threshold_set(g),
        oracles_agree: dp.size == bf.size,
        ratio: chosen.len() <= 5 * bf.size,
        bound: true,
        audit: true,
        ..Verdict::default()
    };
    for s in enumerate_minimal_dominating_sets(g)? {
        v.sets += 1;
        v.bound &= undominated_bound_holds_with(g, &s, options.constant)?;
        v.audit &= audit_contraction_bounds_unchecked(g, &s, &TieBreak::SmallestIndex)?.all_hold;
    }
    Ok(v)
}

/// Runs the selection rule, both oracles, the undominated-vertex bound and
/// the contraction audit over every connected outerplanar graph with at
/// most `n_max` vertices.
pub fn exp_verify(n_max: usize, options: VerifyOptions) -> Result<VerifySummary> {
    if !VERIFY_RANGE.contains(&n_max) {
        return Err(Error::capability(format!(
            "verification supports n_max in {}..={}, got {n_max}",
            VERIFY_RANGE.start(),
            VERIFY_RANGE.end()
        )));
    }
    let mut summary = VerifySummary {
        n_max,
        instances: 0,
        sets_checked: 0,
        dominating_ok: 0,
        selection_matches_rule: 0,
        oracles_agree: 0,
        undominated_bound_ok: 0,
        audit_ok: 0,
        ratio_ok: 0,
        failures: Vec::new(),
    };
    for n in *VERIFY_RANGE.start()..=n_max {
        let corpus = enumerate_connected_outerplanar(n)?;
        let verdicts: Vec<Verdict> = corpus
            .par_iter()
            .enumerate()
            .map(|(i, g)| verify_graph(g, options).map_err(|e| Error::input(format!("graph {n}:{i}: {e}"))))
            .collect::<Result<_>>()?;
        for (i, v) in verdicts.iter().enumerate() {
            summary.instances += 1;
            summary.sets_checked += v.sets;
            summary.dominating_ok += v.dominating as usize;
            summary.selection_matches_rule += v.matches_rule as usize;
            summary.oracles_agree += v.oracles_agree as usize;
            summary.undominated_bound_ok += v.bound as usize;
            summary.audit_ok += v.audit as usize;
            summary.ratio_ok += v.ratio as usize;
            let ok = v.dominating && v.matches_rule && v.oracles_agree && v.bound && v.audit && v.ratio;
            if !ok && summary.failures.len() < 10 {
                summary.failures.push(format!("{n}:{i}"));
            }
        }
    }
    Ok(summary)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapRow {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub alg_size: usize,
    pub opt_size: usize,
    #[serde(serialize_with = "six_places", deserialize_with = "parse_six")]
    pub ratio: f64,
}

/// Selection size against the optimum on the planar gadget. `q >= 4` so
/// the branch vertices cross the degree threshold.
pub fn exp_planar_gap(p_list: &[usize], q: usize) -> Result<Vec<GapRow>> {
    if q < 4 {
        return Err(Error::input(format!("gadget needs q >= 4, got {q}")));
    }
    if p_list.is_empty() {
        return Err(Error::input("planar-gap sweep needs at least one p"));
    }
    p_list
        .par_iter()
        .map(|&p| {
            let g = gen_planar_gadget(p, q)?;
            let alg_size = run_degree_threshold(&g).chosen.len();
            let opt_size = exact_mds_within(&g, g.n())?.expect("V dominates").size;
            Ok(GapRow {
                p,
                q,
                n: g.n(),
                alg_size,
                opt_size,
                ratio: ratio_of(alg_size, opt_size),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomRow {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub alg_size: usize,
    pub opt_size: usize,
    #[serde(serialize_with = "six_places", deserialize_with = "parse_six")]
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomSummary {
    pub count: usize,
    pub max_ratio: f64,
    pub mean_ratio: f64,
    /// Instances with selection size above five times the optimum.
    pub violations: usize,
}

/// Random outerplanar instances. Instance `i` uses the `i`-th output of a
/// `ChaCha8Rng` seeded with `seed`, so the table depends only on the
/// arguments. The optimum comes from the tree-decomposition solver.
pub fn exp_random(n: usize, count: usize, keep_prob: f64, seed: u64) -> Result<(Vec<RandomRow>, RandomSummary)> {
    if count == 0 {
        return Err(Error::input("random sweep needs count >= 1"));
    }
    let mut master = GeneratorSeed(seed).rng();
    let seeds: Vec<u64> = (0..count).map(|_| master.next_u64()).collect();
    let rows: Vec<RandomRow> = seeds
        .par_iter()
        .enumerate()
        .map(|(index, &s)| {
            let g = gen_random_outerplanar(n, keep_prob, GeneratorSeed(s))?;
            let alg_size = run_degree_threshold(&g).chosen.len();
            let opt_size = exact_mds_treewidth(&g, Some(&(0..n).collect::<Vec<_>>()))?.size;
            Ok(RandomRow {
                index,
                seed: s,
                n,
                m: g.m(),
                alg_size,
                opt_size,
                ratio: ratio_of(alg_size, opt_size),
            })
        })
        .collect::<Result<_>>()?;
    let max_ratio = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    let mean = rows.iter().map(|r| r.ratio).sum::<f64>() / rows.len() as f64;
    let summary = RandomSummary {
        count,
        max_ratio,
        mean_ratio: (mean * 1e6).round() / 1e6,
        violations: rows.iter().filter(|r| r.alg_size > 5 * r.opt_size).count(),
    };
    Ok((rows, summary))
}
