//! Acceptance suite. Each check prints one `[PASS]`/`[FAIL]` line with the
//! measured quantities and the pinned runtime budget, then asserts. Runs
//! without the libtest harness so the lines are always visible; the process
//! exits non-zero if any check fails.

use std::collections::BTreeMap;
use std::panic;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use outerdom::analysis::{
    audit_contraction_bounds_unchecked, build_h_multigraph, counterexample_search, partition_wrt,
    threshold_set, undominated_bound_holds, SearchOptions, TieBreak,
};
use outerdom::experiments::{exp_planar_gap, exp_tightness};
use outerdom::graph::{has_minor, Pattern};
use outerdom::local::{run_degree_threshold, run_sync, DegreeThreshold};
use outerdom::mds::{enumerate_minimal_dominating_sets, exact_mds_bruteforce, exact_mds_treewidth};
use outerdom::outerplanar::{
    enumerate_connected_outerplanar, gen_random_outerplanar, is_outerplanar, GeneratorSeed,
};
use outerdom::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

static REPORTED: AtomicBool = AtomicBool::new(false);

fn report(name: &str, ok: bool, detail: String) {
    REPORTED.store(true, Ordering::SeqCst);
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
}

fn within(elapsed: Duration, budget: Duration) -> bool {
    elapsed < budget
}

/// Every connected outerplanar graph with 3..=9 vertices.
fn corpus() -> &'static Vec<Graph> {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (3..=9)
            .flat_map(|n| enumerate_connected_outerplanar(n).unwrap())
            .collect()
    })
}

/// 10^4 random outerplanar graphs, 3 <= n <= 20, from a fixed master seed.
fn random_instances() -> &'static Vec<Graph> {
    static RANDOM: OnceLock<Vec<Graph>> = OnceLock::new();
    RANDOM.get_or_init(|| {
        let mut master = ChaCha8Rng::seed_from_u64(20_240_601);
        (0..10_000)
            .map(|_| {
                let n = master.gen_range(3..=20);
                let keep = master.gen_range(0.3..=1.0);
                gen_random_outerplanar(n, keep, GeneratorSeed(master.next_u64())).unwrap()
            })
            .collect()
    })
}

fn path_power_tightness() {
    let start = Instant::now();
    let ns = [10, 20, 50, 100, 500, 1000];
    let rows = exp_tightness(&ns).unwrap();
    let elapsed = start.elapsed();
    let exact = rows.iter().zip(ns).all(|(r, n)| {
        r.n == n
            && r.opt_size == n / 5
            && r.alg_size == n - 4
            && r.exact_ratio() == Ratio::from_integer(5) - Ratio::new(20, n)
    });
    let fast = within(elapsed, Duration::from_secs(5));
    let shown: Vec<String> = rows
        .iter()
        .map(|r| format!("n={} alg={} opt={} ratio={}", r.n, r.alg_size, r.opt_size, r.exact_ratio()))
        .collect();
    report(
        "path_power_tightness",
        exact && fast,
        format!("{}; {:.2?} (budget 5s)", shown.join(", "), elapsed),
    );
    assert!(exact);
    assert!(fast);
}

fn factor_five_upper_bound() {
    let start = Instant::now();
    let check = |g: &Graph| {
        let alg = run_degree_threshold(g).chosen.len();
        let opt = exact_mds_bruteforce(g).unwrap().size;
        alg <= 5 * opt
    };
    let small: Vec<&Graph> = corpus().iter().filter(|g| g.n() <= 8).collect();
    let enumerated_bad = small.par_iter().filter(|g| !check(g)).count();
    let random_bad = random_instances().par_iter().filter(|g| !check(g)).count();
    let elapsed = start.elapsed();
    let fast = within(elapsed, Duration::from_secs(600));
    let ok = enumerated_bad == 0 && random_bad == 0 && fast;
    report(
        "factor_five_upper_bound",
        ok,
        format!(
            "enumerated n<=8: {} graphs, {enumerated_bad} violations; random n<=20: {} graphs, {random_bad} violations; {:.2?} (budget 600s)",
            small.len(),
            random_instances().len(),
            elapsed
        ),
    );
    assert_eq!(enumerated_bad, 0);
    assert_eq!(random_bad, 0);
    assert!(fast);
}

fn undominated_bound_exhaustive() {
    let start = Instant::now();
    let strict = counterexample_search(9, SearchOptions::default()).unwrap();
    let weak = counterexample_search(
        9,
        SearchOptions {
            constant: 1,
            all_sets: false,
        },
    )
    .unwrap();
    let elapsed = start.elapsed();
    let fast = within(elapsed, Duration::from_secs(1800));
    let weak_hit = weak.found.as_ref().map(|c| c.n);
    let ok = strict.found.is_none() && weak_hit.is_some_and(|n| n <= 9) && fast;
    report(
        "undominated_bound_exhaustive",
        ok,
        format!(
            "constant 4: {} graphs, {} minimal sets, violation={:?}; constant 1: violation at n={:?}; {:.2?} (budget 1800s)",
            strict.graphs,
            strict.sets,
            strict.found.as_ref().map(|c| c.n),
            weak_hit,
            elapsed
        ),
    );
    assert!(strict.found.is_none());
    assert!(weak_hit.is_some_and(|n| n <= 9));
    assert!(fast);
}

fn contraction_audit_exhaustive() {
    let start = Instant::now();
    let (pairs, bad): (usize, usize) = corpus()
        .par_iter()
        .map(|g| {
            let sets = enumerate_minimal_dominating_sets(g).unwrap();
            let bad = sets
                .iter()
                .filter(|s| {
                    !audit_contraction_bounds_unchecked(g, s, &TieBreak::SmallestIndex)
                        .unwrap()
                        .all_hold
                })
                .count();
            (sets.len(), bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let elapsed = start.elapsed();
    report(
        "contraction_audit_exhaustive",
        bad == 0,
        format!("{pairs} (graph, minimal set) pairs, {bad} with a failing bound; {:.2?}", elapsed),
    );
    assert_eq!(bad, 0);
}

/// Hand-transcribed worked example: s1..s4 = 0..3, b1 = 4, a1..a4 = 5..8,
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

fn contraction_golden_instance() {
    let g = golden_instance();
    let s = VertexSet::from_members(11, 0..4).unwrap();
    let h = build_h_multigraph(&g, &s, &TieBreak::Prefer(BTreeMap::from([(8, 2)]))).unwrap();
    let edges: Vec<_> = h.base.edges().collect();
    let multiset_ok = edges == vec![((0, 1), 2), ((0, 2), 2), ((0, 3), 1), ((2, 3), 1)];
    let p = partition_wrt(&g, &s).unwrap();
    let b_ok = p.b.to_vec() == vec![4];
    let d_ok = p.d.to_vec() == vec![9, 10];
    let a_ok = p.a.len() == 4;
    report(
        "contraction_golden_instance",
        multiset_ok && b_ok && d_ok && a_ok,
        format!(
            "H edges {edges:?} (expected [((0,1),2), ((0,2),2), ((0,3),1), ((2,3),1)]); b={:?} (expected [4]); d={:?} (expected [9, 10]); |a|={} (expected 4)",
            p.b.to_vec(),
            p.d.to_vec(),
            p.a.len()
        ),
    );
    assert!(multiset_ok);
    assert!(b_ok);
    assert!(d_ok, "d = {:?}", p.d.to_vec());
    assert!(a_ok, "a = {:?}", p.a.to_vec());
}

fn planar_gadget_gap() {
    let rows = exp_planar_gap(&[5, 10, 20], 5).unwrap();
    let ok = rows
        .iter()
        .all(|r| {
            r.opt_size == 2
                && r.alg_size > r.p
                && Ratio::new(r.alg_size, r.opt_size) >= Ratio::new(r.p + 1, 2)
        });
    let shown: Vec<String> = rows
        .iter()
        .map(|r| format!("p={} alg={} opt={}", r.p, r.alg_size, r.opt_size))
        .collect();
    report("planar_gadget_gap", ok, shown.join(", "));
    assert!(ok);
}

fn oracle_equivalence() {
    let start = Instant::now();
    let mut master = ChaCha8Rng::seed_from_u64(777);
    let instances: Vec<Graph> = (0..200)
        .map(|_| {
            let n = master.gen_range(3..=16);
            let keep = master.gen_range(0.3..=1.0);
            gen_random_outerplanar(n, keep, GeneratorSeed(master.next_u64())).unwrap()
        })
        .collect();
    let agree = instances
        .par_iter()
        .filter(|g| exact_mds_treewidth(g, None).unwrap().size == exact_mds_bruteforce(g).unwrap().size)
        .count();
    let elapsed = start.elapsed();
    let fast = within(elapsed, Duration::from_secs(120));
    report(
        "oracle_equivalence",
        agree == 200 && fast,
        format!("{agree}/200 agree; {:.2?} (budget 120s)", elapsed),
    );
    assert_eq!(agree, 200);
    assert!(fast);
}

fn simulator_equivalence() {
    let matches = |g: &Graph| {
        let r = run_sync(g, &DegreeThreshold, 1, false).unwrap();
        r.chosen == threshold_set(g)
            && r.stats.rounds == 1
            && r.stats.messages == 2 * g.m()
            && r.stats.bits_per_message == Some(1)
            && r.stats.max_symbol <= 1
    };
    let enumerated_bad = corpus().par_iter().filter(|g| !matches(g)).count();
    let random_bad = random_instances().par_iter().filter(|g| !matches(g)).count();

    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut anonymity_bad = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=16);
        let p: f64 = rng.gen_range(0.1..0.7);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let base = run_degree_threshold(&g).chosen;
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let moved = run_degree_threshold(&g.permuted(&perm).unwrap()).chosen;
            anonymity_bad += (moved != base.permuted(&perm)) as usize;
        }
    }
    let ok = enumerated_bad == 0 && random_bad == 0 && anonymity_bad == 0;
    report(
        "simulator_equivalence",
        ok,
        format!(
            "{} enumerated + {} random graphs: {} mismatches; anonymity 100x100: {anonymity_bad} mismatches",
            corpus().len(),
            random_instances().len(),
            enumerated_bad + random_bad
        ),
    );
    assert_eq!(enumerated_bad + random_bad, 0);
    assert_eq!(anonymity_bad, 0);
}

fn recognizer_soundness() {
    let minor_free = |g: &Graph| {
        !has_minor(g, Pattern::K4).unwrap() && !has_minor(g, Pattern::K23).unwrap()
    };
    let agrees = |g: &Graph| is_outerplanar(g).verdict == minor_free(g);
    let enumerated_bad = corpus().par_iter().filter(|g| !agrees(g)).count();
    let named_bad = [Graph::complete(4), Graph::complete_bipartite(2, 3)]
        .iter()
        .filter(|g| !agrees(g) || is_outerplanar(g).verdict)
        .count();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let random: Vec<Graph> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
        .collect();
    let random_bad = random.iter().filter(|g| !agrees(g)).count();
    let rejected = random.iter().filter(|g| !is_outerplanar(g).verdict).count();
    let ok = enumerated_bad == 0 && named_bad == 0 && random_bad == 0;
    report(
        "recognizer_soundness",
        ok,
        format!(
            "{} enumerated, 2 named, 1000 random ({rejected} non-outerplanar): {} disagreements",
            corpus().len(),
            enumerated_bad + named_bad + random_bad
        ),
    );
    assert_eq!(enumerated_bad + named_bad + random_bad, 0);
}

fn golden_instance_sanity() {
    // Checks that do not depend on how the partition labels are read.
    let g = golden_instance();
    let s = VertexSet::from_members(11, 0..4).unwrap();
    let ok = g.is_connected() && is_outerplanar(&g).verdict && undominated_bound_holds(&g, &s).unwrap();
    report("golden_instance_sanity", ok, "connected, outerplanar, 4|S| >= |B|+|D|".into());
    assert!(ok);
}

fn main() -> ExitCode {
    let checks: [(&str, fn()); 10] = [
        ("path_power_tightness", path_power_tightness),
        ("factor_five_upper_bound", factor_five_upper_bound),
        ("undominated_bound_exhaustive", undominated_bound_exhaustive),
        ("contraction_audit_exhaustive", contraction_audit_exhaustive),
        ("contraction_golden_instance", contraction_golden_instance),
        ("planar_gadget_gap", planar_gadget_gap),
        ("oracle_equivalence", oracle_equivalence),
        ("simulator_equivalence", simulator_equivalence),
        ("recognizer_soundness", recognizer_soundness),
        ("golden_instance_sanity", golden_instance_sanity),
    ];
    let mut failed = Vec::new();
    for (name, check) in checks {
        REPORTED.store(false, Ordering::SeqCst);
        if panic::catch_unwind(check).is_err() {
            if !REPORTED.load(Ordering::SeqCst) {
                report(name, false, "panicked before reporting".into());
            }
            failed.push(name);
        }
    }
    println!("acceptance: {} passed, {} failed {:?}", checks.len() - failed.len(), failed.len(), failed);
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
