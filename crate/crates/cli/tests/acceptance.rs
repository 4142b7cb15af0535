//! End-to-end acceptance checks. Each test prints one `[PASS]`/`[FAIL]`
//! line; run with `--nocapture` to see them.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use hypercover::format::{parse_graph, parse_hypergraph, write_graph, write_hypergraph};
use hypercover::generators::HypergraphParams;
use hypercover::generators::{gap_family, prufer_decode, prufer_encode, random_graph, random_hypergraph, random_tree};
use hypercover::{
    degeneracy, degeneracy_bf, exact, greedy_cover, greedy_transversal, mighty_degeneracy_bf,
    neighborhood_equivalence_audit, strong_degeneracy, strong_degeneracy_bf, tree_domination, DuplicatePolicy,
    ExactProblem, Hypergraph, Instance, NeighborhoodKind, Seed,
};

fn report(label: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[PASS] {label}");
    } else {
        println!("[FAIL] {label}");
        for f in failures.iter().take(10) {
            println!("       {f}");
        }
        panic!("{label}: {} failure(s)", failures.len());
    }
}

fn hypergraph(n: usize, max_m: usize, seed: u64) -> Hypergraph {
    let max_edge_size = (2 + (seed as usize) % 3).min(n);
    let low = n.div_ceil(max_edge_size);
    let space: usize = (1..=max_edge_size)
        .map(|k| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)))
        .sum();
    let high = max_m.min(space);
    let m = low + (seed as usize * 5) % (high - low + 1);
    random_hypergraph(
        HypergraphParams {
            n,
            m,
            max_edge_size,
            cover_feasible: true,
        },
        Seed(seed),
    )
    .unwrap()
}

#[test]
fn criterion_1_gap_family() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 4..=12 {
        let h = gap_family(n).unwrap();
        let s = strong_degeneracy(&h).value;
        let s_bf = strong_degeneracy_bf(&h).unwrap();
        let m = mighty_degeneracy_bf(&h).unwrap();
        if s != n - 2 || s_bf != n - 2 || m != 2 {
            failures.push(format!("n={n}: strong {s} (exhaustive {s_bf}), mighty {m}"));
        }
    }
    let h3 = gap_family(3).unwrap();
    let (s3, m3) = (strong_degeneracy(&h3).value, mighty_degeneracy_bf(&h3).unwrap());
    println!("       n=3 measured: strong {s3}, mighty {m3}");
    if m3 > s3 {
        failures.push(format!("n=3: mighty {m3} exceeds strong {s3}"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}"));
    }
    report(
        "criterion 1: gap family has strong degeneracy n-2 and mighty degeneracy 2 (n=4..12)",
        &failures,
    );
}

#[test]
fn criterion_2_gap_five_cover() {
    let h = gap_family(5).unwrap();
    let c = exact(Instance::Hypergraph(&h), ExactProblem::MinEdgeCover)
        .unwrap()
        .value;
    let alpha = exact(Instance::Hypergraph(&h), ExactProblem::MaxIndependentSet)
        .unwrap()
        .value;
    let cert = greedy_cover(&h).unwrap();
    let mut failures = Vec::new();
    if (c, alpha) != (2, 1) {
        failures.push(format!("cover number {c}, independence number {alpha}"));
    }
    if (cert.cover.len(), cert.independent.len()) != (2, 1) || !cert.checks.all() {
        failures.push(format!(
            "greedy |C|={} |X|={} checks {:?}",
            cert.cover.len(),
            cert.independent.len(),
            cert.checks
        ));
    }
    report(
        "criterion 2: n=5 gap instance has cover number 2, independence 1, greedy matches",
        &failures,
    );
}

#[test]
fn criterion_3_greedy_cover_bounds() {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 3 + (seed as usize * 7) % 10;
        let h = hypergraph(n, 14, seed);
        let cert = greedy_cover(&h).unwrap();
        let (cover, indep) = (cert.cover.len(), cert.independent.len());
        let s = strong_degeneracy(&h).value;
        let m = mighty_degeneracy_bf(&h).unwrap();
        let c = exact(Instance::Hypergraph(&h), ExactProblem::MinEdgeCover)
            .unwrap()
            .value;
        let alpha = exact(Instance::Hypergraph(&h), ExactProblem::MaxIndependentSet)
            .unwrap()
            .value;
        let ok = cert.checks.all() && cover <= m * indep && m * indep <= s * indep && c <= cover && indep <= alpha;
        if !ok {
            failures.push(format!(
                "seed {seed}: |C|={cover} |X|={indep} mighty {m} strong {s} c={c} alpha={alpha} {:?}",
                cert.checks
            ));
        }
    }
    report(
        "criterion 3: greedy cover certificates valid and |C| <= mighty*|X| <= strong*|X| on 100 instances",
        &failures,
    );
}

#[test]
fn criterion_4_transversal_duality() {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 3 + (seed as usize * 3) % 10;
        let h = hypergraph(n, 14, seed + 1000);
        let cert = greedy_transversal(&h).unwrap();
        let tau = exact(Instance::Hypergraph(&h), ExactProblem::MinTransversal)
            .unwrap()
            .value;
        let rho = exact(Instance::Hypergraph(&h), ExactProblem::MaxMatching)
            .unwrap()
            .value;
        let m_dual = mighty_degeneracy_bf(&h.dual().unwrap()).unwrap();
        let ok =
            cert.checks.all() && tau <= cert.transversal.len() && cert.matching.len() <= rho && tau <= m_dual * rho;
        if !ok {
            failures.push(format!(
                "seed {seed}: |T|={} |M|={} tau={tau} rho={rho} dual mighty {m_dual} {:?}",
                cert.transversal.len(),
                cert.matching.len(),
                cert.checks
            ));
        }
    }
    report(
        "criterion 4: transversal <= dual mighty degeneracy * matching number on 100 instances",
        &failures,
    );
}

#[test]
fn criterion_5_peeling_matches_exhaustive() {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 3) % 10;
        let h = if n < 3 {
            Hypergraph::new(n, (0..n).map(|v| vec![v]).collect()).unwrap()
        } else {
            hypergraph(n, 12, seed + 2000)
        };
        let s = strong_degeneracy(&h).value;
        let s_bf = strong_degeneracy_bf(&h).unwrap();
        let d = degeneracy(&h).value;
        let d_bf = degeneracy_bf(&h).unwrap();
        let m = mighty_degeneracy_bf(&h).unwrap();
        if s != s_bf || d != d_bf || m > s || s > d {
            failures.push(format!("seed {seed}: strong {s}/{s_bf} plain {d}/{d_bf} mighty {m}"));
        }
    }
    report(
        "criterion 5: peeling equals exhaustive degeneracy and mighty <= strong <= plain on 100 instances",
        &failures,
    );
}

#[test]
fn criterion_6_tree_domination() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let kinds = [NeighborhoodKind::Closed, NeighborhoodKind::Open];
    for seed in 0..200u64 {
        let n = 2 + (seed as usize) % 17;
        let t = random_tree(n, Seed(seed)).unwrap();
        for kind in kinds {
            let cert = tree_domination(&t, kind).unwrap();
            let (min, max) = match kind {
                NeighborhoodKind::Closed => (ExactProblem::MinDominating, ExactProblem::MaxTwoPacking),
                NeighborhoodKind::Open => (ExactProblem::MinTotalDominating, ExactProblem::MaxOpenTwoPacking),
            };
            let gamma = exact(Instance::Graph(&t), min).unwrap().value;
            let rho = exact(Instance::Graph(&t), max).unwrap().value;
            if !cert.valid() || cert.dominating.len() != gamma || cert.packing.len() != rho || gamma != rho {
                failures.push(format!(
                    "seed {seed} n={n} {kind}: |D|={} |P|={} exact {gamma}/{rho}",
                    cert.dominating.len(),
                    cert.packing.len()
                ));
            }
        }
    }
    for seed in 0..50u64 {
        let n = 19 + (seed as usize * 37) % 182;
        let t = random_tree(n, Seed(seed + 500)).unwrap();
        for kind in kinds {
            let cert = tree_domination(&t, kind).unwrap();
            let nh = hypercover::neighborhood_hypergraph(&t, kind).unwrap();
            let s = strong_degeneracy(&nh.hypergraph).value;
            if !cert.valid() || !cert.equal || s != 1 {
                failures.push(format!(
                    "large seed {seed} n={n} {kind}: equal {} strong {s}",
                    cert.equal
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        failures.push(format!("took {elapsed:?}"));
    }
    report(
        "criterion 6: tree solver is optimal and domination equals packing on 250 trees, both kinds",
        &failures,
    );
}

#[test]
fn criterion_7_neighborhood_audit() {
    let mut failures = Vec::new();
    let mut samples = 0;
    for seed in 0..20u64 {
        let n = 3 + (seed as usize) % 10;
        let g = random_graph(n, 0.35, Seed(seed)).unwrap();
        let r = neighborhood_equivalence_audit(&g, 50, Seed(seed + 77)).unwrap();
        samples += r.samples;
        if !r.passed() {
            failures.push(format!("seed {seed}: {r:?}"));
        }
    }
    if samples < 1000 {
        failures.push(format!("only {samples} samples"));
    }
    report(
        "criterion 7: neighborhood hypergraph equivalences and degree bounds hold on 1000 samples",
        &failures,
    );
}

fn cli(args: &[&str], stdin: Option<&[u8]>) -> (i32, Vec<u8>, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hypercover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        out.stdout,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(bytes: &[u8]) -> serde_json::Value {
    serde_json::from_slice(bytes).expect("valid JSON")
}

#[test]
fn criterion_8_round_trips_and_cli() {
    let mut failures = Vec::new();

    for seed in 0..50u64 {
        let n = 2 + (seed as usize) % 40;
        let t = random_tree(n, Seed(seed)).unwrap();
        if prufer_decode(&prufer_encode(&t).unwrap(), n).unwrap() != t {
            failures.push(format!("Prüfer round trip failed for seed {seed}"));
        }
        if parse_graph(&write_graph(&t), DuplicatePolicy::Reject).unwrap().value != t {
            failures.push(format!("graph text round trip failed for seed {seed}"));
        }
        let h = hypergraph(3 + (seed as usize) % 10, 14, seed);
        if parse_hypergraph(&write_hypergraph(&h), DuplicatePolicy::Reject)
            .unwrap()
            .value
            != h
        {
            failures.push(format!("hypergraph text round trip failed for seed {seed}"));
        }
    }

    let gen = ["gen", "hg", "--n", "10", "--m", "12", "--max-size", "3", "--seed", "5"];
    let (code_a, a, _) = cli(&gen, None);
    let (_, b, _) = cli(&gen, None);
    if code_a != 0 || a != b {
        failures.push("gen hg is not byte-deterministic".into());
    }
    let (_, c1, _) = cli(&["cover", "-"], Some(&a));
    let (_, c2, _) = cli(&["cover", "-"], Some(&b));
    if c1 != c2 || !json(&c1)["checks"]["inequality_holds"].as_bool().unwrap_or(false) {
        failures.push("cover output differs between runs or fails its checks".into());
    }

    let (_, gap, _) = cli(&["gen", "gap", "--n", "5"], None);
    let (code, out, _) = cli(&["degeneracy", "--kind", "strong", "-"], Some(&gap));
    if code != 0 || json(&out)["value"] != 3 {
        failures.push(format!("gap n=5 strong degeneracy via CLI: exit {code}"));
    }
    let (code, out, _) = cli(&["degeneracy", "--kind", "mighty-bf", "-"], Some(&gap));
    if code != 0 || json(&out)["value"] != 2 {
        failures.push(format!("gap n=5 mighty degeneracy via CLI: exit {code}"));
    }

    let (_, tree, _) = cli(&["gen", "tree", "--n", "50", "--seed", "7"], None);
    for kind in ["closed", "open"] {
        let (code, out, _) = cli(&["dominate", "--kind", kind, "-"], Some(&tree));
        let v = json(&out);
        if code != 0 || v["equal"] != true || v["dominating_size"] != v["packing_size"] {
            failures.push(format!("dominate --kind {kind}: exit {code}, {v}"));
        }
    }

    let (code, _, err) = cli(&["cover", "/nonexistent/input.hg"], None);
    if code != 1 || !err.contains("cannot open") {
        failures.push(format!("missing file: exit {code}, stderr {err:?}"));
    }
    let (code, _, err) = cli(&["cover", "--no-such-flag"], None);
    if code != 2 || err.lines().count() != 1 {
        failures.push(format!("usage error: exit {code}, stderr {err:?}"));
    }
    let (code, _, err) = cli(&["cover", "-"], Some(b"p hg 2 1\ne 1 3\n"));
    if code != 1 || !err.starts_with("error: VertexOutOfRange") {
        failures.push(format!("bad vertex: exit {code}, stderr {err:?}"));
    }
    let dup = b"p hg 2 2\ne 1 2\ne 2 1\n";
    let (code, _, err) = cli(&["--strict", "cover", "-"], Some(dup));
    if code != 1 || !err.contains("DuplicateEdge") {
        failures.push(format!("strict duplicate: exit {code}, stderr {err:?}"));
    }
    let (code, _, err) = cli(&["cover", "-"], Some(dup));
    if code != 0 || !err.contains("warning") {
        failures.push(format!("lenient duplicate: exit {code}, stderr {err:?}"));
    }

    report(
        "criterion 8: generator and text round trips, CLI determinism and exit codes",
        &failures,
    );
}

#[test]
fn scaling_smoke() {
    let h = random_hypergraph(
        HypergraphParams {
            n: 10_000,
            m: 20_000,
            max_edge_size: 9,
            cover_feasible: true,
        },
        Seed(1),
    )
    .unwrap();
    let start = Instant::now();
    let order = strong_degeneracy(&h);
    let peel = start.elapsed();
    let start = Instant::now();
    let cert = greedy_cover(&h).unwrap();
    let cover = start.elapsed();
    println!(
        "       peel {peel:?}, cover {cover:?}, strong degeneracy {}",
        order.value
    );
    let mut failures = Vec::new();
    if !cert.checks.cover_valid
        || !cert.checks.independent_valid
        || cert.cover.len() > order.value * cert.independent.len()
    {
        failures.push(format!("{:?}", cert.checks));
    }
    if peel + cover > Duration::from_secs(30) {
        failures.push(format!("too slow: {:?}", peel + cover));
    }
    report(
        "scaling: n=10^4, m=2*10^4 peel and cover finish with valid certificates",
        &failures,
    );
}
