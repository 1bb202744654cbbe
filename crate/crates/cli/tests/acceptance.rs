//! Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
//! indented detail lines for anything that failed, and exits non-zero if any
//! criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use ciqw_cli::{execute, Cli, Row};
use ciqw_core::search::{iteration_bound, oracle_phase, oracle_via_standard};
use ciqw_core::spectral::DEFAULT_INTEGRALITY_TOLERANCE;
use ciqw_core::walk::{reflection_circuit, reflection_exact};
use ciqw_core::{
    analytic_spectrum, build_graph, certify_integral, ctqw_gate_estimate, depth, eigendecompose, laplacian,
    long_params, run_search, trotter_bound, Certification, Graph, GraphSpec, IntegralSpectrum, MarkedSet, Mode,
    PhaseEstimationConfig, SearchConfig, SearchResult, StateVector, WalkCounters,
};
use clap::Parser;
use num_rational::Ratio;

const SUCCESS_TOL: f64 = 1e-9;
const SEED: u64 = 20_240_601;
const TIME_BUDGET: Duration = Duration::from_secs(60);

fn instances() -> Vec<GraphSpec> {
    let mut v = vec![
        GraphSpec::Complete { n: 2 },
        GraphSpec::Complete { n: 3 },
        GraphSpec::Complete { n: 5 },
        GraphSpec::Complete { n: 8 },
        GraphSpec::Johnson { n: 4, k: 2 },
        GraphSpec::Johnson { n: 5, k: 2 },
        GraphSpec::Kneser { n: 5, k: 2 },
        GraphSpec::Hamming { d: 3, q: 2 },
        GraphSpec::Hamming { d: 2, q: 3 },
        GraphSpec::Grassmann { q: 2, n: 3, k: 1 },
        GraphSpec::Rook { m: 2, n: 3 },
        GraphSpec::Rook { m: 3, n: 3 },
        GraphSpec::CompleteSquare { n: 3 },
        GraphSpec::CocktailParty { n: 3 },
        GraphSpec::CompleteMultipartite { n: 6, k: 3 },
        GraphSpec::Star { n: 4 },
    ];
    v.extend((4..=8).map(|n| GraphSpec::Antiregular { n }));
    v
}

fn marked_sizes(n: usize) -> Vec<usize> {
    let mut sizes = vec![1, 2.min(n), n.div_ceil(4), n.div_ceil(2)];
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

fn path4() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
}

struct Verdict {
    failures: Vec<String>,
    summary: String,
}

impl Verdict {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }
}

struct Run {
    spec: GraphSpec,
    marked: MarkedSet,
    result: SearchResult,
}

fn criterion_1(runs: &mut Vec<Run>) -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for spec in instances() {
        let g = build_graph(&spec).unwrap();
        let n = g.n_vertices();
        for size in marked_sizes(n) {
            let marked = MarkedSet::seeded(n, size, SEED).unwrap();
            for mode in [Mode::Circuit, Mode::Exact] {
                match run_search(&g, &marked, &SearchConfig::with_mode(mode)) {
                    Ok(result) => {
                        let deficit = 1.0 - result.success_probability;
                        worst = worst.max(deficit);
                        v.check(deficit <= SUCCESS_TOL, || {
                            format!("{spec} |M|={size} {mode:?}: success {}", result.success_probability)
                        });
                        runs.push(Run {
                            spec: spec.clone(),
                            marked: marked.clone(),
                            result,
                        });
                    }
                    Err(e) => v.check(false, || format!("{spec} |M|={size} {mode:?}: {e}")),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    v.check(elapsed <= TIME_BUDGET, || format!("took {elapsed:?}"));
    v.summary = format!(
        "exact search, {} runs, min success 1 - {worst:.1e}, {:.2} s",
        runs.len(),
        elapsed.as_secs_f64()
    );
    v
}

fn criterion_2() -> Verdict {
    let mut v = Verdict::new();
    let (mut worst_dev, mut worst_res): (f64, f64) = (0.0, 0.0);
    for spec in instances() {
        let g = build_graph(&spec).unwrap();
        let n = g.n_vertices();
        let sp = eigendecompose(laplacian(&g).as_matrix()).unwrap();
        let cfg = PhaseEstimationConfig::for_largest_eigenvalue(sp.largest().round());
        for beta in [PI / 7.0, PI / 2.0, PI] {
            for col in 0..n {
                let mut joint = StateVector::joint(cfg.s, 0, &StateVector::basis(n, col)).unwrap();
                reflection_circuit(&mut joint, &sp, &cfg, beta, &mut WalkCounters::default()).unwrap();
                let mut exact = StateVector::basis(n, col);
                reflection_exact(&mut exact, beta).unwrap();
                let dev = joint.zero_ancilla_part().max_abs_diff(&exact);
                let res = joint.ancilla_residue();
                worst_dev = worst_dev.max(dev);
                worst_res = worst_res.max(res);
                v.check(dev <= 1e-9 && res <= 1e-10, || {
                    format!("{spec} β={beta:.4} column {col}: deviation {dev:.2e}, residue {res:.2e}")
                });
            }
        }
    }
    v.summary = format!("reflection circuit, max deviation {worst_dev:.1e}, max residue {worst_res:.1e}");
    v
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    for spec in instances() {
        let g = build_graph(&spec).unwrap();
        let sp = eigendecompose(laplacian(&g).as_matrix()).unwrap();
        let analytic = analytic_spectrum(&spec).unwrap();
        match certify_integral(&sp, DEFAULT_INTEGRALITY_TOLERANCE).unwrap() {
            Certification::Integral(numeric) => {
                v.check(numeric == analytic, || format!("{spec}: numeric {numeric:?} vs analytic {analytic:?}"));
            }
            Certification::Rejected(r) => v.check(false, || format!("{spec}: {r}")),
        }
        let degree_sum: u128 = g.degrees().iter().map(|&d| d as u128).sum();
        v.check(analytic.trace() == degree_sum, || {
            format!("{spec}: trace {} vs degree sum {degree_sum}", analytic.trace())
        });
    }
    v.summary = format!("analytic = certified numeric spectrum and trace identity on {} instances", instances().len());
    v
}

fn compare_rows(args: &[&str]) -> Vec<Row> {
    let cli = Cli::try_parse_from(std::iter::once("ciqw").chain(args.iter().copied())).unwrap();
    let out = execute(&cli.command).unwrap();
    let mut reader = csv::Reader::from_reader(out.text.as_bytes());
    reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            let opt = |i: usize| Some(r[i].to_string()).filter(|s| !s.is_empty());
            Row {
                index: r[0].parse().unwrap(),
                graph: r[1].to_string(),
                n_vertices: opt(2).map(|s| s.parse().unwrap()),
                marked: opt(3).map(|s| s.parse().unwrap()),
                epsilon: opt(4),
                k: opt(5).map(|s| s.parse().unwrap()),
                alpha: opt(6).map(|s| s.parse().unwrap()),
                queries: opt(7).map(|s| s.parse().unwrap()),
                ctqw_calls: opt(8).map(|s| s.parse().unwrap()),
                s: opt(9).map(|s| s.parse().unwrap()),
                total_evolution_time: opt(10).map(|s| s.parse().unwrap()),
                depth: opt(11).map(|s| s.parse().unwrap()),
                two_pow_depth: opt(12).map(|s| s.parse().unwrap()),
                sqrt_n_over_m: opt(13).map(|s| s.parse().unwrap()),
                depth_cost: opt(14).map(|s| s.parse().unwrap()),
                success_probability: opt(15).map(|s| s.parse().unwrap()),
                error: opt(16),
            }
        })
        .collect()
}

fn criterion_4() -> Verdict {
    let mut v = Verdict::new();
    for n in 2..=16u64 {
        let d = depth(&IntegralSpectrum::from_pairs([(0, 1), (n, 1)])).unwrap().depth;
        v.check(d == 1, || format!("depth({{0,{n}}}) = {d}"));
    }

    let sizes = [2usize, 4, 8, 16];
    let hyper = compare_rows(&["compare", "--preset", "hypercube", "--sizes", "2,4,8,16"]);
    let hyper_depths: Vec<Option<usize>> = hyper.iter().map(|r| r.depth).collect();
    let want: Vec<Option<usize>> = sizes.iter().map(|&n| Some(n.ilog2() as usize + 1)).collect();
    v.check(hyper_depths == want, || format!("H(n,2) depths {hyper_depths:?}, want {want:?}"));
    v.check(hyper_depths.windows(2).all(|w| w[0] <= w[1]), || "H(n,2) depth column decreases".into());

    let johnson = compare_rows(&["compare", "--preset", "johnson23", "--sizes", "4,5,6,7,8,9,10,11,12"]);
    let powers: Vec<Option<u64>> = johnson.iter().map(|r| r.two_pow_depth).collect();
    let graphs: Vec<&str> = johnson.iter().map(|r| r.graph.as_str()).collect();
    v.check(powers.iter().all(Option::is_some) && powers.windows(2).all(|w| w[0] <= w[1]), || {
        format!("Johnson(n, ceil(n^(2/3))) 2^d_L not nondecreasing: {graphs:?} -> {powers:?}")
    });
    v.summary = "depth of {0,n}, hypercube depth, Johnson 2^d_L trend".into();
    v
}

fn criterion_5(runs: &[Run]) -> Verdict {
    let mut v = Verdict::new();
    for run in runs {
        let r = &run.result;
        let (k, s) = (r.params.grover.k, r.params.phase.s);
        let per = 4.0 * PI * (1.0 - 1.0 / (1u64 << s) as f64);
        let tag = || format!("{} |M|={} {:?}", run.spec, run.marked.len(), r.mode);
        v.check(r.cost.ctqw_calls == 2 * s as u64 * k, || {
            format!("{}: ctqw_calls {} != 2sk = {}", tag(), r.cost.ctqw_calls, 2 * s as u64 * k)
        });
        v.check((r.cost.per_reflection_time - per).abs() <= 1e-12 && per < 4.0 * PI, || {
            format!("{}: per-reflection time {}", tag(), r.cost.per_reflection_time)
        });
        v.check((r.cost.total_evolution_time - k as f64 * per).abs() <= 1e-9 * (1.0 + k as f64 * per), || {
            format!("{}: total time {} != k·per = {}", tag(), r.cost.total_evolution_time, k as f64 * per)
        });
        v.check(r.cost.oracle_queries == k, || format!("{}: {} queries for k={k}", tag(), r.cost.oracle_queries));
        let bound = iteration_bound(run.marked.epsilon());
        v.check(k <= bound, || format!("{}: k={k} above {bound}", tag()));
    }
    v.summary = format!("cost identities on {} runs", runs.len());
    v
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    let p4 = path4();
    let sp = eigendecompose(laplacian(&p4).as_matrix()).unwrap();
    let cert = certify_integral(&sp, DEFAULT_INTEGRALITY_TOLERANCE).unwrap();
    match &cert {
        Certification::Rejected(r) => {
            let cites = r.offending.iter().any(|o| (o.value - (2.0 - 2f64.sqrt())).abs() < 1e-9);
            v.check(cites, || format!("P_4 rejection does not cite 2 - √2: {r}"));
        }
        Certification::Integral(_) => v.check(false, || "P_4 certified integral".into()),
    }
    for vertex in 0..4 {
        let marked = MarkedSet::new(4, [vertex]).unwrap();
        let config = SearchConfig {
            bypass_certification: true,
            ..SearchConfig::default()
        };
        let r = run_search(&p4, &marked, &config).unwrap();
        v.check(r.ancilla_residue > 1e-3 && r.success_probability < 1.0 - 1e-3, || {
            format!(
                "P_4 M={{{vertex}}}: residue {:.3e}, success {}",
                r.ancilla_residue, r.success_probability
            )
        });
    }
    let k3 = build_graph(&GraphSpec::Complete { n: 3 }).unwrap();
    let config = SearchConfig {
        params: Some(long_params(Ratio::new(1, 2)).unwrap()),
        ..SearchConfig::default()
    };
    let r = run_search(&k3, &MarkedSet::new(3, [0]).unwrap(), &config).unwrap();
    v.check(r.success_probability <= 1.0 - 1e-3, || format!("K_3 with ε=1/2: success {}", r.success_probability));
    v.summary = format!("negative controls (K_3 mismatched ε success {:.4})", r.success_probability);
    v
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let n = 3;
    let mut worst: f64 = 0.0;
    for mask in 1u32..(1 << n) {
        let marked = MarkedSet::new(n, (0..n).filter(|&i| mask >> i & 1 == 1)).unwrap();
        for theta in [PI / 5.0, PI / 2.0, PI] {
            let global = num_complex::Complex64::from_polar(1.0, -theta / 2.0);
            for col in 0..n {
                let mut joint = StateVector::joint(1, 0, &StateVector::basis(n, col)).unwrap();
                oracle_via_standard(&mut joint, &marked, theta).unwrap();
                let mut direct = StateVector::basis(n, col);
                oracle_phase(&mut direct, &marked, theta).unwrap();
                let built = joint.zero_ancilla_part();
                let dev = built
                    .amplitudes()
                    .iter()
                    .zip(direct.amplitudes())
                    .map(|(a, b)| (a - b * global).norm())
                    .fold(joint.ancilla_residue(), f64::max);
                worst = worst.max(dev);
                v.check(dev <= 1e-12, || format!("M={:?} θ={theta:.4} column {col}: {dev:.2e}", marked.members()));
            }
        }
    }
    v.summary = format!("two-query oracle on K_3, max deviation {worst:.1e}");
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let value = trotter_bound(2, 1.0, 0.1, 1).unwrap().exponentials;
    v.check((value - 894.43).abs() <= 0.01, || format!("trotter_bound(2,1,0.1,1) = {value}"));
    let grid: Vec<f64> = (1..=40).map(|i| 0.05 * i as f64 * i as f64).collect();
    for m in [1u64, 2, 5, 16] {
        for k in 1..=3 {
            let values: Vec<f64> = grid
                .iter()
                .map(|&x| trotter_bound(m, x, 0.1, k).unwrap().exponentials)
                .collect();
            v.check(values.windows(2).all(|w| w[0] < w[1]), || format!("not monotone in ‖H‖t for m={m}, k={k}"));
        }
    }
    for (lambda, n) in [(2u64, 2u64), (4, 4), (9, 12)] {
        let values: Vec<f64> = grid.iter().map(|&t| ctqw_gate_estimate(lambda, t, n).unwrap().gates).collect();
        v.check(values.windows(2).all(|w| w[0] < w[1]), || format!("not monotone in t for λ={lambda}, N={n}"));
    }
    v.summary = format!("trotter_bound(2, 1, 0.1, 1) = {value:.4}, monotone");
    v
}

fn main() {
    let mut runs = Vec::new();
    let verdicts = [
        criterion_1(&mut runs),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(&runs),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    let mut failed = 0;
    for (i, v) in verdicts.iter().enumerate() {
        let status = if v.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {}", i + 1, v.summary);
        for f in &v.failures {
            println!("    {f}");
        }
        failed += usize::from(!v.failures.is_empty());
    }
    println!("acceptance: {} passed, {failed} failed", verdicts.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
