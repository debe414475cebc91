//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails.

mod common;

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::{components, data_dir, random_graph, random_suite, Instance};
use sbundle_core::connectivity::UNLIMITED;
use sbundle_core::io::read_graph_file;
use sbundle_core::oracle::{
    brute_force_is_s_bundle, brute_force_local_connectivity, brute_force_max_s_bundle,
    brute_force_vertex_connectivity,
};
use sbundle_core::reduction::reduce;
use sbundle_core::*;

const INSTANCE_LIMIT: Duration = Duration::from_secs(300);

enum Status {
    Pass,
    Fail,
    Partial,
}

struct Report {
    failed: bool,
}

impl Report {
    fn line(&mut self, id: &str, title: &str, status: Status, detail: String) {
        let word = match status {
            Status::Pass => "PASS",
            Status::Fail => {
                self.failed = true;
                "FAIL"
            }
            Status::Partial => "PARTIAL",
        };
        println!("{id} {title:<32} {word:<7} {detail}");
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

struct Solved {
    instance: Instance,
    optimum: usize,
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn exactness(report: &mut Report, suite: &[Solved]) {
    let started = Instant::now();
    let mut bad = Vec::new();
    for item in suite {
        let (g, s) = (&item.instance.graph, item.instance.s);
        let result = solve(g, &SolverConfig::new(s)).unwrap();
        let ok = !result.timed_out
            && result.best_size == item.optimum
            && result.witness.len() == item.optimum
            && brute_force_is_s_bundle(g, &result.witness, s).unwrap();
        if !ok {
            bad.push(item.instance.seed);
        }
    }
    report.line(
        "C1",
        "oracle exactness",
        status(bad.is_empty()),
        format!(
            "{}/{} graphs match the brute-force optimum with verified witnesses ({}){}",
            suite.len() - bad.len(),
            suite.len(),
            secs(started.elapsed()),
            failures(&bad)
        ),
    );
}

fn failures(seeds: &[u64]) -> String {
    if seeds.is_empty() {
        String::new()
    } else {
        format!("; failing seeds {:?}", &seeds[..seeds.len().min(10)])
    }
}

fn connectivity(report: &mut Report) {
    let mut threshold_checks = 0;
    let mut pair_checks = 0;
    let mut bad = Vec::new();
    for i in 0..100u64 {
        let n = 2 + (i as usize % 7);
        let density = [0.2, 0.4, 0.6, 0.8][i as usize % 4];
        let g = random_graph(n, density, 0xc0_0000 + i);
        let kappa = brute_force_vertex_connectivity(&g).unwrap();
        for k in 0..=n {
            threshold_checks += 1;
            if vertex_connectivity_at_least(&g, k) != (kappa >= k) {
                bad.push(i);
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                pair_checks += 1;
                let exact = brute_force_local_connectivity(&g, u, v).unwrap();
                if local_connectivity(&g, u, v, UNLIMITED).unwrap() != exact {
                    bad.push(i);
                }
            }
        }
    }
    bad.dedup();
    report.line(
        "C2",
        "connectivity cross-validation",
        status(bad.is_empty()),
        format!(
            "100 graphs, {threshold_checks} threshold and {pair_checks} pair checks{}",
            failures(&bad)
        ),
    );
}

fn bound_soundness(report: &mut Report, suite: &[Solved]) {
    let mut bad = Vec::new();
    let mut parts_checked = 0;
    let mut pub_total = 0;
    let mut color_total = 0;
    for item in suite {
        let (g, s) = (&item.instance.graph, item.instance.s);
        let all = VertexSet::full(g.vertex_count());
        let (ub, partition) = partition_bound(g, &all, s).unwrap();
        let color = color_bound(g, &all, s).unwrap();
        pub_total += ub;
        color_total += color;
        let mut ok = ub >= item.optimum && color >= item.optimum;
        for part in &partition.parts {
            parts_checked += 1;
            ok &= components(g, &part.vertices).iter().all(|c| c.len() <= s);
        }
        ok &= partition_bound(g, &all, 1).unwrap().0 == color_bound(g, &all, 1).unwrap();
        if !ok {
            bad.push(item.instance.seed);
        }
    }
    report.line(
        "C3",
        "bound soundness",
        status(bad.is_empty()),
        format!(
            "{} graphs, {parts_checked} parts verified as s-components; mean PUB {:.2} vs color {:.2}{}",
            suite.len(),
            pub_total as f64 / suite.len() as f64,
            color_total as f64 / suite.len() as f64,
            failures(&bad)
        ),
    );
}

fn reduction_safety(report: &mut Report, suite: &[Solved]) {
    let mut bad = Vec::new();
    let mut removed = 0;
    for item in suite {
        let (g, s) = (&item.instance.graph, item.instance.s);
        let lb = generate_lb(g, s, ExpansionMode::RandomWalk).unwrap().len();
        let reduced = reduce(g, s, lb).unwrap();
        removed += g.vertex_count() - reduced.graph.vertex_count();
        let (reduced_opt, _) = brute_force_max_s_bundle(&reduced.graph, s).unwrap();
        if lb.max(reduced_opt) != item.optimum {
            bad.push(item.instance.seed);
        }
    }
    report.line(
        "C4",
        "reduction safety",
        status(bad.is_empty()),
        format!(
            "max(LB, opt(reduced)) = opt on {}/{} graphs ({removed} vertices removed in total){}",
            suite.len() - bad.len(),
            suite.len(),
            failures(&bad)
        ),
    );
}

fn lower_bound_quality(report: &mut Report, suite: &[Solved]) {
    let mut bad = Vec::new();
    let mut whole = 0;
    let mut at_optimum = 0;
    for item in suite {
        let (g, s) = (&item.instance.graph, item.instance.s);
        let set = generate_lb(g, s, ExpansionMode::RandomWalk)
            .unwrap()
            .to_vec();
        let mut ok = brute_force_is_s_bundle(g, &set, s).unwrap();
        for u in g.vertices().filter(|u| !set.contains(u)) {
            let mut with = set.clone();
            with.push(u);
            ok &= !brute_force_is_s_bundle(g, &with, s).unwrap();
        }
        let all: Vec<Vertex> = g.vertices().collect();
        if brute_force_is_s_bundle(g, &all, s).unwrap() {
            whole += 1;
            ok &= set.len() == g.vertex_count();
        }
        ok &= set.len() >= greedy_clique(g).len();
        at_optimum += usize::from(set.len() == item.optimum);
        if !ok {
            bad.push(item.instance.seed);
        }
    }
    report.line(
        "C5",
        "lower-bound quality",
        status(bad.is_empty()),
        format!(
            "feasible and maximal on {}/{}; {whole} whole-graph bundles recovered; LB optimal on {at_optimum}{}",
            suite.len() - bad.len(),
            suite.len(),
            failures(&bad)
        ),
    );
}

struct Run {
    name: String,
    s: usize,
    result: SolverResult,
    verified: bool,
}

fn run_instance(path: &Path, s: usize) -> Run {
    let parsed = read_graph_file(path).unwrap();
    let g = &parsed.graph;
    let result = solve(g, &SolverConfig::new(s).with_time_limit(INSTANCE_LIMIT)).unwrap();
    let set = VertexSet::from_vertices(g.vertex_count(), result.witness.iter().copied());
    let (h, _) = g.induced_subgraph(&set).unwrap();
    let verified = find_violation(&h, s).unwrap().is_none() && set.len() == result.best_size;
    let name = path.file_stem().unwrap().to_string_lossy().into_owned();
    Run {
        name,
        s,
        result,
        verified,
    }
}

fn chesapeake_file() -> Option<PathBuf> {
    let dir = PathBuf::from(std::env::var_os("SBUNDLE_DATA_DIR")?);
    std::fs::read_dir(dir)
        .ok()?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .find(|p| {
            p.file_name()
                .is_some_and(|n| n.to_string_lossy().contains("chesapeake"))
        })
}

fn instances(report: &mut Report) {
    let dir = data_dir();
    let mut jobs = vec![
        (dir.join("c-fat200-1.clq"), 2),
        (dir.join("c-fat200-1.clq"), 8),
        (dir.join("c-fat500-1.clq"), 2),
        (dir.join("hamming6-4.clq"), 2),
    ];
    let chesapeake = chesapeake_file();
    if let Some(path) = &chesapeake {
        jobs.push((path.clone(), 2));
        jobs.push((path.clone(), 8));
    }
    let mut all_ok = true;
    let mut details = Vec::new();
    for (path, s) in jobs {
        let run = run_instance(&path, s);
        let ok = run.verified && !run.result.timed_out && run.result.elapsed <= INSTANCE_LIMIT;
        all_ok &= ok;
        details.push(format!(
            "{} s={}: size {}, {} nodes, {}{}",
            run.name,
            run.s,
            run.result.best_size,
            run.result.tree_nodes,
            secs(run.result.elapsed),
            if ok { "" } else { " NOT SOLVED" }
        ));
    }
    let state = match (all_ok, chesapeake.is_some()) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => {
            details.push("chesapeake s=2,8 not run (set SBUNDLE_DATA_DIR)".into());
            Status::Partial
        }
    };
    report.line("C6", "benchmark instances", state, details.join("; "));
}

fn reduction_magnitude(report: &mut Report) {
    let parsed = read_graph_file(data_dir().join("c-fat200-1.clq")).unwrap();
    let g = &parsed.graph;
    let result = solve(g, &SolverConfig::new(2)).unwrap();
    let (v, e) = (result.reduced_vertices, result.reduced_edges);
    let set = VertexSet::from_vertices(g.vertex_count(), result.witness.iter().copied());
    let (h, _) = g.induced_subgraph(&set).unwrap();
    let ok = v <= g.vertex_count() && !result.timed_out && is_s_bundle(&h, 2).unwrap();
    report.line(
        "C7",
        "reduction magnitude (c-fat200-1)",
        status(ok),
        format!(
            "|V'| = {v}, |E'| = {e} (reference 90/729, delta {:+}/{:+}); LB {}, optimum {}",
            v as i64 - 90,
            e as i64 - 729,
            result.initial_lb,
            result.best_size
        ),
    );
}

fn ablation(report: &mut Report, suite: &[Solved]) {
    let started = Instant::now();
    let mut bad = Vec::new();
    for item in suite {
        let (g, s) = (&item.instance.graph, item.instance.s);
        for variant in Variant::ALL.into_iter().filter(|&v| v != Variant::Default) {
            let result = solve(g, &variant.configure(SolverConfig::new(s))).unwrap();
            if result.best_size != item.optimum || result.timed_out {
                bad.push(item.instance.seed);
            }
        }
    }
    bad.dedup();
    report.line(
        "C8",
        "ablation consistency",
        status(bad.is_empty()),
        format!(
            "nopre, greedy, color and noexpand agree with the default on {}/{} graphs ({}){}",
            suite.len() - bad.len(),
            suite.len(),
            secs(started.elapsed()),
            failures(&bad)
        ),
    );
}

fn main() {
    let started = Instant::now();
    let suite: Vec<Solved> = random_suite()
        .into_iter()
        .map(|instance| {
            let (optimum, _) = brute_force_max_s_bundle(&instance.graph, instance.s).unwrap();
            Solved { instance, optimum }
        })
        .collect();
    println!(
        "random suite: {} graphs, oracle optima computed in {}",
        suite.len(),
        secs(started.elapsed())
    );

    let mut report = Report { failed: false };
    exactness(&mut report, &suite);
    connectivity(&mut report);
    bound_soundness(&mut report, &suite);
    reduction_safety(&mut report, &suite);
    lower_bound_quality(&mut report, &suite);
    instances(&mut report);
    reduction_magnitude(&mut report);
    ablation(&mut report, &suite);
    println!("acceptance suite finished in {}", secs(started.elapsed()));
    if report.failed {
        std::process::exit(1);
    }
}
