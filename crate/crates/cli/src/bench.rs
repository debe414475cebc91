use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use sbundle_core::io::{write_results, ResultFormat, ResultRecord};
use sbundle_core::{solve, SolverConfig, Variant};

use crate::report::{instance_name, load, record, three_sig, time_limit};
use crate::BenchArgs;

struct Task {
    path: PathBuf,
    s: usize,
    variant: Variant,
}

fn instances(args: &BenchArgs) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(&args.dir)
        .with_context(|| format!("cannot read directory {}", args.dir.display()))?;
    let mut paths = Vec::new();
    for entry in entries {
        let entry = entry?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if entry.file_type()?.is_file() && !hidden {
            paths.push(entry.path());
        }
    }
    paths.sort();
    Ok(paths)
}

fn run_task(task: &Task, limit: std::time::Duration) -> Result<ResultRecord> {
    let parsed = load(&task.path)?;
    let config = task
        .variant
        .configure(SolverConfig::new(task.s).with_time_limit(limit));
    let result = solve(&parsed.graph, &config)?;
    log::info!(
        "{} s={} {}: size {}{}",
        instance_name(&task.path),
        task.s,
        task.variant,
        result.best_size,
        if result.timed_out { " (timeout)" } else { "" }
    );
    Ok(record(
        instance_name(&task.path),
        &parsed,
        task.s,
        task.variant.label(),
        &result,
    ))
}

pub fn run(args: &BenchArgs) -> Result<u8> {
    let limit = time_limit(args.time_limit)?;
    if args.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    if args.s_list.contains(&0) {
        bail!("s must be a positive integer");
    }
    let variants: Vec<Variant> = args
        .variants
        .iter()
        .map(|v| v.parse::<Variant>())
        .collect::<Result<_, _>>()?;
    let paths = instances(args)?;

    let mut tasks = Vec::new();
    for path in &paths {
        for &s in &args.s_list {
            for &variant in &variants {
                tasks.push(Task {
                    path: path.clone(),
                    s,
                    variant,
                });
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()?;
    let outcomes: Vec<(usize, Result<ResultRecord>)> = pool.install(|| {
        tasks
            .par_iter()
            .enumerate()
            .map(|(i, task)| (i, run_task(task, limit)))
            .collect()
    });

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for (i, outcome) in outcomes {
        match outcome {
            Ok(rec) => records.push(rec),
            Err(err) => failures.push(format!(
                "{} s={} {}: {err:#}",
                tasks[i].path.display(),
                tasks[i].s,
                tasks[i].variant
            )),
        }
    }

    if let Some(out) = &args.out {
        let file = std::fs::File::create(out)
            .with_context(|| format!("cannot create {}", out.display()))?;
        write_results(
            &records,
            ResultFormat::from_path(out),
            std::io::BufWriter::new(file),
        )?;
    }
    print_summary(&records, &args.s_list, &variants);
    for failure in &failures {
        eprintln!("failed: {failure}");
    }
    Ok(0)
}

fn print_summary(records: &[ResultRecord], s_list: &[usize], variants: &[Variant]) {
    println!(
        "{:<24} {:>4} {:<9} {:>6} {:>10} {:>10}",
        "instance", "s", "variant", "size", "tree", "time_s"
    );
    for r in records {
        let time = if r.timed_out {
            "-".to_owned()
        } else {
            three_sig(r.time_s)
        };
        println!(
            "{:<24} {:>4} {:<9} {:>6} {:>10} {:>10}",
            r.instance, r.s, r.variant, r.size, r.tree_nodes, time
        );
    }
    println!();
    let mut solved: BTreeMap<(usize, &str), usize> = BTreeMap::new();
    for r in records.iter().filter(|r| !r.timed_out) {
        *solved.entry((r.s, r.variant.as_str())).or_default() += 1;
    }
    for variant in variants {
        let mut total = 0;
        for &s in s_list {
            let count = solved.get(&(s, variant.label())).copied().unwrap_or(0);
            total += count;
            println!("s={s}: {count} solved ({variant})");
        }
        println!("Total: {total} solved ({variant})");
    }
}
