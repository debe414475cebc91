use anyhow::Result;
use sbundle_core::{solve, BoundMode, LbMode, SolverConfig, Variant};

use crate::report::{instance_name, load, record, three_sig, time_limit};
use crate::{BoundArg, LbArg, SolveArgs, EXIT_TIMEOUT};

fn config(args: &SolveArgs) -> Result<SolverConfig> {
    let mut config =
        SolverConfig::new(args.s as usize).with_time_limit(time_limit(args.time_limit)?);
    config.lb_mode = match args.lb {
        LbArg::Randwalk => LbMode::RandomWalk,
        LbArg::Greedy => LbMode::Greedy,
        LbArg::None => LbMode::None,
    };
    config.bound_mode = match args.bound {
        BoundArg::Pub => BoundMode::Partition,
        BoundArg::Color => BoundMode::Color,
    };
    config.preprocess = !args.no_preprocess;
    config.expand_components = !args.no_expand;
    Ok(config)
}

/// The named variant this configuration corresponds to, if any.
fn variant_label(config: &SolverConfig) -> String {
    let base = SolverConfig::new(config.s).with_time_limit(config.time_limit);
    Variant::ALL
        .into_iter()
        .find(|v| v.configure(base.clone()) == *config)
        .map_or_else(|| "custom".to_owned(), |v| v.label().to_owned())
}

pub fn run(args: &SolveArgs) -> Result<u8> {
    let config = config(args)?;
    let parsed = load(&args.graph)?;
    let result = solve(&parsed.graph, &config)?;
    let rec = record(
        instance_name(&args.graph),
        &parsed,
        config.s,
        &variant_label(&config),
        &result,
    );

    if args.quiet {
        println!("{}", rec.size);
    } else {
        let status = if rec.timed_out {
            "best found (time limit reached)"
        } else {
            "optimum"
        };
        println!("instance: {}", rec.instance);
        println!("s: {}", rec.s);
        println!("size: {} ({status})", rec.size);
        let witness: Vec<String> = rec.witness.iter().map(u64::to_string).collect();
        println!("witness: {}", witness.join(" "));
        println!("initial lower bound: {}", result.initial_lb);
        println!(
            "reduced graph: {} vertices, {} edges",
            rec.reduced_v, rec.reduced_e
        );
        println!("tree nodes: {}", rec.tree_nodes);
        println!("time: {} s", three_sig(rec.time_s));
    }
    if let Some(path) = &args.json {
        let file = std::fs::File::create(path)?;
        serde_json::to_writer_pretty(file, &rec)?;
    }
    Ok(if rec.timed_out { EXIT_TIMEOUT } else { 0 })
}
