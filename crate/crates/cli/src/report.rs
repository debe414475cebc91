use std::path::Path;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use sbundle_core::io::{read_graph_file, ParsedGraph, ResultRecord};
use sbundle_core::SolverResult;

pub fn load(path: &Path) -> Result<ParsedGraph> {
    read_graph_file(path).with_context(|| format!("cannot read graph {}", path.display()))
}

pub fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn time_limit(seconds: f64) -> Result<Duration> {
    if !(seconds.is_finite() && seconds > 0.0) {
        bail!("time limit must be a positive number of seconds");
    }
    Ok(Duration::from_secs_f64(seconds))
}

pub fn record(
    instance: String,
    parsed: &ParsedGraph,
    s: usize,
    variant: &str,
    result: &SolverResult,
) -> ResultRecord {
    ResultRecord {
        instance,
        s,
        size: result.best_size,
        witness: result.witness.iter().map(|&v| parsed.label(v)).collect(),
        reduced_v: result.reduced_vertices,
        reduced_e: result.reduced_edges,
        tree_nodes: result.tree_nodes,
        time_s: result.elapsed.as_secs_f64(),
        timed_out: result.timed_out,
        variant: variant.to_owned(),
    }
}

/// `x` rounded to three significant figures.
pub fn three_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(magnitude - 2);
    let rounded = (x / scale).round() * scale;
    // rounding may carry into the next power of ten
    let magnitude = rounded.abs().log10().floor() as i32;
    let decimals = (2 - magnitude).max(0) as usize;
    format!("{rounded:.decimals$}")
}
