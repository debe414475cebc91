#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sbundle_core::{Graph, Vertex};

pub const DENSITIES: [f64; 4] = [0.2, 0.4, 0.6, 0.8];
pub const S_VALUES: [usize; 4] = [1, 2, 3, 4];
pub const GRAPHS_PER_CONFIG: usize = 200;

/// G(n, p) with a fixed seed.
pub fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// One instance of the seeded random suite.
#[derive(Clone, Debug)]
pub struct Instance {
    pub s: usize,
    pub density: f64,
    pub seed: u64,
    pub graph: Graph,
}

/// 200 graphs for every (s, density) pair, with n cycling through 6..=14.
pub fn random_suite() -> Vec<Instance> {
    let mut suite = Vec::new();
    for (si, &s) in S_VALUES.iter().enumerate() {
        for (di, &density) in DENSITIES.iter().enumerate() {
            for i in 0..GRAPHS_PER_CONFIG {
                let n = 6 + i % 9;
                let seed = ((si * DENSITIES.len() + di) * GRAPHS_PER_CONFIG + i) as u64;
                suite.push(Instance {
                    s,
                    density,
                    seed,
                    graph: random_graph(n, density, 0x5b_0000 + seed),
                });
            }
        }
    }
    suite
}

/// Connected components of `G[verts]` by breadth-first search.
pub fn components(g: &Graph, verts: &[Vertex]) -> Vec<Vec<Vertex>> {
    let inside: std::collections::HashSet<Vertex> = verts.iter().copied().collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &start in verts {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if inside.contains(&w) && seen.insert(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}
