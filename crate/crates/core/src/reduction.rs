//! Preprocessing that deletes vertices and edges which cannot belong to any
//! s-bundle larger than a known lower bound `lb`.
//!
//! * degree rule: drop `v` when `deg(v) <= lb - s`;
//! * common-neighbor rule: drop edge `{u, v}` when `|N(u) ∩ N(v)| <= lb - 2s`;
//! * neighborhood-bound rule: drop `v` when the upper bound of `G[N(v)]` is
//!   at most `lb - s`.
//!
//! [`reduce`] runs the two cheap rules to a fixpoint, applies the
//! neighborhood-bound rule once, then runs the cheap rules to a fixpoint
//! again. Edge deletions only remove edges that no larger solution uses, so
//! every s-bundle of the reduced graph is one of the original graph too.

use crate::bounds::{Adjacency, BoundKind, BoundScratch};
use crate::connectivity::check_s;
use crate::error::Result;
use crate::graph::{sorted_intersection, Graph, Vertex};

/// Outcome of a reduction: the compacted graph and, for each of its
/// vertices, the id it had in the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    pub graph: Graph,
    pub original_ids: Vec<Vertex>,
}

impl ReducedGraph {
    pub fn identity(g: &Graph) -> Self {
        ReducedGraph {
            graph: g.clone(),
            original_ids: g.vertices().collect(),
        }
    }
}

/// Mutable copy of a graph supporting vertex and edge deletion.
#[derive(Clone, Debug)]
struct WorkingGraph {
    adjacency: Vec<Vec<Vertex>>,
    alive: Vec<bool>,
}

impl Adjacency for WorkingGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }
}

impl WorkingGraph {
    fn new(g: &Graph) -> Self {
        WorkingGraph {
            adjacency: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
            alive: vec![true; g.vertex_count()],
        }
    }

    fn alive_vertices(&self) -> Vec<Vertex> {
        (0..self.adjacency.len())
            .filter(|&v| self.alive[v])
            .collect()
    }

    fn remove_vertex(&mut self, v: Vertex) {
        let neighbors = std::mem::take(&mut self.adjacency[v]);
        for w in neighbors {
            detach(&mut self.adjacency[w], v);
        }
        self.alive[v] = false;
    }

    fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        detach(&mut self.adjacency[u], v);
        detach(&mut self.adjacency[v], u);
    }

    fn finish(self) -> ReducedGraph {
        let original_ids = self.alive_vertices();
        let mut position = vec![usize::MAX; self.adjacency.len()];
        for (i, &v) in original_ids.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = original_ids
            .iter()
            .map(|&v| self.adjacency[v].iter().map(|&w| position[w]).collect())
            .collect();
        ReducedGraph {
            graph: Graph::from_unsorted(adjacency),
            original_ids,
        }
    }
}

fn detach(list: &mut Vec<Vertex>, v: Vertex) {
    if let Ok(i) = list.binary_search(&v) {
        list.remove(i);
    }
}

fn threshold(lb: usize, minus: usize) -> Option<usize> {
    lb.checked_sub(minus)
}

/// Degree rule over a snapshot of the current degrees.
fn degree_pass(g: &mut WorkingGraph, s: usize, lb: usize) -> bool {
    let Some(limit) = threshold(lb, s) else {
        return false;
    };
    let doomed: Vec<Vertex> = g
        .alive_vertices()
        .into_iter()
        .filter(|&v| g.adjacency[v].len() <= limit)
        .collect();
    for &v in &doomed {
        g.remove_vertex(v);
    }
    !doomed.is_empty()
}

/// Common-neighbor rule over a snapshot of the edge list; counts are taken
/// on the current graph, so earlier deletions in the pass are visible.
fn common_neighbor_pass(g: &mut WorkingGraph, s: usize, lb: usize) -> bool {
    let Some(limit) = threshold(lb, 2 * s) else {
        return false;
    };
    let edges: Vec<(Vertex, Vertex)> = g
        .alive_vertices()
        .into_iter()
        .flat_map(|u| {
            g.adjacency[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut changed = false;
    for (u, v) in edges {
        if sorted_intersection(&g.adjacency[u], &g.adjacency[v]).count() <= limit {
            g.remove_edge(u, v);
            changed = true;
        }
    }
    changed
}

/// Neighborhood-bound rule, ascending, with deletions applied immediately.
fn neighborhood_pass(g: &mut WorkingGraph, s: usize, lb: usize, kind: BoundKind) -> bool {
    let Some(limit) = threshold(lb, s) else {
        return false;
    };
    let mut scratch = BoundScratch::new(g.adjacency.len());
    let mut changed = false;
    for v in g.alive_vertices() {
        let neighborhood = g.adjacency[v].clone();
        if scratch.value(g, &neighborhood, s, kind, limit) <= limit {
            g.remove_vertex(v);
            changed = true;
        }
    }
    changed
}

fn single_pass(
    g: &Graph,
    s: usize,
    pass: impl FnOnce(&mut WorkingGraph) -> bool,
) -> Result<ReducedGraph> {
    check_s(s)?;
    let mut work = WorkingGraph::new(g);
    pass(&mut work);
    Ok(work.finish())
}

/// One pass of the degree rule.
pub fn rule1_pass(g: &Graph, s: usize, lb: usize) -> Result<ReducedGraph> {
    single_pass(g, s, |w| degree_pass(w, s, lb))
}

/// One pass of the common-neighbor edge rule.
pub fn rule2_pass(g: &Graph, s: usize, lb: usize) -> Result<ReducedGraph> {
    single_pass(g, s, |w| common_neighbor_pass(w, s, lb))
}

/// One pass of the neighborhood-bound rule using the partition bound.
pub fn rule3_pass(g: &Graph, s: usize, lb: usize) -> Result<ReducedGraph> {
    single_pass(g, s, |w| neighborhood_pass(w, s, lb, BoundKind::Partition))
}

/// Full preprocessing schedule with the partition bound.
pub fn reduce(g: &Graph, s: usize, lb: usize) -> Result<ReducedGraph> {
    reduce_with(g, s, lb, BoundKind::Partition)
}

/// Full preprocessing schedule with the given bound in the
/// neighborhood-bound rule.
pub fn reduce_with(g: &Graph, s: usize, lb: usize, kind: BoundKind) -> Result<ReducedGraph> {
    check_s(s)?;
    let mut work = WorkingGraph::new(g);
    loop {
        let vertices = degree_pass(&mut work, s, lb);
        let edges = common_neighbor_pass(&mut work, s, lb);
        if !vertices && !edges {
            break;
        }
    }
    neighborhood_pass(&mut work, s, lb, kind);
    loop {
        let edges = common_neighbor_pass(&mut work, s, lb);
        let vertices = degree_pass(&mut work, s, lb);
        if !vertices && !edges {
            break;
        }
    }
    Ok(work.finish())
}
