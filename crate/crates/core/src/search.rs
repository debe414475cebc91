//! The exact solver: initial lower bound, preprocessing, then a depth-first
//! branch-and-bound over a partial solution `S` and candidates `C`.
//!
//! Each node shrinks `C` with degree-based rules, prunes when the upper
//! bound of `G[S ∪ C]` cannot beat the incumbent, and branches on the
//! minimum-degree vertex `u` of `G[S ∪ C]`. If `u` violates the degree bound
//! it is first committed (after a branch that excludes it) and then a
//! multi-way branch distributes its remaining non-neighbor budget
//! `t = s - 1 - |S \ N[u]|` over its candidate non-neighbors. Otherwise
//! `G[S ∪ C]` is tested directly and, when infeasible, the search branches
//! on a minimum-degree candidate.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bounds::{BoundKind, BoundScratch};
use crate::connectivity::{check_s, induces_s_bundle, is_s_bundle_unchecked, ExtensionCheck};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::lower_bound::{generate_lb, ExpansionMode};
use crate::reduction::{reduce_with, ReducedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LbMode {
    RandomWalk,
    Greedy,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundMode {
    Partition,
    Color,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    pub s: usize,
    pub time_limit: Duration,
    pub lb_mode: LbMode,
    pub bound_mode: BoundMode,
    pub preprocess: bool,
    /// Seed partition parts with an independent set before growing them;
    /// `false` builds parts by plain sequential insertion.
    pub expand_components: bool,
    pub node_limit: Option<u64>,
}

impl SolverConfig {
    pub fn new(s: usize) -> Self {
        SolverConfig {
            s,
            time_limit: Duration::from_secs(3600),
            lb_mode: LbMode::RandomWalk,
            bound_mode: BoundMode::Partition,
            preprocess: true,
            expand_components: true,
            node_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_s(self.s)?;
        if self.time_limit.is_zero() {
            return Err(Error::invalid("time limit must be positive"));
        }
        Ok(())
    }

    pub fn bound_kind(&self) -> BoundKind {
        match (self.bound_mode, self.expand_components) {
            (BoundMode::Color, _) => BoundKind::Color,
            (BoundMode::Partition, true) => BoundKind::Partition,
            (BoundMode::Partition, false) => BoundKind::PartitionDirect,
        }
    }
}

/// Named solver configurations used for ablation runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Default,
    NoPreprocess,
    GreedyLb,
    ColorBound,
    NoExpand,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Default,
        Variant::NoPreprocess,
        Variant::GreedyLb,
        Variant::ColorBound,
        Variant::NoExpand,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Variant::Default => "default",
            Variant::NoPreprocess => "nopre",
            Variant::GreedyLb => "greedy",
            Variant::ColorBound => "color",
            Variant::NoExpand => "noexpand",
        }
    }

    pub fn configure(self, mut config: SolverConfig) -> SolverConfig {
        match self {
            Variant::Default => {}
            Variant::NoPreprocess => config.preprocess = false,
            Variant::GreedyLb => config.lb_mode = LbMode::Greedy,
            Variant::ColorBound => config.bound_mode = BoundMode::Color,
            Variant::NoExpand => config.expand_components = false,
        }
        config
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.label() == s)
            .ok_or_else(|| Error::invalid(format!("unknown variant `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverResult {
    pub best_size: usize,
    /// Vertex ids of the input graph, ascending.
    pub witness: Vec<Vertex>,
    pub initial_lb: usize,
    pub tree_nodes: u64,
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub elapsed: Duration,
    pub timed_out: bool,
}

/// Partial solution `S`, candidates `C`, and for every vertex its number
/// of neighbors in `S` and in `S ∪ C`.
#[derive(Clone, Debug)]
pub struct SearchState {
    solution: VertexSet,
    candidates: VertexSet,
    solution_len: usize,
    candidate_len: usize,
    degree_in_solution: Vec<u32>,
    degree_in_union: Vec<u32>,
}

impl SearchState {
    pub fn new(g: &Graph, solution: &VertexSet, candidates: &VertexSet) -> Result<Self> {
        let n = g.vertex_count();
        if solution.capacity() != n || candidates.capacity() != n {
            return Err(Error::invalid("state sets must span the graph's vertices"));
        }
        if !solution.is_disjoint(candidates) {
            return Err(Error::invalid("solution and candidates overlap"));
        }
        let mut state = SearchState {
            solution: solution.clone(),
            candidates: candidates.clone(),
            solution_len: solution.len(),
            candidate_len: candidates.len(),
            degree_in_solution: vec![0; n],
            degree_in_union: vec![0; n],
        };
        state.recount(g);
        Ok(state)
    }

    pub fn solution(&self) -> &VertexSet {
        &self.solution
    }

    pub fn candidates(&self) -> &VertexSet {
        &self.candidates
    }

    fn recount(&mut self, g: &Graph) {
        self.degree_in_solution.fill(0);
        self.degree_in_union.fill(0);
        for v in self.solution.iter() {
            for &w in g.neighbors(v) {
                self.degree_in_solution[w] += 1;
                self.degree_in_union[w] += 1;
            }
        }
        for v in self.candidates.iter() {
            for &w in g.neighbors(v) {
                self.degree_in_union[w] += 1;
            }
        }
    }

    fn len(&self) -> usize {
        self.solution_len + self.candidate_len
    }

    fn members(&self) -> Vec<Vertex> {
        let mut union = self.solution.clone();
        union.union_with(&self.candidates);
        union.to_vec()
    }

    fn drop_candidate(&mut self, g: &Graph, v: Vertex) {
        debug_assert!(self.candidates.contains(v));
        self.candidates.remove(v);
        self.candidate_len -= 1;
        for &w in g.neighbors(v) {
            self.degree_in_union[w] -= 1;
        }
    }

    fn commit(&mut self, g: &Graph, v: Vertex) {
        debug_assert!(self.candidates.contains(v));
        self.candidates.remove(v);
        self.candidate_len -= 1;
        self.solution.insert(v);
        self.solution_len += 1;
        for &w in g.neighbors(v) {
            self.degree_in_solution[w] += 1;
        }
    }

    /// Whether `S ∪ {v}` is an s-bundle.
    fn can_commit(&self, check: &mut ExtensionCheck, g: &Graph, v: Vertex, s: usize) -> bool {
        let size = self.solution_len + 1;
        if size <= s {
            return true;
        }
        let required = (size - s) as u32;
        if self.degree_in_solution[v] < required {
            return false;
        }
        let neighbors = g.neighbors(v);
        let degree_ok = self.solution.iter().all(|w| {
            let gained = neighbors.binary_search(&w).is_ok() as u32;
            self.degree_in_solution[w] + gained >= required
        });
        if !degree_ok {
            return false;
        }
        check.extends(g, self.solution.iter(), v, s)
    }

    #[cfg(debug_assertions)]
    fn check_counters(&self, g: &Graph) {
        let mut fresh = self.clone();
        fresh.recount(g);
        debug_assert_eq!(fresh.degree_in_solution, self.degree_in_solution);
        debug_assert_eq!(fresh.degree_in_union, self.degree_in_union);
        debug_assert_eq!(self.solution.len(), self.solution_len);
        debug_assert_eq!(self.candidates.len(), self.candidate_len);
        debug_assert!(self.solution.is_disjoint(&self.candidates));
    }
}

/// Shrinks `C` to a fixpoint with three degree rules, given incumbent
/// size `lb`:
///
/// * drop `u ∈ C` with `deg_{S∪C}(u) <= lb - s`;
/// * drop `u ∈ C` with `deg_S(u) <= |S| - s`;
/// * for `v ∈ S` with exactly `|S| - s` neighbors in `S`, drop every
///   candidate not adjacent to `v`.
///
/// Returns `true` when some `v ∈ S` has `deg_{S∪C}(v) <= lb - s`, in which
/// case no solution through this node can exceed `lb`.
pub fn reduce_candidates(state: &mut SearchState, g: &Graph, s: usize, lb: usize) -> bool {
    let mut saturated = vec![false; g.vertex_count()];
    let mut doomed = Vec::new();
    loop {
        let union_floor = lb as i64 - s as i64;
        let size = state.solution_len as i64;
        let solution_floor = size - s as i64;
        let mut saturated_count = 0u32;
        for v in state.solution.iter() {
            if (state.degree_in_union[v] as i64) <= union_floor {
                return true;
            }
            let is_saturated = state.degree_in_solution[v] as i64 == solution_floor;
            saturated[v] = is_saturated;
            saturated_count += is_saturated as u32;
        }
        doomed.clear();
        for u in state.candidates.iter() {
            let low_union = (state.degree_in_union[u] as i64) <= union_floor;
            let low_solution = (state.degree_in_solution[u] as i64) <= solution_floor;
            let misses_saturated = saturated_count > 0
                && g.neighbors(u).iter().filter(|&&w| saturated[w]).count()
                    < saturated_count as usize;
            if low_union || low_solution || misses_saturated {
                doomed.push(u);
            }
        }
        for v in state.solution.iter() {
            saturated[v] = false;
        }
        if doomed.is_empty() {
            return false;
        }
        for &u in &doomed {
            state.drop_candidate(g, u);
        }
    }
}

struct Search<'a> {
    graph: &'a Graph,
    s: usize,
    bound: BoundKind,
    scratch: BoundScratch,
    extension: ExtensionCheck,
    best_size: usize,
    best: Option<Vec<Vertex>>,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, s: usize, bound: BoundKind, lb: usize) -> Self {
        Search {
            graph,
            s,
            bound,
            scratch: BoundScratch::new(graph.vertex_count()),
            extension: ExtensionCheck::new(graph.vertex_count()),
            best_size: lb,
            best: None,
            nodes: 0,
            node_limit: None,
            deadline: None,
            aborted: false,
        }
    }

    fn record(&mut self, solution: Vec<Vertex>) {
        if solution.len() > self.best_size {
            self.best_size = solution.len();
            self.best = Some(solution);
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        let over_nodes = self.node_limit.is_some_and(|limit| self.nodes > limit);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        self.aborted = over_nodes || over_time;
        self.aborted
    }

    fn branch(&mut self, mut state: SearchState) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let g = self.graph;
        let s = self.s;
        // full recounts are linear in the graph, so only small ones are checked
        #[cfg(debug_assertions)]
        if g.vertex_count() <= 64 {
            state.check_counters(g);
        }

        if state.solution_len > self.best_size {
            self.record(state.solution.to_vec());
        }
        if reduce_candidates(&mut state, g, s, self.best_size) {
            return;
        }
        if state.len() <= self.best_size {
            return;
        }
        let members = state.members();
        let limit = self.best_size;
        if self.scratch.value(g, &members, s, self.bound, limit) <= limit {
            return;
        }

        let pivot = lowest_degree(&members, &state.degree_in_union);
        let total = members.len();
        if (state.degree_in_union[pivot] as usize) + s < total {
            self.branch_on_pivot(state, pivot);
            return;
        }

        if is_s_bundle_unchecked(&g.induced_by_sorted(&members), s) {
            self.record(members);
            return;
        }
        let candidates = state.candidates.to_vec();
        let u = lowest_degree(&candidates, &state.degree_in_union);
        let mut without = state.clone();
        without.drop_candidate(g, u);
        self.branch(without);
        if self.aborted || !state.can_commit(&mut self.extension, g, u, s) {
            return;
        }
        state.commit(g, u);
        self.branch(state);
    }

    /// The pivot has more than `s - 1` non-neighbors in `S ∪ C`.
    fn branch_on_pivot(&mut self, mut state: SearchState, pivot: Vertex) {
        let g = self.graph;
        let s = self.s;
        if state.candidates.contains(pivot) {
            let mut without = state.clone();
            without.drop_candidate(g, pivot);
            self.branch(without);
            if self.aborted || !state.can_commit(&mut self.extension, g, pivot, s) {
                return;
            }
            state.commit(g, pivot);
        }

        // S is an s-bundle containing the pivot, so at most s - 1 of its
        // members miss the pivot and the budget is non-negative.
        let missed = state.solution_len - 1 - state.degree_in_solution[pivot] as usize;
        let Some(budget) = (s - 1).checked_sub(missed) else {
            debug_assert!(false, "partial solution violates the degree bound");
            return;
        };
        let neighbors = g.neighbors(pivot);
        let mut outsiders: Vec<Vertex> = state
            .candidates
            .iter()
            .filter(|v| neighbors.binary_search(v).is_err())
            .collect();
        outsiders.sort_by_key(|&v| (state.degree_in_union[v], v));

        let taken = budget.min(outsiders.len());
        let mut prefix = state;
        for (i, &v) in outsiders[..taken].iter().enumerate() {
            // include outsiders[..i], exclude outsiders[i]
            let mut child = prefix.clone();
            child.drop_candidate(g, v);
            self.branch(child);
            if self.aborted || !prefix.can_commit(&mut self.extension, g, v, s) {
                return;
            }
            prefix.commit(g, v);
            debug_assert!(i < taken);
        }
        // include outsiders[..taken], keep only the pivot's neighbors
        for &v in &outsiders[taken..] {
            prefix.drop_candidate(g, v);
        }
        self.branch(prefix);
    }
}

/// Lowest-id vertex among those of minimum counter value.
fn lowest_degree(vertices: &[Vertex], degree: &[u32]) -> Vertex {
    let mut best = vertices[0];
    for &v in &vertices[1..] {
        if degree[v] < degree[best] {
            best = v;
        }
    }
    best
}

/// Outcome of [`bnb`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnbOutcome {
    /// `max(lb, best size found)`.
    pub lb: usize,
    /// A solution of size `lb` if the search improved on the input bound.
    pub improved: Option<Vec<Vertex>>,
    pub nodes: u64,
    pub aborted: bool,
}

/// Best s-bundle `F` with `S ⊆ F ⊆ S ∪ C`, provided it beats `lb`.
/// `S` must induce an s-bundle.
pub fn bnb(
    g: &Graph,
    s: usize,
    state: SearchState,
    lb: usize,
    bound_mode: BoundMode,
) -> Result<BnbOutcome> {
    check_s(s)?;
    if !induces_s_bundle(g, &state.solution.to_vec(), s) {
        return Err(Error::invalid("partial solution is not an s-bundle"));
    }
    let kind = match bound_mode {
        BoundMode::Partition => BoundKind::Partition,
        BoundMode::Color => BoundKind::Color,
    };
    let mut search = Search::new(g, s, kind, lb);
    search.branch(state);
    Ok(BnbOutcome {
        lb: search.best_size,
        improved: search.best,
        nodes: search.nodes,
        aborted: search.aborted,
    })
}

/// Maximum s-bundle of `g`: lower bound, preprocessing, branch-and-bound.
/// The returned witness is re-verified against `g`.
pub fn solve(g: &Graph, config: &SolverConfig) -> Result<SolverResult> {
    config.validate()?;
    let started = Instant::now();
    let s = config.s;

    let incumbent: Vec<Vertex> = match config.lb_mode {
        LbMode::RandomWalk => generate_lb(g, s, ExpansionMode::RandomWalk)?.to_vec(),
        LbMode::Greedy => generate_lb(g, s, ExpansionMode::Greedy)?.to_vec(),
        LbMode::None => Vec::new(),
    };
    let initial_lb = incumbent.len();
    log::debug!("initial lower bound {initial_lb}");

    let kind = config.bound_kind();
    let reduced = if config.preprocess {
        reduce_with(g, s, initial_lb, kind)?
    } else {
        ReducedGraph::identity(g)
    };
    log::debug!(
        "reduced graph: {} vertices, {} edges",
        reduced.graph.vertex_count(),
        reduced.graph.edge_count()
    );

    let h = &reduced.graph;
    let state = SearchState::new(
        h,
        &VertexSet::new(h.vertex_count()),
        &VertexSet::full(h.vertex_count()),
    )?;
    let mut search = Search::new(h, s, kind, initial_lb);
    search.node_limit = config.node_limit;
    search.deadline = started.checked_add(config.time_limit);
    search.branch(state);

    let witness: Vec<Vertex> = match search.best {
        Some(found) => {
            let mut ids: Vec<Vertex> = found.iter().map(|&v| reduced.original_ids[v]).collect();
            ids.sort_unstable();
            ids
        }
        None => incumbent,
    };
    if witness.len() != search.best_size.max(initial_lb) || !induces_s_bundle(g, &witness, s) {
        return Err(Error::InvalidWitness);
    }
    Ok(SolverResult {
        best_size: witness.len(),
        witness,
        initial_lb,
        tree_nodes: search.nodes,
        reduced_vertices: h.vertex_count(),
        reduced_edges: h.edge_count(),
        elapsed: started.elapsed(),
        timed_out: search.aborted,
    })
}
