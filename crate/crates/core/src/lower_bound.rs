//! Initial lower bound: a maximal clique grown greedily by degree, then
//! expanded into a maximal s-bundle. Expansion candidates are ranked by a
//! short lazy random walk started from the current solution.

use num_traits::Float;

use crate::connectivity::{check_s, extends_s_bundle};
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};

/// Number of diffusion steps used to rank expansion candidates.
pub const WALK_STEPS: usize = 3;

/// Per-vertex weights produced by [`lazy_walk_scores`].
#[derive(Clone, Debug, PartialEq)]
pub struct WalkWeights<F> {
    weights: Vec<F>,
}

impl<F: Float> WalkWeights<F> {
    pub fn get(&self, v: Vertex) -> F {
        self.weights[v]
    }

    pub fn as_slice(&self) -> &[F] {
        &self.weights
    }

    pub fn total(&self) -> F {
        self.weights.iter().fold(F::zero(), |acc, &w| acc + w)
    }
}

/// Maximal clique built by repeatedly taking the candidate with the most
/// neighbors among the remaining candidates (lowest id on ties) and
/// discarding its non-neighbors.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let n = g.vertex_count();
    let mut clique = VertexSet::new(n);
    let mut candidates: Vec<Vertex> = g.vertices().collect();
    let mut is_candidate = vec![true; n];
    while !candidates.is_empty() {
        let mut best = candidates[0];
        let mut best_degree = 0;
        for (i, &v) in candidates.iter().enumerate() {
            let d = g.neighbors(v).iter().filter(|&&w| is_candidate[w]).count();
            if i == 0 || d > best_degree {
                best = v;
                best_degree = d;
            }
        }
        clique.insert(best);
        let keep = g.neighbors(best);
        for &v in &candidates {
            is_candidate[v] = false;
        }
        candidates.retain(|v| keep.binary_search(v).is_ok());
        for &v in &candidates {
            is_candidate[v] = true;
        }
    }
    clique
}

/// Lazy random walk `w ← ½(I + D⁻¹A)ᵀ w` started with unit weight on every
/// seed vertex. Each step a vertex keeps half its weight and splits the
/// other half evenly among its neighbors; isolated vertices keep all of it.
pub fn lazy_walk_scores<F: Float>(g: &Graph, seed: &VertexSet, steps: usize) -> WalkWeights<F> {
    let n = g.vertex_count();
    let half = F::from(0.5).expect("float type represents 0.5");
    let mut weights = vec![F::zero(); n];
    for v in seed.iter() {
        weights[v] = F::one();
    }
    let mut next = vec![F::zero(); n];
    for _ in 0..steps {
        next.fill(F::zero());
        for v in g.vertices() {
            let w = weights[v];
            if w == F::zero() {
                continue;
            }
            let degree = g.degree(v);
            if degree == 0 {
                next[v] = next[v] + w;
                continue;
            }
            next[v] = next[v] + half * w;
            let share = half * w / F::from(degree).expect("degree fits the float type");
            for &u in g.neighbors(v) {
                next[u] = next[u] + share;
            }
        }
        std::mem::swap(&mut weights, &mut next);
    }
    WalkWeights { weights }
}

/// How the next expansion candidate is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionMode {
    /// Highest lazy-random-walk weight from the current solution.
    RandomWalk,
    /// Most neighbors inside the current solution.
    Greedy,
}

/// Membership rule for the set being grown. Implementations describe a
/// hereditary property; [`expand_maximal`] relies on that to discard a
/// candidate for good once it is rejected.
pub trait GrowthRule {
    /// Cheap necessary condition for a vertex with `adjacent` neighbors in
    /// a solution of size `size` to ever join it. Must stay false once it
    /// becomes false while the solution grows.
    fn may_join(&self, adjacent: usize, size: usize) -> bool;

    /// Whether the ascending id list `members` extended by `u` still has
    /// the property.
    fn accepts(&self, g: &Graph, members: &[Vertex], u: Vertex) -> bool;
}

/// s-bundle membership: degree bound as the filter, connectivity as the
/// exact test.
#[derive(Clone, Copy, Debug)]
pub struct SBundleRule {
    pub s: usize,
}

impl GrowthRule for SBundleRule {
    fn may_join(&self, adjacent: usize, size: usize) -> bool {
        adjacent + self.s > size
    }

    fn accepts(&self, g: &Graph, members: &[Vertex], u: Vertex) -> bool {
        extends_s_bundle(g, members, u, self.s)
    }
}

/// Greedy clique expanded into a maximal s-bundle.
pub fn generate_lb(g: &Graph, s: usize, mode: ExpansionMode) -> Result<VertexSet> {
    check_s(s)?;
    let start = greedy_clique(g);
    Ok(expand_maximal(g, start, mode, &SBundleRule { s }))
}

/// Grows `start` one vertex at a time until no outside vertex can join
/// under `rule`. Candidates failing [`GrowthRule::may_join`] leave the pool
/// before each pick; a picked candidate either joins or leaves the pool.
/// `start` itself must satisfy the rule.
pub fn expand_maximal<R: GrowthRule>(
    g: &Graph,
    start: VertexSet,
    mode: ExpansionMode,
    rule: &R,
) -> VertexSet {
    let n = g.vertex_count();
    let mut solution = start;
    let mut members: Vec<Vertex> = solution.iter().collect();
    let mut adjacent = vec![0usize; n];
    for &v in &members {
        for &w in g.neighbors(v) {
            adjacent[w] += 1;
        }
    }
    let mut pool: Vec<Vertex> = g.vertices().filter(|&v| !solution.contains(v)).collect();

    loop {
        pool.retain(|&u| rule.may_join(adjacent[u], members.len()));
        if pool.is_empty() {
            break;
        }
        let pick = match mode {
            ExpansionMode::RandomWalk => {
                let scores = lazy_walk_scores::<f64>(g, &solution, WALK_STEPS);
                argmax_by_key(&pool, |u| scores.get(u))
            }
            ExpansionMode::Greedy => argmax_by_key(&pool, |u| adjacent[u] as f64),
        };
        let u = pool[pick];
        pool.remove(pick);
        if rule.accepts(g, &members, u) {
            solution.insert(u);
            let at = members.partition_point(|&v| v < u);
            members.insert(at, u);
            for &w in g.neighbors(u) {
                adjacent[w] += 1;
            }
        }
    }
    solution
}

/// Index of the first maximum; `pool` is ascending so ties go to the
/// lowest id.
fn argmax_by_key(pool: &[Vertex], key: impl Fn(Vertex) -> f64) -> usize {
    let mut best = 0;
    let mut best_key = key(pool[0]);
    for (i, &u) in pool.iter().enumerate().skip(1) {
        let k = key(u);
        if k > best_key {
            best = i;
            best_key = k;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_s_bundle;

    #[test]
    fn greedy_clique_examples() {
        assert_eq!(greedy_clique(&Graph::complete(6)).len(), 6);
        assert_eq!(greedy_clique(&Graph::star(4)).to_vec(), vec![0, 1]);
        assert_eq!(greedy_clique(&Graph::empty(3)).to_vec(), vec![0]);
        assert!(greedy_clique(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn walk_from_isolated_seed_stays_put() {
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let w = lazy_walk_scores::<f64>(&g, &VertexSet::from_vertices(3, [0]), 3);
        assert_eq!(w.as_slice(), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn walk_one_step_on_an_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let w = lazy_walk_scores::<f64>(&g, &VertexSet::from_vertices(2, [0]), 1);
        assert_eq!(w.as_slice(), &[0.5, 0.5]);
        let w32 = lazy_walk_scores::<f32>(&g, &VertexSet::from_vertices(2, [0]), 1);
        assert_eq!(w32.as_slice(), &[0.5f32, 0.5]);
    }

    #[test]
    fn walk_on_a_path_by_hand() {
        // P_3 seeded at the middle: step 1 gives [1/4, 1/2, 1/4],
        // step 2 gives [1/4, 1/2, 1/4] again (stationary for this seed).
        let g = Graph::path(3);
        let w = lazy_walk_scores::<f64>(&g, &VertexSet::from_vertices(3, [1]), 2);
        assert_eq!(w.as_slice(), &[0.25, 0.5, 0.25]);
        // seeded at an end: [1/2, 1/2, 0] then [3/8, 1/2, 1/8]
        let w = lazy_walk_scores::<f64>(&g, &VertexSet::from_vertices(3, [0]), 2);
        assert_eq!(w.as_slice(), &[0.375, 0.5, 0.125]);
    }

    #[test]
    fn lower_bound_examples() {
        for s in 1..4 {
            assert_eq!(
                generate_lb(&Graph::complete(6), s, ExpansionMode::RandomWalk)
                    .unwrap()
                    .len(),
                6
            );
        }
        assert_eq!(
            generate_lb(&Graph::cycle(5), 3, ExpansionMode::RandomWalk)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            generate_lb(&Graph::cycle(5), 3, ExpansionMode::Greedy)
                .unwrap()
                .len(),
            5
        );
        assert!(generate_lb(&Graph::cycle(5), 0, ExpansionMode::Greedy).is_err());
        assert!(generate_lb(&Graph::empty(0), 2, ExpansionMode::RandomWalk)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn lower_bound_on_star_is_feasible_and_maximal() {
        let g = Graph::star(5);
        let p = generate_lb(&g, 2, ExpansionMode::RandomWalk).unwrap();
        let (h, _) = g.induced_subgraph(&p).unwrap();
        assert!(is_s_bundle(&h, 2).unwrap());
        // {center, leaf, leaf} is a 2-bundle, a fourth vertex is not
        assert_eq!(p.len(), 3);
    }
}
