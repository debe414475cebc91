//! Vertex connectivity through unit-capacity vertex-split flow networks,
//! and the s-bundle feasibility tests built on top of it.
//!
//! Every vertex `u` becomes an in-copy `u'` and an out-copy `u''` joined by a
//! unit arc, and every edge `{u, v}` becomes the arcs `u'' -> v'` and
//! `v'' -> u'`. The maximum `u''`–`v'` flow then counts internally
//! vertex-disjoint `u`–`v` paths, which for a non-adjacent pair equals the
//! local connectivity `κ(u, v)` by Menger's theorem.
//!
//! The global connectivity of a non-complete graph is the minimum of `κ(u, v)`
//! over its non-adjacent pairs; complete graphs have `κ(K_n) = n - 1`.
//! Feasibility queries only need to know whether `κ >= k`, so every flow is
//! capped at `k` and augmentation stops as soon as the cap is met.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{sorted_intersection, Graph, Vertex, VertexSet};

/// Flow value cap meaning "compute the full maximum flow".
pub const UNLIMITED: usize = usize::MAX;

const UNREACHED: u32 = u32::MAX;

/// Directed unit-capacity network over `2n` nodes, stored as a CSR arc array
/// where every arc is paired with its zero-capacity reverse.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    vertex_count: usize,
    forward_arcs: usize,
    first: Vec<usize>,
    head: Vec<usize>,
    reverse: Vec<usize>,
    capacity: Vec<u8>,
    residual: Vec<u8>,
    level: Vec<u32>,
    cursor: Vec<usize>,
    queue: VecDeque<usize>,
    path: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(g: &Graph) -> Self {
        let mut net = FlowNetwork {
            vertex_count: 0,
            forward_arcs: 0,
            first: Vec::new(),
            head: Vec::new(),
            reverse: Vec::new(),
            capacity: Vec::new(),
            residual: Vec::new(),
            level: Vec::new(),
            cursor: Vec::new(),
            queue: VecDeque::new(),
            path: Vec::new(),
        };
        net.rebuild(g);
        net
    }

    /// Replaces the network with the one for `g`, reusing its buffers.
    pub fn rebuild(&mut self, g: &Graph) {
        let n = g.vertex_count();
        let nodes = 2 * n;
        // the split arc plus one arc per incident edge, in each direction
        self.first.clear();
        self.first.push(0);
        for u in g.vertices() {
            let arcs = 1 + g.degree(u);
            let end = self.first[2 * u] + arcs;
            self.first.push(end);
            self.first.push(end + arcs);
        }
        let total = self.first[nodes];
        self.cursor.clear();
        self.cursor.extend_from_slice(&self.first[..nodes]);
        for buffer in [&mut self.head, &mut self.reverse] {
            buffer.clear();
            buffer.resize(total, 0);
        }
        self.capacity.clear();
        self.capacity.resize(total, 0);
        let mut link = |a: usize, b: usize| {
            let fwd = self.cursor[a];
            self.cursor[a] += 1;
            let back = self.cursor[b];
            self.cursor[b] += 1;
            self.head[fwd] = b;
            self.head[back] = a;
            self.reverse[fwd] = back;
            self.reverse[back] = fwd;
            self.capacity[fwd] = 1;
        };
        for u in g.vertices() {
            link(Self::in_node(u), Self::out_node(u));
        }
        for (u, v) in g.edges() {
            link(Self::out_node(u), Self::in_node(v));
            link(Self::out_node(v), Self::in_node(u));
        }

        self.vertex_count = n;
        self.forward_arcs = n + 2 * g.edge_count();
        self.residual.clone_from(&self.capacity);
        self.level.clear();
        self.level.resize(nodes, UNREACHED);
        self.cursor.truncate(nodes);
        self.queue.clear();
        self.path.clear();
    }

    /// Node id of the in-copy `v'`.
    #[inline]
    pub fn in_node(v: Vertex) -> usize {
        2 * v
    }

    /// Node id of the out-copy `v''`.
    #[inline]
    pub fn out_node(v: Vertex) -> usize {
        2 * v + 1
    }

    pub fn node_count(&self) -> usize {
        2 * self.vertex_count
    }

    /// Number of capacity-carrying arcs, i.e. `n + 2m`.
    pub fn arc_count(&self) -> usize {
        self.forward_arcs
    }

    /// Capacity-carrying arcs as `(from, to, capacity)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        (0..self.node_count()).flat_map(move |from| {
            (self.first[from]..self.first[from + 1])
                .filter(move |&a| self.capacity[a] > 0)
                .map(move |a| (from, self.head[a], self.capacity[a]))
        })
    }

    /// Maximum `source`–`sink` flow, or `cap_limit` if the flow reaches it
    /// first. Residual capacities are reset at the start of every call.
    pub fn max_flow(&mut self, source: usize, sink: usize, cap_limit: usize) -> Result<usize> {
        let nodes = self.node_count();
        if source >= nodes || sink >= nodes {
            return Err(Error::invalid(format!(
                "flow endpoints ({source}, {sink}) out of range for {nodes} nodes"
            )));
        }
        if source == sink {
            return Err(Error::invalid("flow source and sink coincide"));
        }
        Ok(self.capped_flow(source, sink, cap_limit))
    }

    fn capped_flow(&mut self, source: usize, sink: usize, cap_limit: usize) -> usize {
        self.residual.copy_from_slice(&self.capacity);
        let mut flow = 0;
        while flow < cap_limit && self.build_levels(source, sink) {
            let nodes = self.node_count();
            self.cursor.copy_from_slice(&self.first[..nodes]);
            while flow < cap_limit && self.augment(source, sink) {
                flow += 1;
            }
        }
        flow
    }

    /// BFS over the residual network; true if the sink is reachable.
    fn build_levels(&mut self, source: usize, sink: usize) -> bool {
        self.level.fill(UNREACHED);
        self.level[source] = 0;
        self.queue.clear();
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            for a in self.first[u]..self.first[u + 1] {
                let v = self.head[a];
                if self.residual[a] > 0 && self.level[v] == UNREACHED {
                    self.level[v] = self.level[u] + 1;
                    if v == sink {
                        return true;
                    }
                    self.queue.push_back(v);
                }
            }
        }
        false
    }

    /// One unit augmenting path along the level graph, found by an
    /// iterative DFS that retires dead-end nodes.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        self.path.clear();
        let mut u = source;
        loop {
            if u == sink {
                for &a in &self.path {
                    self.residual[a] -= 1;
                    self.residual[self.reverse[a]] += 1;
                }
                return true;
            }
            let end = self.first[u + 1];
            let mut advanced = false;
            while self.cursor[u] < end {
                let a = self.cursor[u];
                let v = self.head[a];
                if self.residual[a] > 0 && self.level[v] == self.level[u] + 1 {
                    self.path.push(a);
                    u = v;
                    advanced = true;
                    break;
                }
                self.cursor[u] += 1;
            }
            if advanced {
                continue;
            }
            self.level[u] = UNREACHED;
            match self.path.pop() {
                None => return false,
                Some(a) => {
                    u = self.head[self.reverse[a]];
                    self.cursor[u] += 1;
                }
            }
        }
    }

    /// Capped `κ(u, v)` for a non-adjacent pair, no validation.
    fn pair_connectivity(&mut self, u: Vertex, v: Vertex, cap_limit: usize) -> usize {
        self.capped_flow(Self::out_node(u), Self::in_node(v), cap_limit)
    }
}

/// `min(κ(u, v), cap_limit)` for two distinct non-adjacent vertices.
pub fn local_connectivity(g: &Graph, u: Vertex, v: Vertex, cap_limit: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::invalid(
            "local connectivity needs two distinct vertices",
        ));
    }
    if g.has_edge(u, v) {
        return Err(Error::invalid(format!(
            "local connectivity is undefined for adjacent vertices {u} and {v}"
        )));
    }
    Ok(FlowNetwork::new(g).pair_connectivity(u, v, cap_limit))
}

/// Whether `κ(g) >= k`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.vertex_count();
    if g.is_complete() {
        return n.saturating_sub(1) >= k;
    }
    if !g.is_connected() {
        return false;
    }
    first_pair_below(g, k).is_none()
}

/// First non-adjacent pair `(u, v, κ)` in lexicographic order with
/// `κ(u, v) < k`; `k` must be positive.
fn first_pair_below(g: &Graph, k: usize) -> Option<(Vertex, Vertex, usize)> {
    let mut net: Option<FlowNetwork> = None;
    for u in g.vertices() {
        let mut adjacent = g.neighbors(u).iter().peekable();
        for v in u + 1..g.vertex_count() {
            while adjacent.next_if(|&&w| w < v).is_some() {}
            if adjacent.next_if_eq(&&v).is_some() {
                continue;
            }
            // common neighbors are internally disjoint u-v paths
            if sorted_intersection(g.neighbors(u), g.neighbors(v))
                .nth(k - 1)
                .is_some()
            {
                continue;
            }
            let kappa = net
                .get_or_insert_with(|| FlowNetwork::new(g))
                .pair_connectivity(u, v, k);
            if kappa < k {
                return Some((u, v, kappa));
            }
        }
    }
    None
}

pub(crate) fn check_s(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::invalid("s must be a positive integer"))
    } else {
        Ok(())
    }
}

/// Whether `κ(g) >= n - s`.
pub fn is_s_bundle(g: &Graph, s: usize) -> Result<bool> {
    check_s(s)?;
    Ok(is_s_bundle_unchecked(g, s))
}

pub(crate) fn is_s_bundle_unchecked(g: &Graph, s: usize) -> bool {
    let n = g.vertex_count();
    if n <= s {
        return true;
    }
    let required = n - s;
    let min_degree = g.min_degree().unwrap_or(0);
    if min_degree < required {
        return false;
    }
    // two non-adjacent vertices share at least 2δ - n + 2 neighbors
    if 2 * min_degree + 2 >= n + required {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    vertex_connectivity_at_least(g, required)
}

/// Whether the subgraph induced by the ascending id list is an s-bundle.
pub(crate) fn induces_s_bundle(g: &Graph, sorted_ids: &[Vertex], s: usize) -> bool {
    if sorted_ids.len() <= s {
        return true;
    }
    is_s_bundle_unchecked(&g.induced_by_sorted(sorted_ids), s)
}

/// Whether `G[members ∪ {u}]` is an s-bundle, given ascending `members`
/// that already induce one and do not contain `u`.
pub(crate) fn extends_s_bundle(g: &Graph, members: &[Vertex], u: Vertex, s: usize) -> bool {
    ExtensionCheck::new(g.vertex_count()).extends(g, members.iter().copied(), u, s)
}

/// Buffers for repeated [`extends_s_bundle`] queries against one graph.
///
/// With `H` the extended subgraph and `k = |H| - s`, any separator of `H`
/// smaller than `k` must avoid `u`, since removing `u` as well leaves a
/// separator of the members smaller than their own connectivity. Unless it
/// isolates a low-degree vertex it then splits two non-adjacent members
/// that `u` cannot both neighbor, so pairs with `u` and pairs inside `N(u)`
/// are skipped.
#[derive(Clone, Debug)]
pub(crate) struct ExtensionCheck {
    ids: Vec<Vertex>,
    position: Vec<usize>,
    induced: Graph,
    net: FlowNetwork,
}

impl ExtensionCheck {
    pub(crate) fn new(n: usize) -> Self {
        let induced = Graph::empty(0);
        ExtensionCheck {
            ids: Vec::new(),
            position: vec![usize::MAX; n],
            net: FlowNetwork::new(&induced),
            induced,
        }
    }

    /// `members` must be ascending.
    pub(crate) fn extends(
        &mut self,
        g: &Graph,
        members: impl Iterator<Item = Vertex>,
        u: Vertex,
        s: usize,
    ) -> bool {
        self.ids.clear();
        let mut members = members.peekable();
        while let Some(v) = members.next_if(|&v| v < u) {
            self.ids.push(v);
        }
        let at = self.ids.len();
        self.ids.push(u);
        self.ids.extend(members);
        let size = self.ids.len();
        if size <= s {
            return true;
        }
        let k = size - s;
        g.induce_into(&self.ids, &mut self.position, &mut self.induced);
        let h = &self.induced;
        let min_degree = h.min_degree().unwrap_or(0);
        if min_degree < k {
            return false;
        }
        if 2 * min_degree + 2 >= size + k {
            return true;
        }
        let around = h.neighbors(at);
        let mut built = false;
        for x in h.vertices().filter(|&x| x != at) {
            let x_near = around.binary_search(&x).is_ok();
            let mut adjacent = h.neighbors(x).iter().peekable();
            for y in x + 1..size {
                while adjacent.next_if(|&&w| w < y).is_some() {}
                if adjacent.next_if_eq(&&y).is_some() || y == at {
                    continue;
                }
                if x_near && around.binary_search(&y).is_ok() {
                    continue;
                }
                if sorted_intersection(h.neighbors(x), h.neighbors(y))
                    .nth(k - 1)
                    .is_some()
                {
                    continue;
                }
                if !built {
                    self.net.rebuild(h);
                    built = true;
                }
                if self.net.pair_connectivity(x, y, k) < k {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether `G[set ∪ {u}]` is still an s-bundle.
pub fn can_extend(g: &Graph, set: &VertexSet, u: Vertex, s: usize) -> Result<bool> {
    check_s(s)?;
    g.check_vertex(u)?;
    if set.contains(u) {
        return Err(Error::invalid(format!("vertex {u} is already in the set")));
    }
    let mut ids: Vec<Vertex> = set.iter().collect();
    if let Some(bad) = ids.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::invalid(format!("vertex {bad} out of range")));
    }
    ids.sort_unstable();
    let at = ids.partition_point(|&v| v < u);
    ids.insert(at, u);
    Ok(induces_s_bundle(g, &ids, s))
}

/// Why a graph fails to be an s-bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `vertex` has fewer than `required` neighbors; `partner` is its
    /// lowest-id non-neighbor and `connectivity` their exact `κ`.
    LowDegree {
        vertex: Vertex,
        degree: usize,
        required: usize,
        partner: Vertex,
        connectivity: usize,
    },
    /// A non-adjacent pair whose connectivity is below `required`
    /// (zero when they lie in different components).
    LowConnectivity {
        u: Vertex,
        v: Vertex,
        connectivity: usize,
        required: usize,
    },
}

/// A certificate of infeasibility, or `None` if `g` is an s-bundle.
pub fn find_violation(g: &Graph, s: usize) -> Result<Option<Violation>> {
    check_s(s)?;
    let n = g.vertex_count();
    if n <= s {
        return Ok(None);
    }
    let required = n - s;
    let labels = g.component_labels();
    if let Some(v) = labels.iter().position(|&c| c != labels[0]) {
        return Ok(Some(Violation::LowConnectivity {
            u: 0,
            v,
            connectivity: 0,
            required,
        }));
    }
    if let Some(vertex) = g.vertices().find(|&v| g.degree(v) < required) {
        let partner = g
            .vertices()
            .find(|&w| w != vertex && !g.has_edge(vertex, w))
            .expect("a vertex below the degree bound has a non-neighbor");
        let connectivity = FlowNetwork::new(g).pair_connectivity(vertex, partner, UNLIMITED);
        return Ok(Some(Violation::LowDegree {
            vertex,
            degree: g.degree(vertex),
            required,
            partner,
            connectivity,
        }));
    }
    Ok(
        first_pair_below(g, required).map(|(u, v, connectivity)| Violation::LowConnectivity {
            u,
            v,
            connectivity,
            required,
        }),
    )
}
