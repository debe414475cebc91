//! Undirected simple graphs with sorted adjacency, and vertex sets over them.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertex identifier, always in `0..n`.
pub type Vertex = usize;

/// Immutable undirected simple graph.
///
/// Every adjacency list is sorted ascending and free of duplicates and
/// self-loops, and `v ∈ adj[u]` iff `u ∈ adj[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, silently dropping self-loops and
    /// duplicate (including reversed) edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_unsorted(adjacency))
    }

    /// Builds a graph from adjacency lists that are already symmetric and
    /// loop-free but may be unsorted or contain duplicates.
    pub(crate) fn from_unsorted(mut adjacency: Vec<Vec<Vertex>>) -> Self {
        let mut twice_m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph {
            adjacency,
            edge_count: twice_m / 2,
        }
    }

    /// Validates and adopts adjacency lists.
    pub fn from_adjacency(adjacency: Vec<Vec<Vertex>>) -> Result<Self> {
        let n = adjacency.len();
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(Error::invalid(format!("neighbor {v} of {u} out of range")));
                }
                if v == u {
                    return Err(Error::invalid(format!("self-loop at {u}")));
                }
                if !adjacency[v].contains(&u) {
                    return Err(Error::invalid(format!("edge ({u}, {v}) is not symmetric")));
                }
            }
        }
        Ok(Self::from_unsorted(adjacency))
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Self::from_unsorted(adjacency)
    }

    /// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).expect("valid star")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n <= 1 || self.edge_count == n * (n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Connected component label for every vertex, labels in order of
    /// first appearance by vertex id.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for root in 0..n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = next;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    /// `N(u) ∩ N(v)` by merging the two sorted lists.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!(
                "common neighbors need two distinct vertices, got {u} twice"
            )));
        }
        let mut set = VertexSet::new(self.vertex_count());
        for w in sorted_intersection(&self.adjacency[u], &self.adjacency[v]) {
            set.insert(w);
        }
        Ok(set)
    }

    /// `|N(u) ∩ N(v)|` without allocating.
    pub fn common_neighbor_count(&self, u: Vertex, v: Vertex) -> usize {
        sorted_intersection(&self.adjacency[u], &self.adjacency[v]).count()
    }

    /// Subgraph induced by `verts`. New vertex `i` corresponds to the
    /// `i`-th smallest member of `verts`; the returned map translates back.
    pub fn induced_subgraph(&self, verts: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        if let Some(bad) = verts.iter().find(|&v| v >= self.vertex_count()) {
            return Err(Error::invalid(format!(
                "vertex {bad} out of range for {} vertices",
                self.vertex_count()
            )));
        }
        let ids: Vec<Vertex> = verts.iter().collect();
        Ok((self.induced_by_sorted(&ids), ids))
    }

    /// Induced subgraph over an ascending, in-range id list.
    pub(crate) fn induced_by_sorted(&self, ids: &[Vertex]) -> Graph {
        let mut out = Graph::empty(0);
        self.induce_into(ids, &mut vec![usize::MAX; self.vertex_count()], &mut out);
        out
    }

    /// [`Self::induced_by_sorted`] written into `out`, reusing its lists.
    /// `position` must hold `usize::MAX` for every vertex and is left so.
    pub(crate) fn induce_into(&self, ids: &[Vertex], position: &mut [usize], out: &mut Graph) {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        for (i, &v) in ids.iter().enumerate() {
            position[v] = i;
        }
        out.adjacency.truncate(ids.len());
        out.adjacency.resize_with(ids.len(), Vec::new);
        let mut twice_m = 0;
        for (list, &v) in out.adjacency.iter_mut().zip(ids) {
            // ascending ids map to ascending positions, so lists stay sorted
            list.clear();
            list.extend(self.adjacency[v].iter().filter_map(|&w| {
                let at = position[w];
                (at != usize::MAX).then_some(at)
            }));
            twice_m += list.len();
        }
        out.edge_count = twice_m / 2;
        for &v in ids {
            position[v] = usize::MAX;
        }
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.vertex_count()
            )))
        }
    }
}

/// Ascending intersection of two ascending slices.
pub(crate) fn sorted_intersection<'a>(
    a: &'a [Vertex],
    b: &'a [Vertex],
) -> impl Iterator<Item = Vertex> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let w = a[i];
                    i += 1;
                    j += 1;
                    return Some(w);
                }
            }
        }
        None
    })
}

/// Set of vertex ids over a fixed universe `0..capacity`, with O(1)
/// membership and ascending iteration.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Panics if a member is `>= capacity`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(capacity: usize, verts: I) -> Self {
        let mut set = Self::new(capacity);
        for v in verts {
            set.insert(v);
        }
        set
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    /// Returns whether `v` was newly inserted.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    /// Returns whether `v` was present.
    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        let was = self.bits.contains(v);
        self.bits.set(v, false);
        was
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.len());
        out.extend(self.iter());
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}
