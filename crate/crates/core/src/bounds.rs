//! Upper bounds on the maximum s-bundle size.
//!
//! Both bounds split the vertex set into parts that can each contribute at
//! most `min{|part|, s}` vertices to an s-bundle:
//!
//! * the color bound uses independent sets, built greedily;
//! * the partition bound (PUB) seeds every part with a maximal independent
//!   set and then grows it into an s-component (largest connected component
//!   of at most `s` vertices), tracking component sizes with a union-find.
//!
//! Vertices are always selected and scanned in ascending id order, so equal
//! inputs give equal partitions.

use crate::connectivity::check_s;
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};

/// Read access to adjacency lists, shared by [`Graph`] and the mutable
/// working copies used during reduction.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: Vertex) -> &[Vertex];
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        Graph::vertex_count(self)
    }

    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        Graph::neighbors(self, v)
    }
}

/// Union-find with union by size and path compression.
#[derive(Clone, Debug)]
pub struct DisjointSetUnion {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSetUnion {
    /// `n` singleton sets.
    pub fn new(n: usize) -> Self {
        DisjointSetUnion {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Turns `x` back into a singleton. Only valid when no other element
    /// points at `x`, e.g. when rebuilding sets from scratch.
    pub fn make_set(&mut self, x: usize) {
        self.parent[x] = x;
        self.size[x] = 1;
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`, returning the new root.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        ra
    }

    /// Size of the set containing `x`.
    pub fn component_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

/// Whether a vertex whose neighbors inside the current part are
/// `neighbors_in_part` can join without creating a component larger than
/// `s`: `1 + Σ |distinct neighboring components| <= s`.
pub fn dsu_can_add(dsu: &mut DisjointSetUnion, neighbors_in_part: &[Vertex], s: usize) -> bool {
    let mut roots: Vec<usize> = neighbors_in_part.iter().map(|&w| dsu.find(w)).collect();
    roots.sort_unstable();
    roots.dedup();
    let mut total = 1;
    for r in roots {
        total += dsu.size[r];
        if total > s {
            return false;
        }
    }
    true
}

/// One part of a bound partition together with its contribution
/// `min{|vertices|, s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub vertices: Vec<Vertex>,
    pub contribution: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<Part>,
}

impl Partition {
    pub fn bound(&self) -> usize {
        self.parts.iter().map(|p| p.contribution).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Which partition the upper bound is computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Maximal independent set grown into a maximal s-component.
    Partition,
    /// s-components built by sequential insertion from an empty part,
    /// without the independent-set seed.
    PartitionDirect,
    /// Greedy independent sets only.
    Color,
}

/// Partition-based upper bound over `G[verts]`, with the partition used.
pub fn partition_bound(g: &Graph, verts: &VertexSet, s: usize) -> Result<(usize, Partition)> {
    bound_with_partition(g, verts, s, BoundKind::Partition)
}

/// Color bound over `G[verts]`.
pub fn color_bound(g: &Graph, verts: &VertexSet, s: usize) -> Result<usize> {
    bound_with_partition(g, verts, s, BoundKind::Color).map(|(ub, _)| ub)
}

/// Any of the bounds over `G[verts]`, with the partition used.
pub fn bound_with_partition(
    g: &Graph,
    verts: &VertexSet,
    s: usize,
    kind: BoundKind,
) -> Result<(usize, Partition)> {
    check_s(s)?;
    let ids: Vec<Vertex> = verts.iter().collect();
    if let Some(&bad) = ids.last() {
        g.check_vertex(bad)?;
    }
    let mut scratch = BoundScratch::new(g.vertex_count());
    let mut partition = Partition::default();
    let ub = scratch.run(g, &ids, s, kind, usize::MAX, |part| {
        partition.parts.push(Part {
            vertices: part.to_vec(),
            contribution: part.len().min(s),
        })
    });
    Ok((ub, partition))
}

/// Reusable buffers for repeated bound evaluations over one universe.
#[derive(Clone, Debug)]
pub(crate) struct BoundScratch {
    dsu: DisjointSetUnion,
    remaining: Vec<bool>,
    in_part: Vec<bool>,
    blocked: Vec<bool>,
    part: Vec<Vertex>,
    rest: Vec<Vertex>,
    roots: Vec<usize>,
}

impl BoundScratch {
    pub(crate) fn new(n: usize) -> Self {
        BoundScratch {
            dsu: DisjointSetUnion::new(n),
            remaining: vec![false; n],
            in_part: vec![false; n],
            blocked: vec![false; n],
            part: Vec::new(),
            rest: Vec::new(),
            roots: Vec::new(),
        }
    }

    /// Bound over the subgraph induced by the ascending list `ids`.
    /// Stops early and returns the partial sum once it exceeds `limit`.
    pub(crate) fn value<A: Adjacency>(
        &mut self,
        g: &A,
        ids: &[Vertex],
        s: usize,
        kind: BoundKind,
        limit: usize,
    ) -> usize {
        self.run(g, ids, s, kind, limit, |_| {})
    }

    fn run<A: Adjacency>(
        &mut self,
        g: &A,
        ids: &[Vertex],
        s: usize,
        kind: BoundKind,
        limit: usize,
        mut on_part: impl FnMut(&[Vertex]),
    ) -> usize {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        if self.remaining.len() < g.vertex_count() {
            *self = BoundScratch::new(g.vertex_count());
        }
        let mut pending: Vec<Vertex> = ids.to_vec();
        for &v in &pending {
            self.remaining[v] = true;
        }
        let mut ub = 0;
        while !pending.is_empty() {
            self.part.clear();
            self.rest.clear();
            match kind {
                BoundKind::Partition | BoundKind::Color => {
                    self.seed_independent_set(g, &pending);
                    if kind == BoundKind::Partition {
                        self.grow_part(g, s);
                    }
                }
                BoundKind::PartitionDirect => {
                    self.rest.extend_from_slice(&pending);
                    self.grow_part(g, s);
                }
            }
            for &v in &self.part {
                self.remaining[v] = false;
            }
            ub += self.part.len().min(s);
            on_part(&self.part);
            for &v in &self.part {
                self.in_part[v] = false;
            }
            std::mem::swap(&mut pending, &mut self.rest);
            if ub > limit {
                break;
            }
        }
        for &v in pending.iter().chain(&self.rest) {
            self.remaining[v] = false;
        }
        ub
    }

    /// Ascending greedy maximal independent set of `pending` into `part`;
    /// everything else goes to `rest`.
    fn seed_independent_set<A: Adjacency>(&mut self, g: &A, pending: &[Vertex]) {
        for &u in pending {
            if self.blocked[u] {
                self.rest.push(u);
                continue;
            }
            self.part.push(u);
            self.in_part[u] = true;
            self.dsu.make_set(u);
            for &w in g.neighbors(u) {
                if self.remaining[w] {
                    self.blocked[w] = true;
                }
            }
        }
        for &u in &self.rest {
            self.blocked[u] = false;
        }
    }

    /// One ascending scan over `rest`, moving every vertex whose insertion
    /// keeps the part an s-component.
    fn grow_part<A: Adjacency>(&mut self, g: &A, s: usize) {
        let candidates = std::mem::take(&mut self.rest);
        for &u in &candidates {
            self.roots.clear();
            for &w in g.neighbors(u) {
                if self.in_part[w] {
                    let r = self.dsu.find(w);
                    self.roots.push(r);
                }
            }
            self.roots.sort_unstable();
            self.roots.dedup();
            let mut size = 1;
            for &r in &self.roots {
                size += self.dsu.size[r];
                if size > s {
                    break;
                }
            }
            if size > s {
                self.rest.push(u);
                continue;
            }
            self.dsu.make_set(u);
            for &r in &self.roots {
                self.dsu.union(u, r);
            }
            self.part.push(u);
            self.in_part[u] = true;
        }
    }
}
