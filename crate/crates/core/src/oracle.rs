//! Exhaustive reference implementations for testing.
//!
//! Everything here works on bitmasks and decides connectivity by
//! enumerating vertex separators directly; nothing is shared with the flow
//! based code it is used to check.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest graph accepted by [`brute_force_max_s_bundle`].
pub const MAX_BUNDLE_VERTICES: usize = 20;
/// Largest graph accepted by the connectivity oracles.
pub const MAX_CONNECTIVITY_VERTICES: usize = 16;

type Mask = u32;

fn guard(g: &Graph, limit: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > limit {
        Err(Error::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

fn neighbor_masks(g: &Graph) -> Vec<Mask> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn members(mask: Mask) -> impl Iterator<Item = Vertex> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let v = rest.trailing_zeros() as Vertex;
        rest &= rest - 1;
        Some(v)
    })
}

/// Vertices of `within` reachable from `start` inside `within`.
fn reach(adj: &[Mask], within: Mask, start: Vertex) -> Mask {
    let mut seen: Mask = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn connected(adj: &[Mask], within: Mask) -> bool {
    within == 0 || reach(adj, within, within.trailing_zeros() as Vertex) == within
}

/// Whether some `X ⊂ set` with `|X| < k` leaves `set \ X` disconnected or
/// with at most one vertex.
fn has_separator_below(adj: &[Mask], set: Mask, k: u32) -> bool {
    let size = set.count_ones();
    if k == 0 {
        return false;
    }
    if size <= k {
        // removing all but one vertex uses fewer than k vertices
        return true;
    }
    if !connected(adj, set) {
        return true;
    }
    // neighborhoods are the natural candidates, try them first
    for v in members(set) {
        let around = adj[v] & set;
        if around.count_ones() < k && (set & !around & !(1 << v)) != 0 {
            return true;
        }
    }
    let mut x = set;
    loop {
        x = (x.wrapping_sub(1)) & set;
        if x == 0 {
            return false;
        }
        if x.count_ones() < k && !connected(adj, set & !x) {
            return true;
        }
    }
}

fn is_bundle_mask(adj: &[Mask], set: Mask, s: usize) -> bool {
    let size = set.count_ones() as usize;
    size <= s || !has_separator_below(adj, set, (size - s) as u32)
}

/// Whether `G[verts]` is an s-bundle, decided by separator enumeration.
pub fn brute_force_is_s_bundle(g: &Graph, verts: &[Vertex], s: usize) -> Result<bool> {
    guard(g, MAX_BUNDLE_VERTICES)?;
    if s == 0 {
        return Err(Error::invalid("s must be a positive integer"));
    }
    let adj = neighbor_masks(g);
    let set = verts.iter().fold(0, |m, &v| m | 1 << v);
    Ok(is_bundle_mask(&adj, set, s))
}

/// Maximum s-bundle by trying vertex subsets from largest to smallest.
/// Returns its size and the first witness found in that order.
pub fn brute_force_max_s_bundle(g: &Graph, s: usize) -> Result<(usize, Vec<Vertex>)> {
    guard(g, MAX_BUNDLE_VERTICES)?;
    if s == 0 {
        return Err(Error::invalid("s must be a positive integer"));
    }
    let n = g.vertex_count();
    let adj = neighbor_masks(g);
    for k in (1..=n).rev() {
        // all k-subsets in increasing numeric order (Gosper's hack)
        let mut set: u64 = (1u64 << k) - 1;
        while set < 1u64 << n {
            if is_bundle_mask(&adj, set as Mask, s) {
                return Ok((k, members(set as Mask).collect()));
            }
            let low = set & set.wrapping_neg();
            let ripple = set + low;
            set = (((ripple ^ set) >> 2) / low) | ripple;
        }
    }
    Ok((0, Vec::new()))
}

/// Maximum clique size by subset enumeration.
pub fn brute_force_max_clique(g: &Graph) -> Result<usize> {
    guard(g, MAX_BUNDLE_VERTICES)?;
    let n = g.vertex_count();
    let adj = neighbor_masks(g);
    let mut best = 0;
    for set in 0u32..(1 << n) {
        let size = set.count_ones();
        if size > best && members(set).all(|v| (adj[v] | 1 << v) & set == set) {
            best = size;
        }
    }
    Ok(best as usize)
}

/// `κ(G)`: the fewest vertices whose removal disconnects `G` or leaves at
/// most one vertex.
pub fn brute_force_vertex_connectivity(g: &Graph) -> Result<usize> {
    guard(g, MAX_CONNECTIVITY_VERTICES)?;
    let n = g.vertex_count();
    let adj = neighbor_masks(g);
    let all: Mask = if n == 0 { 0 } else { (1 << n) - 1 };
    let mut best = n.saturating_sub(1);
    for x in 0..=all {
        let rest = all & !x;
        let removed = x.count_ones() as usize;
        if removed < best && (rest.count_ones() <= 1 || !connected(&adj, rest)) {
            best = removed;
        }
    }
    Ok(best)
}

/// `κ(u, v)` for non-adjacent `u ≠ v`: the fewest other vertices whose
/// removal separates them.
pub fn brute_force_local_connectivity(g: &Graph, u: Vertex, v: Vertex) -> Result<usize> {
    guard(g, MAX_CONNECTIVITY_VERTICES)?;
    let n = g.vertex_count();
    if u >= n || v >= n || u == v || g.has_edge(u, v) {
        return Err(Error::invalid("need two distinct non-adjacent vertices"));
    }
    let adj = neighbor_masks(g);
    let all: Mask = (1 << n) - 1;
    let others = all & !(1 << u) & !(1 << v);
    let mut best = usize::MAX;
    let mut x = others;
    loop {
        if reach(&adj, all & !x, u) & (1 << v) == 0 {
            best = best.min(x.count_ones() as usize);
        }
        if x == 0 {
            break;
        }
        x = (x - 1) & others;
    }
    Ok(best)
}
