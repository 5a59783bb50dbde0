//! Domination and vertex-cover oracles.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `true` iff every vertex lies in `s` or has a neighbour in `s`.
#[inline]
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood(s) == g.vertices()
}

/// Calls `f` on every `k`-subset of `{0..n}` in increasing numeric order
/// until it returns `true`. Returns whether some call did.
pub(crate) fn any_k_subset(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> bool) -> bool {
    if k > n {
        return false;
    }
    if k == 0 {
        return f(VertexSet::EMPTY);
    }
    // Gosper's hack, carried in u128 so that n = 64 does not overflow.
    let limit = 1u128 << n;
    let mut x: u128 = (1u128 << k) - 1;
    while x < limit {
        if f(VertexSet::from_bits(x as u64)) {
            return true;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    false
}

/// Smallest dominating set found by increasing-cardinality search
/// (lowest mask among those of minimum size).
pub fn minimum_dominating_set(g: &Graph) -> Result<VertexSet> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut found = VertexSet::EMPTY;
    for k in 1..=n {
        if any_k_subset(n, k, |s| {
            let hit = is_dominating(g, s);
            if hit {
                found = s;
            }
            hit
        }) {
            return Ok(found);
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Domination number `γ(G)`.
pub fn domination_number(g: &Graph) -> Result<usize> {
    minimum_dominating_set(g).map(VertexSet::len)
}

fn is_vertex_cover(g: &Graph, s: VertexSet) -> bool {
    let outside = g.vertices().difference(s);
    outside.iter().all(|v| g.neighbors(v).is_subset(s))
}

/// Vertex cover number `β(G)`; zero for edgeless graphs.
pub fn vertex_cover_number(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| any_k_subset(n, k, |s| is_vertex_cover(g, s)))
        .unwrap_or(n)
}
