//! Graph shapes with minimum degree at most one whose coalition number
//! equals their order.
//!
//! The leaf family built here has vertex set `{x, y, w} ∪ P ∪ Q` where `x`
//! is a leaf at `y`, `N(w) = P ∪ Q`, every `p ∈ P` is adjacent to all of
//! `(P ∪ Q) − p`, `y` is adjacent to all of `Q`, `G[Q]` has no full vertex
//! (so `Q` is empty or has at least two vertices), and `y` may be joined to
//! any subset of `P`.

use std::collections::BTreeMap;

use crate::catalog::iso::{canonical_form, CANONICAL_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Parameters of one member of the leaf family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F1Params {
    pub p_size: usize,
    pub q_size: usize,
    /// Edges inside `Q`, as indices `0..q_size`.
    pub q_edges: Vec<(usize, usize)>,
    /// Members of `P` joined to `y`, as indices `0..p_size`.
    pub y_to_p: Vec<usize>,
}

impl F1Params {
    pub fn new(p_size: usize, q_size: usize) -> Self {
        F1Params {
            p_size,
            q_size,
            q_edges: Vec::new(),
            y_to_p: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        3 + self.p_size + self.q_size
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BadF1Params(m));
        if self.p_size + self.q_size == 0 {
            return bad("P and Q cannot both be empty".into());
        }
        if self.q_size == 1 {
            return bad("Q must be empty or have at least two vertices".into());
        }
        if self.order() > MAX_VERTICES {
            return Err(Error::TooLarge(self.order()));
        }
        let mut q_deg = vec![0usize; self.q_size];
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.q_edges {
            if a >= self.q_size || b >= self.q_size {
                return bad(format!("Q edge ({a},{b}) out of range"));
            }
            if a == b {
                return bad(format!("Q edge ({a},{a}) is a loop"));
            }
            if seen.insert((a.min(b), a.max(b))) {
                q_deg[a] += 1;
                q_deg[b] += 1;
            }
        }
        if let Some(q) = q_deg.iter().position(|&d| d + 1 == self.q_size) {
            return bad(format!("Q vertex {q} is a full vertex of G[Q]"));
        }
        if let Some(&p) = self.y_to_p.iter().find(|&&p| p >= self.p_size) {
            return bad(format!("P index {p} out of range"));
        }
        Ok(())
    }
}

/// Roles witnessing membership in the leaf family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F1Roles {
    pub x: usize,
    pub y: usize,
    pub w: usize,
    pub p: VertexSet,
    pub q: VertexSet,
}

/// Builds the member with `x = 0`, `y = 1`, `w = 2`, then `P`, then `Q`.
pub fn build_f1(params: &F1Params) -> Result<Graph> {
    params.validate()?;
    let (x, y, w) = (0, 1, 2);
    let p: Vec<usize> = (3..3 + params.p_size).collect();
    let q: Vec<usize> = (3 + params.p_size..params.order()).collect();
    let mut edges = vec![(x, y)];
    edges.extend(p.iter().chain(&q).map(|&v| (w, v)));
    for (i, &a) in p.iter().enumerate() {
        edges.extend(p[i + 1..].iter().chain(&q).map(|&b| (a, b)));
    }
    edges.extend(q.iter().map(|&b| (y, b)));
    edges.extend(params.q_edges.iter().map(|&(a, b)| (q[a], q[b])));
    edges.extend(params.y_to_p.iter().map(|&i| (y, p[i])));
    Graph::from_edge_list(params.order(), edges)
}

/// Finds roles `x, y, w, P, Q` realising `g` as a member of the leaf
/// family, trying leaves `x` and then `w` in increasing index order.
pub fn is_in_f1(g: &Graph) -> Option<F1Roles> {
    let n = g.order();
    if n < 4 {
        return None;
    }
    for x in (0..n).filter(|&v| g.degree(v) == 1) {
        let y = g.neighbors(x).first()?;
        let candidates = g.vertices().difference(g.closed_neighbors(y));
        for w in candidates {
            let nw = g.neighbors(w);
            let rest = g
                .vertices()
                .difference([x, y, w].into_iter().collect());
            if nw != rest || nw.is_empty() {
                continue;
            }
            let p: VertexSet = nw
                .iter()
                .filter(|&v| nw.difference(VertexSet::singleton(v)).is_subset(g.neighbors(v)))
                .collect();
            let q = nw.difference(p);
            if q.is_subset(g.neighbors(y)) {
                return Some(F1Roles { x, y, w, p, q });
            }
        }
    }
    None
}

/// All members with the given part sizes, one per isomorphism class, in
/// canonical-form order.
pub fn f1_members(p_size: usize, q_size: usize) -> Result<Vec<Graph>> {
    let n = 3 + p_size + q_size;
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let q_pairs: Vec<(usize, usize)> = (0..q_size)
        .flat_map(|a| (a + 1..q_size).map(move |b| (a, b)))
        .collect();
    let mut classes = BTreeMap::new();
    for q_mask in 0u64..1 << q_pairs.len() {
        let q_edges: Vec<(usize, usize)> = VertexSet::from_bits(q_mask)
            .iter()
            .map(|i| q_pairs[i])
            .collect();
        for y_mask in 0u64..1 << p_size {
            let params = F1Params {
                p_size,
                q_size,
                q_edges: q_edges.clone(),
                y_to_p: VertexSet::from_bits(y_mask).iter().collect(),
            };
            match build_f1(&params) {
                Ok(g) => {
                    classes.entry(canonical_form(&g)).or_insert(g);
                }
                Err(Error::BadF1Params(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// `K_1 ∪ K_{n-1}`: some isolated vertex whose removal leaves a clique.
pub fn is_isolate_plus_clique(g: &Graph) -> bool {
    (0..g.order()).any(|v| {
        g.degree(v) == 0 && g.induced(g.vertices().difference(VertexSet::singleton(v))).is_complete()
    })
}

/// A clique `K_{n-1}` with one extra vertex joined to exactly one of its
/// vertices.
pub fn is_pendant_clique(g: &Graph) -> bool {
    (0..g.order()).any(|v| {
        g.degree(v) == 1 && g.induced(g.vertices().difference(VertexSet::singleton(v))).is_complete()
    })
}
