//! Brute-force isomorphism for small graphs and AHU codes for trees.

use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`canonical_form`]; the bit string must fit a `u64`.
pub const CANONICAL_LIMIT: usize = 11;

/// Lexicographically least upper-triangle adjacency string over all vertex
/// orderings. Pairs are read column by column, `(0,1), (0,2), (1,2), (0,3), ..`,
/// and the first pair is the most significant bit of `bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalForm {
    /// The graph whose identity labelling realises this form.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let len = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    len: usize,
    best: u64,
    placed: Vec<usize>,
}

impl CanonSearch<'_> {
    fn run(&mut self, used: u64, prefix: u64, prefix_len: usize) {
        let n = self.g.order();
        let j = self.placed.len();
        if j == n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        for v in VertexSet::from_bits(!used & crate::graph::low_mask(n)) {
            let row = self.g.rows()[v];
            let mut p = prefix;
            for &u in &self.placed {
                p = p << 1 | (row >> u & 1);
            }
            let plen = prefix_len + j;
            // Prefix greater than the best string's prefix: nothing below can win.
            if plen > 0 && p > self.best >> (self.len - plen) {
                continue;
            }
            self.placed.push(v);
            self.run(used | 1 << v, p, plen);
            self.placed.pop();
        }
    }
}

/// Canonical form by exhaustive search over orderings with prefix pruning.
/// Panics when `g.order() > CANONICAL_LIMIT`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    assert!(n <= CANONICAL_LIMIT, "canonical_form supports n <= {CANONICAL_LIMIT}");
    let len = n * n.saturating_sub(1) / 2;
    let mut search = CanonSearch {
        g,
        len,
        best: if len == 0 { 0 } else { u64::MAX >> (64 - len) },
        placed: Vec::with_capacity(n),
    };
    search.run(0, 0, 0);
    CanonicalForm {
        n: n as u8,
        bits: search.best,
    }
}

/// Isomorphism test: order, size and degree-sequence filters, then a
/// backtracking search for a degree-preserving bijection.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    extend_mapping(g, h, 0, 0, &mut map)
}

fn extend_mapping(g: &Graph, h: &Graph, v: usize, used: u64, map: &mut [usize]) -> bool {
    let n = g.order();
    if v == n {
        return true;
    }
    for w in VertexSet::from_bits(!used & crate::graph::low_mask(n)) {
        if g.degree(v) != h.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            if extend_mapping(g, h, v + 1, used | 1 << w, map) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}

/// Centre-rooted AHU code: equal for two trees iff they are isomorphic.
/// Returns `None` when `g` is not a tree.
pub fn tree_code(g: &Graph) -> Option<Vec<u8>> {
    if !g.is_tree() {
        return None;
    }
    let n = g.order();
    if n == 1 {
        return Some(b"()".to_vec());
    }
    // Peel leaves until one or two vertices remain.
    let mut degree: Vec<usize> = g.degrees();
    let mut alive = g.vertices().bits();
    let mut left = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while left > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            alive &= !(1 << v);
            left -= 1;
            for u in g.neighbors(v).intersection(VertexSet::from_bits(alive)) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    VertexSet::from_bits(alive)
        .iter()
        .map(|root| rooted_code(g, root, usize::MAX))
        .min()
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(g, u, v))
        .collect();
    children.sort();
    let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in children {
        code.extend(c);
    }
    code.push(b')');
    code
}
