//! Graph enumeration: labeled graphs, isomorphism-class representatives and
//! trees.

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::iso::{canonical_form, tree_code};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for [`labeled_graphs`] (`2^21` graphs at 7).
pub const LABELED_LIMIT: usize = 7;
/// Largest order for [`all_graphs`].
pub const CLASS_LIMIT: usize = 8;
/// Largest order for [`all_trees`].
pub const TREE_LIMIT: usize = 16;
/// Largest order for [`trees_by_pruefer`].
pub const PRUEFER_LIMIT: usize = 9;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every labeled graph on `n` vertices; graph `i` has edge set given by the
/// bits of `i` over pairs in row-major order `(0,1), (0,2), .., (n-2,n-1)`.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > LABELED_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: LABELED_LIMIT,
        });
    }
    let pairs = pairs(n);
    Ok((0u64..1 << pairs.len()).map(move |mask| labeled_graph(n, &pairs, mask)))
}

fn labeled_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// One representative per isomorphism class on `n` vertices, in canonical
/// form labelling and canonical-form order.
///
/// Every graph on `n` vertices is some graph on `n - 1` vertices plus one
/// vertex, so extending each smaller representative by every possible
/// neighbourhood reaches every class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CLASS_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: CLASS_LIMIT,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let smaller = all_graphs(n - 1)?;
    let mut classes = BTreeSet::new();
    for g in &smaller {
        let base = g.rows();
        for nb in 0u64..1 << (n - 1) {
            let mut rows: Vec<u64> = base
                .iter()
                .enumerate()
                .map(|(v, &r)| r | (nb >> v & 1) << (n - 1))
                .collect();
            rows.push(nb);
            classes.insert(canonical_form(&Graph::from_rows_unchecked(rows)));
        }
    }
    Ok(classes.into_iter().map(|c| c.to_graph()).collect())
}

/// Class representatives of every order in `1..=n_max` accepted by `keep`.
pub fn all_graphs_up_to<F>(n_max: usize, keep: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(all_graphs(n)?.into_iter().filter(|g| keep(g)));
    }
    Ok(out)
}

/// One tree per isomorphism class on `n` vertices, ordered by centre-rooted
/// code. Trees on `n` vertices come from trees on `n - 1` vertices by
/// attaching a leaf.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::BadParameter("trees need n >= 1".into()));
    }
    if n > TREE_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: TREE_LIMIT,
        });
    }
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1)?;
    level.insert(tree_code(&k1).expect("tree"), k1);
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..m - 1 {
                let mut rows = t.rows().to_vec();
                rows[v] |= 1 << (m - 1);
                rows.push(1 << v);
                let g = Graph::from_rows_unchecked(rows);
                next.entry(tree_code(&g).expect("tree")).or_insert(g);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Trees by decoding every Prüfer sequence and keeping one per class. Only
/// feasible for small `n`; ordered like [`all_trees`].
pub fn trees_by_pruefer(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::BadParameter("trees need n >= 1".into()));
    }
    if n > PRUEFER_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: PRUEFER_LIMIT,
        });
    }
    if n <= 2 {
        return Ok(vec![Graph::from_edge_list(n, (1..n).map(|i| (0, i)))?]);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut classes = BTreeMap::new();
    let mut seq = vec![0usize; len];
    for mut code in 0..total {
        for s in seq.iter_mut() {
            *s = code % n;
            code /= n;
        }
        let g = decode_pruefer(n, &seq)?;
        classes.entry(tree_code(&g).expect("tree")).or_insert(g);
    }
    Ok(classes.into_values().collect())
}

fn decode_pruefer(n: usize, seq: &[usize]) -> Result<Graph> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| all_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn pruefer_oracle_agrees() {
        for n in 1..=8 {
            let a: Vec<_> = all_trees(n).unwrap().iter().map(|t| tree_code(t).unwrap()).collect();
            let b: Vec<_> = trees_by_pruefer(n).unwrap().iter().map(|t| tree_code(t).unwrap()).collect();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn labeled_count() {
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn filtered_generation() {
        let connected = all_graphs_up_to(4, Graph::is_connected).unwrap();
        assert_eq!(connected.len(), 1 + 1 + 2 + 6);
    }
}
