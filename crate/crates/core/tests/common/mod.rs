//! Slow reference implementations shared by the integration tests. Nothing
//! here uses the library's bitmask walkers, so agreement is meaningful.
#![allow(dead_code)]

use coalition_core::Graph;
use rand::Rng;

pub type Adj = Vec<Vec<bool>>;

pub fn adjacency(g: &Graph) -> Adj {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn adjacency_from_edges(n: usize, edges: &[(usize, usize)]) -> Adj {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Every set partition of `0..n`, each block sorted.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in set_partitions(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n - 1);
            out.push(q);
        }
        let mut q = p;
        q.push(vec![n - 1]);
        out.push(q);
    }
    out
}

pub fn dominates(a: &Adj, s: &[usize]) -> bool {
    (0..a.len()).all(|v| s.iter().any(|&u| u == v || a[u][v]))
}

fn union(s: &[usize], t: &[usize]) -> Vec<usize> {
    s.iter().chain(t).copied().collect()
}

pub fn coalition(a: &Adj, s: &[usize], t: &[usize]) -> bool {
    !dominates(a, s) && !dominates(a, t) && dominates(a, &union(s, t))
}

pub fn is_c_partition(a: &Adj, p: &[Vec<usize>]) -> bool {
    p.iter().enumerate().all(|(i, s)| {
        if dominates(a, s) {
            s.len() == 1
        } else {
            p.iter().enumerate().any(|(j, t)| j != i && coalition(a, s, t))
        }
    })
}

pub fn coalition_number(a: &Adj) -> usize {
    set_partitions(a.len())
        .into_iter()
        .filter(|p| is_c_partition(a, p))
        .map(|p| p.len())
        .max()
        .unwrap_or(0)
}

pub fn coalition_graph(a: &Adj, p: &[Vec<usize>]) -> Adj {
    let k = p.len();
    let mut cg = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j && coalition(a, &p[i], &p[j]) {
                cg[i][j] = true;
            }
        }
    }
    cg
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    let n = a.len();
    n == b.len()
        && permutations(n)
            .iter()
            .any(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

pub fn max_degree(a: &Adj) -> usize {
    a.iter().map(|r| r.iter().filter(|&&x| x).count()).max().unwrap_or(0)
}

pub fn min_degree(a: &Adj) -> usize {
    a.iter().map(|r| r.iter().filter(|&&x| x).count()).min().unwrap_or(0)
}

/// Smallest vertex set touching every edge, by subset scan.
pub fn vertex_cover_number(a: &Adj) -> usize {
    let n = a.len();
    (0u32..1 << n)
        .filter(|&m| (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || m >> u & 1 == 1 || m >> v & 1 == 1)))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// The eighteen path coalition graphs, written out edge by edge.
pub fn family_by_hand() -> Vec<(&'static str, Adj)> {
    let g = adjacency_from_edges;
    vec![
        ("K1", g(1, &[])),
        ("K2", g(2, &[(0, 1)])),
        ("K2bar", g(2, &[])),
        ("K1uK2", g(3, &[(1, 2)])),
        ("P3", g(3, &[(0, 1), (1, 2)])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("K13", g(4, &[(0, 1), (0, 2), (0, 3)])),
        ("TwoK2", g(4, &[(0, 1), (2, 3)])),
        ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
        ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("F1paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("K4e", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
        ("P2uP3", g(5, &[(0, 1), (2, 3), (3, 4)])),
        ("F2", g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])),
        ("B1bull", g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])),
        ("P5", g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])),
        ("S12", g(5, &[(0, 1), (0, 2), (1, 3), (1, 4)])),
        ("S22", g(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])),
    ]
}

pub fn classify_by_hand(cg: &Adj) -> &'static str {
    family_by_hand()
        .into_iter()
        .find(|(_, h)| isomorphic(h, cg))
        .map_or("Outside", |(name, _)| name)
}

pub fn path_adj(k: usize) -> Adj {
    let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    adjacency_from_edges(k, &edges)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
