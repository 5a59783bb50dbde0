//! Exhaustive checks of the characterisations of graphs with `C(G) = n`
//! for minimum degree at most one, and of trees with `C(T) >= n - 1`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::catalog::generate::{all_graphs, all_trees, labeled_graphs, CLASS_LIMIT, LABELED_LIMIT};
use crate::catalog::iso::tree_code;
use crate::catalog::lowdeg::{is_in_f1, is_isolate_plus_clique, is_pendant_clique};
use crate::catalog::named::make_named;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph};
use crate::io::to_graph6;
use crate::partition::is_c_partition_raw;
use crate::solver::{coalition_number_bnb, SolverConfig};

/// Known numbers of free trees on `1..=16` vertices.
const TREE_COUNTS: [usize; 16] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];

/// Largest tree order [`verify_theorems`] accepts.
pub const TREE_CHECK_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub examined: u64,
    pub failures: Vec<String>,
}

impl TheoremCheck {
    fn new(name: &'static str, statement: &'static str) -> Self {
        TheoremCheck {
            name,
            statement,
            examined: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoremReport {
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(TheoremCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `C(G) = n` exactly when the all-singletons partition is a coalition
/// partition, since it is the only partition with `n` blocks.
fn singletons_valid(g: &Graph) -> bool {
    let n = g.order();
    let blocks: Vec<u64> = (0..n).map(|v| 1 << v).collect();
    let nbhd: Vec<u64> = (0..n).map(|v| g.closed_neighbors(v).bits()).collect();
    is_c_partition_raw(low_mask(n), &blocks, &nbhd)
}

/// Name and statement of each minimum-degree slice, indexed as in [`slice_of`].
const SLICES: [(&str, &str); 3] = [
    (
        "isolated-vertex",
        "minimum degree 0: C = n iff the graph is K1 plus a clique",
    ),
    (
        "leaf-no-full-vertex",
        "minimum degree 1, no full vertex: C = n iff the graph is in the leaf family",
    ),
    (
        "leaf-one-full-vertex",
        "minimum degree 1, one full vertex, n >= 3: C = n iff the graph is a clique with a pendant edge",
    ),
];

/// Which slice `g` falls in, if any, and the predicate's verdict.
fn slice_of(g: &Graph) -> Option<(usize, bool)> {
    let n = g.order();
    let delta = g.min_degree().ok()?;
    let full = g.full_vertices().len();
    match (delta, full) {
        (0, _) => Some((0, is_isolate_plus_clique(g))),
        (1, 0) => Some((1, is_in_f1(g).is_some())),
        (1, 1) if n >= 3 => Some((2, is_pendant_clique(g))),
        _ => None,
    }
}

fn low_degree_checks(graphs: impl ParallelIterator<Item = Graph>, label: &str) -> Vec<TheoremCheck> {
    let tallies = graphs
        .filter_map(|g| {
            let (slice, predicted) = slice_of(&g)?;
            let bad = (singletons_valid(&g) != predicted).then(|| to_graph6(&g));
            Some((slice, bad))
        })
        .fold(
            || [(0u64, Vec::new()), (0, Vec::new()), (0, Vec::new())],
            |mut acc, (slice, bad)| {
                acc[slice].0 += 1;
                acc[slice].1.extend(bad);
                acc
            },
        )
        .reduce(
            || [(0u64, Vec::new()), (0, Vec::new()), (0, Vec::new())],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    x.0 += y.0;
                    x.1.extend(y.1);
                }
                a
            },
        );
    SLICES
        .iter()
        .zip(tallies)
        .map(|(&(name, statement), (examined, mut failures))| {
            failures.sort();
            let mut check = TheoremCheck::new(name, statement);
            check.examined = examined;
            check.failures = failures.into_iter().map(|f| format!("{label} {f}")).collect();
            check
        })
        .collect()
}

/// The three minimum-degree checks over every labeled graph on `n` vertices.
pub fn verify_low_degree_labeled(n: usize) -> Result<TheoremReport> {
    if n == 0 || n > LABELED_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: LABELED_LIMIT,
        });
    }
    let graphs: Vec<Graph> = labeled_graphs(n)?.collect();
    Ok(TheoremReport {
        checks: low_degree_checks(graphs.into_par_iter(), "labeled"),
    })
}

fn named_codes(specs: &[&str], max_n: usize) -> BTreeSet<Vec<u8>> {
    specs
        .iter()
        .map(|s| make_named(s).expect("static spec"))
        .filter(|g| g.order() <= max_n)
        .map(|g| tree_code(&g).expect("tree"))
        .collect()
}

fn tree_checks(max_tree_n: usize) -> Result<Vec<TheoremCheck>> {
    let mut counts = TheoremCheck::new("tree-counts", "one tree per isomorphism class; known class counts");
    let mut trees = Vec::new();
    for n in 1..=max_tree_n {
        let level = all_trees(n)?;
        counts.examined += 1;
        if level.len() != TREE_COUNTS[n - 1] {
            counts
                .failures
                .push(format!("n={n}: {} trees, expected {}", level.len(), TREE_COUNTS[n - 1]));
        }
        trees.extend(level);
    }

    let values: Vec<usize> = trees
        .par_iter()
        .map(|t| {
            coalition_number_bnb(t, &SolverConfig::default())
                .map(|r| r.value)
                .map_err(|e| Error::BadParameter(e.to_string()))
        })
        .collect::<Result<_>>()?;

    let mut full = TheoremCheck::new("tree-full-value", "trees with C = n are exactly P1, P2, P3, P4");
    let mut one_less = TheoremCheck::new(
        "tree-one-less",
        "trees with C = n - 1 are exactly K1,3, P5, P6 and S(2,1)",
    );
    let mut large = TheoremCheck::new("tree-large", "every tree with n >= 7 has C <= n - 2");
    let mut full_found = BTreeSet::new();
    let mut one_less_found = BTreeSet::new();
    for (t, &c) in trees.iter().zip(&values) {
        let n = t.order();
        let code = tree_code(t).expect("tree");
        full.examined += 1;
        one_less.examined += 1;
        if c == n {
            full_found.insert(code);
        } else if c + 1 == n {
            one_less_found.insert(code);
        }
        if n >= 7 {
            large.examined += 1;
            if c + 2 > n {
                large.failures.push(format!("{} has C = {c}", to_graph6(t)));
            }
        }
    }
    let describe = |found: &BTreeSet<Vec<u8>>, expected: &BTreeSet<Vec<u8>>| -> Vec<String> {
        let show = |c: &Vec<u8>| String::from_utf8_lossy(c).into_owned();
        let mut out: Vec<String> = found
            .difference(expected)
            .map(|c| format!("unexpected tree {}", show(c)))
            .collect();
        out.extend(expected.difference(found).map(|c| format!("missing tree {}", show(c))));
        out
    };
    full.failures = describe(&full_found, &named_codes(&["P1", "P2", "P3", "P4"], max_tree_n));
    one_less.failures = describe(
        &one_less_found,
        &named_codes(&["K1,3", "P5", "P6", "S(2,1)"], max_tree_n),
    );
    Ok(vec![counts, full, one_less, large])
}

/// Low-degree checks over one representative of every isomorphism class on
/// `1..=max_graph_n` vertices, and tree checks over every free tree on
/// `1..=max_tree_n` vertices. Either bound may be zero to skip that part.
pub fn verify_theorems(max_graph_n: usize, max_tree_n: usize) -> Result<TheoremReport> {
    if max_graph_n > CLASS_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n: max_graph_n,
            limit: CLASS_LIMIT,
        });
    }
    if max_tree_n > TREE_CHECK_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n: max_tree_n,
            limit: TREE_CHECK_LIMIT,
        });
    }
    let mut report = TheoremReport::default();
    if max_graph_n > 0 {
        let mut graphs = Vec::new();
        for n in 1..=max_graph_n {
            graphs.extend(all_graphs(n)?);
        }
        report.checks.extend(low_degree_checks(graphs.into_par_iter(), "class"));
    }
    if max_tree_n > 0 {
        report.checks.extend(tree_checks(max_tree_n)?);
    }
    Ok(report)
}
