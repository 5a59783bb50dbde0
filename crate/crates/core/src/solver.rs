//! Exact coalition number `C(G)`.
//!
//! Two independent routes: a plain scan over every set partition
//! ([`coalition_number_enumerate`], the oracle) and a branch-and-bound search
//! ([`coalition_number_bnb`]) seeded with the known degree bounds.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{is_c_partition_raw, VertexPartition};
use crate::rgs::{explore, par_explore, Explorer, PartialPartition};

/// Largest order accepted by [`coalition_number_enumerate`] (`B(13)` is about
/// 2.8e7 partitions).
pub const ENUMERATION_LIMIT: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    Enumerate,
    #[default]
    BranchAndBound,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverConfig {
    pub method: Method,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SolverConfig {
    pub fn new(method: Method) -> Self {
        SolverConfig {
            method,
            ..Default::default()
        }
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    fn check(&self) -> Result<()> {
        if self.node_limit == Some(0) {
            return Err(Error::BadParameter("node limit must be positive".into()));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(Error::BadParameter("time limit must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Complete partitions reached.
    pub partitions_examined: u64,
    /// Subtrees cut by a bound (always zero for plain enumeration).
    pub nodes_pruned: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    /// `C(G)`, or the best value found when a limit interrupted the search.
    /// Zero means no coalition partition exists.
    pub value: usize,
    /// A coalition partition with `value` blocks.
    pub witness: Option<VertexPartition>,
    pub stats: SolverStats,
    pub upper_bound: usize,
    /// `false` when a node or time limit stopped the search early.
    pub exact: bool,
}

impl SolverResult {
    /// The graph admits no coalition partition at all.
    pub fn no_partition(&self) -> bool {
        self.exact && self.value == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Graph(#[from] Error),
    #[error("search limit exceeded; best value found {}", .0.value)]
    LimitExceeded(Box<SolverResult>),
}

/// Minimum of every applicable upper bound on `C(G)`:
/// `n`, `floor((Δ+3)²/4)`, `(δ+1)(Δ−δ+2)` when `2δ < Δ`, `2(Δ+1)` when
/// `δ = 1`, and 6 for paths and cycles.
pub fn upper_bound(g: &Graph) -> Result<usize> {
    let n = g.order();
    let min_d = g.min_degree()?;
    let max_d = g.max_degree()?;
    let mut bound = n.min((max_d + 3) * (max_d + 3) / 4);
    if 2 * min_d < max_d {
        bound = bound.min((min_d + 1) * (max_d - min_d + 2));
    }
    if min_d == 1 {
        bound = bound.min(2 * (max_d + 1));
    }
    if g.is_path() || g.is_cycle() {
        bound = bound.min(6);
    }
    Ok(bound)
}

fn to_partition(rgs: &[u8]) -> VertexPartition {
    VertexPartition::from_rgs(rgs).expect("walker produces restricted-growth strings")
}

struct MaxScan {
    value: usize,
    rgs: Option<Vec<u8>>,
    examined: u64,
}

impl Explorer for MaxScan {
    fn complete(&mut self, part: &PartialPartition) -> bool {
        self.examined += 1;
        let k = part.block_count();
        if k > self.value && is_c_partition_raw(part.full, &part.blocks, &part.nbhd) {
            self.value = k;
            self.rgs = Some(part.rgs());
        }
        true
    }
}

/// `C(G)` by scanning every set partition of `V(G)`. Among maximum
/// partitions, the lexicographically least restricted-growth string is
/// returned as witness.
pub fn coalition_number_enumerate(g: &Graph) -> Result<SolverResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let start = Instant::now();
    let order: Vec<usize> = (0..n).collect();
    let scans = par_explore(g, &order, || MaxScan {
        value: 0,
        rgs: None,
        examined: 0,
    });
    let mut value = 0;
    let mut rgs = None;
    let mut examined = 0;
    for s in scans {
        examined += s.examined;
        if s.value > value {
            value = s.value;
            rgs = s.rgs;
        }
    }
    Ok(SolverResult {
        value,
        witness: rgs.as_deref().map(to_partition),
        stats: SolverStats {
            partitions_examined: examined,
            nodes_pruned: 0,
            elapsed: start.elapsed(),
        },
        upper_bound: upper_bound(g)?,
        exact: true,
    })
}

struct Collect {
    found: Vec<Vec<u8>>,
}

impl Explorer for Collect {
    fn complete(&mut self, part: &PartialPartition) -> bool {
        if is_c_partition_raw(part.full, &part.blocks, &part.nbhd) {
            self.found.push(part.rgs());
        }
        true
    }
}

/// Every coalition partition of `g`, ordered by restricted-growth string.
pub fn coalition_partitions(g: &Graph) -> Result<Vec<VertexPartition>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let order: Vec<usize> = (0..n).collect();
    Ok(par_explore(g, &order, || Collect { found: Vec::new() })
        .into_iter()
        .flat_map(|c| c.found)
        .map(|rgs| to_partition(&rgs))
        .collect())
}

/// Shared limit bookkeeping for the two search passes.
struct Budget {
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    exceeded: bool,
}

impl Budget {
    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.exceeded = true;
            }
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exceeded = true;
                }
            }
        }
        self.exceeded
    }
}

/// Extending a block that already dominates can only keep it an oversize
/// dominating block.
#[inline]
fn extends_dominating_block(part: &PartialPartition, label: usize) -> bool {
    part.blocks[label].count_ones() >= 2 && part.nbhd[label] == part.full
}

struct Bnb<'a> {
    budget: &'a mut Budget,
    incumbent: usize,
    best: Option<Vec<u8>>,
    ceiling: usize,
    examined: u64,
    pruned: u64,
    optimal: bool,
}

impl Explorer for Bnb<'_> {
    fn admit(&mut self, part: &PartialPartition, label: usize) -> bool {
        if part.block_count() + part.remaining() <= self.incumbent
            || extends_dominating_block(part, label)
        {
            self.pruned += 1;
            return false;
        }
        true
    }

    fn complete(&mut self, part: &PartialPartition) -> bool {
        self.examined += 1;
        let k = part.block_count();
        if k > self.incumbent && is_c_partition_raw(part.full, &part.blocks, &part.nbhd) {
            self.incumbent = k;
            self.best = Some(part.rgs());
            if k >= self.ceiling {
                self.optimal = true;
                return false;
            }
        }
        true
    }

    fn new_block_first(&self) -> bool {
        true
    }

    fn should_stop(&mut self) -> bool {
        self.budget.tick()
    }
}

/// Finds the lexicographically least coalition partition with exactly
/// `target` blocks, walking vertices in index order.
struct LexWitness<'a> {
    budget: &'a mut Budget,
    target: usize,
    found: Option<Vec<u8>>,
    examined: u64,
    pruned: u64,
}

impl Explorer for LexWitness<'_> {
    fn admit(&mut self, part: &PartialPartition, label: usize) -> bool {
        let k = part.block_count();
        if k > self.target
            || k + part.remaining() < self.target
            || extends_dominating_block(part, label)
        {
            self.pruned += 1;
            return false;
        }
        true
    }

    fn complete(&mut self, part: &PartialPartition) -> bool {
        self.examined += 1;
        if part.block_count() == self.target
            && is_c_partition_raw(part.full, &part.blocks, &part.nbhd)
        {
            self.found = Some(part.rgs());
            return false;
        }
        true
    }

    fn should_stop(&mut self) -> bool {
        self.budget.tick()
    }
}

/// Vertices by non-increasing degree, ties by index.
fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// `C(G)` by branch and bound. Vertices are placed in non-increasing degree
/// order, new block first; a branch is cut when its block count plus the
/// unplaced vertices cannot beat the incumbent, or when it grows a block that
/// already dominates. The search stops as soon as the incumbent meets
/// [`upper_bound`]. The reported witness is the same one
/// [`coalition_number_enumerate`] would return.
pub fn coalition_number_bnb(
    g: &Graph,
    cfg: &SolverConfig,
) -> std::result::Result<SolverResult, SolverError> {
    cfg.check()?;
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph.into());
    }
    let start = Instant::now();
    let ceiling = upper_bound(g)?;
    let mut budget = Budget {
        nodes: 0,
        node_limit: cfg.node_limit,
        deadline: cfg.time_limit.map(|d| start + d),
        exceeded: false,
    };

    let mut search = Bnb {
        budget: &mut budget,
        incumbent: 0,
        best: None,
        ceiling,
        examined: 0,
        pruned: 0,
        optimal: false,
    };
    explore(&mut PartialPartition::new(g, branching_order(g)), &mut search);
    let Bnb {
        incumbent,
        best,
        mut examined,
        mut pruned,
        ..
    } = search;

    let mut witness = best;
    if !budget.exceeded && incumbent > 0 {
        let mut lex = LexWitness {
            budget: &mut budget,
            target: incumbent,
            found: None,
            examined: 0,
            pruned: 0,
        };
        explore(&mut PartialPartition::new(g, (0..n).collect()), &mut lex);
        examined += lex.examined;
        pruned += lex.pruned;
        if let Some(found) = lex.found {
            witness = Some(found);
        }
    }

    let result = SolverResult {
        value: incumbent,
        witness: witness.as_deref().map(to_partition),
        stats: SolverStats {
            partitions_examined: examined,
            nodes_pruned: pruned,
            elapsed: start.elapsed(),
        },
        upper_bound: ceiling,
        exact: !budget.exceeded,
    };
    if budget.exceeded {
        Err(SolverError::LimitExceeded(Box::new(result)))
    } else {
        Ok(result)
    }
}

/// Dispatches on [`SolverConfig::method`]. Limits only apply to branch and bound.
pub fn coalition_number_with(
    g: &Graph,
    cfg: &SolverConfig,
) -> std::result::Result<SolverResult, SolverError> {
    match cfg.method {
        Method::Enumerate => Ok(coalition_number_enumerate(g)?),
        Method::BranchAndBound => coalition_number_bnb(g, cfg),
    }
}

/// `C(G)` by unlimited branch and bound.
pub fn coalition_number(g: &Graph) -> Result<usize> {
    match coalition_number_bnb(g, &SolverConfig::default()) {
        Ok(r) => Ok(r.value),
        Err(SolverError::Graph(e)) => Err(e),
        Err(SolverError::LimitExceeded(_)) => unreachable!("no limits configured"),
    }
}
