//! Exhaustive censuses over coalition partitions of paths, replays of the
//! explicit path constructions, and drivers that check the low-degree and
//! tree characterisations on every small graph.

mod construction;
mod table;
mod theorems;

pub use construction::{build_construction, verify_constructions, ConstructionCheck, ConstructionId, ConstructionOutcome, ConstructionReport};
pub use table::{expected_cell, path_grid, ExpectedCell, GridReport, CellMismatch, EXPECTED_NC};
pub use theorems::{verify_low_degree_labeled, verify_theorems, TheoremCheck, TheoremReport};

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use crate::catalog::family::{classify_cp, CpClass};
use crate::catalog::named::path;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{coalition_rows_raw, is_c_partition_raw, VertexPartition};
use crate::rgs::{par_explore, Explorer, PartialPartition};

/// Largest path order accepted by [`census_path`].
pub const CENSUS_LIMIT: usize = 13;

/// Everything one exhaustive scan of `P_k` learned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub k: usize,
    /// Realised classes with the lexicographically least witness partition
    /// (by restricted-growth string) for each. May contain
    /// [`CpClass::Outside`], which would contradict the containment claim.
    pub witnesses: BTreeMap<CpClass, VertexPartition>,
    /// Number of valid partitions realising each class.
    pub counts: BTreeMap<CpClass, u64>,
    pub partitions_scanned: u64,
    pub valid_partitions: u64,
    /// Largest block count over valid partitions, i.e. `C(P_k)`.
    pub max_blocks: usize,
    pub elapsed: Duration,
}

impl CensusReport {
    /// Realised members of the family, in table row order.
    pub fn realizable(&self) -> Vec<CpClass> {
        CpClass::MEMBERS
            .iter()
            .copied()
            .filter(|c| self.witnesses.contains_key(c))
            .collect()
    }

    /// `NC(P_k)`: how many family members the path realises.
    pub fn nc(&self) -> usize {
        self.realizable().len()
    }

    pub fn realizes(&self, class: CpClass) -> bool {
        self.witnesses.contains_key(&class)
    }

    /// Number of valid partitions whose coalition graph lies outside the family.
    pub fn outside_count(&self) -> u64 {
        self.counts.get(&CpClass::Outside).copied().unwrap_or(0)
    }
}

/// Packs a coalition graph on at most 8 vertices into a cache key.
fn pack(rows: &[u64]) -> Option<u64> {
    let n = rows.len();
    if n > 8 {
        return None;
    }
    let mut key = n as u64;
    let mut shift = 4;
    for (i, &r) in rows.iter().enumerate() {
        key |= (r >> (i + 1)) << shift;
        shift += n - i - 1;
    }
    Some(key)
}

struct CensusScan {
    cache: HashMap<u64, CpClass>,
    first: BTreeMap<CpClass, Vec<u8>>,
    counts: BTreeMap<CpClass, u64>,
    scanned: u64,
    valid: u64,
    max_blocks: usize,
}

impl CensusScan {
    fn classify(&mut self, rows: Vec<u64>) -> CpClass {
        match pack(&rows) {
            Some(key) => *self
                .cache
                .entry(key)
                .or_insert_with(|| classify_cp(&Graph::from_rows_unchecked(rows))),
            None => CpClass::Outside,
        }
    }
}

impl Explorer for CensusScan {
    fn complete(&mut self, part: &PartialPartition) -> bool {
        self.scanned += 1;
        if !is_c_partition_raw(part.full, &part.blocks, &part.nbhd) {
            return true;
        }
        self.valid += 1;
        self.max_blocks = self.max_blocks.max(part.block_count());
        let class = self.classify(coalition_rows_raw(part.full, &part.nbhd));
        *self.counts.entry(class).or_insert(0) += 1;
        self.first.entry(class).or_insert_with(|| part.rgs());
        true
    }
}

/// Scans every set partition of `P_k` (vertices `0..k` along the path),
/// keeps the coalition partitions and classifies their coalition graphs.
pub fn census_path(k: usize) -> Result<CensusReport> {
    if k == 0 {
        return Err(Error::BadParameter("census needs k >= 1".into()));
    }
    if k > CENSUS_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n: k,
            limit: CENSUS_LIMIT,
        });
    }
    census_graph(&path(k)?, k)
}

fn census_graph(g: &Graph, k: usize) -> Result<CensusReport> {
    let start = Instant::now();
    let order: Vec<usize> = (0..g.order()).collect();
    let scans = par_explore(g, &order, || CensusScan {
        cache: HashMap::new(),
        first: BTreeMap::new(),
        counts: BTreeMap::new(),
        scanned: 0,
        valid: 0,
        max_blocks: 0,
    });
    let mut report = CensusReport {
        k,
        witnesses: BTreeMap::new(),
        counts: BTreeMap::new(),
        partitions_scanned: 0,
        valid_partitions: 0,
        max_blocks: 0,
        elapsed: Duration::ZERO,
    };
    // Chunks arrive in prefix order, so the first chunk holding a class has
    // its least witness.
    for s in scans {
        report.partitions_scanned += s.scanned;
        report.valid_partitions += s.valid;
        report.max_blocks = report.max_blocks.max(s.max_blocks);
        for (c, n) in s.counts {
            *report.counts.entry(c).or_insert(0) += n;
        }
        for (c, rgs) in s.first {
            report
                .witnesses
                .entry(c)
                .or_insert_with(|| VertexPartition::from_rgs(&rgs).expect("walker output"));
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
