//! Coalitions, coalition partitions and coalition graphs.
//!
//! Two disjoint sets form a coalition when neither dominates but their union
//! does. A partition is a coalition partition when each block is either a
//! dominating singleton, or a non-dominating block with at least one
//! coalition partner among the other blocks. A dominating block with two or
//! more vertices can never qualify; it is reported as
//! [`BlockStatus::OversizeDominating`].

use std::fmt;
use std::str::FromStr;

use crate::domination::is_dominating;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet, MAX_VERTICES};
use crate::io;

/// Ordered list of disjoint, non-empty blocks covering `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexPartition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl VertexPartition {
    /// Checks that `blocks` is a partition of `{0..n}`.
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut seen = VertexSet::EMPTY;
        for (i, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::NotAPartition(format!("block {i} is empty")));
            }
            if let Some(v) = b.iter().find(|&v| v >= n) {
                return Err(Error::NotAPartition(format!(
                    "vertex {v} in block {i} is outside 0..{n}"
                )));
            }
            let shared = seen.intersection(b);
            if !shared.is_empty() {
                return Err(Error::NotAPartition(format!(
                    "vertices {{{shared}}} appear in more than one block"
                )));
            }
            seen = seen.union(b);
        }
        let missing = VertexSet::full(n).difference(seen);
        if !missing.is_empty() {
            return Err(Error::NotAPartition(format!(
                "vertices {{{missing}}} are not covered"
            )));
        }
        Ok(VertexPartition { n, blocks })
    }

    /// The partition into `n` singleton blocks.
    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            n,
            blocks: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    /// Builds the partition encoded by a restricted-growth string: vertex `v`
    /// goes to block `labels[v]`.
    pub fn from_rgs(labels: &[u8]) -> Result<Self> {
        let mut blocks: Vec<VertexSet> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let l = l as usize;
            match l.cmp(&blocks.len()) {
                std::cmp::Ordering::Less => blocks[l].insert(v),
                std::cmp::Ordering::Equal => blocks.push(VertexSet::singleton(v)),
                std::cmp::Ordering::Greater => {
                    return Err(Error::NotAPartition(format!(
                        "label {l} at position {v} skips a block"
                    )))
                }
            }
        }
        VertexPartition::new(labels.len(), blocks)
    }

    /// Restricted-growth string of the partition (blocks numbered by their
    /// smallest vertex).
    pub fn to_rgs(&self) -> Vec<u8> {
        let mut labels = vec![u8::MAX; self.n];
        let mut next = 0u8;
        for v in 0..self.n {
            if labels[v] != u8::MAX {
                continue;
            }
            let block = self.blocks.iter().find(|b| b.contains(v)).expect("covering");
            for u in block.iter() {
                labels[u] = next;
            }
            next += 1;
        }
        labels
    }

    /// Same partition with blocks ordered by smallest vertex.
    pub fn canonical(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| b.first());
        VertexPartition { n: self.n, blocks }
    }

    /// Parses `0,3|1|2` (or the braced form `{{0,3},{1},{2}}`). With
    /// `one_indexed`, vertex labels start at 1.
    pub fn parse(text: &str, n: usize, one_indexed: bool) -> Result<Self> {
        let text = text.trim();
        let groups: Vec<&str> = if text.contains('{') {
            let inner = text
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("unbalanced braces in `{text}`")))?;
            inner
                .split('}')
                .map(|g| g.trim().trim_start_matches(',').trim())
                .filter(|g| !g.is_empty())
                .map(|g| {
                    g.strip_prefix('{')
                        .ok_or_else(|| Error::Parse(format!("expected `{{` before `{g}`")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split('|').collect()
        };
        let mut blocks = Vec::with_capacity(groups.len());
        for group in groups {
            let mut block = VertexSet::EMPTY;
            for tok in group.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let raw: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex `{tok}`")))?;
                let v = if one_indexed {
                    raw.checked_sub(1)
                        .ok_or_else(|| Error::Parse("vertex 0 in one-indexed input".into()))?
                } else {
                    raw
                };
                if v >= n {
                    return Err(Error::NotAPartition(format!(
                        "vertex {raw} is outside the graph"
                    )));
                }
                if block.contains(v) {
                    return Err(Error::NotAPartition(format!("vertex {raw} repeated")));
                }
                block.insert(v);
            }
            blocks.push(block);
        }
        VertexPartition::new(n, blocks)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Number of blocks.
    #[inline]
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Relabels vertex `v` as `perm[v]`, keeping block order.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| perm[v]).collect())
            .collect();
        VertexPartition { n: self.n, blocks }
    }

    /// Renders blocks with 1-based labels in the `{{1,4},{2}}` style.
    pub fn to_one_indexed_string(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let vs: Vec<String> = b.iter().map(|v| (v + 1).to_string()).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `0,3|1|2` syntax, accepted back by [`VertexPartition::parse`].
impl fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexPartition {
    type Err = Error;

    /// Parses with `n` inferred as one more than the largest vertex.
    fn from_str(s: &str) -> Result<Self> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .ok_or_else(|| Error::Parse(format!("no vertices in `{s}`")))?;
        VertexPartition::parse(s, max + 1, false)
    }
}

/// `true` iff `a` and `b` form a coalition. Errors when they overlap.
pub fn forms_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    let shared = a.intersection(b);
    if !shared.is_empty() {
        return Err(Error::OverlappingSets(shared));
    }
    Ok(!is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a.union(b)))
}

/// Classification of one block of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockStatus {
    /// A single vertex adjacent to all others.
    SingletonDominating,
    /// Non-dominating, with these coalition partners (block indices, ascending).
    HasPartner(Vec<usize>),
    /// Non-dominating and without a partner.
    Orphan,
    /// Dominating with two or more vertices.
    OversizeDominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionValidity {
    pub verdict: Verdict,
    pub blocks: Vec<BlockStatus>,
}

impl PartitionValidity {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

fn check_order(g: &Graph, p: &VertexPartition) -> Result<()> {
    if g.order() != p.order() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices but the graph has {}",
            p.order(),
            g.order()
        )));
    }
    Ok(())
}

/// Classifies every block of `p` and derives the overall verdict.
pub fn validate_partition(g: &Graph, p: &VertexPartition) -> Result<PartitionValidity> {
    check_order(g, p)?;
    let full = g.vertices().bits();
    let nbhd: Vec<u64> = p
        .blocks()
        .iter()
        .map(|&b| g.closed_neighborhood(b).bits())
        .collect();
    let blocks: Vec<BlockStatus> = p
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if nbhd[i] == full {
                return if b.len() == 1 {
                    BlockStatus::SingletonDominating
                } else {
                    BlockStatus::OversizeDominating
                };
            }
            let partners: Vec<usize> = (0..nbhd.len())
                .filter(|&j| j != i && nbhd[j] != full && nbhd[i] | nbhd[j] == full)
                .collect();
            if partners.is_empty() {
                BlockStatus::Orphan
            } else {
                BlockStatus::HasPartner(partners)
            }
        })
        .collect();
    let verdict = if blocks
        .iter()
        .any(|s| matches!(s, BlockStatus::Orphan | BlockStatus::OversizeDominating))
    {
        Verdict::Invalid
    } else {
        Verdict::Valid
    };
    Ok(PartitionValidity { verdict, blocks })
}

/// Hot-path validity test on raw block masks. `nbhd[i]` must be `N[blocks[i]]`
/// and `full` the vertex mask of the graph.
#[inline]
pub(crate) fn is_c_partition_raw(full: u64, blocks: &[u64], nbhd: &[u64]) -> bool {
    let k = blocks.len();
    'block: for i in 0..k {
        if nbhd[i] == full {
            if blocks[i].count_ones() == 1 {
                continue;
            }
            return false;
        }
        for j in 0..k {
            if j != i && nbhd[j] != full && nbhd[i] | nbhd[j] == full {
                continue 'block;
            }
        }
        return false;
    }
    true
}

/// Coalition-graph adjacency rows on raw block data (see [`is_c_partition_raw`]).
#[inline]
pub(crate) fn coalition_rows_raw(full: u64, nbhd: &[u64]) -> Vec<u64> {
    let k = nbhd.len();
    let mut rows = vec![0u64; k];
    for i in 0..k {
        if nbhd[i] == full {
            continue;
        }
        for j in i + 1..k {
            if nbhd[j] != full && nbhd[i] | nbhd[j] == full {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

/// Coalition graph of a coalition partition; vertex `i` stands for block `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionGraph {
    pub graph: Graph,
    pub blocks: Vec<VertexSet>,
}

impl CoalitionGraph {
    /// DOT rendering with block contents as node labels.
    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.blocks.iter().map(|b| format!("{{{b}}}")).collect();
        io::to_dot(&self.graph, "coalition_graph", Some(&labels))
    }
}

/// Builds `CG(G, p)`. Fails with [`Error::InvalidPartition`] unless `p` is a
/// coalition partition of `g`.
pub fn coalition_graph(g: &Graph, p: &VertexPartition) -> Result<CoalitionGraph> {
    if !validate_partition(g, p)?.is_valid() {
        return Err(Error::InvalidPartition);
    }
    let full = low_mask(g.order());
    let nbhd: Vec<u64> = p
        .blocks()
        .iter()
        .map(|&b| g.closed_neighborhood(b).bits())
        .collect();
    Ok(CoalitionGraph {
        graph: Graph::from_rows_unchecked(coalition_rows_raw(full, &nbhd)),
        blocks: p.blocks().to_vec(),
    })
}
