//! Restricted-growth-string enumeration of set partitions.
//!
//! A set partition of positions `0..n` is encoded by labels `a[0..n]` with
//! `a[0] = 0` and `a[i] <= 1 + max(a[..i])`; each partition has exactly one
//! such encoding. The walker assigns positions in a caller-chosen vertex
//! order, keeping every block's mask and closed neighbourhood up to date so
//! that validity tests at the leaves cost `O(k^2)` word operations.

use rayon::prelude::*;

use crate::graph::{low_mask, Graph};

/// Partially assigned partition, positions `0..depth` placed.
pub(crate) struct PartialPartition {
    pub full: u64,
    /// `N[v]` indexed by vertex.
    pub closed: Vec<u64>,
    /// Vertex placed at each position.
    pub order: Vec<usize>,
    pub blocks: Vec<u64>,
    pub nbhd: Vec<u64>,
    /// Block label per position.
    pub labels: Vec<u8>,
    saved: Vec<u64>,
}

impl PartialPartition {
    pub fn new(g: &Graph, order: Vec<usize>) -> Self {
        let n = g.order();
        debug_assert_eq!(order.len(), n);
        PartialPartition {
            full: low_mask(n),
            closed: (0..n).map(|v| g.closed_neighbors(v).bits()).collect(),
            order,
            blocks: Vec::with_capacity(n),
            nbhd: Vec::with_capacity(n),
            labels: Vec::with_capacity(n),
            saved: Vec::with_capacity(n),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn depth(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn remaining(&self) -> usize {
        self.n() - self.depth()
    }

    #[inline]
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Places the next vertex into block `label` (a new block when
    /// `label == block_count()`).
    #[inline]
    pub fn push(&mut self, label: usize) {
        let v = self.order[self.depth()];
        let bit = 1u64 << v;
        if label == self.blocks.len() {
            self.blocks.push(bit);
            self.nbhd.push(self.closed[v]);
        } else {
            self.saved.push(self.nbhd[label]);
            self.blocks[label] |= bit;
            self.nbhd[label] |= self.closed[v];
        }
        self.labels.push(label as u8);
    }

    #[inline]
    pub fn pop(&mut self) {
        let label = self.labels.pop().expect("pop on empty partial partition") as usize;
        let v = self.order[self.depth()];
        if self.blocks[label] == 1u64 << v {
            self.blocks.pop();
            self.nbhd.pop();
        } else {
            self.blocks[label] &= !(1u64 << v);
            self.nbhd[label] = self.saved.pop().expect("saved neighbourhood");
        }
    }

    /// Block label of every vertex, indexed by vertex. A restricted-growth
    /// string only when the walk order is the identity.
    pub fn rgs(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.n()];
        for (pos, &l) in self.labels.iter().enumerate() {
            out[self.order[pos]] = l;
        }
        out
    }
}

/// Callbacks driving [`explore`].
pub(crate) trait Explorer {
    /// Called right after a position was assigned; `false` skips the subtree.
    fn admit(&mut self, _part: &PartialPartition, _label: usize) -> bool {
        true
    }

    /// Called on every complete partition; `false` aborts the whole search.
    fn complete(&mut self, part: &PartialPartition) -> bool;

    /// Whether to try the new block before the existing ones.
    fn new_block_first(&self) -> bool {
        false
    }

    /// Polled at each internal node; `true` aborts the search.
    fn should_stop(&mut self) -> bool {
        false
    }
}

/// Depth-first walk over all completions of `part`. Returns `false` when the
/// explorer aborted.
pub(crate) fn explore<E: Explorer>(part: &mut PartialPartition, e: &mut E) -> bool {
    if part.depth() == part.n() {
        return e.complete(part);
    }
    if e.should_stop() {
        return false;
    }
    let k = part.block_count();
    let go = |part: &mut PartialPartition, e: &mut E, label: usize| -> bool {
        part.push(label);
        let keep_going = !e.admit(part, label) || explore(part, e);
        part.pop();
        keep_going
    };
    if e.new_block_first() {
        for label in (0..=k).rev() {
            if !go(part, e, label) {
                return false;
            }
        }
    } else {
        for label in 0..=k {
            if !go(part, e, label) {
                return false;
            }
        }
    }
    true
}

/// All restricted-growth strings of length `len`, in lexicographic order.
pub(crate) fn prefixes(len: usize) -> Vec<Vec<u8>> {
    fn rec(cur: &mut Vec<u8>, max: u8, len: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = if cur.is_empty() { 0 } else { max + 1 };
        for l in 0..=top {
            cur.push(l);
            rec(cur, max.max(l), len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(len), 0, len, &mut out);
    out
}

/// Splits the walk over `g` (positions in `order`) into independent subtrees
/// keyed by the first few labels and runs them on the rayon pool. Results
/// come back in lexicographic prefix order, so any order-sensitive reduction
/// over them is independent of scheduling.
pub(crate) fn par_explore<E, F>(g: &Graph, order: &[usize], make: F) -> Vec<E>
where
    E: Explorer + Send,
    F: Fn() -> E + Sync,
{
    let n = g.order();
    let split = n.min(7);
    prefixes(split)
        .into_par_iter()
        .map(|prefix| {
            let mut e = make();
            let mut part = PartialPartition::new(g, order.to_vec());
            let mut admitted = true;
            for &l in &prefix {
                part.push(l as usize);
                if !e.admit(&part, l as usize) {
                    admitted = false;
                    break;
                }
            }
            if admitted {
                explore(&mut part, &mut e);
            }
            e
        })
        .collect()
}

/// Bell numbers `B(0..=25)`; exact in `u64`.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        row = next;
    }
    row[0]
}
