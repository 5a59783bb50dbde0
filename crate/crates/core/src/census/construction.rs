//! Explicit coalition partitions of paths, written with the 1-based path
//! labels `s_1, .., s_k` of the published formulas and converted to vertices
//! `0..k` on output. A union over `i = lo..=hi` with `lo > hi` is empty.

use std::fmt;
use std::str::FromStr;

use crate::catalog::family::{classify_cp, CpClass};
use crate::catalog::named::path;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::partition::{coalition_graph, validate_partition, VertexPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionId {
    /// `{s_1}` on `P_1`.
    SinglePoint,
    /// All singletons on `P_2`.
    PairSingletons,
    /// All singletons on `P_3`.
    TripleSingletons,
    /// First and second half of the path.
    Halves,
    /// `{s_1, s_2}`, then odd and even positions.
    HeadOddEven,
    /// `{s_1}`, `{s_2}`, then alternate from the far end.
    TwoSingletonsAlternating,
    Paw,
    /// A long prefix plus `s_k`, then three singletons.
    Claw,
    Triangle,
    DiamondK4e,
    P2uP3,
    P4,
    P5,
    TwoK2,
    F2,
    Bull,
    DoubleStar,
    /// `P_8` realising the double star `S(2,1)`.
    HandP8DoubleStar,
    /// `P_7` realising the double star `S(2,1)`.
    HandP7DoubleStar,
    HandP7TwoK2,
    HandP6P4,
    HandP6TwoK2,
    HandP5P4,
    HandP5Triangle,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 24] = [
        ConstructionId::SinglePoint,
        ConstructionId::PairSingletons,
        ConstructionId::TripleSingletons,
        ConstructionId::Halves,
        ConstructionId::HeadOddEven,
        ConstructionId::TwoSingletonsAlternating,
        ConstructionId::Paw,
        ConstructionId::Claw,
        ConstructionId::Triangle,
        ConstructionId::DiamondK4e,
        ConstructionId::P2uP3,
        ConstructionId::P4,
        ConstructionId::P5,
        ConstructionId::TwoK2,
        ConstructionId::F2,
        ConstructionId::Bull,
        ConstructionId::DoubleStar,
        ConstructionId::HandP8DoubleStar,
        ConstructionId::HandP7DoubleStar,
        ConstructionId::HandP7TwoK2,
        ConstructionId::HandP6P4,
        ConstructionId::HandP6TwoK2,
        ConstructionId::HandP5P4,
        ConstructionId::HandP5Triangle,
    ];

    pub fn name(self) -> &'static str {
        use ConstructionId::*;
        match self {
            SinglePoint => "single-point",
            PairSingletons => "pair-singletons",
            TripleSingletons => "triple-singletons",
            Halves => "halves",
            HeadOddEven => "head-odd-even",
            TwoSingletonsAlternating => "two-singletons-alternating",
            Paw => "paw",
            Claw => "claw",
            Triangle => "triangle",
            DiamondK4e => "k4-minus-e",
            P2uP3 => "p2-u-p3",
            P4 => "p4",
            P5 => "p5",
            TwoK2 => "two-k2",
            F2 => "f2",
            Bull => "bull",
            DoubleStar => "double-star",
            HandP8DoubleStar => "hand-p8-double-star",
            HandP7DoubleStar => "hand-p7-double-star",
            HandP7TwoK2 => "hand-p7-two-k2",
            HandP6P4 => "hand-p6-p4",
            HandP6TwoK2 => "hand-p6-two-k2",
            HandP5P4 => "hand-p5-p4",
            HandP5Triangle => "hand-p5-triangle",
        }
    }

    /// The class the construction is claimed to realise.
    pub fn claimed(self) -> CpClass {
        use ConstructionId::*;
        match self {
            SinglePoint => CpClass::K1,
            PairSingletons => CpClass::K2bar,
            TripleSingletons => CpClass::K1uK2,
            Halves => CpClass::K2,
            HeadOddEven => CpClass::P3,
            TwoSingletonsAlternating => CpClass::C4,
            Paw => CpClass::F1paw,
            Claw => CpClass::K13,
            Triangle | HandP5Triangle => CpClass::K3,
            DiamondK4e => CpClass::K4e,
            P2uP3 => CpClass::P2uP3,
            P4 | HandP6P4 | HandP5P4 => CpClass::P4,
            P5 => CpClass::P5,
            TwoK2 | HandP7TwoK2 | HandP6TwoK2 => CpClass::TwoK2,
            F2 => CpClass::F2,
            Bull => CpClass::B1bull,
            DoubleStar | HandP8DoubleStar | HandP7DoubleStar => CpClass::S12,
        }
    }

    /// Smallest and largest path order the construction covers.
    pub fn k_range(self) -> (usize, Option<usize>) {
        use ConstructionId::*;
        let fixed = |k| (k, Some(k));
        match self {
            SinglePoint => fixed(1),
            PairSingletons => fixed(2),
            TripleSingletons => fixed(3),
            Halves | HeadOddEven | TwoSingletonsAlternating => (4, None),
            Paw => (5, None),
            Claw | Triangle | DiamondK4e | P2uP3 => (6, None),
            P4 | P5 => (7, None),
            TwoK2 => (8, None),
            F2 | Bull | DoubleStar => (9, None),
            HandP8DoubleStar => fixed(8),
            HandP7DoubleStar | HandP7TwoK2 => fixed(7),
            HandP6P4 | HandP6TwoK2 => fixed(6),
            HandP5P4 | HandP5Triangle => fixed(5),
        }
    }

    pub fn covers(self, k: usize) -> bool {
        let (lo, hi) = self.k_range();
        k >= lo && hi.is_none_or(|h| k <= h)
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownSpec(s.to_string()))
    }
}

/// Blocks under construction, holding 1-based labels.
struct Blocks {
    k: i64,
    blocks: Vec<Vec<i64>>,
}

impl Blocks {
    fn new(k: usize) -> Self {
        Blocks {
            k: k as i64,
            blocks: Vec::new(),
        }
    }

    fn block(&mut self, labels: impl IntoIterator<Item = i64>) -> &mut Self {
        self.blocks.push(labels.into_iter().collect());
        self
    }

    fn finish(self, id: ConstructionId) -> Result<VertexPartition> {
        let k = self.k as usize;
        let malformed = |reason: String| Error::MalformedConstruction {
            name: id.name(),
            k,
            reason,
        };
        let mut seen = VertexSet::EMPTY;
        let mut sets = Vec::with_capacity(self.blocks.len());
        for (b, labels) in self.blocks.iter().enumerate() {
            let mut set = VertexSet::EMPTY;
            for &s in labels {
                if s < 1 || s > self.k {
                    return Err(malformed(format!("block {b} uses s_{s}, outside 1..={k}")));
                }
                set.insert((s - 1) as usize);
            }
            if set.is_empty() {
                return Err(malformed(format!("block {b} is empty")));
            }
            let clash = seen.intersection(set);
            if !clash.is_empty() {
                let one_based: Vec<String> = clash.iter().map(|v| format!("s_{}", v + 1)).collect();
                return Err(malformed(format!("block {b} repeats {}", one_based.join(", "))));
            }
            seen = seen.union(set);
            sets.push(set);
        }
        if seen != VertexSet::full(k) {
            let missing: Vec<String> = VertexSet::full(k)
                .difference(seen)
                .iter()
                .map(|v| format!("s_{}", v + 1))
                .collect();
            return Err(malformed(format!("misses {}", missing.join(", "))));
        }
        VertexPartition::new(k, sets)
    }
}

/// `{ f(i) : i = lo..=hi }`, empty when `lo > hi`.
fn union(lo: i64, hi: i64, f: impl Fn(i64) -> i64) -> impl Iterator<Item = i64> {
    (lo..=hi).map(f)
}

fn chain<const N: usize>(extra: [i64; N], rest: impl Iterator<Item = i64>) -> Vec<i64> {
    rest.chain(extra).collect()
}

/// The partition a construction prescribes for `P_k`.
pub fn build_construction(id: ConstructionId, k: usize) -> Result<VertexPartition> {
    use ConstructionId::*;
    if !id.covers(k) {
        let (min, max) = id.k_range();
        return Err(Error::OutOfRange {
            name: id.name(),
            k,
            min,
            max: max.unwrap_or(usize::MAX),
        });
    }
    let mut b = Blocks::new(k);
    let k = k as i64;
    let (half_lo, half_hi) = (k / 2, (k + 1) / 2);
    match id {
        SinglePoint | PairSingletons | TripleSingletons => {
            for s in 1..=k {
                b.block([s]);
            }
        }
        Halves => {
            b.block(1..=half_lo).block(half_lo + 1..=k);
        }
        HeadOddEven => {
            b.block([1, 2])
                .block(union(2, half_hi, |i| 2 * i - 1))
                .block(union(2, half_lo, |i| 2 * i));
        }
        TwoSingletonsAlternating => {
            b.block([1])
                .block([2])
                .block(union(0, half_lo - 2, |i| k - (2 * i + 1)))
                .block(union(0, half_hi - 2, |i| k - 2 * i));
        }
        Paw if k == 6 => {
            b.block([1, 5]).block([3, 6]).block([4]).block([2]);
        }
        Paw => {
            let top = if k % 2 == 0 { k / 2 - 2 } else { (k - 3) / 2 };
            b.block(chain([1, k], union(2, top, |i| k - 2 * i)))
                .block(chain([2], union(2, top, |i| k - (2 * i - 1))))
                .block([k - 2]);
            if k % 2 == 0 {
                b.block([3, k - 1]);
            } else {
                b.block([k - 1]);
            }
        }
        Claw => {
            b.block((1..=k - 4).chain([k]))
                .block([k - 3])
                .block([k - 2])
                .block([k - 1]);
        }
        Triangle => {
            b.block(chain([1, k - 2], union(2, k / 3 - 1, |i| k - 3 * i)))
                .block(chain([2, k], union(1, k / 3 - 1, |i| k - (3 * i + 1))))
                .block(chain([k - 1, k - 3], union(1, (k + 1) / 3 - 2, |i| k - (3 * i + 2))));
        }
        DiamondK4e => {
            if k % 2 == 0 {
                b.block(chain([k - 1], union(0, k / 2 - 3, |i| 2 * i + 1)))
                    .block(chain([k], union(1, k / 2 - 2, |i| 2 * i)));
            } else {
                b.block(chain([k], union(0, (k - 5) / 2, |i| 2 * i + 1)))
                    .block(chain([k - 1], union(1, (k - 5) / 2, |i| 2 * i)));
            }
            b.block([k - 3]).block([k - 2]);
        }
        P2uP3 => {
            if k % 2 == 0 {
                b.block(chain([k], union(0, (k - 6) / 2, |i| 2 * i + 1)))
                    .block([2, k - 4])
                    .block([k - 3])
                    .block([k - 2])
                    .block(chain([k - 1], union(2, (k - 6) / 2, |i| 2 * i)));
            } else {
                b.block(chain([k - 1], union(0, (k - 7) / 2, |i| 2 * i + 1)))
                    .block([2, k - 5])
                    .block([k - 4])
                    .block([k - 3])
                    .block(chain([k - 2, k], union(2, (k - 7) / 2, |i| 2 * i)));
            }
        }
        P4 => {
            b.block(chain([1, k - 2, k], union(3, half_hi - 2, |i| k - 2 * i)))
                .block(chain([2, k - 3], union(3, half_lo - 1, |i| k - (2 * i - 1))))
                .block([k - 4])
                .block([k - 1]);
        }
        P5 => {
            b.block(chain([1], union(3, half_lo, |i| 2 * i)))
                .block(chain([2], union(3, half_hi - 1, |i| 2 * i + 1)))
                .block([3])
                .block([4])
                .block([5]);
        }
        TwoK2 => match k {
            8 => {
                b.block([1, 7]).block([2, 8]).block([3, 4]).block([5, 6]);
            }
            9 => {
                b.block([1, 8]).block([2, 4, 9]).block([3, 5]).block([6, 7]);
            }
            10 => {
                b.block([1, 9]).block([2, 4, 10]).block([3, 5, 6]).block([7, 8]);
            }
            11 => {
                b.block([1, 10]).block([2, 4, 11]).block([3, 5, 7]).block([6, 8, 9]);
            }
            _ => {
                b.block([1, k - 3, k - 1])
                    .block([2, 4, k])
                    .block(chain([3], union(2, half_hi - 3, |i| 2 * i + 1)))
                    .block(chain([k - 2], union(3, half_hi - 2, |i| 2 * i)));
            }
        },
        F2 => {
            b.block(chain([1], union(4, half_hi - 1, |i| 2 * i + 1)))
                .block(chain([2], union(4, half_lo, |i| 2 * i)))
                .block([3, 6])
                .block([4, 7])
                .block([5]);
        }
        Bull => {
            b.block(chain([1, 4], union(4, half_lo, |i| 2 * i)))
                .block(chain([2, 6], union(4, half_hi - 1, |i| 2 * i + 1)))
                .block([3])
                .block([5])
                .block([7]);
        }
        DoubleStar => {
            b.block(chain([1], union(3, half_lo, |i| 2 * i)))
                .block(chain([2, 5], union(4, half_hi - 1, |i| 2 * i + 1)))
                .block([3])
                .block([4])
                .block([7]);
        }
        HandP8DoubleStar => {
            b.block([1, 4]).block([2, 6, 8]).block([3]).block([5]).block([7]);
        }
        HandP7DoubleStar => {
            b.block([1, 4]).block([2, 6]).block([3]).block([5]).block([7]);
        }
        HandP7TwoK2 => {
            b.block([1, 7]).block([2]).block([3, 4]).block([5, 6]);
        }
        HandP6P4 => {
            b.block([1, 4]).block([2]).block([3, 5]).block([6]);
        }
        HandP6TwoK2 => {
            b.block([1, 6]).block([2]).block([3, 4]).block([5]);
        }
        HandP5P4 => {
            b.block([1]).block([2]).block([3, 4]).block([5]);
        }
        HandP5Triangle => {
            b.block([1, 5]).block([2]).block([3, 4]);
        }
    }
    b.finish(id)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionOutcome {
    /// Valid coalition partition realising the claimed class.
    Confirmed,
    /// The formulas do not produce a partition of the path.
    Malformed(String),
    /// A partition, but not a coalition partition.
    NotCoalition,
    /// Valid, but the coalition graph has a different class.
    WrongClass(CpClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionCheck {
    pub id: ConstructionId,
    pub k: usize,
    pub partition: Option<VertexPartition>,
    pub outcome: ConstructionOutcome,
}

impl ConstructionCheck {
    pub fn passed(&self) -> bool {
        self.outcome == ConstructionOutcome::Confirmed
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstructionReport {
    pub checks: Vec<ConstructionCheck>,
}

impl ConstructionReport {
    pub fn failures(&self) -> impl Iterator<Item = &ConstructionCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn check_one(id: ConstructionId, k: usize) -> ConstructionCheck {
    let g = path(k).expect("k >= 1");
    let (partition, outcome) = match build_construction(id, k) {
        Err(Error::MalformedConstruction { reason, .. }) => (None, ConstructionOutcome::Malformed(reason)),
        Err(e) => (None, ConstructionOutcome::Malformed(e.to_string())),
        Ok(p) => {
            let outcome = if !validate_partition(&g, &p).expect("orders match").is_valid() {
                ConstructionOutcome::NotCoalition
            } else {
                let class = classify_cp(&coalition_graph(&g, &p).expect("valid").graph);
                if class == id.claimed() {
                    ConstructionOutcome::Confirmed
                } else {
                    ConstructionOutcome::WrongClass(class)
                }
            };
            (Some(p), outcome)
        }
    };
    ConstructionCheck {
        id,
        k,
        partition,
        outcome,
    }
}

/// Replays every construction for every covered `k <= k_max`.
pub fn verify_constructions(k_max: usize) -> Result<ConstructionReport> {
    if k_max > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(k_max));
    }
    let mut report = ConstructionReport::default();
    for id in ConstructionId::ALL {
        for k in 1..=k_max {
            if id.covers(k) {
                report.checks.push(check_one(id, k));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, k: usize) -> VertexPartition {
        VertexPartition::parse(text, k, false).unwrap().canonical()
    }

    #[test]
    fn head_odd_even_at_six() {
        let got = build_construction(ConstructionId::HeadOddEven, 6).unwrap();
        assert_eq!(got.canonical(), p("0,1|2,4|3,5", 6));
    }

    #[test]
    fn hand_partitions_are_shifted_by_one() {
        // Published 1-based: {1,4},{2},{3,5},{6}.
        let got = build_construction(ConstructionId::HandP6P4, 6).unwrap();
        assert_eq!(got.canonical(), p("0,3|1|2,4|5", 6));
        // Published 1-based: {1,4},{2,6,8},{3},{5},{7}.
        let got = build_construction(ConstructionId::HandP8DoubleStar, 8).unwrap();
        assert_eq!(got.canonical(), p("0,3|1,5,7|2|4|6", 8));
    }

    #[test]
    fn two_k2_special_case() {
        let got = build_construction(ConstructionId::TwoK2, 8).unwrap();
        assert_eq!(got.canonical(), p("0,6|1,7|2,3|4,5", 8));
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            build_construction(ConstructionId::F2, 8),
            Err(Error::OutOfRange { min: 9, .. })
        ));
        assert!(matches!(
            build_construction(ConstructionId::HandP5P4, 6),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn malformed_output_is_reported() {
        let mut b = Blocks::new(3);
        b.block([1, 2]).block([2, 3]);
        assert!(matches!(
            b.finish(ConstructionId::Halves),
            Err(Error::MalformedConstruction { .. })
        ));
        let mut b = Blocks::new(3);
        b.block([1, 4]).block([2, 3]);
        assert!(b.finish(ConstructionId::Halves).is_err());
        let mut b = Blocks::new(3);
        b.block([1]).block([2]);
        assert!(b.finish(ConstructionId::Halves).is_err());
    }

    #[test]
    fn names_roundtrip() {
        for id in ConstructionId::ALL {
            assert_eq!(id.name().parse::<ConstructionId>().unwrap(), id);
        }
    }
}
