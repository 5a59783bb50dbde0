//! The published path/class grid, recomputed by census and diffed.

use std::fmt::Write as _;

use crate::catalog::family::CpClass;
use crate::census::{census_path, CensusReport, CENSUS_LIMIT};
use crate::error::{Error, Result};
use crate::partition::VertexPartition;

/// Published grid, one row per family member in table order, columns
/// `P_1 .. P_9` and then `P_k` for every `k >= 10`. Lowercase letters mark
/// cells settled by computer search rather than by proof.
const GRID: [(CpClass, &str); 18] = [
    (CpClass::K1, "YNNNNNNNNN"),
    (CpClass::K2, "NnYYYYYYYY"),
    (CpClass::K2bar, "NYnNNNNNNN"),
    (CpClass::K1uK2, "NNYNNNNNNN"),
    (CpClass::P3, "NNNYYYYYYY"),
    (CpClass::K3, "NNNnyYYYYY"),
    (CpClass::K13, "NNNnnYYYYY"),
    (CpClass::TwoK2, "NNNnnyyYYY"),
    (CpClass::P4, "NNNnyyYYYY"),
    (CpClass::C4, "NNNYYYYYYY"),
    (CpClass::F1paw, "NNNnYYYYYY"),
    (CpClass::K4e, "NNNnnYYYYY"),
    (CpClass::P2uP3, "NNNnnYYYYY"),
    (CpClass::F2, "NNNnnnnnYY"),
    (CpClass::B1bull, "NNNnnnnnYY"),
    (CpClass::P5, "NNNnnnYYYY"),
    (CpClass::S12, "NNNnnnyyYY"),
    (CpClass::S22, "NNNnnnnnnY"),
];

/// Published number of realisable classes for `P_1 .. P_9`, then for every
/// `k >= 10`.
pub const EXPECTED_NC: [usize; 10] = [1, 1, 2, 3, 6, 10, 12, 12, 14, 15];

/// One published cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedCell {
    pub realizable: bool,
    /// Marked as found by computer search.
    pub empirical: bool,
}

/// Published cell for `class` on `P_k`; `None` for `Outside` or `k = 0`.
pub fn expected_cell(class: CpClass, k: usize) -> Option<ExpectedCell> {
    if k == 0 {
        return None;
    }
    let (_, row) = GRID.iter().find(|(c, _)| *c == class)?;
    let ch = row.as_bytes()[k.min(10) - 1];
    Some(ExpectedCell {
        realizable: ch.eq_ignore_ascii_case(&b'Y'),
        empirical: ch.is_ascii_lowercase(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub class: CpClass,
    pub k: usize,
    pub expected: ExpectedCell,
    /// Census witness when the census found the class, `None` when the
    /// exhaustive scan found no partition realising it.
    pub witness: Option<VertexPartition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridReport {
    pub censuses: Vec<CensusReport>,
    pub mismatches: Vec<CellMismatch>,
    /// `(k, census NC, published NC)` where they differ.
    pub nc_mismatches: Vec<(usize, usize, usize)>,
}

impl GridReport {
    pub fn k_max(&self) -> usize {
        self.censuses.len()
    }

    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty() && self.nc_mismatches.is_empty()
    }

    /// Human-readable grid; cells that disagree with the published table are
    /// starred.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{:<8}", "");
        for r in &self.censuses {
            let _ = write!(out, "{:>5}", format!("P{}", r.k));
        }
        out.push('\n');
        for class in CpClass::MEMBERS {
            let _ = write!(out, "{:<8}", class.name());
            for r in &self.censuses {
                let got = if r.realizes(class) { "Y" } else { "N" };
                let star = if self.is_mismatch(class, r.k) { "*" } else { " " };
                let _ = write!(out, "{:>4}{}", got, star);
            }
            out.push('\n');
        }
        let _ = write!(out, "{:<8}", "NC");
        for r in &self.censuses {
            let _ = write!(out, "{:>5}", r.nc());
        }
        out.push('\n');
        out
    }

    /// Machine-readable lines `k,class,Y|N,witness` with 0-based witnesses
    /// (empty when the class is not realised).
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.censuses {
            for class in CpClass::MEMBERS {
                let (yn, w) = match r.witnesses.get(&class) {
                    Some(p) => ("Y", p.to_string()),
                    None => ("N", String::new()),
                };
                out.push(format!("{},{},{},{}", r.k, class.name(), yn, w));
            }
        }
        out
    }

    fn is_mismatch(&self, class: CpClass, k: usize) -> bool {
        self.mismatches.iter().any(|m| m.class == class && m.k == k)
    }
}

/// Runs the census for `k = 1..=k_max` and diffs against the published grid.
pub fn path_grid(k_max: usize) -> Result<GridReport> {
    if k_max == 0 || k_max > CENSUS_LIMIT {
        return Err(Error::BadParameter(format!(
            "table needs 1 <= k_max <= {CENSUS_LIMIT}"
        )));
    }
    let censuses = (1..=k_max).map(census_path).collect::<Result<Vec<_>>>()?;
    Ok(diff(censuses))
}

pub(crate) fn diff(censuses: Vec<CensusReport>) -> GridReport {
    let mut mismatches = Vec::new();
    let mut nc_mismatches = Vec::new();
    for r in &censuses {
        for class in CpClass::MEMBERS {
            let expected = expected_cell(class, r.k).expect("member, k >= 1");
            if expected.realizable != r.realizes(class) {
                mismatches.push(CellMismatch {
                    class,
                    k: r.k,
                    expected,
                    witness: r.witnesses.get(&class).cloned(),
                });
            }
        }
        let published = EXPECTED_NC[r.k.min(10) - 1];
        if r.nc() != published {
            nc_mismatches.push((r.k, r.nc(), published));
        }
    }
    GridReport {
        censuses,
        mismatches,
        nc_mismatches,
    }
}
