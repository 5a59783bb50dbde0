//! The eighteen coalition graphs realisable on paths.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::catalog::iso::is_isomorphic;
use crate::catalog::named::make_named;
use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CpClass {
    K1,
    K2,
    K2bar,
    K1uK2,
    P3,
    K3,
    K13,
    TwoK2,
    P4,
    C4,
    F1paw,
    K4e,
    P2uP3,
    F2,
    B1bull,
    P5,
    S12,
    S22,
    /// Not isomorphic to any member of the family.
    Outside,
}

impl CpClass {
    /// The eighteen members, in table row order.
    pub const MEMBERS: [CpClass; 18] = [
        CpClass::K1,
        CpClass::K2,
        CpClass::K2bar,
        CpClass::K1uK2,
        CpClass::P3,
        CpClass::K3,
        CpClass::K13,
        CpClass::TwoK2,
        CpClass::P4,
        CpClass::C4,
        CpClass::F1paw,
        CpClass::K4e,
        CpClass::P2uP3,
        CpClass::F2,
        CpClass::B1bull,
        CpClass::P5,
        CpClass::S12,
        CpClass::S22,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CpClass::K1 => "K1",
            CpClass::K2 => "K2",
            CpClass::K2bar => "K2bar",
            CpClass::K1uK2 => "K1uK2",
            CpClass::P3 => "P3",
            CpClass::K3 => "K3",
            CpClass::K13 => "K13",
            CpClass::TwoK2 => "TwoK2",
            CpClass::P4 => "P4",
            CpClass::C4 => "C4",
            CpClass::F1paw => "F1paw",
            CpClass::K4e => "K4e",
            CpClass::P2uP3 => "P2uP3",
            CpClass::F2 => "F2",
            CpClass::B1bull => "B1bull",
            CpClass::P5 => "P5",
            CpClass::S12 => "S12",
            CpClass::S22 => "S22",
            CpClass::Outside => "Outside",
        }
    }

    /// Named-graph spec building the member; `None` for `Outside`.
    pub fn graph_spec(self) -> Option<&'static str> {
        Some(match self {
            CpClass::K1 => "K1",
            CpClass::K2 => "K2",
            CpClass::K2bar => "K2bar",
            CpClass::K1uK2 => "K1uK2",
            CpClass::P3 => "P3",
            CpClass::K3 => "K3",
            CpClass::K13 => "K1,3",
            CpClass::TwoK2 => "2K2",
            CpClass::P4 => "P4",
            CpClass::C4 => "C4",
            CpClass::F1paw => "paw",
            CpClass::K4e => "K4-e",
            CpClass::P2uP3 => "P2uP3",
            CpClass::F2 => "F2",
            CpClass::B1bull => "bull",
            CpClass::P5 => "P5",
            CpClass::S12 => "S(1,2)",
            CpClass::S22 => "S(2,2)",
            CpClass::Outside => return None,
        })
    }

    /// The member graph; `None` for `Outside`.
    pub fn graph(self) -> Option<&'static Graph> {
        let idx = CpClass::MEMBERS.iter().position(|&c| c == self)?;
        Some(&catalog()[idx])
    }
}

impl fmt::Display for CpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CpClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CpClass::MEMBERS
            .iter()
            .chain(std::iter::once(&CpClass::Outside))
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownSpec(s.to_string()))
    }
}

/// Member graphs in [`CpClass::MEMBERS`] order. The first call checks that
/// the members are pairwise non-isomorphic.
pub fn catalog() -> &'static [Graph] {
    static CATALOG: OnceLock<Vec<Graph>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let graphs: Vec<Graph> = CpClass::MEMBERS
            .iter()
            .map(|c| make_named(c.graph_spec().expect("member")).expect("catalog spec parses"))
            .collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(
                    !is_isomorphic(&graphs[i], &graphs[j]),
                    "catalog members {} and {} coincide",
                    CpClass::MEMBERS[i],
                    CpClass::MEMBERS[j]
                );
            }
        }
        graphs
    })
}

/// The member isomorphic to `h`, or [`CpClass::Outside`].
pub fn classify_cp(h: &Graph) -> CpClass {
    if h.order() == 0 || h.order() > 6 {
        return CpClass::Outside;
    }
    CpClass::MEMBERS
        .iter()
        .zip(catalog())
        .find(|(_, g)| is_isomorphic(g, h))
        .map_or(CpClass::Outside, |(&c, _)| c)
}
