//! Named graphs and the spec-string grammar used across the CLI.
//!
//! ```text
//! spec  := term (('+' | 'u') term)*
//! term  := [count] atom ['bar']
//! atom  := P<k> | C<k> | K<k> | K<a>,<b> | K<k>-e | E<k> | S(<r>,<s>)
//!        | bull | B1 | paw | F1 | F2
//! ```
//!
//! `K_{1,3}` style braces and underscores are accepted and ignored. Layouts:
//! paths and cycles are numbered along the path; the centre of `K1,t` is 0;
//! `S(r,s)` has centres 0 and 1, the `r` leaves of 0 come next; the bull is
//! the triangle 0,1,2 with pendants 3 (at 1) and 4 (at 2); the paw is the
//! bull without vertex 4; `F2` is the 4-cycle 0,1,2,3 with pendant 4 at 0.
//! Disjoint unions place components left to right.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameter("P_k needs k >= 1".into()));
    }
    Graph::from_edge_list(k, (1..k).map(|i| (i - 1, i)))
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::BadParameter("C_k needs k >= 3".into()));
    }
    Graph::from_edge_list(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn complete(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameter("K_k needs k >= 1".into()));
    }
    Ok(Graph::empty(k)?.complement())
}

pub fn edgeless(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameter("E_k needs k >= 1".into()));
    }
    Graph::empty(k)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameter("K_{a,b} needs a, b >= 1".into()));
    }
    Graph::from_edge_list(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

pub fn star(leaves: usize) -> Result<Graph> {
    complete_bipartite(1, leaves)
}

pub fn double_star(r: usize, s: usize) -> Result<Graph> {
    if r == 0 || s == 0 {
        return Err(Error::BadParameter("S(r,s) needs r, s >= 1".into()));
    }
    let edges = std::iter::once((0, 1))
        .chain((2..2 + r).map(|v| (0, v)))
        .chain((2 + r..2 + r + s).map(|v| (1, v)));
    Graph::from_edge_list(r + s + 2, edges)
}

pub fn bull() -> Graph {
    Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]).expect("static graph")
}

pub fn paw() -> Graph {
    Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 0), (1, 3)]).expect("static graph")
}

/// 4-cycle with a pendant edge.
pub fn f2() -> Graph {
    Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).expect("static graph")
}

/// `K_k` minus the edge `{0, 1}`.
pub fn complete_minus_edge(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::BadParameter("K_k - e needs k >= 2".into()));
    }
    let edges = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&e| e != (0, 1));
    Graph::from_edge_list(k, edges)
}

/// Parses a named-graph spec (see the module docs for the grammar).
pub fn make_named(spec: &str) -> Result<Graph> {
    let cleaned: String = spec
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}'))
        .collect();
    if cleaned.is_empty() {
        return Err(Error::UnknownSpec(spec.to_string()));
    }
    let mut acc: Option<Graph> = None;
    for piece in cleaned.split('+') {
        for g in parse_piece(piece).map_err(|e| relabel(e, spec))? {
            acc = Some(match acc {
                None => g,
                Some(a) => a.disjoint_union(&g)?,
            });
        }
    }
    acc.ok_or_else(|| Error::UnknownSpec(spec.to_string()))
}

fn relabel(e: Error, spec: &str) -> Error {
    match e {
        Error::UnknownSpec(_) => Error::UnknownSpec(spec.to_string()),
        other => other,
    }
}

/// A `+`-free piece: a single term, or terms joined by `u`.
fn parse_piece(piece: &str) -> Result<Vec<Graph>> {
    match parse_term(piece) {
        Ok(g) => Ok(vec![g]),
        Err(Error::UnknownSpec(_)) if piece.contains('u') => {
            piece.split('u').map(parse_term).collect()
        }
        Err(e) => Err(e),
    }
}

fn parse_term(term: &str) -> Result<Graph> {
    let digits = term.chars().take_while(char::is_ascii_digit).count();
    let (count, rest) = if digits > 0 && digits < term.len() {
        let c: usize = term[..digits]
            .parse()
            .map_err(|_| Error::BadParameter(format!("bad multiplier in `{term}`")))?;
        if c == 0 {
            return Err(Error::BadParameter(format!("zero multiplier in `{term}`")));
        }
        (c, &term[digits..])
    } else {
        (1, term)
    };
    let (atom, complemented) = match rest.strip_suffix("bar") {
        Some(a) => (a, true),
        None => (rest, false),
    };
    let mut g = parse_atom(atom)?;
    if complemented {
        g = g.complement();
    }
    let mut out = g.clone();
    for _ in 1..count {
        out = out.disjoint_union(&g)?;
    }
    Ok(out)
}

fn number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_atom(atom: &str) -> Result<Graph> {
    let unknown = || Error::UnknownSpec(atom.to_string());
    match atom {
        "bull" | "B1" | "B" => return Ok(bull()),
        "paw" | "F1" => return Ok(paw()),
        "F2" => return Ok(f2()),
        _ => {}
    }
    if let Some(inner) = atom.strip_prefix("S(").and_then(|s| s.strip_suffix(')')) {
        let (r, s) = inner.split_once(',').ok_or_else(unknown)?;
        let (r, s) = (number(r).ok_or_else(unknown)?, number(s).ok_or_else(unknown)?);
        return double_star(r, s);
    }
    let (head, tail) = atom.split_at(atom.chars().next().map_or(0, char::len_utf8));
    match head {
        "P" => path(number(tail).ok_or_else(unknown)?),
        "C" => cycle(number(tail).ok_or_else(unknown)?),
        "E" => edgeless(number(tail).ok_or_else(unknown)?),
        "K" => {
            if let Some(k) = tail.strip_suffix("-e") {
                return complete_minus_edge(number(k).ok_or_else(unknown)?);
            }
            if let Some((a, b)) = tail.split_once(',') {
                let (a, b) = (number(a).ok_or_else(unknown)?, number(b).ok_or_else(unknown)?);
                return complete_bipartite(a, b);
            }
            complete(number(tail).ok_or_else(unknown)?)
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::iso::is_isomorphic;

    #[test]
    fn double_star_shape() {
        let g = make_named("S(2,2)").unwrap();
        assert_eq!((g.order(), g.size()), (6, 5));
        assert!(g.has_edge(0, 1));
        assert_eq!((g.degree(0), g.degree(1)), (3, 3));
        assert!(is_isomorphic(&make_named("S(1,2)").unwrap(), &make_named("S(2,1)").unwrap()));
        assert_eq!(make_named("S(0,2)"), Err(Error::BadParameter("S(r,s) needs r, s >= 1".into())));
    }

    #[test]
    fn f2_is_c4_plus_pendant() {
        let g = make_named("F2").unwrap();
        let c4 = g.induced([0, 1, 2, 3].into_iter().collect());
        assert!(c4.is_cycle());
        assert_eq!(g.degree(4), 1);
    }

    #[test]
    fn paw_is_bull_minus_leaf() {
        let b = bull();
        let minus_leaf = b.induced([0, 1, 2, 3].into_iter().collect());
        assert!(is_isomorphic(&make_named("paw").unwrap(), &minus_leaf));
        let other = b.induced([0, 1, 2, 4].into_iter().collect());
        assert!(is_isomorphic(&make_named("F1").unwrap(), &other));
    }

    #[test]
    fn unions_and_multipliers() {
        let g = make_named("K1uK5").unwrap();
        assert_eq!((g.order(), g.size(), g.degree(0)), (6, 10, 0));
        assert_eq!(make_named("K1+K5").unwrap(), g);
        let two = make_named("2K2").unwrap();
        assert_eq!((two.order(), two.size()), (4, 2));
        assert_eq!(make_named("P2uP3").unwrap().size(), 3);
        assert_eq!(make_named("K2bar").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(make_named("K_{1,3}").unwrap(), make_named("K1,3").unwrap());
        assert_eq!(make_named("K1,3").unwrap().degree(0), 3);
        assert_eq!(make_named("K4-e").unwrap().size(), 5);
        assert_eq!(make_named("bull").unwrap(), bull());
        assert_eq!(make_named("K13").unwrap().order(), 13);
    }

    #[test]
    fn rejects_unknown() {
        for bad in ["", "Q3", "P", "Px", "C2", "bullx", "S(1)", "0P3"] {
            assert!(make_named(bad).is_err(), "{bad}");
        }
        assert!(matches!(make_named("Q3"), Err(Error::UnknownSpec(_))));
        assert!(matches!(make_named("P65"), Err(Error::TooLarge(65))));
    }
}
