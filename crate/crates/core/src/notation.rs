//! Transversal/hook notation for Brauer diagrams.
//!
//! A diagram is written as transversals `{i_k, j_k'}`, upper hooks
//! `{a_k, b_k}` and lower hooks `{c_k', d_k'}`, with `n = r + 2s`. The lists
//! are ordered; the canonical form sorts transversals by `i_k`, hooks by
//! their smaller element, and stores each hook with its smaller element
//! first. Constructions elsewhere in the crate reorder these lists freely
//! (a relabelling of the vertices) and use the positions as labels.

use crate::diagram::{BrauerDiagram, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramNotation {
    pub degree: usize,
    pub transversals: Vec<(usize, usize)>,
    pub upper_hooks: Vec<(usize, usize)>,
    pub lower_hooks: Vec<(usize, usize)>,
}

impl DiagramNotation {
    pub fn rank(&self) -> usize {
        self.transversals.len()
    }

    /// Number of upper (equivalently lower) hooks.
    pub fn hook_count(&self) -> usize {
        self.upper_hooks.len()
    }

    /// Top vertices in the order `i_1, …, i_r, a_1, b_1, …, a_s, b_s`.
    pub fn top_sequence(&self) -> Vec<usize> {
        self.transversals
            .iter()
            .map(|&(i, _)| i)
            .chain(self.upper_hooks.iter().flat_map(|&(a, b)| [a, b]))
            .collect()
    }

    /// Bottom vertices in the order `j_1, …, j_r, c_1, d_1, …, c_s, d_s`.
    pub fn bottom_sequence(&self) -> Vec<usize> {
        self.transversals
            .iter()
            .map(|&(_, j)| j)
            .chain(self.lower_hooks.iter().flat_map(|&(c, d)| [c, d]))
            .collect()
    }

    /// Sorts into canonical order.
    pub fn canonicalize(&mut self) {
        let order = |v: &mut Vec<(usize, usize)>| {
            for h in v.iter_mut() {
                if h.0 > h.1 {
                    *h = (h.1, h.0);
                }
            }
            v.sort_unstable();
        };
        self.transversals.sort_unstable();
        order(&mut self.upper_hooks);
        order(&mut self.lower_hooks);
    }

    pub fn to_diagram(&self) -> Result<BrauerDiagram> {
        from_notation(self)
    }
}

pub fn to_notation(alpha: &BrauerDiagram) -> DiagramNotation {
    let n = alpha.degree();
    let mut transversals = Vec::new();
    let mut upper_hooks = Vec::new();
    let mut lower_hooks = Vec::new();
    for (x, y) in alpha.blocks() {
        match (x, y) {
            (Vertex::Top(i), Vertex::Bottom(j)) => transversals.push((i, j)),
            (Vertex::Top(a), Vertex::Top(b)) => upper_hooks.push((a, b)),
            (Vertex::Bottom(c), Vertex::Bottom(d)) => lower_hooks.push((c, d)),
            (Vertex::Bottom(_), Vertex::Top(_)) => unreachable!("blocks list top points first"),
        }
    }
    // Blocks come sorted by smaller point index, which already gives the
    // canonical order for every list.
    DiagramNotation {
        degree: n,
        transversals,
        upper_hooks,
        lower_hooks,
    }
}

pub fn from_notation(notation: &DiagramNotation) -> Result<BrauerDiagram> {
    let n = notation.degree;
    let r = notation.transversals.len();
    let s = notation.upper_hooks.len();
    if notation.lower_hooks.len() != s {
        return Err(Error::InvalidNotation(format!(
            "{s} upper hooks but {} lower hooks",
            notation.lower_hooks.len()
        )));
    }
    if r + 2 * s != n {
        return Err(Error::InvalidNotation(format!(
            "r + 2s = {} but n = {n}",
            r + 2 * s
        )));
    }
    let blocks: Vec<[Vertex; 2]> = notation
        .transversals
        .iter()
        .map(|&(i, j)| [Vertex::Top(i), Vertex::Bottom(j)])
        .chain(
            notation
                .upper_hooks
                .iter()
                .map(|&(a, b)| [Vertex::Top(a), Vertex::Top(b)]),
        )
        .chain(
            notation
                .lower_hooks
                .iter()
                .map(|&(c, d)| [Vertex::Bottom(c), Vertex::Bottom(d)]),
        )
        .collect();
    BrauerDiagram::new(n, &blocks).map_err(|e| Error::InvalidNotation(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Vertex::{Bottom as B, Top as T};

    #[test]
    fn worked_example() {
        let a = BrauerDiagram::new(
            6,
            &[
                [T(1), T(3)],
                [T(2), B(3)],
                [T(4), B(1)],
                [T(5), T(6)],
                [B(2), B(6)],
                [B(4), B(5)],
            ],
        )
        .unwrap();
        let t = to_notation(&a);
        assert_eq!(t.transversals, vec![(2, 3), (4, 1)]);
        assert_eq!(t.upper_hooks, vec![(1, 3), (5, 6)]);
        assert_eq!(t.lower_hooks, vec![(2, 6), (4, 5)]);
        assert_eq!(from_notation(&t).unwrap(), a);
        assert_eq!(t.top_sequence(), vec![2, 4, 1, 3, 5, 6]);
        assert_eq!(t.bottom_sequence(), vec![3, 1, 2, 6, 4, 5]);
    }

    #[test]
    fn identity_has_no_hooks() {
        let t = to_notation(&BrauerDiagram::identity(4));
        assert_eq!(t.rank(), 4);
        assert_eq!(t.hook_count(), 0);
    }

    #[test]
    fn rejects_inconsistent_notation() {
        let bad = DiagramNotation {
            degree: 4,
            transversals: vec![(1, 1)],
            upper_hooks: vec![(2, 3)],
            lower_hooks: vec![(2, 3)],
        };
        assert!(matches!(
            from_notation(&bad),
            Err(Error::InvalidNotation(_))
        ));
        let overlap = DiagramNotation {
            degree: 4,
            transversals: vec![(1, 1), (2, 4)],
            upper_hooks: vec![(2, 3)],
            lower_hooks: vec![(2, 3)],
        };
        assert!(matches!(
            from_notation(&overlap),
            Err(Error::InvalidNotation(_))
        ));
        let unbalanced = DiagramNotation {
            degree: 4,
            transversals: vec![(1, 1), (2, 2)],
            upper_hooks: vec![(3, 4)],
            lower_hooks: vec![],
        };
        assert!(matches!(
            from_notation(&unbalanced),
            Err(Error::InvalidNotation(_))
        ));
    }

    #[test]
    fn canonicalize_is_stable_on_canonical_input() {
        let mut t = DiagramNotation {
            degree: 6,
            transversals: vec![(4, 1), (2, 3)],
            upper_hooks: vec![(6, 5), (3, 1)],
            lower_hooks: vec![(5, 4), (2, 6)],
        };
        let d = from_notation(&t).unwrap();
        t.canonicalize();
        assert_eq!(t, to_notation(&d));
    }
}
