//! Brauer diagrams: perfect matchings on `[n] ∪ [n]'`.
//!
//! A diagram of degree `n` is stored as a fixed-point-free involution on the
//! point indices `0..2n`. Top vertex `i` lives at index `i - 1` and bottom
//! vertex `i'` at index `n + i - 1`. Equality and ordering are structural
//! (lexicographic on the pairing array), so diagrams can key sets and maps.

use std::fmt;

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Largest supported degree; point indices must fit in a `u16`.
pub const MAX_DEGREE: usize = (u16::MAX as usize) / 2;

/// A vertex of a Brauer diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl Vertex {
    pub fn label(self) -> usize {
        match self {
            Vertex::Top(i) | Vertex::Bottom(i) => i,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, Vertex::Top(_))
    }

    /// Positive integers are top vertices, negative integers bottom vertices.
    pub fn from_signed(value: i64) -> Option<Vertex> {
        match value {
            0 => None,
            v if v > 0 => Some(Vertex::Top(v as usize)),
            v => Some(Vertex::Bottom(v.unsigned_abs() as usize)),
        }
    }

    pub fn signed(self) -> i64 {
        match self {
            Vertex::Top(i) => i as i64,
            Vertex::Bottom(i) => -(i as i64),
        }
    }

    fn index(self, degree: usize) -> Option<usize> {
        match self {
            Vertex::Top(i) if (1..=degree).contains(&i) => Some(i - 1),
            Vertex::Bottom(i) if (1..=degree).contains(&i) => Some(degree + i - 1),
            _ => None,
        }
    }

    fn from_index(index: usize, degree: usize) -> Vertex {
        if index < degree {
            Vertex::Top(index + 1)
        } else {
            Vertex::Bottom(index - degree + 1)
        }
    }

    /// Reflection in the horizontal axis.
    pub fn flipped(self) -> Vertex {
        match self {
            Vertex::Top(i) => Vertex::Bottom(i),
            Vertex::Bottom(i) => Vertex::Top(i),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(i) => write!(f, "{i}"),
            Vertex::Bottom(i) => write!(f, "{i}'"),
        }
    }
}

/// The set of hooks in one row of a diagram.
///
/// For Brauer diagrams every non-singleton kernel class has size two, so the
/// kernel (or cokernel) is exactly this set of pairs, and `ker(α) ⊇ ker(β)`
/// reduces to `hooks(β) ⊆ hooks(α)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelSignature {
    degree: usize,
    hooks: Vec<(usize, usize)>,
}

impl KernelSignature {
    /// Builds a signature from disjoint pairs in `1..=degree`.
    pub fn new(degree: usize, hooks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; degree + 1];
        let mut sorted = Vec::new();
        for (a, b) in hooks {
            let (a, b) = (a.min(b), a.max(b));
            for x in [a, b] {
                if !(1..=degree).contains(&x) {
                    return Err(Error::IndexOutOfRange { index: x, degree });
                }
                if seen[x] {
                    return Err(Error::DuplicateVertex {
                        vertex: Vertex::Top(x),
                    });
                }
                seen[x] = true;
            }
            sorted.push((a, b));
        }
        sorted.sort_unstable();
        Ok(KernelSignature {
            degree,
            hooks: sorted,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn hooks(&self) -> &[(usize, usize)] {
        &self.hooks
    }

    /// Number of points not covered by a hook.
    pub fn rank(&self) -> usize {
        self.degree - 2 * self.hooks.len()
    }

    /// Whether every hook of `other` is a hook of `self`, i.e. the equivalence
    /// `self` contains the equivalence `other`.
    pub fn includes(&self, other: &KernelSignature) -> bool {
        other
            .hooks
            .iter()
            .all(|h| self.hooks.binary_search(h).is_ok())
    }

    /// Points of `1..=degree` not covered by a hook, ascending.
    pub fn free_points(&self) -> Vec<usize> {
        let mut covered = vec![false; self.degree + 1];
        for &(a, b) in &self.hooks {
            covered[a] = true;
            covered[b] = true;
        }
        (1..=self.degree).filter(|&x| !covered[x]).collect()
    }

    pub fn contains_pair(&self, a: usize, b: usize) -> bool {
        self.hooks.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

impl fmt::Display for KernelSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hooks.is_empty() {
            return write!(f, "()");
        }
        for (a, b) in &self.hooks {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Result of multiplying two diagrams: the product and the number of floating
/// components of the product graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Product {
    pub diagram: BrauerDiagram,
    pub floating: u64,
}

/// An element of the Brauer monoid `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    pairing: Box<[u16]>,
}

impl BrauerDiagram {
    /// Builds a diagram from blocks of vertices, validating that they form a
    /// perfect matching on `[n] ∪ [n]'`.
    pub fn new<B: AsRef<[Vertex]>>(degree: usize, blocks: &[B]) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        let unset = u16::MAX;
        let mut pairing = vec![unset; 2 * degree];
        for (index, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            let mut points = Vec::with_capacity(2);
            for &v in block {
                let p = v
                    .index(degree)
                    .ok_or(Error::VertexOutOfRange { vertex: v, degree })?;
                if !points.contains(&p) {
                    points.push(p);
                }
            }
            if points.len() != 2 {
                return Err(Error::BadBlockSize {
                    index,
                    size: points.len(),
                });
            }
            for &p in &points {
                if pairing[p] != unset {
                    return Err(Error::DuplicateVertex {
                        vertex: Vertex::from_index(p, degree),
                    });
                }
            }
            pairing[points[0]] = points[1] as u16;
            pairing[points[1]] = points[0] as u16;
        }
        if let Some(p) = pairing.iter().position(|&q| q == unset) {
            return Err(Error::MissingVertex {
                vertex: Vertex::from_index(p, degree),
            });
        }
        Ok(BrauerDiagram {
            pairing: pairing.into_boxed_slice(),
        })
    }

    /// Builds a diagram from a raw pairing array on `0..2n`.
    pub fn from_pairing(pairing: &[usize]) -> Result<Self> {
        if !pairing.len().is_multiple_of(2) {
            return Err(Error::InvalidNotation(format!(
                "pairing has odd length {}",
                pairing.len()
            )));
        }
        let degree = pairing.len() / 2;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= pairing.len() {
                return Err(Error::IndexOutOfRange {
                    index: q,
                    degree: pairing.len(),
                });
            }
            if q == p || pairing[q] != p {
                return Err(Error::InvalidNotation(format!(
                    "pairing is not a fixed-point-free involution at index {p}"
                )));
            }
        }
        Ok(BrauerDiagram {
            pairing: pairing.iter().map(|&q| q as u16).collect(),
        })
    }

    /// Caller guarantees `pairing` is a fixed-point-free involution.
    pub(crate) fn from_raw(pairing: Box<[u16]>) -> Self {
        debug_assert!(pairing
            .iter()
            .enumerate()
            .all(|(p, &q)| q as usize != p && pairing[q as usize] as usize == p));
        BrauerDiagram { pairing }
    }

    pub fn identity(degree: usize) -> Self {
        let pairing = (0..2 * degree)
            .map(|p| if p < degree { p + degree } else { p - degree } as u16)
            .collect();
        BrauerDiagram { pairing }
    }

    /// The permutation diagram with blocks `{i, π(i)'}`, where `images[i - 1] = π(i)`.
    pub fn permutation(degree: usize, images: &[usize]) -> Result<Self> {
        if images.len() != degree {
            return Err(Error::NotAPermutation(degree));
        }
        let mut hit = vec![false; degree + 1];
        for &x in images {
            if !(1..=degree).contains(&x) || hit[x] {
                return Err(Error::NotAPermutation(degree));
            }
            hit[x] = true;
        }
        let mut pairing = vec![0u16; 2 * degree];
        for (i, &x) in images.iter().enumerate() {
            pairing[i] = (degree + x - 1) as u16;
            pairing[degree + x - 1] = i as u16;
        }
        Ok(BrauerDiagram {
            pairing: pairing.into_boxed_slice(),
        })
    }

    /// The transposition interchanging `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if !(1..=degree).contains(&x) {
                return Err(Error::IndexOutOfRange { index: x, degree });
            }
        }
        if i == j {
            return Err(Error::Precondition(format!(
                "transposition needs i != j, got {i} = {j}"
            )));
        }
        let mut images: Vec<usize> = (1..=degree).collect();
        images.swap(i - 1, j - 1);
        Self::permutation(degree, &images)
    }

    pub fn degree(&self) -> usize {
        self.pairing.len() / 2
    }

    pub fn pairing(&self) -> &[u16] {
        &self.pairing
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        let n = self.degree();
        let p = v.index(n)?;
        Some(Vertex::from_index(self.pairing[p] as usize, n))
    }

    /// Blocks in canonical order: each block as (smaller, larger) point
    /// index, sorted by the smaller index. Top vertices precede bottom ones.
    pub fn blocks(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.degree();
        self.pairing
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p < q as usize)
            .map(|(p, &q)| (Vertex::from_index(p, n), Vertex::from_index(q as usize, n)))
            .collect()
    }

    /// Product `self · other` with the number of floating components.
    ///
    /// The product graph has `3n` points: `self`'s top row, the shared middle
    /// row, and `other`'s bottom row. Every point has degree at most two and
    /// boundary points degree one, so each component is either a path between
    /// two boundary points (a block of the product) or a middle-only cycle
    /// (a floating component).
    pub fn multiply(&self, other: &BrauerDiagram) -> Result<Product> {
        let n = self.degree();
        if n != other.degree() {
            return Err(Error::DegreeMismatch {
                left: n,
                right: other.degree(),
            });
        }
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &BrauerDiagram) -> Product {
        let n = self.degree();
        let mut uf = UnionFind::new(3 * n);
        for (p, &q) in self.pairing.iter().enumerate() {
            if p < q as usize {
                uf.union(p, q as usize);
            }
        }
        for (p, &q) in other.pairing.iter().enumerate() {
            if p < q as usize {
                uf.union(p + n, q as usize + n);
            }
        }
        let unset = u32::MAX;
        // First boundary point seen in each class, as a product index.
        let mut first = vec![unset; 3 * n];
        let mut pairing = vec![0u16; 2 * n];
        let boundary = (0..n)
            .map(|p| (p, p))
            .chain((2 * n..3 * n).map(|p| (p, p - n)));
        for (graph_point, product_point) in boundary {
            let root = uf.find(graph_point);
            if first[root] == unset {
                first[root] = product_point as u32;
            } else {
                let other_point = first[root] as usize;
                pairing[product_point] = other_point as u16;
                pairing[other_point] = product_point as u16;
            }
        }
        let mut counted = vec![false; 3 * n];
        let mut floating = 0;
        for p in n..2 * n {
            let root = uf.find(p);
            if first[root] == unset && !counted[root] {
                counted[root] = true;
                floating += 1;
            }
        }
        Product {
            diagram: BrauerDiagram::from_raw(pairing.into_boxed_slice()),
            floating,
        }
    }

    /// The reflection `α*` interchanging dashed and undashed vertices.
    pub fn star(&self) -> BrauerDiagram {
        let n = self.degree();
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut pairing = vec![0u16; 2 * n];
        for (p, &q) in self.pairing.iter().enumerate() {
            pairing[flip(p)] = flip(q as usize) as u16;
        }
        BrauerDiagram {
            pairing: pairing.into_boxed_slice(),
        }
    }

    /// Number of transversals.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        self.pairing[..n]
            .iter()
            .filter(|&&q| q as usize >= n)
            .count()
    }

    /// Top vertices lying on a transversal.
    pub fn dom(&self) -> Vec<usize> {
        let n = self.degree();
        (0..n)
            .filter(|&p| self.pairing[p] as usize >= n)
            .map(|p| p + 1)
            .collect()
    }

    /// Bottom vertices lying on a transversal, as labels in `1..=n`.
    pub fn codom(&self) -> Vec<usize> {
        let n = self.degree();
        (n..2 * n)
            .filter(|&p| (self.pairing[p] as usize) < n)
            .map(|p| p - n + 1)
            .collect()
    }

    pub fn ker(&self) -> KernelSignature {
        let n = self.degree();
        let hooks = (0..n)
            .filter(|&p| (self.pairing[p] as usize) < n && p < self.pairing[p] as usize)
            .map(|p| (p + 1, self.pairing[p] as usize + 1))
            .collect();
        KernelSignature { degree: n, hooks }
    }

    pub fn coker(&self) -> KernelSignature {
        let n = self.degree();
        let hooks = (n..2 * n)
            .filter(|&p| self.pairing[p] as usize >= n && p < self.pairing[p] as usize)
            .map(|p| (p - n + 1, self.pairing[p] as usize - n + 1))
            .collect();
        KernelSignature { degree: n, hooks }
    }

    /// Whether the diagram lies in the group of units `S_n`.
    pub fn is_unit(&self) -> bool {
        self.rank() == self.degree()
    }

    /// For a unit, the images `π(1), …, π(n)`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.degree();
        if !self.is_unit() {
            return None;
        }
        Some(
            self.pairing[..n]
                .iter()
                .map(|&q| q as usize - n + 1)
                .collect(),
        )
    }

    /// `α² = α` in `B_n`, ignoring floating components.
    pub fn is_idempotent(&self) -> bool {
        self.multiply_unchecked(self).diagram == *self
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BrauerDiagram({self})")
    }
}

/// Floating-component count `τ(α, β)`.
pub fn tau(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<u64> {
    alpha.multiply(beta).map(|p| p.floating)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use Vertex::{Bottom as B, Top as T};

    pub(crate) fn example_b6() -> BrauerDiagram {
        BrauerDiagram::new(
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
        .unwrap()
    }

    #[test]
    fn empty_diagram() {
        let empty = BrauerDiagram::new::<[Vertex; 2]>(0, &[]).unwrap();
        assert_eq!(empty.degree(), 0);
        assert_eq!(empty, BrauerDiagram::identity(0));
        let p = empty.multiply(&empty).unwrap();
        assert_eq!(p.floating, 0);
    }

    #[test]
    fn constructor_errors_are_distinct() {
        assert_eq!(
            BrauerDiagram::new(2, &[vec![T(1), T(1)]]),
            Err(Error::BadBlockSize { index: 0, size: 1 })
        );
        assert_eq!(
            BrauerDiagram::new(2, &[vec![T(1), T(2), B(1)]]),
            Err(Error::BadBlockSize { index: 0, size: 3 })
        );
        assert_eq!(
            BrauerDiagram::new(2, &[[T(1), T(2)], [T(2), B(1)]]),
            Err(Error::DuplicateVertex { vertex: T(2) })
        );
        assert_eq!(
            BrauerDiagram::new(2, &[[T(1), T(2)]]),
            Err(Error::MissingVertex { vertex: B(1) })
        );
        assert_eq!(
            BrauerDiagram::new(2, &[[T(1), T(3)], [B(1), B(2)]]),
            Err(Error::VertexOutOfRange {
                vertex: T(3),
                degree: 2
            })
        );
    }

    #[test]
    fn invariants_of_worked_example() {
        let a = example_b6();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.dom(), vec![2, 4]);
        assert_eq!(a.codom(), vec![1, 3]);
        assert_eq!(a.ker().hooks(), &[(1, 3), (5, 6)]);
        assert_eq!(a.coker().hooks(), &[(2, 6), (4, 5)]);
    }

    #[test]
    fn star_reflects_worked_example() {
        let reflected = BrauerDiagram::new(
            6,
            &[
                [B(1), B(3)],
                [B(2), T(3)],
                [B(4), T(1)],
                [B(5), B(6)],
                [T(2), T(6)],
                [T(4), T(5)],
            ],
        )
        .unwrap();
        assert_eq!(example_b6().star(), reflected);
        assert_eq!(example_b6().star().ker(), example_b6().coker());
        assert_eq!(example_b6().star().star(), example_b6());
    }

    #[test]
    fn identity_and_units() {
        for n in 0..5 {
            let id = BrauerDiagram::identity(n);
            assert_eq!(id.rank(), n);
            assert!(id.ker().hooks().is_empty());
            assert_eq!(id.star(), id);
        }
        let s = BrauerDiagram::transposition(3, 1, 2).unwrap();
        let p = s.multiply(&s).unwrap();
        assert_eq!(p.diagram, BrauerDiagram::identity(3));
        assert_eq!(p.floating, 0);
        assert!(BrauerDiagram::transposition(3, 0, 2).is_err());
        assert!(BrauerDiagram::transposition(3, 1, 4).is_err());
        assert!(BrauerDiagram::permutation(3, &[1, 1, 2]).is_err());
        assert!(BrauerDiagram::permutation(3, &[1, 2]).is_err());
    }

    #[test]
    fn multiply_rejects_degree_mismatch() {
        let a = BrauerDiagram::identity(2);
        let b = BrauerDiagram::identity(3);
        assert_eq!(
            a.multiply(&b),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn doubled_edge_is_one_floating_component() {
        let e = BrauerDiagram::new(2, &[[T(1), T(2)], [B(1), B(2)]]).unwrap();
        let p = e.multiply(&e).unwrap();
        assert_eq!(p.diagram, e);
        assert_eq!(p.floating, 1);
    }

    #[test]
    fn from_pairing_validates() {
        assert!(BrauerDiagram::from_pairing(&[1, 0]).is_ok());
        assert!(BrauerDiagram::from_pairing(&[0, 1]).is_err());
        assert!(BrauerDiagram::from_pairing(&[1, 0, 3]).is_err());
        assert!(BrauerDiagram::from_pairing(&[2, 0, 1, 3]).is_err());
    }
}
