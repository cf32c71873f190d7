//! Exhaustive iteration over `B_n` and the brute-force oracles built on it.
//!
//! Diagrams are generated by pairing the smallest unpaired point with each
//! larger unpaired point in turn, which visits every perfect matching once
//! and in lexicographic order of the pairing array.

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::diagram::{BrauerDiagram, KernelSignature};
use crate::error::{Error, Result};
use crate::green::PreOrder;
use crate::twisted::{is_twisted_idempotent, TwistedElement};

const UNPAIRED: u16 = u16::MAX;

/// Lexicographic iterator over the diagrams of one degree, optionally
/// restricted to a fixed partner for point 0.
#[derive(Clone, Debug)]
pub struct DiagramIter {
    pairing: Vec<u16>,
    stack: Vec<(u16, u16)>,
    floor: usize,
    started: bool,
    done: bool,
}

impl DiagramIter {
    fn new(degree: usize) -> Self {
        DiagramIter {
            pairing: vec![UNPAIRED; 2 * degree],
            stack: Vec::with_capacity(degree),
            floor: 0,
            started: false,
            done: false,
        }
    }

    /// Diagrams in which top vertex 1 is paired with point index `partner`.
    pub fn with_first_partner(degree: usize, partner: usize) -> Self {
        let mut it = DiagramIter::new(degree);
        if degree == 0 || partner == 0 || partner >= 2 * degree {
            it.done = true;
            return it;
        }
        it.pair(0, partner as u16);
        it.floor = 1;
        it
    }

    fn pair(&mut self, u: u16, v: u16) {
        self.pairing[u as usize] = v;
        self.pairing[v as usize] = u;
        self.stack.push((u, v));
    }

    fn next_unpaired(&self, from: usize) -> Option<usize> {
        (from..self.pairing.len()).find(|&p| self.pairing[p] == UNPAIRED)
    }

    fn fill(&mut self) {
        while let Some(u) = self.next_unpaired(0) {
            let v = self
                .next_unpaired(u + 1)
                .expect("an even number of points remain");
            self.pair(u as u16, v as u16);
        }
    }

    fn current(&self) -> BrauerDiagram {
        BrauerDiagram::from_raw(self.pairing.clone().into_boxed_slice())
    }
}

impl Iterator for DiagramIter {
    type Item = BrauerDiagram;

    fn next(&mut self) -> Option<BrauerDiagram> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.current());
        }
        while self.stack.len() > self.floor {
            let (u, v) = self.stack.pop().expect("stack above floor");
            self.pairing[u as usize] = UNPAIRED;
            self.pairing[v as usize] = UNPAIRED;
            if let Some(w) = self.next_unpaired(v as usize + 1) {
                self.pair(u, w as u16);
                self.fill();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// Every element of `B_n`, in canonical order.
pub fn all_diagrams(degree: usize) -> DiagramIter {
    DiagramIter::new(degree)
}

/// Disjoint sub-iterators covering `B_n`, split by the partner of top vertex
/// 1. Concatenating them in order reproduces [`all_diagrams`].
pub fn partitions(degree: usize) -> Vec<DiagramIter> {
    if degree == 0 {
        return vec![all_diagrams(0)];
    }
    (1..2 * degree)
        .map(|q| DiagramIter::with_first_partner(degree, q))
        .collect()
}

/// `B_n` materialized in canonical order using the partitioned iterators in
/// parallel.
pub fn par_all_diagrams(degree: usize) -> Vec<BrauerDiagram> {
    partitions(degree)
        .into_par_iter()
        .map(|it| it.collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// `|B_n| = (2n − 1)!!`.
pub fn count_diagrams(degree: usize) -> u128 {
    (1..=degree as u128).map(|k| 2 * k - 1).product()
}

/// The D-class `D_r = {α : rank(α) = r}`.
pub fn d_class(degree: usize, rank: usize) -> impl Iterator<Item = BrauerDiagram> {
    all_diagrams(degree).filter(move |d| d.rank() == rank)
}

/// Idempotents of `B_n` (`α² = α`), or of the twisted monoid (`α ⋆ α = α`)
/// when `twisted` is set.
pub fn idempotents(degree: usize, twisted: bool) -> impl Iterator<Item = BrauerDiagram> {
    all_diagrams(degree).filter(move |d| {
        if twisted {
            is_twisted_idempotent(d)
        } else {
            d.is_idempotent()
        }
    })
}

/// All sets of `hooks` disjoint pairs in `1..=degree`, sorted.
pub fn kernel_signatures(degree: usize, hooks: usize) -> Vec<KernelSignature> {
    fn rec(
        degree: usize,
        start: usize,
        left: usize,
        used: &mut Vec<bool>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<KernelSignature>,
    ) {
        if left == 0 {
            out.push(KernelSignature::new(degree, acc.iter().copied()).expect("disjoint pairs"));
            return;
        }
        for a in start..=degree {
            if used[a] {
                continue;
            }
            used[a] = true;
            for b in a + 1..=degree {
                if used[b] {
                    continue;
                }
                used[b] = true;
                acc.push((a, b));
                rec(degree, a + 1, left - 1, used, acc, out);
                acc.pop();
                used[b] = false;
            }
            used[a] = false;
        }
    }
    let mut out = Vec::new();
    if 2 * hooks <= degree {
        rec(
            degree,
            1,
            hooks,
            &mut vec![false; degree + 1],
            &mut Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out.dedup();
    out
}

/// A uniformly random element of `B_n`.
pub fn random_diagram<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> BrauerDiagram {
    let mut points: Vec<usize> = (0..2 * degree).collect();
    points.shuffle(rng);
    let mut pairing = vec![0usize; 2 * degree];
    for pair in points.chunks(2) {
        pairing[pair[0]] = pair[1];
        pairing[pair[1]] = pair[0];
    }
    BrauerDiagram::from_pairing(&pairing).expect("shuffled pairs form a matching")
}

/// A twist-bounded truncation of a subsemigroup of the twisted monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub elements: BTreeSet<TwistedElement>,
    /// No product of two elements exceeded the bound, so the elements form
    /// a genuine subsemigroup rather than a truncation.
    pub saturated_within_bound: bool,
}

impl ClosureResult {
    pub fn contains(&self, x: &TwistedElement) -> bool {
        self.elements.contains(x)
    }
}

/// Smallest set containing `generators` and every product `x ⋆ y` of its
/// members whose twist is at most `bound`.
///
/// Twist never decreases along a product, so this is exactly the set of
/// elements of twist at most `bound` in the generated subsemigroup.
pub fn bounded_closure(generators: &[TwistedElement], bound: u64) -> Result<ClosureResult> {
    if let Some(g) = generators.iter().find(|g| g.twist > bound) {
        return Err(Error::BoundTooLow {
            bound,
            twist: g.twist,
        });
    }
    if let Some(first) = generators.first() {
        if let Some(g) = generators.iter().find(|g| g.degree() != first.degree()) {
            return Err(Error::DegreeMismatch {
                left: first.degree(),
                right: g.degree(),
            });
        }
    }
    let mut seen: HashSet<TwistedElement> = HashSet::new();
    let mut elements: Vec<TwistedElement> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            elements.push(g.clone());
        }
    }
    let mut saturated = true;
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        // Pair the new element with everything discovered so far, itself
        // included, on both sides.
        for i in 0..=next {
            let y = elements[i].clone();
            for (a, b) in [(&x, &y), (&y, &x)] {
                if a.twist + b.twist > bound {
                    saturated = false;
                    continue;
                }
                let product = a.star(b)?;
                if product.twist > bound {
                    saturated = false;
                } else if seen.insert(product.clone()) {
                    elements.push(product);
                }
            }
        }
        next += 1;
    }
    Ok(ClosureResult {
        elements: elements.into_iter().collect(),
        saturated_within_bound: saturated,
    })
}

/// Decides `α ≤ β` in `B_n` for one of Green's pre-orders by exhaustive
/// witness search: `∃δ: α = βδ` for R, `∃γ: α = γβ` for L, `∃γ,δ: α = γβδ`
/// for J. Independent of the kernel/rank characterizations.
pub fn divisibility_oracle(
    relation: PreOrder,
    alpha: &BrauerDiagram,
    beta: &BrauerDiagram,
) -> Result<bool> {
    let n = alpha.degree();
    if n != beta.degree() {
        return Err(Error::DegreeMismatch {
            left: n,
            right: beta.degree(),
        });
    }
    Ok(match relation {
        PreOrder::R => all_diagrams(n).any(|d| beta.multiply_unchecked(&d).diagram == *alpha),
        PreOrder::L => all_diagrams(n).any(|g| g.multiply_unchecked(beta).diagram == *alpha),
        PreOrder::J => all_diagrams(n).any(|d| {
            let bd = beta.multiply_unchecked(&d).diagram;
            all_diagrams(n).any(|g| g.multiply_unchecked(&bd).diagram == *alpha)
        }),
    })
}

/// Memoized exhaustive divisibility search for sweeps over many pairs.
///
/// Right ideals `βB_n` and left ideals `B_nx` are computed by multiplying
/// against every element of `B_n` and cached; `α ≤_J β` is decided as
/// `∃x ∈ βB_n: α ∈ B_nx`.
pub struct DivisibilityCache {
    degree: usize,
    elements: Vec<BrauerDiagram>,
    right: HashMap<BrauerDiagram, HashSet<BrauerDiagram>>,
    left: HashMap<BrauerDiagram, HashSet<BrauerDiagram>>,
}

impl DivisibilityCache {
    pub fn new(degree: usize) -> Self {
        DivisibilityCache {
            degree,
            elements: all_diagrams(degree).collect(),
            right: HashMap::new(),
            left: HashMap::new(),
        }
    }

    fn right_ideal(&mut self, beta: &BrauerDiagram) -> &HashSet<BrauerDiagram> {
        let elements = &self.elements;
        self.right.entry(beta.clone()).or_insert_with(|| {
            elements
                .iter()
                .map(|d| beta.multiply_unchecked(d).diagram)
                .collect()
        })
    }

    fn left_ideal(&mut self, beta: &BrauerDiagram) -> &HashSet<BrauerDiagram> {
        let elements = &self.elements;
        self.left.entry(beta.clone()).or_insert_with(|| {
            elements
                .iter()
                .map(|g| g.multiply_unchecked(beta).diagram)
                .collect()
        })
    }

    pub fn leq(
        &mut self,
        relation: PreOrder,
        alpha: &BrauerDiagram,
        beta: &BrauerDiagram,
    ) -> Result<bool> {
        for d in [alpha, beta] {
            if d.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    left: self.degree,
                    right: d.degree(),
                });
            }
        }
        Ok(match relation {
            PreOrder::R => self.right_ideal(beta).contains(alpha),
            PreOrder::L => self.left_ideal(beta).contains(alpha),
            PreOrder::J => {
                let mut right: Vec<BrauerDiagram> =
                    self.right_ideal(beta).iter().cloned().collect();
                right.sort();
                right.iter().any(|x| self.left_ideal(x).contains(alpha))
            }
        })
    }
}
