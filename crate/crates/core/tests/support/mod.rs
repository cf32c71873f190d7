//! Reference implementations used as oracles by the integration tests.
//!
//! A diagram is a raw pairing array over `0..2n`: top vertex `i` is index
//! `i − 1`, bottom vertex `i'` is index `n + i − 1`. Nothing here calls into
//! the library except the two conversion helpers.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use brauer::BrauerDiagram;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Pairing = Vec<usize>;
pub type Twisted = (u64, Pairing);

pub fn degree(p: &Pairing) -> usize {
    p.len() / 2
}

/// Every perfect matching of `0..2n`, by pairing the smallest free point
/// with each later free point in turn.
pub fn all_matchings(n: usize) -> Vec<Pairing> {
    fn go(free: &mut [usize], current: &mut Pairing, out: &mut Vec<Pairing>) {
        let Some(&first) = free.first() else {
            out.push(current.clone());
            return;
        };
        for idx in 1..free.len() {
            let other = free[idx];
            let mut rest: Vec<usize> = free
                .iter()
                .copied()
                .filter(|&x| x != first && x != other)
                .collect();
            current[first] = other;
            current[other] = first;
            go(&mut rest, current, out);
        }
    }
    let mut out = Vec::new();
    let mut free: Vec<usize> = (0..2 * n).collect();
    go(&mut free, &mut vec![usize::MAX; 2 * n], &mut out);
    out
}

pub fn identity(n: usize) -> Pairing {
    (0..2 * n)
        .map(|p| if p < n { p + n } else { p - n })
        .collect()
}

/// The permutation diagram `i → images[i − 1]'`.
pub fn permutation(images: &[usize]) -> Pairing {
    let n = images.len();
    let mut p = vec![0; 2 * n];
    for (i, &j) in images.iter().enumerate() {
        p[i] = n + j - 1;
        p[n + j - 1] = i;
    }
    p
}

pub fn transposition(n: usize, i: usize, j: usize) -> Pairing {
    let mut images: Vec<usize> = (1..=n).collect();
    images.swap(i - 1, j - 1);
    permutation(&images)
}

/// Uniform random matching: shuffle the points and pair neighbours.
pub fn random_matching<R: Rng>(n: usize, rng: &mut R) -> Pairing {
    let mut points: Vec<usize> = (0..2 * n).collect();
    points.shuffle(rng);
    let mut p = vec![0; 2 * n];
    for pair in points.chunks(2) {
        p[pair[0]] = pair[1];
        p[pair[1]] = pair[0];
    }
    p
}

/// Stacks `a` over `b` as an explicit 3n-vertex multigraph and traces it:
/// paths between outer vertices give the product, leftover cycles in the
/// middle row are counted.
pub fn compose(a: &Pairing, b: &Pairing) -> (Pairing, u64) {
    let n = degree(a);
    assert_eq!(n, degree(b));
    // Nodes: 0..n top of a, n..2n middle, 2n..3n bottom of b. Index `p` of
    // `a` is node `p`; index `p` of `b` is node `n + p`.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for p in 0..2 * n {
        if p < a[p] {
            edges.push((p, a[p]));
        }
        if p < b[p] {
            edges.push((n + p, n + b[p]));
        }
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 3 * n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((id, v));
        adj[v].push((id, u));
    }
    let outer = |x: usize| x < n || x >= 2 * n;
    let mut seen = vec![false; 3 * n];
    let mut product = vec![usize::MAX; 2 * n];
    let index = |x: usize| if x < n { x } else { x - n };
    for start in (0..3 * n).filter(|&x| outer(x)) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let (mut prev_edge, mut cur) = (usize::MAX, start);
        loop {
            let &(edge, next) = adj[cur]
                .iter()
                .find(|&&(e, _)| e != prev_edge)
                .expect("degree ≥ 1");
            seen[next] = true;
            if outer(next) {
                product[index(start)] = index(next);
                product[index(next)] = index(start);
                break;
            }
            prev_edge = edge;
            cur = next;
        }
    }
    let mut loops = 0;
    for m in n..2 * n {
        if seen[m] {
            continue;
        }
        loops += 1;
        let mut stack = vec![m];
        seen[m] = true;
        while let Some(x) = stack.pop() {
            for &(_, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    (product, loops)
}

pub fn twisted_mul(x: &Twisted, y: &Twisted) -> Twisted {
    let (d, t) = compose(&x.1, &y.1);
    (x.0 + y.0 + t, d)
}

pub fn rank(p: &Pairing) -> usize {
    let n = degree(p);
    (0..n).filter(|&i| p[i] >= n).count()
}

/// Upper hooks as 1-based pairs `(a, b)`, `a < b`.
pub fn kernel(p: &Pairing) -> BTreeSet<(usize, usize)> {
    let n = degree(p);
    (0..n)
        .filter(|&i| p[i] < n && i < p[i])
        .map(|i| (i + 1, p[i] + 1))
        .collect()
}

/// Lower hooks as 1-based pairs `(a, b)`, `a < b`.
pub fn cokernel(p: &Pairing) -> BTreeSet<(usize, usize)> {
    let n = degree(p);
    (n..2 * n)
        .filter(|&i| p[i] >= n && i < p[i])
        .map(|i| (i - n + 1, p[i] - n + 1))
        .collect()
}

pub fn is_twisted_idempotent(p: &Pairing) -> bool {
    compose(p, p) == (p.clone(), 0)
}

/// All elements of `⟨gens⟩` with twist at most `bound`. Twists never
/// decrease along a product, so the truncation is exact.
pub fn bounded_closure(gens: &[Twisted], bound: u64) -> BTreeSet<Twisted> {
    let mut out: BTreeSet<Twisted> = gens.iter().filter(|g| g.0 <= bound).cloned().collect();
    let mut queue: VecDeque<Twisted> = out.iter().cloned().collect();
    let gens: Vec<Twisted> = out.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            for z in [twisted_mul(&x, g), twisted_mul(g, &x)] {
                if z.0 <= bound && out.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    out
}

/// Indexes `B_n` and tabulates its plain multiplication.
pub struct Table {
    pub elements: Vec<Pairing>,
    pub index: HashMap<Pairing, usize>,
    product: Vec<u32>,
    twist: Vec<u8>,
}

impl Table {
    pub fn new(n: usize) -> Self {
        let elements = all_matchings(n);
        let index: HashMap<Pairing, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let size = elements.len();
        let mut product = vec![0u32; size * size];
        let mut twist = vec![0u8; size * size];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let (c, t) = compose(a, b);
                product[i * size + j] = index[&c] as u32;
                twist[i * size + j] = t as u8;
            }
        }
        Table {
            elements,
            index,
            product,
            twist,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.product[i * self.len() + j] as usize
    }

    pub fn tau(&self, i: usize, j: usize) -> u64 {
        self.twist[i * self.len() + j] as u64
    }

    /// Divisibility ideals of every element: `right[β] = βB_n`,
    /// `left[β] = B_nβ`, `two[β] = B_nβB_n`.
    pub fn ideals(&self) -> Ideals {
        let size = self.len();
        let mut right = vec![Bits::new(size); size];
        let mut left = vec![Bits::new(size); size];
        for b in 0..size {
            for g in 0..size {
                right[b].insert(self.mul(b, g));
                left[b].insert(self.mul(g, b));
            }
        }
        let two = right
            .iter()
            .map(|r| {
                let mut acc = Bits::new(size);
                for x in r.iter() {
                    acc.union_with(&left[x]);
                }
                acc
            })
            .collect();
        Ideals { right, left, two }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(size: usize) -> Self {
        Bits(vec![0; size.div_ceil(64)])
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.contains(i))
    }
}

pub struct Ideals {
    pub right: Vec<Bits>,
    pub left: Vec<Bits>,
    pub two: Vec<Bits>,
}

impl Ideals {
    /// `α ≤ β` in each pre-order, by table index.
    pub fn leq_r(&self, a: usize, b: usize) -> bool {
        self.right[b].contains(a)
    }

    pub fn leq_l(&self, a: usize, b: usize) -> bool {
        self.left[b].contains(a)
    }

    pub fn leq_j(&self, a: usize, b: usize) -> bool {
        self.two[b].contains(a)
    }
}

pub fn to_lib(p: &Pairing) -> BrauerDiagram {
    BrauerDiagram::from_pairing(p).expect("oracle produces matchings")
}

pub fn from_lib(d: &BrauerDiagram) -> Pairing {
    d.pairing().iter().map(|&q| q as usize).collect()
}

pub fn double_factorial_odd(n: usize) -> u128 {
    // (2n − 1)!!
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}
