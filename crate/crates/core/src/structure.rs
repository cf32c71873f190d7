//! Graham–Houghton graphs of the regular D-classes, the singular part and
//! the idempotent-generated part of the twisted monoid, and factorization
//! of singular diagrams into twisted idempotents.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use petgraph::algo::{connected_components, kosaraju_scc};
use petgraph::graph::{DiGraph, NodeIndex, UnGraph};
use petgraph::visit::{Dfs, Reversed};
use serde::Serialize;

use crate::diagram::{BrauerDiagram, KernelSignature};
use crate::enumerate::{idempotents, kernel_signatures};
use crate::error::{Error, Result};
use crate::green::{is_admissible_rank, regularity_witness};
use crate::ideals::{idempotent_factor_sigma, idempotent_factor_sigma_left, lemma_rank_drop, rho};
use crate::notation::{to_notation, DiagramNotation};
use crate::twisted::{is_twisted_idempotent, TwistedElement};

/// Bipartite graph whose left vertices are the R-classes and right vertices
/// the L-classes of `D_{r;0}`, with an edge where the H-class contains a
/// twisted idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GHGraph {
    degree: usize,
    rank: usize,
    left: Vec<KernelSignature>,
    right: Vec<KernelSignature>,
    /// Sorted `(left, right)` index pairs.
    edges: Vec<(usize, usize)>,
    /// The idempotent of the H-class at each edge, parallel to `edges`.
    idempotents: Vec<BrauerDiagram>,
}

fn require_degree_three(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::Precondition(format!("n = {n} is below 3")))
    } else {
        Ok(())
    }
}

pub fn build_gh_graph(degree: usize, rank: usize) -> Result<GHGraph> {
    let n = degree;
    require_degree_three(n)?;
    if !is_admissible_rank(n, rank) || rank == 0 || rank == n {
        return Err(Error::InvalidRank { rank, degree });
    }
    let sides = kernel_signatures(n, (n - rank) / 2);
    let index: HashMap<&KernelSignature, usize> =
        sides.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut found: Vec<((usize, usize), BrauerDiagram)> = idempotents(n, true)
        .filter(|e| e.rank() == rank)
        .map(|e| ((index[&e.ker()], index[&e.coker()]), e))
        .collect();
    found.sort();
    let (edges, idempotents) = found.into_iter().unzip();
    Ok(GHGraph {
        degree: n,
        rank,
        left: sides.clone(),
        right: sides,
        edges,
        idempotents,
    })
}

impl GHGraph {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn left(&self) -> &[KernelSignature] {
        &self.left
    }

    pub fn right(&self) -> &[KernelSignature] {
        &self.right
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_idempotents(&self) -> &[BrauerDiagram] {
        &self.idempotents
    }

    pub fn is_balanced(&self) -> bool {
        self.left.len() == self.right.len()
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.left.len()];
        for &(j, _) in &self.edges {
            deg[j] += 1;
        }
        deg
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.right.len()];
        for &(_, k) in &self.edges {
            deg[k] += 1;
        }
        deg
    }

    /// The common degree of every vertex, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut all = self.left_degrees().into_iter().chain(self.right_degrees());
        let first = all.next()?;
        all.all(|d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.left.len(), self.right.len(), &self.edges)
    }

    pub fn strong_hall(&self) -> bool {
        strong_hall(self.left.len(), self.right.len(), &self.edges)
    }

    pub fn strong_hall_bruteforce(&self) -> Option<bool> {
        strong_hall_bruteforce(self.left.len(), self.right.len(), &self.edges)
    }

    /// A perfect matching as a right partner for each left vertex, if one
    /// exists.
    pub fn perfect_matching(&self) -> Option<Vec<usize>> {
        if !self.is_balanced() {
            return None;
        }
        let matching = max_matching(self.left.len(), self.right.len(), &self.edges);
        matching.into_iter().collect()
    }

    /// DOT rendering; vertices are named `R:<ker>` and `L:<coker>`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph gh_n{}_r{} {{", self.degree, self.rank);
        for k in &self.left {
            let _ = writeln!(out, "  \"R:{k}\" [shape=box];");
        }
        for k in &self.right {
            let _ = writeln!(out, "  \"L:{k}\" [shape=ellipse];");
        }
        for &(j, k) in &self.edges {
            let _ = writeln!(out, "  \"R:{}\" -- \"L:{}\";", self.left[j], self.right[k]);
        }
        out.push_str("}\n");
        out
    }
}

fn adjacency(left: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); left];
    for &(j, k) in edges {
        adj[j].push(k);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

/// Maximum matching by augmenting paths, scanning left vertices and their
/// neighbours in increasing order. Entry `j` is the right partner of `j`.
pub fn max_matching(left: usize, right: usize, edges: &[(usize, usize)]) -> Vec<Option<usize>> {
    fn augment(
        j: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &k in &adj[j] {
            if seen[k] {
                continue;
            }
            seen[k] = true;
            if owner[k].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[k] = Some(j);
                return true;
            }
        }
        false
    }
    let adj = adjacency(left, edges);
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for j in 0..left {
        let mut seen = vec![false; right];
        augment(j, &adj, &mut seen, &mut owner);
    }
    let mut partner = vec![None; left];
    for (k, o) in owner.iter().enumerate() {
        if let Some(j) = *o {
            partner[j] = Some(k);
        }
    }
    partner
}

pub fn is_connected(left: usize, right: usize, edges: &[(usize, usize)]) -> bool {
    let mut g: UnGraph<(), ()> = UnGraph::default();
    let nodes: Vec<NodeIndex> = (0..left + right).map(|_| g.add_node(())).collect();
    for &(j, k) in edges {
        g.add_edge(nodes[j], nodes[left + k], ());
    }
    connected_components(&g) <= 1
}

/// Whether `|N(H)| > |H|` for every `∅ ⊊ H ⊊ J` of the left side `J`.
///
/// With a matching saturating `J`, a violating `H` is a set with
/// `N(H) = M(H)`: a set closed under `j → M⁻¹(k)` for neighbours `k` of `j`
/// and containing no vertex from which an unmatched right vertex is
/// reachable. Such a proper set exists iff the vertices that can reach
/// an unmatched right vertex do not cover `J`, or, when there are none,
/// iff the matching digraph is not strongly connected.
pub fn strong_hall(left: usize, right: usize, edges: &[(usize, usize)]) -> bool {
    if left <= 1 {
        return true;
    }
    let matching = max_matching(left, right, edges);
    if matching.iter().any(Option::is_none) {
        return false;
    }
    let mut owner = vec![None; right];
    for (j, k) in matching.iter().enumerate() {
        owner[k.expect("saturating")] = Some(j);
    }
    let adj = adjacency(left, edges);
    let mut g: DiGraph<(), ()> = DiGraph::default();
    let nodes: Vec<NodeIndex> = (0..left).map(|_| g.add_node(())).collect();
    let mut leaks = Vec::new();
    for (j, ks) in adj.iter().enumerate() {
        for &k in ks {
            match owner[k] {
                Some(o) if o != j => {
                    g.add_edge(nodes[j], nodes[o], ());
                }
                Some(_) => {}
                None => leaks.push(j),
            }
        }
    }
    if leaks.is_empty() {
        return kosaraju_scc(&g).len() == 1;
    }
    let reversed = Reversed(&g);
    let mut reaches = vec![false; left];
    for &j in &leaks {
        let mut dfs = Dfs::new(reversed, nodes[j]);
        while let Some(v) = dfs.next(reversed) {
            reaches[v.index()] = true;
        }
    }
    reaches.into_iter().all(|x| x)
}

/// Subset-scan form of [`strong_hall`] for `|J| ≤ 16` and `|K| ≤ 128`.
pub fn strong_hall_bruteforce(left: usize, right: usize, edges: &[(usize, usize)]) -> Option<bool> {
    if left > 16 || right > 128 {
        return None;
    }
    let mut neighbours = vec![0u128; left];
    for &(j, k) in edges {
        neighbours[j] |= 1 << k;
    }
    let full = (1u32 << left) - 1;
    Some((1..full).all(|mask| {
        let n = (0..left)
            .filter(|j| mask >> j & 1 == 1)
            .fold(0u128, |acc, j| acc | neighbours[j]);
        n.count_ones() > mask.count_ones()
    }))
}

/// The sufficient conditions under which `rank(I_{r;0}) = idrank(I_{r;0})
/// = ρ_nr`, checked on the built graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub n: usize,
    pub r: usize,
    pub left: usize,
    pub right: usize,
    pub edges: usize,
    pub regular_degree: Option<usize>,
    pub balanced: bool,
    pub connected: bool,
    pub strong_hall: bool,
    /// `ρ_nr`, present when every condition holds.
    pub certified_rank: Option<u128>,
}

pub fn verify_rank_idrank(degree: usize, rank: usize) -> Result<RankCertificate> {
    let g = build_gh_graph(degree, rank)?;
    let balanced = g.is_balanced();
    let connected = g.is_connected();
    let strong_hall = g.strong_hall();
    let rho = rho(degree, rank)?;
    let ok = balanced && connected && strong_hall && g.left.len() as u128 == rho;
    Ok(RankCertificate {
        n: degree,
        r: rank,
        left: g.left.len(),
        right: g.right.len(),
        edges: g.edges.len(),
        regular_degree: g.regular_degree(),
        balanced,
        connected,
        strong_hall,
        certified_rank: ok.then_some(rho),
    })
}

/// `ρ_nr` twisted idempotents of `D_r`, one per R-class and one per
/// L-class, that generate `I_{r;0}`: the edges of the perfect matching of
/// the Graham–Houghton graph found by [`max_matching`].
pub fn idempotent_generating_set(degree: usize, rank: usize) -> Result<Vec<BrauerDiagram>> {
    let g = build_gh_graph(degree, rank)?;
    let matching = g.perfect_matching().ok_or_else(|| {
        Error::Precondition(format!("no perfect matching for n = {degree}, r = {rank}"))
    })?;
    Ok(matching
        .into_iter()
        .enumerate()
        .map(|(j, k)| {
            let e = g
                .edges
                .binary_search(&(j, k))
                .expect("matching uses graph edges");
            g.idempotents[e].clone()
        })
        .collect())
}

/// `rank(B_n^τ ∖ S_n) = C(n, 2) + n!`.
pub fn singular_rank(degree: usize) -> Result<u128> {
    require_degree_three(degree)?;
    let n = degree as u128;
    let units: u128 = (1..=n)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .ok_or(Error::Overflow)?;
    (n * (n - 1) / 2).checked_add(units).ok_or(Error::Overflow)
}

/// A generating set of `B_n^τ ∖ S_n` of size [`singular_rank`]: the
/// idempotents of [`idempotent_generating_set`] for rank `n − 2` together
/// with `(1, σ)` for every `σ ∈ S_n`.
pub fn singular_generating_set(degree: usize) -> Result<Vec<TwistedElement>> {
    require_degree_three(degree)?;
    let mut out: Vec<TwistedElement> = idempotent_generating_set(degree, degree - 2)?
        .into_iter()
        .map(TwistedElement::from)
        .collect();
    out.extend(crate::enumerate::d_class(degree, degree).map(|s| TwistedElement::new(1, s)));
    Ok(out)
}

/// Membership in the subsemigroup generated by the twisted idempotents,
/// `{1} ∪ I_{n−2;0}`.
pub fn in_idempotent_generated(x: &TwistedElement) -> Result<bool> {
    let n = x.degree();
    require_degree_three(n)?;
    Ok(x.rank() + 2 <= n || (x.twist == 0 && x.diagram == BrauerDiagram::identity(n)))
}

/// `rank = idrank = C(n, 2) + 1` of `{1} ∪ I_{n−2;0}`.
pub fn idempotent_generated_rank(degree: usize) -> Result<u128> {
    require_degree_three(degree)?;
    let n = degree as u128;
    Ok(n * (n - 1) / 2 + 1)
}

/// Transpositions `(i, j)` whose diagram product, left to right, is the
/// permutation `x ↦ images[x − 1]`.
pub fn transposition_word(images: &[usize]) -> Vec<(usize, usize)> {
    let n = images.len();
    let mut p = images.to_vec();
    let mut word = Vec::new();
    for x in 1..=n {
        let y = p[x - 1];
        if y != x {
            // Right multiplication by (x y) swaps the values x and y.
            for v in p.iter_mut() {
                if *v == x {
                    *v = y;
                } else if *v == y {
                    *v = x;
                }
            }
            word.push((x.min(y), x.max(y)));
        }
    }
    word.reverse();
    word
}

/// Permutations `(λ, ρ)` with `α = λερ` for `ε = regularity_witness(n, r)`.
fn unit_conjugators(
    alpha: &BrauerDiagram,
    epsilon: &BrauerDiagram,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = alpha.degree();
    let (a, e): (DiagramNotation, DiagramNotation) = (to_notation(alpha), to_notation(epsilon));
    let mut lambda = vec![0usize; n];
    let mut rho = vec![0usize; n];
    for (&(i, j), &(p, q)) in a.transversals.iter().zip(&e.transversals) {
        lambda[i - 1] = p;
        rho[q - 1] = j;
    }
    for (&(x, y), &(u, v)) in a.upper_hooks.iter().zip(&e.upper_hooks) {
        lambda[x - 1] = u;
        lambda[y - 1] = v;
    }
    for (&(x, y), &(u, v)) in a.lower_hooks.iter().zip(&e.lower_hooks) {
        rho[u - 1] = x;
        rho[v - 1] = y;
    }
    Ok((lambda, rho))
}

/// Twisted idempotents whose `⋆`-product is `(0, α)`, for `α ∉ S_n` and
/// `n ≥ 3`.
///
/// For `rank(α) > 0`, `α = λερ` with `ε` the canonical idempotent of its
/// D-class and `λ, ρ ∈ S_n`; each transposition of `ρ` (right) and `λ`
/// (left) is absorbed by [`idempotent_factor_sigma`]. Rank 0 is first split
/// by [`lemma_rank_drop`] into two rank 2 factors.
pub fn factor_into_idempotents(alpha: &BrauerDiagram) -> Result<Vec<BrauerDiagram>> {
    let n = alpha.degree();
    require_degree_three(n)?;
    if alpha.is_unit() {
        return Err(Error::Precondition(
            "units other than 1 are not products of idempotents".into(),
        ));
    }
    if is_twisted_idempotent(alpha) {
        return Ok(vec![alpha.clone()]);
    }
    let r = alpha.rank();
    if r == 0 {
        let (beta, gamma) = lemma_rank_drop(alpha)?;
        let mut chain = factor_into_idempotents(&beta)?;
        chain.extend(factor_into_idempotents(&gamma)?);
        return Ok(chain);
    }
    let epsilon = regularity_witness(n, r)?;
    let (lambda, rho) = unit_conjugators(alpha, &epsilon)?;

    let mut right = Vec::new();
    let mut current = epsilon.clone();
    for (i, j) in transposition_word(&rho) {
        right.extend(idempotent_factor_sigma(&current, i, j)?);
        current = current
            .multiply_unchecked(&BrauerDiagram::transposition(n, i, j)?)
            .diagram;
    }
    let mut left: Vec<Vec<BrauerDiagram>> = Vec::new();
    for (i, j) in transposition_word(&lambda).into_iter().rev() {
        left.push(idempotent_factor_sigma_left(&current, i, j)?);
        current = BrauerDiagram::transposition(n, i, j)?
            .multiply_unchecked(&current)
            .diagram;
    }
    debug_assert_eq!(current, *alpha);
    let mut chain: Vec<BrauerDiagram> = left.into_iter().rev().flatten().collect();
    chain.push(epsilon);
    chain.extend(right);
    Ok(chain)
}

/// Breadth-first search for the shortest `⋆`-product of twisted idempotents
/// equal to `(0, α)`: a cross-check for [`factor_into_idempotents`] that is
/// only feasible for small `n`.
pub fn search_idempotent_factorization(
    alpha: &BrauerDiagram,
    max_length: usize,
) -> Option<Vec<BrauerDiagram>> {
    let n = alpha.degree();
    let pool: Vec<BrauerDiagram> = idempotents(n, true).collect();
    let mut parent: HashMap<BrauerDiagram, Option<(BrauerDiagram, usize)>> = HashMap::new();
    let mut frontier: BTreeSet<BrauerDiagram> = BTreeSet::new();
    for e in &pool {
        parent.insert(e.clone(), None);
        frontier.insert(e.clone());
    }
    let rebuild =
        |target: &BrauerDiagram,
         parent: &HashMap<BrauerDiagram, Option<(BrauerDiagram, usize)>>| {
            let mut chain = Vec::new();
            let mut cur = target.clone();
            while let Some(Some((prev, e))) = parent.get(&cur) {
                chain.push(pool[*e].clone());
                cur = prev.clone();
            }
            chain.push(cur);
            chain.reverse();
            chain
        };
    for _ in 1..max_length.max(1) {
        if parent.contains_key(alpha) {
            break;
        }
        let mut next = BTreeSet::new();
        for x in &frontier {
            for (idx, e) in pool.iter().enumerate() {
                let p = x.multiply_unchecked(e);
                if p.floating == 0 && !parent.contains_key(&p.diagram) {
                    parent.insert(p.diagram.clone(), Some((x.clone(), idx)));
                    next.insert(p.diagram);
                }
            }
        }
        frontier = next;
    }
    parent.contains_key(alpha).then(|| rebuild(alpha, &parent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_diagrams, bounded_closure, d_class};
    use crate::twisted::star_chain;

    #[test]
    fn gh_graph_small() {
        let g = build_gh_graph(4, 2).unwrap();
        assert_eq!((g.left().len(), g.right().len()), (6, 6));
        assert!(g.is_balanced() && g.is_connected() && g.strong_hall());
        let per_kernel = g.left_degrees();
        for (j, k) in g.left().iter().enumerate() {
            let count = idempotents(4, true)
                .filter(|e| e.rank() == 2 && e.ker() == *k)
                .count();
            assert_eq!(per_kernel[j], count);
        }
        assert!(g.regular_degree().unwrap() >= 2);
        assert!(build_gh_graph(4, 0).is_err());
        assert!(build_gh_graph(4, 4).is_err());
        assert!(build_gh_graph(2, 0).is_err());
    }

    #[test]
    fn strong_hall_synthetic() {
        // Path j0 - k0 - j1 - k1.
        let path = [(0, 0), (1, 0), (1, 1)];
        assert!(!strong_hall(2, 2, &path));
        assert_eq!(strong_hall_bruteforce(2, 2, &path), Some(false));
        let complete = [(0, 0), (0, 1), (1, 0), (1, 1)];
        assert!(strong_hall(2, 2, &complete));
        let star = [(0, 0), (1, 0)];
        assert!(!strong_hall(2, 1, &star));
        assert!(strong_hall(1, 1, &[(0, 0)]));
        // Unbalanced: every j reaches the spare right vertex 2.
        let spare = [(0, 0), (0, 1), (1, 1), (1, 2)];
        assert_eq!(
            strong_hall(2, 3, &spare),
            strong_hall_bruteforce(2, 3, &spare).unwrap()
        );
    }

    #[test]
    fn strong_hall_matches_bruteforce_on_small_graphs() {
        for left in 1..=4usize {
            for right in 1..=4usize {
                let slots: Vec<(usize, usize)> = (0..left)
                    .flat_map(|j| (0..right).map(move |k| (j, k)))
                    .collect();
                for mask in 0u32..(1 << slots.len()) {
                    let edges: Vec<_> = slots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    assert_eq!(
                        strong_hall(left, right, &edges),
                        strong_hall_bruteforce(left, right, &edges).unwrap(),
                        "{left}x{right} {edges:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn dot_output_names_vertices_by_signature() {
        let dot = build_gh_graph(3, 1).unwrap().to_dot();
        assert!(dot.starts_with("graph gh_n3_r1 {"));
        assert!(dot.contains("\"R:(1,2)\" -- \"L:(1,3)\";"));
        // {1,2} over {1',2'} closes a loop when squared.
        assert!(!dot.contains("\"R:(1,2)\" -- \"L:(1,2)\";"));
    }

    #[test]
    fn certificates() {
        for (n, r, rho) in [(3, 1, 3), (4, 2, 6), (5, 3, 10)] {
            assert_eq!(verify_rank_idrank(n, r).unwrap().certified_rank, Some(rho));
        }
    }

    #[test]
    fn idempotent_set_generates_its_ideal() {
        let set: Vec<TwistedElement> = idempotent_generating_set(4, 2)
            .unwrap()
            .into_iter()
            .map(TwistedElement::from)
            .collect();
        assert_eq!(set.len(), 6);
        let closure = bounded_closure(&set, 0).unwrap();
        for d in d_class(4, 2).chain(d_class(4, 0)) {
            assert!(closure.contains(&d.into()));
        }
    }

    #[test]
    fn singular_counts() {
        assert_eq!(singular_rank(3).unwrap(), 9);
        assert_eq!(singular_rank(4).unwrap(), 30);
        assert_eq!(singular_generating_set(4).unwrap().len(), 30);
        assert!(singular_rank(2).is_err());
        assert_eq!(idempotent_generated_rank(3).unwrap(), 4);
    }

    #[test]
    fn membership_in_idempotent_generated() {
        let zero = d_class(4, 0).next().unwrap();
        assert!(in_idempotent_generated(&TwistedElement::new(5, zero)).unwrap());
        assert!(
            !in_idempotent_generated(&TwistedElement::new(1, BrauerDiagram::identity(4))).unwrap()
        );
        assert!(in_idempotent_generated(&TwistedElement::identity(4)).unwrap());
    }

    #[test]
    fn transposition_words_compose() {
        for p in d_class(4, 4) {
            let images = p.as_permutation().unwrap();
            let mut acc = BrauerDiagram::identity(4);
            for (i, j) in transposition_word(&images) {
                acc = acc
                    .multiply(&BrauerDiagram::transposition(4, i, j).unwrap())
                    .unwrap()
                    .diagram;
            }
            assert_eq!(acc, p);
        }
    }

    #[test]
    fn factorization_pipeline() {
        for n in 3..=5 {
            for a in all_diagrams(n).filter(|a| !a.is_unit()) {
                let chain = factor_into_idempotents(&a).unwrap();
                assert!(chain.iter().all(is_twisted_idempotent));
                assert_eq!(
                    star_chain(&chain).unwrap(),
                    TwistedElement::from(a.clone()),
                    "{a}"
                );
            }
        }
        assert!(factor_into_idempotents(&BrauerDiagram::identity(3)).is_err());
        let e = regularity_witness(5, 1).unwrap();
        assert_eq!(factor_into_idempotents(&e).unwrap(), vec![e]);
    }

    #[test]
    fn search_finds_short_factorizations() {
        for a in all_diagrams(3).filter(|a| !a.is_unit()) {
            let chain = search_idempotent_factorization(&a, 6).expect("factorization exists");
            assert_eq!(star_chain(&chain).unwrap(), TwistedElement::from(a));
        }
        assert!(search_idempotent_factorization(
            &BrauerDiagram::transposition(3, 1, 2).unwrap(),
            4
        )
        .is_none());
    }
}
