//! Green's relations and pre-orders on `B_n` and the twisted monoid.
//!
//! Decisions use the kernel/cokernel/rank characterizations directly and
//! never enumerate. The factorization functions build explicit witnesses
//! that create no floating components.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{BrauerDiagram, KernelSignature, Vertex};
use crate::error::{Error, Result};
use crate::ideals::rho;
use crate::notation::{to_notation, DiagramNotation};
use crate::twisted::TwistedElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PreOrder {
    R,
    L,
    J,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    R,
    L,
    H,
    D,
    J,
}

impl FromStr for PreOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "R" => Ok(PreOrder::R),
            "L" => Ok(PreOrder::L),
            "J" => Ok(PreOrder::J),
            other => Err(Error::Parse(format!("unknown pre-order `{other}`"))),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "R" => Ok(Relation::R),
            "L" => Ok(Relation::L),
            "H" => Ok(Relation::H),
            "D" => Ok(Relation::D),
            "J" => Ok(Relation::J),
            other => Err(Error::Parse(format!("unknown relation `{other}`"))),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Relation::R => "R",
            Relation::L => "L",
            Relation::H => "H",
            Relation::D => "D",
            Relation::J => "J",
        };
        f.write_str(c)
    }
}

/// The admissible ranks `I(n) = {z, z+2, …, n}` with `z ≡ n (mod 2)`.
pub fn rank_index_set(degree: usize) -> Vec<usize> {
    (degree % 2..=degree).step_by(2).collect()
}

pub fn is_admissible_rank(degree: usize, rank: usize) -> bool {
    rank <= degree && rank % 2 == degree % 2
}

/// The D-class `{twist} × D_rank` of the twisted monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DClassId {
    pub rank: usize,
    pub twist: u64,
}

impl DClassId {
    pub fn new(degree: usize, rank: usize, twist: u64) -> Result<Self> {
        if !is_admissible_rank(degree, rank) {
            return Err(Error::InvalidRank { rank, degree });
        }
        Ok(DClassId { rank, twist })
    }

    pub fn of(x: &TwistedElement) -> Self {
        DClassId {
            rank: x.rank(),
            twist: x.twist,
        }
    }

    /// Partial order of D-classes: lower rank and higher twist is smaller.
    pub fn leq(&self, other: &DClassId) -> bool {
        self.rank <= other.rank && self.twist >= other.twist
    }
}

fn check_degrees(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<()> {
    if alpha.degree() != beta.degree() {
        return Err(Error::DegreeMismatch {
            left: alpha.degree(),
            right: beta.degree(),
        });
    }
    Ok(())
}

/// `α ≤_R β ⟺ ker(α) ⊇ ker(β)`.
pub fn leq_r(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<bool> {
    check_degrees(alpha, beta)?;
    Ok(alpha.ker().includes(&beta.ker()))
}

/// `α ≤_L β ⟺ coker(α) ⊇ coker(β)`.
pub fn leq_l(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<bool> {
    check_degrees(alpha, beta)?;
    Ok(alpha.coker().includes(&beta.coker()))
}

/// `α ≤_J β ⟺ rank(α) ≤ rank(β)`.
pub fn leq_j(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<bool> {
    check_degrees(alpha, beta)?;
    Ok(alpha.rank() <= beta.rank())
}

pub fn leq(relation: PreOrder, alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<bool> {
    match relation {
        PreOrder::R => leq_r(alpha, beta),
        PreOrder::L => leq_l(alpha, beta),
        PreOrder::J => leq_j(alpha, beta),
    }
}

fn partner_label(d: &BrauerDiagram, v: Vertex) -> usize {
    d.partner(v).expect("vertex in range").label()
}

/// A `δ` with `α = βδ` and `τ(β, δ) = 0`, given `ker(α) ⊇ ker(β)`.
///
/// With `α`'s upper hooks split into those not in `β` (`{a_m, b_m}`,
/// `m ≤ s`) and those shared with `β`, `δ` sends `β`'s codomain label of
/// each `i_k` to `j_k`, closes `β`'s images `{e_m, f_m}` of the unshared
/// hooks into upper hooks, and routes `β`'s lower hooks to `α`'s remaining
/// lower hooks through transversals.
pub fn factor_right(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<BrauerDiagram> {
    check_degrees(alpha, beta)?;
    let (ka, kb) = (alpha.ker(), beta.ker());
    if !ka.includes(&kb) {
        return Err(Error::Precondition(format!(
            "ker(α) = {ka} does not contain ker(β) = {kb}"
        )));
    }
    let n = alpha.degree();
    let a = to_notation(alpha);
    let unshared: Vec<(usize, usize)> = a
        .upper_hooks
        .iter()
        .copied()
        .filter(|&(x, y)| !kb.contains_pair(x, y))
        .collect();
    let s = unshared.len();
    let beta_lower = beta.coker();

    let mut transversals: Vec<(usize, usize)> = a
        .transversals
        .iter()
        .map(|&(i, j)| (partner_label(beta, Vertex::Top(i)), j))
        .collect();
    let mut upper_hooks = Vec::with_capacity(s + beta_lower.hooks().len());
    for &(x, y) in &unshared {
        upper_hooks.push((
            partner_label(beta, Vertex::Top(x)),
            partner_label(beta, Vertex::Top(y)),
        ));
    }
    let (alpha_near, alpha_far) = a.lower_hooks.split_at(s);
    for (&(e, f), &(c, d)) in beta_lower.hooks().iter().zip(alpha_far) {
        transversals.push((e, c));
        transversals.push((f, d));
    }
    let notation = DiagramNotation {
        degree: n,
        transversals,
        upper_hooks,
        lower_hooks: alpha_near.to_vec(),
    };
    notation.to_diagram()
}

/// A `γ` with `α = γβ` and `τ(γ, β) = 0`, given `coker(α) ⊇ coker(β)`.
pub fn factor_left(alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<BrauerDiagram> {
    check_degrees(alpha, beta)?;
    if !alpha.coker().includes(&beta.coker()) {
        return Err(Error::Precondition(format!(
            "coker(α) = {} does not contain coker(β) = {}",
            alpha.coker(),
            beta.coker()
        )));
    }
    factor_right(&alpha.star(), &beta.star()).map(|d| d.star())
}

/// `(γ, δ)` with `α = γβδ` and `τ(γ, β, δ) = 0`, given `rank(α) ≤ rank(β)`.
///
/// Builds `ε` with `ker(ε) ⊇ ker(β)` and `coker(ε) = coker(α)`, takes
/// `δ = factor_right(ε, β)`, and picks `γ ∈ S_n` with `α = γε`. Among the
/// valid units `γ` the one with lexicographically smallest image list
/// `γ(1), …, γ(n)` is returned.
pub fn factor_two_sided(
    alpha: &BrauerDiagram,
    beta: &BrauerDiagram,
) -> Result<(BrauerDiagram, BrauerDiagram)> {
    check_degrees(alpha, beta)?;
    let (r, q) = (alpha.rank(), beta.rank());
    if r > q {
        return Err(Error::Precondition(format!(
            "rank(α) = {r} exceeds rank(β) = {q}"
        )));
    }
    let n = alpha.degree();
    let a = to_notation(alpha);
    let dom = beta.dom();
    let (chosen, rest) = dom.split_at(r);
    let mut upper_hooks: Vec<(usize, usize)> = rest.chunks(2).map(|p| (p[0], p[1])).collect();
    upper_hooks.extend_from_slice(beta.ker().hooks());
    let transversals: Vec<(usize, usize)> = chosen
        .iter()
        .zip(&a.transversals)
        .map(|(&l, &(_, j))| (l, j))
        .collect();
    let epsilon = DiagramNotation {
        degree: n,
        transversals: transversals.clone(),
        upper_hooks,
        lower_hooks: a.lower_hooks.clone(),
    }
    .to_diagram()?;
    let delta = factor_right(&epsilon, beta)?;

    // γ(i_k) = l_k is forced; each hook of α goes to a hook of ε, greedily
    // choosing the smallest unused point.
    let mut image = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    for (&(i, _), &(l, _)) in a.transversals.iter().zip(&transversals) {
        image[i] = l;
        used[l] = true;
    }
    let eps_ker = epsilon.ker();
    for x in 1..=n {
        if image[x] != 0 {
            continue;
        }
        let y = partner_label(alpha, Vertex::Top(x));
        let u = (1..=n)
            .find(|&u| !used[u])
            .expect("ε has as many hook points as α");
        let v = partner_label(&epsilon, Vertex::Top(u));
        debug_assert!(eps_ker.contains_pair(u, v));
        image[x] = u;
        image[y] = v;
        used[u] = true;
        used[v] = true;
    }
    let gamma = BrauerDiagram::permutation(n, &image[1..])?;
    Ok((gamma, delta))
}

/// `(i, α) ≤ (j, β)` in the twisted monoid: `i ≥ j` and `α ≤ β`.
pub fn twisted_leq(relation: PreOrder, x: &TwistedElement, y: &TwistedElement) -> Result<bool> {
    Ok(x.twist >= y.twist && leq(relation, &x.diagram, &y.diagram)?)
}

/// Green's relation on `B_n`.
pub fn related(relation: Relation, alpha: &BrauerDiagram, beta: &BrauerDiagram) -> Result<bool> {
    check_degrees(alpha, beta)?;
    Ok(match relation {
        Relation::R => alpha.ker() == beta.ker(),
        Relation::L => alpha.coker() == beta.coker(),
        Relation::H => alpha.ker() == beta.ker() && alpha.coker() == beta.coker(),
        Relation::D | Relation::J => alpha.rank() == beta.rank(),
    })
}

/// Green's relation on the twisted monoid: equal twists and related diagrams.
pub fn same_class(relation: Relation, x: &TwistedElement, y: &TwistedElement) -> Result<bool> {
    Ok(x.twist == y.twist && related(relation, &x.diagram, &y.diagram)?)
}

/// A Green's class `{i} × K_α` of the twisted monoid, described by its
/// invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenClass {
    pub relation: Relation,
    pub degree: usize,
    pub twist: u64,
    pub rank: usize,
    pub kernel: Option<KernelSignature>,
    pub cokernel: Option<KernelSignature>,
}

impl GreenClass {
    pub fn contains(&self, x: &TwistedElement) -> bool {
        x.degree() == self.degree
            && x.twist == self.twist
            && x.rank() == self.rank
            && self.kernel.as_ref().is_none_or(|k| *k == x.diagram.ker())
            && self
                .cokernel
                .as_ref()
                .is_none_or(|k| *k == x.diagram.coker())
    }

    /// Number of elements: `r!` per H-class, `ρ_nr` R-classes per D-class.
    pub fn size(&self) -> Result<u128> {
        let h: u128 = (1..=self.rank as u128).product();
        let rho = rho(self.degree, self.rank)?;
        let size = match self.relation {
            Relation::H => Some(h),
            Relation::R | Relation::L => rho.checked_mul(h),
            Relation::D | Relation::J => rho.checked_mul(rho).and_then(|x| x.checked_mul(h)),
        };
        size.ok_or(Error::Overflow)
    }

    /// All members, by enumeration of `B_n`.
    pub fn elements(&self) -> Vec<TwistedElement> {
        crate::enumerate::d_class(self.degree, self.rank)
            .map(|d| TwistedElement::new(self.twist, d))
            .filter(|x| self.contains(x))
            .collect()
    }
}

impl fmt::Display for GreenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-class: twist={} rank={}",
            self.relation, self.twist, self.rank
        )?;
        if let Some(k) = &self.kernel {
            write!(f, " ker={k}")?;
        }
        if let Some(k) = &self.cokernel {
            write!(f, " coker={k}")?;
        }
        Ok(())
    }
}

pub fn green_class(relation: Relation, x: &TwistedElement) -> GreenClass {
    let (kernel, cokernel) = match relation {
        Relation::R => (Some(x.diagram.ker()), None),
        Relation::L => (None, Some(x.diagram.coker())),
        Relation::H => (Some(x.diagram.ker()), Some(x.diagram.coker())),
        Relation::D | Relation::J => (None, None),
    };
    GreenClass {
        relation,
        degree: x.degree(),
        twist: x.twist,
        rank: x.rank(),
        kernel,
        cokernel,
    }
}

/// Regular elements of the twisted monoid are exactly `(0, α)` with
/// `rank(α) > 0`.
pub fn is_regular(x: &TwistedElement) -> bool {
    x.twist == 0 && x.rank() > 0
}

/// The canonical idempotent of `D_{r;0}` for `r > 0`: transversals `{i, i'}`
/// for `i < r` and `{r, n'}`, upper hooks `{r+1, r+2}, …, {n−1, n}`, lower
/// hooks `{r', (r+1)'}, …, {(n−2)', (n−1)'}`. Its square is a single chain
/// through the middle row, so no floating component appears.
pub fn regularity_witness(degree: usize, rank: usize) -> Result<BrauerDiagram> {
    if !is_admissible_rank(degree, rank) || rank == 0 {
        return Err(Error::InvalidRank { rank, degree });
    }
    let n = degree;
    let mut transversals: Vec<(usize, usize)> = (1..rank).map(|i| (i, i)).collect();
    transversals.push((rank, n));
    let upper_hooks = (rank + 1..n).step_by(2).map(|a| (a, a + 1)).collect();
    let lower_hooks = (rank..n - 1).step_by(2).map(|c| (c, c + 1)).collect();
    DiagramNotation {
        degree: n,
        transversals,
        upper_hooks,
        lower_hooks,
    }
    .to_diagram()
}
