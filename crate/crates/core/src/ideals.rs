//! Ideals of the twisted monoid, counting formulas, generating sets and the
//! constructive lemmas that build them.
//!
//! Ideals are infinite in the twist direction and are kept symbolic as
//! unions of principal ideals `I_{r;k} = {(i, α) : rank(α) ≤ r, i ≥ k}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::green::{is_admissible_rank, rank_index_set, DClassId};
use crate::notation::{to_notation, DiagramNotation};
use crate::twisted::TwistedElement;

fn check_rank(degree: usize, rank: usize) -> Result<()> {
    if is_admissible_rank(degree, rank) {
        Ok(())
    } else {
        Err(Error::InvalidRank { rank, degree })
    }
}

fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .ok_or(Error::Overflow)
}

fn binomial(n: usize, k: usize) -> Result<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n−i) is divisible by i+1 after the multiplication.
        acc = acc.checked_mul((n - i) as u128).ok_or(Error::Overflow)? / (i as u128 + 1);
    }
    Ok(acc)
}

/// Number of R-classes (equivalently L-classes) in `D_r`:
/// `C(n, r)·(n − r − 1)!!`.
pub fn rho(degree: usize, rank: usize) -> Result<u128> {
    check_rank(degree, rank)?;
    let mut hooks: u128 = 1;
    let mut k = degree - rank;
    while k > 1 {
        hooks = hooks.checked_mul(k as u128 - 1).ok_or(Error::Overflow)?;
        k -= 2;
    }
    binomial(degree, rank)?
        .checked_mul(hooks)
        .ok_or(Error::Overflow)
}

/// `|D_r| = ρ_nr²·r!`.
pub fn delta(degree: usize, rank: usize) -> Result<u128> {
    let r = rho(degree, rank)?;
    r.checked_mul(r)
        .and_then(|x| x.checked_mul(factorial(rank).ok()?))
        .ok_or(Error::Overflow)
}

/// One principal ideal `I_{rank;twist}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, u64)", into = "(usize, u64)")]
pub struct IdealTerm {
    pub rank: usize,
    pub twist: u64,
}

impl From<(usize, u64)> for IdealTerm {
    fn from((rank, twist): (usize, u64)) -> Self {
        IdealTerm { rank, twist }
    }
}

impl From<IdealTerm> for (usize, u64) {
    fn from(t: IdealTerm) -> Self {
        (t.rank, t.twist)
    }
}

impl IdealTerm {
    pub fn contains(&self, x: &TwistedElement) -> bool {
        x.rank() <= self.rank && x.twist >= self.twist
    }

    /// `I_{self} ⊆ I_{other}`.
    pub fn within(&self, other: &IdealTerm) -> bool {
        self.rank <= other.rank && self.twist >= other.twist
    }
}

/// A union of principal ideals in canonical antichain form: ranks strictly
/// decreasing and twists strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct IdealSpec {
    degree: usize,
    terms: Vec<IdealTerm>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    terms: Vec<IdealTerm>,
}

impl TryFrom<IdealJson> for IdealSpec {
    type Error = Error;

    fn try_from(raw: IdealJson) -> Result<Self> {
        IdealSpec::new(raw.n, raw.terms)
    }
}

impl From<IdealSpec> for IdealJson {
    fn from(spec: IdealSpec) -> Self {
        IdealJson {
            n: spec.degree,
            terms: spec.terms,
        }
    }
}

impl IdealSpec {
    /// Normalizes an arbitrary union: drops terms contained in another term
    /// and sorts the survivors.
    pub fn new(degree: usize, terms: impl IntoIterator<Item = IdealTerm>) -> Result<Self> {
        let mut terms: Vec<IdealTerm> = terms.into_iter().collect();
        for t in &terms {
            check_rank(degree, t.rank)?;
        }
        terms.sort_unstable_by(|a, b| b.rank.cmp(&a.rank).then(a.twist.cmp(&b.twist)));
        terms.dedup();
        let mut kept: Vec<IdealTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            // Earlier terms have rank ≥ t.rank, so t survives only with a
            // strictly smaller twist than every kept term.
            if kept.iter().all(|k| !t.within(k)) {
                kept.push(t);
            }
        }
        Ok(IdealSpec {
            degree,
            terms: kept,
        })
    }

    pub fn principal(degree: usize, rank: usize, twist: u64) -> Result<Self> {
        IdealSpec::new(degree, [IdealTerm { rank, twist }])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[IdealTerm] {
        &self.terms
    }

    pub fn is_principal(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn contains(&self, x: &TwistedElement) -> bool {
        x.degree() == self.degree && self.terms.iter().any(|t| t.contains(x))
    }

    pub fn is_subset(&self, other: &IdealSpec) -> bool {
        self.degree == other.degree
            && self
                .terms
                .iter()
                .all(|t| other.terms.iter().any(|u| t.within(u)))
    }

    pub fn union(&self, other: &IdealSpec) -> Result<IdealSpec> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        IdealSpec::new(self.degree, self.terms.iter().chain(&other.terms).copied())
    }

    /// Parses `I(5;4) + I(3;2)`; the empty ideal is written `0`.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return IdealSpec::new(degree, []);
        }
        let terms = text
            .split('+')
            .map(|part| {
                let part = part.trim();
                let inner = part
                    .strip_prefix("I(")
                    .and_then(|p| p.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected `I(r;k)`, got `{part}`")))?;
                let (r, k) = inner
                    .split_once(';')
                    .ok_or_else(|| Error::Parse(format!("expected `;` in `{part}`")))?;
                let rank = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rank `{r}`")))?;
                let twist = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad twist `{k}`")))?;
                Ok(IdealTerm { rank, twist })
            })
            .collect::<Result<Vec<_>>>()?;
        IdealSpec::new(degree, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "I({};{})", t.rank, t.twist)?;
        }
        Ok(())
    }
}

fn build(
    degree: usize,
    transversals: Vec<(usize, usize)>,
    upper_hooks: Vec<(usize, usize)>,
    lower_hooks: Vec<(usize, usize)>,
) -> BrauerDiagram {
    DiagramNotation {
        degree,
        transversals,
        upper_hooks,
        lower_hooks,
    }
    .to_diagram()
    .expect("construction covers every vertex exactly once")
}

/// `(β, γ)` of rank `r + 2` with `βγ = α` and `τ(β, γ) = 0`, for
/// `rank(α) = r ≤ n − 4`.
///
/// `β` turns the first upper hook `{a_1, b_1}` and first lower hook
/// `{c_1, d_1}` of `α` into transversals `a_1 → c_1`, `b_1 → d_1`; `γ`
/// closes `{c_1, d_1}` again and threads the remaining lower hooks into a
/// single path from `c_2` to `d_s`.
pub fn lemma_rank_drop(alpha: &BrauerDiagram) -> Result<(BrauerDiagram, BrauerDiagram)> {
    let n = alpha.degree();
    let a = to_notation(alpha);
    let s = a.hook_count();
    if s < 2 {
        return Err(Error::Precondition(format!(
            "rank {} exceeds n − 4 = {}",
            a.rank(),
            n as i64 - 4
        )));
    }
    let (c, d): (Vec<usize>, Vec<usize>) = a.lower_hooks.iter().copied().unzip();
    let (a1, b1) = a.upper_hooks[0];

    let mut bt = a.transversals.clone();
    bt.push((a1, c[0]));
    bt.push((b1, d[0]));
    let beta = build(
        n,
        bt,
        a.upper_hooks[1..].to_vec(),
        a.lower_hooks[1..].to_vec(),
    );

    let mut gt: Vec<(usize, usize)> = a.transversals.iter().map(|&(_, j)| (j, j)).collect();
    gt.push((c[1], c[1]));
    gt.push((d[s - 1], d[1]));
    let mut gu = vec![(c[0], d[0])];
    gu.extend((1..s - 1).map(|m| (d[m], c[m + 1])));
    let mut gl = vec![(c[0], d[0])];
    gl.extend_from_slice(&a.lower_hooks[2..]);
    let gamma = build(n, gt, gu, gl);
    Ok((beta, gamma))
}

fn require_singular(alpha: &BrauerDiagram) -> Result<()> {
    if alpha.is_unit() {
        Err(Error::Precondition("α is a unit".into()))
    } else {
        Ok(())
    }
}

/// `β` with `rank(β) = rank(α)`, `αβ = α` and `τ(α, β) = 1`, for `α ∉ S_n`.
///
/// `β` fixes the codomain of `α`, copies its lower hooks, and closes them
/// into one cycle with upper hooks `{c_1, d_s}` and `{d_m, c_{m+1}}`.
pub fn lemma_twist_raise(alpha: &BrauerDiagram) -> Result<BrauerDiagram> {
    require_singular(alpha)?;
    let n = alpha.degree();
    let a = to_notation(alpha);
    let s = a.hook_count();
    let (c, d): (Vec<usize>, Vec<usize>) = a.lower_hooks.iter().copied().unzip();
    let transversals = a.transversals.iter().map(|&(_, j)| (j, j)).collect();
    let mut upper = vec![(c[0], d[s - 1])];
    upper.extend((0..s - 1).map(|m| (d[m], c[m + 1])));
    Ok(build(n, transversals, upper, a.lower_hooks.clone()))
}

/// `β` with `αβ = α` and `τ(α, β) = 0`, for `α ∉ S_n`. `β ∈ D_α` when
/// `rank(α) > 0` and `β ∈ D_2` otherwise.
///
/// The path `j_r → c_1 → d_1 → ⋯ → d_s` through `α`'s lower hooks ends in
/// the transversal `{d_s, j_r'}`; for rank 0 the path runs from `c_1` to
/// `d_s` instead and `β` has transversals `c_1 → c_1'` and `d_s → d_1'`.
pub fn lemma_twist_keep(alpha: &BrauerDiagram) -> Result<BrauerDiagram> {
    require_singular(alpha)?;
    let n = alpha.degree();
    let a = to_notation(alpha);
    let s = a.hook_count();
    let r = a.rank();
    let (c, d): (Vec<usize>, Vec<usize>) = a.lower_hooks.iter().copied().unzip();
    let chain = (0..s - 1).map(|m| (d[m], c[m + 1]));
    if r > 0 {
        let j: Vec<usize> = a.transversals.iter().map(|&(_, j)| j).collect();
        let mut transversals: Vec<_> = j[..r - 1].iter().map(|&x| (x, x)).collect();
        transversals.push((d[s - 1], j[r - 1]));
        let mut upper = vec![(j[r - 1], c[0])];
        upper.extend(chain);
        Ok(build(n, transversals, upper, a.lower_hooks.clone()))
    } else {
        let transversals = vec![(c[0], c[0]), (d[s - 1], d[0])];
        Ok(build(
            n,
            transversals,
            chain.collect(),
            a.lower_hooks[1..].to_vec(),
        ))
    }
}

/// How a transposition `σ_ij` acts on the right of `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaCase {
    /// Both `i` and `j` lie in `codom(α)`.
    BothInCodomain,
    /// Exactly one of `i, j` lies in `codom(α)`.
    OneInCodomain,
    /// `i` and `j` lie in different lower hooks.
    DistinctHooks,
    /// `{i, j}` is a lower hook, so `ασ_ij = α`.
    SameHook,
}

pub fn sigma_case(alpha: &BrauerDiagram, i: usize, j: usize) -> SigmaCase {
    let codom = alpha.codom();
    match (codom.contains(&i), codom.contains(&j)) {
        (true, true) => SigmaCase::BothInCodomain,
        (true, false) | (false, true) => SigmaCase::OneInCodomain,
        (false, false) if alpha.coker().contains_pair(i, j) => SigmaCase::SameHook,
        (false, false) => SigmaCase::DistinctHooks,
    }
}

/// Twisted idempotents `β_1, …` of rank `rank(α)` with
/// `α ⋆ β_1 ⋆ ⋯ = (0, ασ_ij)`, for `0 < rank(α) < n` and `i ≠ j`.
///
/// The constructions address `α`'s codomain and lower hooks by position;
/// each case first relabels (reorders the transversal and hook lists of the
/// canonical notation and orients one hook) so that `i, j` land on the
/// positions the construction acts on. The relabelling used is:
///
/// * both in the codomain: `(j_{r−1}, j_r) = (i, j)`;
/// * one in the codomain: `j_r` is that one, `c_1` the other;
/// * distinct lower hooks: `d_1 = i`, `c_2 = j`;
/// * the same lower hook: nothing to do, the list is empty.
pub fn idempotent_factor_sigma(
    alpha: &BrauerDiagram,
    i: usize,
    j: usize,
) -> Result<Vec<BrauerDiagram>> {
    let n = alpha.degree();
    let r = alpha.rank();
    if r == 0 || r == n {
        return Err(Error::Precondition(format!(
            "rank {r} is not strictly between 0 and {n}"
        )));
    }
    for index in [i, j] {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, degree: n });
        }
    }
    if i == j {
        return Err(Error::Precondition("i and j must differ".into()));
    }
    let a = to_notation(alpha);
    let mut jj: Vec<usize> = a.transversals.iter().map(|&(_, y)| y).collect();
    let mut hooks = a.lower_hooks.clone();
    let s = hooks.len();

    // Moves the hook containing `point` to position `at`, oriented with
    // `point` first (`first = true`) or second.
    let place = |hooks: &mut Vec<(usize, usize)>, point: usize, at: usize, first: bool| {
        let pos = hooks
            .iter()
            .position(|&(x, y)| x == point || y == point)
            .expect("point in a hook");
        let (x, y) = hooks.remove(pos);
        let other = if x == point { y } else { x };
        hooks.insert(
            at,
            if first {
                (point, other)
            } else {
                (other, point)
            },
        );
    };
    let lower_of = |c: &[usize], d: &[usize]| -> Vec<(usize, usize)> {
        c.iter().copied().zip(d.iter().copied()).collect()
    };
    let chain = |c: &[usize], d: &[usize]| -> Vec<(usize, usize)> {
        (0..s - 1).map(|m| (d[m], c[m + 1])).collect()
    };
    let identity_on =
        |js: &[usize]| -> Vec<(usize, usize)> { js.iter().map(|&x| (x, x)).collect() };

    match sigma_case(alpha, i, j) {
        SigmaCase::SameHook => Ok(Vec::new()),
        SigmaCase::BothInCodomain => {
            jj.retain(|&x| x != i && x != j);
            jj.push(i);
            jj.push(j);
            let (c, d): (Vec<usize>, Vec<usize>) = hooks.iter().copied().unzip();
            let (jr1, jr) = (jj[r - 2], jj[r - 1]);

            let mut t1 = identity_on(&jj[..r - 2]);
            t1.push((jr1, jr));
            t1.push((d[s - 1], d[s - 1]));
            let mut u1 = vec![(jr, c[0])];
            u1.extend(chain(&c, &d));
            let mut l1 = lower_of(&c[..s - 1], &d[..s - 1]);
            l1.push((jr1, c[s - 1]));
            let beta1 = build(n, t1, u1, l1);

            let mut t2 = identity_on(&jj[..r - 2]);
            t2.push((jr, jr));
            t2.push((c[0], jr1));
            let mut u2 = vec![(jr1, d[s - 1])];
            u2.extend(chain(&c, &d));
            let beta2 = build(n, t2, u2, lower_of(&c, &d));
            Ok(vec![beta1, beta2])
        }
        SigmaCase::OneInCodomain => {
            let (inside, outside) = if jj.contains(&i) { (i, j) } else { (j, i) };
            jj.retain(|&x| x != inside);
            jj.push(inside);
            place(&mut hooks, outside, 0, true);
            let (c, d): (Vec<usize>, Vec<usize>) = hooks.iter().copied().unzip();
            let jr = jj[r - 1];
            let mut t = identity_on(&jj[..r - 1]);
            t.push((d[s - 1], c[0]));
            let mut u = vec![(jr, c[0])];
            u.extend(chain(&c, &d));
            let mut l = vec![(jr, d[0])];
            l.extend_from_slice(&hooks[1..]);
            Ok(vec![build(n, t, u, l)])
        }
        SigmaCase::DistinctHooks => {
            place(&mut hooks, i, 0, false);
            place(&mut hooks, j, 1, true);
            let (c, d): (Vec<usize>, Vec<usize>) = hooks.iter().copied().unzip();
            let jr = jj[r - 1];
            let mut t = identity_on(&jj[..r - 1]);
            t.push((d[s - 1], jr));
            let mut u = vec![(jr, c[0])];
            u.extend(chain(&c, &d));
            let mut l = vec![(c[0], c[1]), (d[0], d[1])];
            l.extend_from_slice(&hooks[2..]);
            Ok(vec![build(n, t, u, l)])
        }
    }
}

/// Twisted idempotents `β_1, …` with `β_1 ⋆ ⋯ ⋆ α = (0, σ_ij α)`; the dual
/// of [`idempotent_factor_sigma`].
pub fn idempotent_factor_sigma_left(
    alpha: &BrauerDiagram,
    i: usize,
    j: usize,
) -> Result<Vec<BrauerDiagram>> {
    let mut chain = idempotent_factor_sigma(&alpha.star(), i, j)?;
    chain.reverse();
    Ok(chain.into_iter().map(|b| b.star()).collect())
}

/// A minimal generating set of a principal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratingSet {
    /// Explicit elements (the whole monoid, or an idempotent-generated ideal).
    Explicit(Vec<TwistedElement>),
    /// The union of the listed D-classes, materialized on demand.
    DClasses {
        degree: usize,
        classes: Vec<DClassId>,
    },
}

impl GeneratingSet {
    pub fn size(&self) -> Result<u128> {
        match self {
            GeneratingSet::Explicit(v) => Ok(v.len() as u128),
            GeneratingSet::DClasses { degree, classes } => {
                classes.iter().try_fold(0u128, |acc, c| {
                    acc.checked_add(delta(*degree, c.rank)?)
                        .ok_or(Error::Overflow)
                })
            }
        }
    }

    pub fn contains(&self, x: &TwistedElement) -> bool {
        match self {
            GeneratingSet::Explicit(v) => v.contains(x),
            GeneratingSet::DClasses { degree, classes } => {
                x.degree() == *degree && classes.contains(&DClassId::of(x))
            }
        }
    }

    pub fn materialize(&self) -> Vec<TwistedElement> {
        match self {
            GeneratingSet::Explicit(v) => v.clone(),
            GeneratingSet::DClasses { degree, classes } => classes
                .iter()
                .flat_map(|c| {
                    crate::enumerate::d_class(*degree, c.rank)
                        .map(move |d| TwistedElement::new(c.twist, d))
                })
                .collect(),
        }
    }
}

/// `{σ, ζ, e, (1, id)}` with `⟨σ, ζ⟩ = S_n`: the transposition `(1 2)`, the
/// cycle `(1 2 ⋯ n)` and the rank `n − 2` diagram `e` joining `{1, 2}` and
/// `{1', 2'}`.
pub fn monoid_generators(degree: usize) -> Result<Vec<TwistedElement>> {
    let n = degree;
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} is below 3")));
    }
    let swap = BrauerDiagram::transposition(n, 1, 2)?;
    let cycle: Vec<usize> = (1..=n).map(|k| k % n + 1).collect();
    let cycle = BrauerDiagram::permutation(n, &cycle)?;
    let hook = build(
        n,
        (3..=n).map(|k| (k, k)).collect(),
        vec![(1, 2)],
        vec![(1, 2)],
    );
    Ok(vec![
        swap.into(),
        cycle.into(),
        hook.into(),
        TwistedElement::new(1, BrauerDiagram::identity(n)),
    ])
}

fn principal_term(ideal: &IdealSpec) -> Result<IdealTerm> {
    match ideal.terms() {
        [t] => Ok(*t),
        _ => Err(Error::Precondition(format!("{ideal} is not principal"))),
    }
}

/// The minimal generating set of a principal ideal `I_{r;k}` (`n ≥ 3`).
///
/// * `I_{n;0}`: four generators.
/// * `I_{r;0}`, `0 < r < n`: `ρ_nr` twisted idempotents of `D_r`.
/// * `I_{0;k}`: the D-classes `D_{0;l}` for `k ≤ l ≤ 2k`.
/// * `I_{r;k}`, `r, k > 0`: the D-classes `D_{q;l}` for `q ≤ r`, `k ≤ l < 2k`.
pub fn generating_set(ideal: &IdealSpec) -> Result<GeneratingSet> {
    let n = ideal.degree();
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} is below 3")));
    }
    let IdealTerm { rank: r, twist: k } = principal_term(ideal)?;
    if k == 0 && r == n {
        return Ok(GeneratingSet::Explicit(monoid_generators(n)?));
    }
    if k == 0 && r > 0 {
        let set = crate::structure::idempotent_generating_set(n, r)?;
        return Ok(GeneratingSet::Explicit(
            set.into_iter().map(TwistedElement::from).collect(),
        ));
    }
    let upper = k.checked_mul(2).ok_or(Error::TwistOverflow)?;
    let classes = if r == 0 {
        (k..=upper)
            .map(|l| DClassId { rank: 0, twist: l })
            .collect()
    } else {
        (k..upper)
            .flat_map(|l| {
                rank_index_set(r)
                    .into_iter()
                    .map(move |q| DClassId { rank: q, twist: l })
            })
            .collect()
    };
    Ok(GeneratingSet::DClasses { degree: n, classes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealRank {
    pub rank: u128,
    pub idempotent_generated: bool,
    /// Equal to `rank` when the ideal is idempotent-generated.
    pub idrank: Option<u128>,
}

/// `rank(I_{r;k})` for `n ≥ 3`.
pub fn rank_of_ideal(degree: usize, rank: usize, twist: u64) -> Result<IdealRank> {
    let n = degree;
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} is below 3")));
    }
    check_rank(n, rank)?;
    let k = twist as u128;
    let value = if rank == n && twist == 0 {
        4
    } else if rank > 0 && twist == 0 {
        rho(n, rank)?
    } else if rank == 0 {
        (k + 1).checked_mul(delta(n, 0)?).ok_or(Error::Overflow)?
    } else {
        let sum = rank_index_set(rank).into_iter().try_fold(0u128, |acc, q| {
            acc.checked_add(delta(n, q)?).ok_or(Error::Overflow)
        })?;
        k.checked_mul(sum).ok_or(Error::Overflow)?
    };
    let idempotent_generated = rank > 0 && rank < n && twist == 0;
    Ok(IdealRank {
        rank: value,
        idempotent_generated,
        idrank: idempotent_generated.then_some(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_diagrams, count_diagrams, d_class};
    use crate::twisted::{is_twisted_idempotent, star_chain};

    #[test]
    fn counting_formulas() {
        assert_eq!(rho(4, 2).unwrap(), 6);
        assert_eq!(delta(4, 2).unwrap(), 72);
        assert_eq!(delta(4, 4).unwrap(), 24);
        assert_eq!(delta(4, 0).unwrap(), 9);
        assert_eq!(rho(3, 1).unwrap(), 3);
        assert_eq!(rho(5, 3).unwrap(), 10);
        assert!(rho(4, 3).is_err());
        for n in 0..=8 {
            assert_eq!(rho(n, n).unwrap(), 1);
            assert_eq!(delta(n, n).unwrap(), factorial(n).unwrap());
            let total: u128 = rank_index_set(n)
                .into_iter()
                .map(|r| delta(n, r).unwrap())
                .sum();
            assert_eq!(total, count_diagrams(n));
        }
    }

    #[test]
    fn normalization() {
        let t = |rank, twist| IdealTerm { rank, twist };
        let kept = IdealSpec::new(7, [t(3, 2), t(5, 4)]).unwrap();
        assert_eq!(kept.terms(), &[t(5, 4), t(3, 2)]);
        let nested = IdealSpec::new(7, [t(5, 2), t(3, 4)]).unwrap();
        assert_eq!(nested.terms(), &[t(5, 2)]);
        let dropped = IdealSpec::new(7, [t(5, 2), t(3, 3)]).unwrap();
        assert_eq!(dropped.terms(), &[t(5, 2)]);
        assert!(IdealSpec::new(7, [t(4, 0)]).is_err());
        let dup = IdealSpec::new(7, [t(5, 2), t(5, 2), t(5, 3), t(7, 9)]).unwrap();
        assert_eq!(dup.terms(), &[t(7, 9), t(5, 2)]);
    }

    #[test]
    fn text_and_json() {
        let spec = IdealSpec::parse(7, "I(3;2) + I(5;4)").unwrap();
        assert_eq!(spec.to_string(), "I(5;4) + I(3;2)");
        assert_eq!(spec.to_json(), r#"{"n":7,"terms":[[5,4],[3,2]]}"#);
        assert_eq!(IdealSpec::from_json(&spec.to_json()).unwrap(), spec);
        assert!(IdealSpec::from_json(r#"{"n":7,"terms":[[4,2]]}"#).is_err());
        assert_eq!(IdealSpec::parse(3, "0").unwrap().to_string(), "0");
        assert!(IdealSpec::parse(3, "J(1;2)").is_err());
    }

    #[test]
    fn membership_and_subset() {
        let spec = IdealSpec::principal(7, 5, 2).unwrap();
        let x = TwistedElement::new(2, d_class(7, 5).next().unwrap());
        assert!(spec.contains(&x));
        assert!(!spec.contains(&TwistedElement::new(1, x.diagram.clone())));
        assert!(!spec.contains(&TwistedElement::identity(7)));
        assert!(IdealSpec::principal(7, 7, 0)
            .unwrap()
            .contains(&TwistedElement::identity(7)));
        assert!(spec.is_subset(&spec));
        let bigger = IdealSpec::parse(7, "I(5;1) + I(1;0)").unwrap();
        assert!(spec.is_subset(&bigger));
        assert!(!bigger.is_subset(&spec));
    }

    #[test]
    fn rank_drop_on_small_degrees() {
        for a in d_class(4, 0) {
            let (b, g) = lemma_rank_drop(&a).unwrap();
            assert_eq!((b.rank(), g.rank()), (2, 2));
            let p = b.multiply(&g).unwrap();
            assert_eq!((p.diagram, p.floating), (a.clone(), 0));
        }
        assert!(lemma_rank_drop(&BrauerDiagram::identity(4)).is_err());
        assert!(lemma_rank_drop(&d_class(4, 2).next().unwrap()).is_err());
        let a = crate::diagram::tests::example_b6();
        let (b, g) = lemma_rank_drop(&a).unwrap();
        assert_eq!(star_chain([&b, &g]).unwrap(), TwistedElement::from(a));
    }

    #[test]
    fn twist_lemmas() {
        for a in all_diagrams(5).filter(|a| !a.is_unit()) {
            let b = lemma_twist_raise(&a).unwrap();
            assert_eq!(b.rank(), a.rank());
            let p = a.multiply(&b).unwrap();
            assert_eq!((p.diagram, p.floating), (a.clone(), 1));
            let b = lemma_twist_keep(&a).unwrap();
            assert_eq!(b.rank(), if a.rank() > 0 { a.rank() } else { 2 });
            let p = a.multiply(&b).unwrap();
            assert_eq!((p.diagram, p.floating), (a.clone(), 0));
        }
        assert!(lemma_twist_raise(&BrauerDiagram::identity(3)).is_err());
        assert!(lemma_twist_keep(&BrauerDiagram::identity(3)).is_err());
    }

    #[test]
    fn sigma_cases_on_degree_six() {
        let n = 6;
        for a in d_class(n, 2).step_by(11) {
            for i in 1..=n {
                for j in i + 1..=n {
                    let chain = idempotent_factor_sigma(&a, i, j).unwrap();
                    let case = sigma_case(&a, i, j);
                    let expected_len = match case {
                        SigmaCase::SameHook => 0,
                        SigmaCase::BothInCodomain => 2,
                        _ => 1,
                    };
                    assert_eq!(chain.len(), expected_len);
                    let sigma = BrauerDiagram::transposition(n, i, j).unwrap();
                    let target = a.multiply(&sigma).unwrap().diagram;
                    let all: Vec<&BrauerDiagram> = std::iter::once(&a).chain(&chain).collect();
                    assert_eq!(star_chain(all).unwrap(), TwistedElement::from(target));
                    for b in &chain {
                        assert!(is_twisted_idempotent(b));
                        assert_eq!(b.rank(), 2);
                    }
                    let left = idempotent_factor_sigma_left(&a, i, j).unwrap();
                    let target = sigma.multiply(&a).unwrap().diagram;
                    let all: Vec<&BrauerDiagram> = left.iter().chain(std::iter::once(&a)).collect();
                    assert_eq!(star_chain(all).unwrap(), TwistedElement::from(target));
                }
            }
        }
        let id = BrauerDiagram::identity(4);
        assert!(idempotent_factor_sigma(&id, 1, 2).is_err());
        let a = d_class(4, 2).next().unwrap();
        assert!(idempotent_factor_sigma(&a, 0, 2).is_err());
        assert!(idempotent_factor_sigma(&a, 2, 2).is_err());
    }

    #[test]
    fn rank_table_values() {
        assert_eq!(rank_of_ideal(3, 3, 0).unwrap().rank, 4);
        let r = rank_of_ideal(3, 1, 0).unwrap();
        assert_eq!(
            (r.rank, r.idempotent_generated, r.idrank),
            (3, true, Some(3))
        );
        assert_eq!(rank_of_ideal(4, 2, 1).unwrap().rank, 81);
        assert_eq!(rank_of_ideal(4, 0, 2).unwrap().rank, 27);
        assert!(!rank_of_ideal(4, 0, 0).unwrap().idempotent_generated);
        assert!(rank_of_ideal(2, 0, 0).is_err());
        assert!(rank_of_ideal(4, 1, 0).is_err());
    }

    #[test]
    fn generating_set_shapes() {
        let m = generating_set(&IdealSpec::principal(7, 5, 2).unwrap()).unwrap();
        let GeneratingSet::DClasses { classes, .. } = &m else {
            panic!("expected D-classes")
        };
        let mut expected = Vec::new();
        for l in 2..4 {
            for q in [1, 3, 5] {
                expected.push(DClassId { rank: q, twist: l });
            }
        }
        assert_eq!(classes, &expected);

        let m = generating_set(&IdealSpec::principal(4, 2, 1).unwrap()).unwrap();
        assert_eq!(m.size().unwrap(), 81);
        assert_eq!(m.materialize().len(), 81);
        let m = generating_set(&IdealSpec::principal(4, 0, 2).unwrap()).unwrap();
        assert_eq!(m.size().unwrap(), 27);
        let top = generating_set(&IdealSpec::principal(4, 4, 0).unwrap()).unwrap();
        assert_eq!(top.size().unwrap(), 4);
        let ig = generating_set(&IdealSpec::principal(4, 2, 0).unwrap()).unwrap();
        assert_eq!(ig.size().unwrap(), 6);
        assert!(generating_set(&IdealSpec::parse(4, "I(2;1) + I(0;0)").unwrap()).is_err());
    }
}
