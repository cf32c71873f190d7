//! The twisted Brauer monoid `ℕ × B_n` with the product
//! `(i,α) ⋆ (j,β) = (i + j + τ(α,β), αβ)`.

use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedElement {
    pub twist: u64,
    pub diagram: BrauerDiagram,
}

impl TwistedElement {
    pub fn new(twist: u64, diagram: BrauerDiagram) -> Self {
        TwistedElement { twist, diagram }
    }

    pub fn identity(degree: usize) -> Self {
        BrauerDiagram::identity(degree).into()
    }

    pub fn degree(&self) -> usize {
        self.diagram.degree()
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn star(&self, other: &TwistedElement) -> Result<TwistedElement> {
        let product = self.diagram.multiply(&other.diagram)?;
        let twist = self
            .twist
            .checked_add(other.twist)
            .and_then(|t| t.checked_add(product.floating))
            .ok_or(Error::TwistOverflow)?;
        Ok(TwistedElement {
            twist,
            diagram: product.diagram,
        })
    }

    /// `(i, α)* = (i, α*)`.
    pub fn involution(&self) -> TwistedElement {
        TwistedElement {
            twist: self.twist,
            diagram: self.diagram.star(),
        }
    }

    /// `x ⋆ x = x`, which forces twist 0 and `α² = α` with no floating
    /// component.
    pub fn is_idempotent(&self) -> bool {
        self.twist == 0 && is_twisted_idempotent(&self.diagram)
    }
}

impl From<BrauerDiagram> for TwistedElement {
    fn from(diagram: BrauerDiagram) -> Self {
        TwistedElement { twist: 0, diagram }
    }
}

impl From<&BrauerDiagram> for TwistedElement {
    fn from(diagram: &BrauerDiagram) -> Self {
        TwistedElement {
            twist: 0,
            diagram: diagram.clone(),
        }
    }
}

/// Left fold of `⋆` over `(0, α_1), …, (0, α_k)`.
pub fn star_chain<'a, I>(diagrams: I) -> Result<TwistedElement>
where
    I: IntoIterator<Item = &'a BrauerDiagram>,
{
    let mut iter = diagrams.into_iter();
    let first: TwistedElement = iter.next().ok_or(Error::EmptyChain)?.into();
    iter.try_fold(first, |acc, d| acc.star(&d.into()))
}

/// Left fold of `⋆` over arbitrary twisted elements.
pub fn star_all<'a, I>(elements: I) -> Result<TwistedElement>
where
    I: IntoIterator<Item = &'a TwistedElement>,
{
    let mut iter = elements.into_iter();
    let first = iter.next().ok_or(Error::EmptyChain)?.clone();
    iter.try_fold(first, |acc, x| acc.star(x))
}

/// `α` is an idempotent of the twisted monoid (as `(0, α)`).
pub fn is_twisted_idempotent(alpha: &BrauerDiagram) -> bool {
    let p = alpha.multiply_unchecked(alpha);
    p.floating == 0 && p.diagram == *alpha
}
