//! Brauer diagrams, the twisted Brauer monoid and their ideal structure.
//!
//! Diagrams multiply through the product graph, with the number of floating
//! components recorded as a twist. On top of that sit Green's relations,
//! the ideal lattice of the twisted monoid, minimal generating sets, and
//! Graham–Houghton graph analysis of the regular D-classes. The
//! [`enumerate`] module provides exhaustive oracles at small degree.

pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod green;
pub mod ideals;
pub mod notation;
pub mod structure;
pub mod twisted;
mod unionfind;

pub use diagram::{tau, BrauerDiagram, KernelSignature, Product, Vertex};
pub use error::{Error, Result};
pub use format::parse_twisted;
pub use green::{DClassId, PreOrder, Relation};
pub use ideals::{IdealSpec, IdealTerm};
pub use notation::{from_notation, to_notation, DiagramNotation};
pub use structure::GHGraph;
pub use twisted::{star_chain, TwistedElement};
