//! Exact computational algebra for diagram monoids.
//!
//! * [`diagram`]: wire-monoid chips, reflection, rotation, planarity.
//! * [`monoid`]: finite semigroups as Cayley tables, Brauer and Jones
//!   enumeration, closures, ideals, Rees quotients, isomorphism search.
//! * [`words`]: plain and involutory words, Zimin words, identity checking
//!   and refutation, bounded isoterm search.
//! * [`rees`]: Rees matrix semigroups over finitely generated abelian groups.
//! * [`render`]: ASCII and SVG drawings of chips.

pub mod diagram;
mod error;
pub mod monoid;
mod parse;
pub mod rees;
pub mod render;
pub mod structure;
pub mod words;

pub use diagram::{parse_chip, Chip, Matching, Pin, WireKind};
pub use error::{Error, Result};
pub use monoid::FiniteSemigroup;
pub use structure::Structure;
pub use words::{Identity, InvWord, Letter};
