//! Finite monoids built from diagrams: Brauer and Jones enumeration,
//! Cayley-table closure, ideals and Rees quotients, isomorphism search,
//! and the circle bookkeeping of idempotent fibers.

mod closure;
mod enumerate;
mod ideal;
mod iso;
mod kauffman;
mod semigroup;

pub use closure::{closure, Closure, ClosureOptions, DEFAULT_CLOSURE_LIMIT};
pub use enumerate::{
    enumerate_brauer, enumerate_brauer_bounded, enumerate_jones, enumerate_jones_bounded,
    DEFAULT_BRAUER_BOUND, DEFAULT_JONES_BOUND,
};
pub use ideal::{ideal_generated, rees_quotient, rees_quotient_by_predicate, IdealSpec};
pub use iso::is_isomorphic;
pub use kauffman::{circle_free_kauffman, fiber_increment, kauffman_ideal_c_member, kauffman_quotient};
pub use semigroup::FiniteSemigroup;

use crate::diagram::Matching;
use crate::error::Result;

/// Product in the Brauer monoid: glue as in the wire monoid, then drop the
/// circles.
pub fn brauer_multiply(a: &Matching, b: &Matching) -> Result<Matching> {
    a.compose(b).map(|(m, _)| m)
}
