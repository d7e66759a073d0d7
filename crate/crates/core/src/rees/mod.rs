//! Rees matrix semigroups `M^0(I, G, Λ; P)` over finitely generated abelian
//! groups, the collapse onto the trivial group, the named small
//! semigroups, and the 2×2 submatrix classifier.

mod classify;
mod group;
mod matrix;
mod named;
mod semigroup;
mod witness;

pub use classify::{nfb_submatrix_classify, Certificate, SubmatrixForm};
pub use group::{AbelianGroup, GroupElem};
pub use matrix::SandwichMatrix;
pub use named::{a2, a2_rees, brandt_b21, brandt_rees, tsl};
pub use semigroup::{RMElement, ReesMatrixSemigroup};
pub use witness::InfiniteCornerWitness;
