//! Wire-monoid elements ("chips") and their arithmetic.
//!
//! A chip of degree `n` has left pins `1..n`, right pins `1'..n'`, a perfect
//! matching of those `2n` pins into wires, and a count of free circles.
//! Chips multiply by gluing the right pins of the first to the left pins of
//! the second; loops closed off entirely inside the glued interface become
//! new circles.
//!
//! ```
//! use diagmon::Chip;
//!
//! let h1 = Chip::hook(3, 1).unwrap();
//! let c = Chip::circle(3);
//! assert_eq!(h1.multiply(&h1).unwrap(), c.multiply(&h1).unwrap());
//! ```

mod chip;
mod literal;
mod matching;

pub use chip::Chip;
pub use literal::parse_chip;
pub use matching::{Matching, Pin, WireKind};
