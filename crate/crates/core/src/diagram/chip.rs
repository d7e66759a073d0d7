use std::fmt;

use super::matching::{Matching, Pin};
use crate::error::{Error, Result};

/// An element `(π; d)` of the wire monoid: a matching plus a number of
/// free circles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chip {
    matching: Matching,
    circles: u64,
}

impl Chip {
    pub fn new(n: usize, pairs: &[(Pin, Pin)], circles: u64) -> Result<Self> {
        Ok(Chip {
            matching: Matching::new(n, pairs)?,
            circles,
        })
    }

    pub fn from_matching(matching: Matching, circles: u64) -> Self {
        Chip { matching, circles }
    }

    pub fn identity(n: usize) -> Self {
        Chip::from_matching(Matching::identity(n), 0)
    }

    /// The hook `h_i`: joins `i, i+1` on both sides, all other pins
    /// straight across.
    pub fn hook(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i == 0 || i >= n {
            return Err(Error::OutOfRange {
                what: "hook",
                index: i,
                min: 1,
                max: n.saturating_sub(1),
            });
        }
        let mut pairs = vec![
            (Pin::Left(i), Pin::Left(i + 1)),
            (Pin::Right(i), Pin::Right(i + 1)),
        ];
        pairs.extend(
            (1..=n)
                .filter(|&j| j != i && j != i + 1)
                .map(|j| (Pin::Left(j), Pin::Right(j))),
        );
        Chip::new(n, &pairs, 0)
    }

    /// The circle `c`: identity wiring with one circle.
    pub fn circle(n: usize) -> Self {
        Chip::from_matching(Matching::identity(n), 1)
    }

    /// The antidiagonal chip `{j, (n+1-j)'}` with no circles.
    pub fn alpha(n: usize) -> Self {
        let pairs: Vec<_> = (1..=n).map(|j| (Pin::Left(j), Pin::Right(n + 1 - j))).collect();
        Chip::new(n, &pairs, 0).expect("antidiagonal is a perfect matching")
    }

    pub fn degree(&self) -> usize {
        self.matching.degree()
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn circles(&self) -> u64 {
        self.circles
    }

    pub fn multiply(&self, other: &Chip) -> Result<Chip> {
        let (matching, loops) = self.matching.compose(&other.matching)?;
        let circles = self
            .circles
            .checked_add(other.circles)
            .and_then(|d| d.checked_add(loops))
            .ok_or(Error::CircleOverflow)?;
        Ok(Chip { matching, circles })
    }

    /// `ξ^k` by repeated squaring; `ξ^0` is the identity.
    pub fn pow(&self, mut k: u64) -> Result<Chip> {
        let mut base = self.clone();
        let mut acc = Chip::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reflection `ξ*`.
    pub fn star(&self) -> Chip {
        Chip {
            matching: self.matching.star(),
            circles: self.circles,
        }
    }

    /// Rotation `ξ^ρ = α ξ* α`.
    pub fn rotate(&self) -> Chip {
        Chip {
            matching: self.matching.rotate(),
            circles: self.circles,
        }
    }

    pub fn is_planar(&self) -> bool {
        self.matching.is_planar()
    }

    /// Drops the circles.
    pub fn forget(&self) -> Matching {
        self.matching.clone()
    }

    pub fn with_circles(&self, circles: u64) -> Chip {
        Chip {
            matching: self.matching.clone(),
            circles,
        }
    }

    pub fn embed_pad(&self, top: usize, bottom: usize) -> Chip {
        Chip {
            matching: self.matching.pad(top, bottom),
            circles: self.circles,
        }
    }

    pub fn embed_double(&self) -> Result<Chip> {
        Ok(Chip {
            matching: self.matching.double(),
            circles: self.circles.checked_mul(2).ok_or(Error::CircleOverflow)?,
        })
    }

    pub fn embed_insert_middle(&self) -> Result<Chip> {
        Ok(Chip {
            matching: self.matching.insert_middle()?,
            circles: self.circles,
        })
    }
}

impl fmt::Display for Chip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}:{};{}", self.degree(), self.matching, self.circles)
    }
}

impl fmt::Debug for Chip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
