//! A common view of every (involution) semigroup in the crate, so that word
//! evaluation, closures and identity refutation are written once.

use std::fmt::Debug;
use std::hash::Hash;

use crate::diagram::{Chip, Matching};
use crate::error::{Error, Result};

pub trait Structure {
    type Elem: Clone + Eq + Hash + Debug;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn identity(&self) -> Option<Self::Elem>;

    fn has_involution(&self) -> bool {
        false
    }

    fn involution(&self, _a: &Self::Elem) -> Result<Self::Elem> {
        Err(Error::NoInvolution)
    }
}

/// The two natural involutions of diagram monoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    /// `ξ ↦ ξ*`, mirror along the vertical axis.
    Reflection,
    /// `ξ ↦ ξ^ρ = α ξ* α`, rotation by 180 degrees.
    Rotation,
}

/// The wire monoid `W_n`, optionally with an involution. Its planar
/// elements form the Kauffman monoid `K_n`, which is closed under the same
/// arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WireMonoid {
    pub degree: usize,
    pub involution: Option<Involution>,
}

impl WireMonoid {
    pub fn new(degree: usize) -> Self {
        WireMonoid {
            degree,
            involution: None,
        }
    }

    pub fn with_involution(degree: usize, involution: Involution) -> Self {
        WireMonoid {
            degree,
            involution: Some(involution),
        }
    }

    /// `c, h_1, ..., h_{n-1}`: the generators of `K_n`.
    pub fn kauffman_generators(&self) -> Vec<Chip> {
        let n = self.degree;
        std::iter::once(Chip::circle(n))
            .chain((1..n).map(|i| Chip::hook(n, i).expect("hook index in range")))
            .collect()
    }
}

impl Structure for WireMonoid {
    type Elem = Chip;

    fn multiply(&self, a: &Chip, b: &Chip) -> Result<Chip> {
        a.multiply(b)
    }

    fn identity(&self) -> Option<Chip> {
        Some(Chip::identity(self.degree))
    }

    fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    fn involution(&self, a: &Chip) -> Result<Chip> {
        match self.involution {
            Some(Involution::Reflection) => Ok(a.star()),
            Some(Involution::Rotation) => Ok(a.rotate()),
            None => Err(Error::NoInvolution),
        }
    }
}

/// The Brauer monoid `B_n`: wire-monoid products with the circles erased.
/// Its planar elements form the Jones monoid `J_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrauerMonoid {
    pub degree: usize,
    pub involution: Option<Involution>,
}

impl BrauerMonoid {
    pub fn new(degree: usize) -> Self {
        BrauerMonoid {
            degree,
            involution: None,
        }
    }

    pub fn with_involution(degree: usize, involution: Involution) -> Self {
        BrauerMonoid {
            degree,
            involution: Some(involution),
        }
    }

    /// Circle-free hooks `h_1, ..., h_{n-1}`: the generators of `J_n`.
    pub fn hook_generators(&self) -> Vec<Matching> {
        (1..self.degree)
            .map(|i| Chip::hook(self.degree, i).expect("hook index in range").forget())
            .collect()
    }
}

impl Structure for BrauerMonoid {
    type Elem = Matching;

    fn multiply(&self, a: &Matching, b: &Matching) -> Result<Matching> {
        crate::monoid::brauer_multiply(a, b)
    }

    fn identity(&self) -> Option<Matching> {
        Some(Matching::identity(self.degree))
    }

    fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    fn involution(&self, a: &Matching) -> Result<Matching> {
        match self.involution {
            Some(Involution::Reflection) => Ok(a.star()),
            Some(Involution::Rotation) => Ok(a.rotate()),
            None => Err(Error::NoInvolution),
        }
    }
}
