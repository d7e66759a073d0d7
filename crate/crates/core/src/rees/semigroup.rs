use std::fmt;

use super::group::{AbelianGroup, GroupElem};
use super::matrix::SandwichMatrix;
use crate::error::{Error, Result};
use crate::monoid::FiniteSemigroup;
use crate::structure::Structure;

/// An element of `M^0(I, G, Λ; P)`, possibly with an adjoined identity.
/// Indices are 0-based; they print 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RMElement {
    One,
    Triple {
        i: usize,
        g: GroupElem,
        lambda: usize,
    },
    Zero,
}

impl RMElement {
    pub fn triple(i: usize, g: GroupElem, lambda: usize) -> Self {
        RMElement::Triple { i, g, lambda }
    }
}

/// The Rees matrix semigroup `M^0(I, G, Λ; P)` over an abelian group, with
/// `|I|` = columns and `|Λ|` = rows of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesMatrixSemigroup {
    group: AbelianGroup,
    matrix: SandwichMatrix,
    with_identity: bool,
}

impl ReesMatrixSemigroup {
    pub fn new(group: AbelianGroup, matrix: SandwichMatrix) -> Self {
        ReesMatrixSemigroup {
            group,
            matrix,
            with_identity: false,
        }
    }

    /// `S^1`: the same semigroup with a new identity element.
    pub fn adjoin_identity(&self) -> Self {
        ReesMatrixSemigroup {
            with_identity: true,
            ..self.clone()
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn matrix(&self) -> &SandwichMatrix {
        &self.matrix
    }

    pub fn has_adjoined_identity(&self) -> bool {
        self.with_identity
    }

    pub fn index_count(&self) -> usize {
        self.matrix.column_count()
    }

    pub fn lambda_count(&self) -> usize {
        self.matrix.row_count()
    }

    fn check(&self, a: &RMElement) -> Result<()> {
        match a {
            RMElement::One if !self.with_identity => Err(Error::InvalidRees(
                "identity used in a semigroup without adjoined identity".into(),
            )),
            RMElement::Triple { i, g, lambda } => {
                if *i >= self.index_count() {
                    return Err(Error::OutOfRange {
                        what: "I",
                        index: *i,
                        min: 0,
                        max: self.index_count() - 1,
                    });
                }
                if *lambda >= self.lambda_count() {
                    return Err(Error::OutOfRange {
                        what: "Λ",
                        index: *lambda,
                        min: 0,
                        max: self.lambda_count() - 1,
                    });
                }
                if !self.group.contains(g) {
                    return Err(Error::InvalidRees("group component is not in G".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// `(i,g,λ)(j,h,μ) = (i, g p_{λj} h, μ)`, or `0` when `p_{λj} = 0`.
    pub fn rm_multiply(&self, a: &RMElement, b: &RMElement) -> Result<RMElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (RMElement::Zero, _) | (_, RMElement::Zero) => RMElement::Zero,
            (RMElement::One, x) | (x, RMElement::One) => x.clone(),
            (
                RMElement::Triple { i, g, lambda },
                RMElement::Triple {
                    i: j,
                    g: h,
                    lambda: mu,
                },
            ) => match self.matrix.entry(*lambda, *j) {
                None => RMElement::Zero,
                Some(p) => RMElement::Triple {
                    i: *i,
                    g: self.group.add(&self.group.add(g, p), h),
                    lambda: *mu,
                },
            },
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }

    /// `0* = 0`, `(i,g,j)* = (j,g,i)`; needs `I = Λ` and symmetric `P`.
    pub fn rm_involution(&self, a: &RMElement) -> Result<RMElement> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        self.check(a)?;
        Ok(match a {
            RMElement::Triple { i, g, lambda } => RMElement::Triple {
                i: *lambda,
                g: g.clone(),
                lambda: *i,
            },
            other => other.clone(),
        })
    }

    /// The same shape over the trivial group, with every non-zero entry of
    /// `P` replaced by `e`.
    pub fn collapse_to_trivial(&self) -> ReesMatrixSemigroup {
        ReesMatrixSemigroup {
            group: AbelianGroup::trivial(),
            matrix: self.matrix.collapsed(),
            with_identity: self.with_identity,
        }
    }

    /// The collapsing homomorphism `(i,g,λ) ↦ (i,e,λ)`, fixing `0` and `1`.
    pub fn collapse(&self, a: &RMElement) -> RMElement {
        match a {
            RMElement::Triple { i, lambda, .. } => RMElement::Triple {
                i: *i,
                g: AbelianGroup::trivial().identity(),
                lambda: *lambda,
            },
            other => other.clone(),
        }
    }

    /// All elements, for a finite group: `1` (if adjoined), triples by
    /// `(i, g, λ)`, then `0`.
    pub fn elements(&self) -> Result<Vec<RMElement>> {
        let gs = self.group.elements()?;
        let mut out = Vec::new();
        if self.with_identity {
            out.push(RMElement::One);
        }
        for i in 0..self.index_count() {
            for g in &gs {
                for lambda in 0..self.lambda_count() {
                    out.push(RMElement::triple(i, g.clone(), lambda));
                }
            }
        }
        out.push(RMElement::Zero);
        Ok(out)
    }

    /// Cayley table over [`Self::elements`], with the involution attached
    /// when `P` is symmetric.
    pub fn to_finite(&self) -> Result<FiniteSemigroup> {
        let elements = self.elements()?;
        let position = |e: &RMElement| elements.iter().position(|x| x == e).expect("closed");
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for a in &elements {
            for b in &elements {
                table.push(position(&self.rm_multiply(a, b)?));
            }
        }
        let labels = elements.iter().map(|e| self.format(e)).collect();
        let s = FiniteSemigroup::from_flat_unchecked(labels, table);
        if self.is_symmetric() {
            let inv = elements
                .iter()
                .map(|e| self.rm_involution(e).map(|x| position(&x)))
                .collect::<Result<Vec<_>>>()?;
            return s.with_involution(inv);
        }
        Ok(s)
    }

    pub fn format(&self, e: &RMElement) -> String {
        match e {
            RMElement::One => "1".into(),
            RMElement::Zero => "0".into(),
            RMElement::Triple { i, g, lambda } => {
                format!("({},{},{})", i + 1, self.group.format_element(g), lambda + 1)
            }
        }
    }
}

impl fmt::Display for ReesMatrixSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "M0({}, {}, {}; {}){}",
            self.index_count(),
            self.group,
            self.lambda_count(),
            self.matrix.format(&self.group),
            if self.with_identity { "^1" } else { "" }
        )
    }
}

impl Structure for ReesMatrixSemigroup {
    type Elem = RMElement;

    fn multiply(&self, a: &RMElement, b: &RMElement) -> Result<RMElement> {
        self.rm_multiply(a, b)
    }

    fn identity(&self) -> Option<RMElement> {
        self.with_identity.then_some(RMElement::One)
    }

    fn has_involution(&self) -> bool {
        self.is_symmetric()
    }

    fn involution(&self, a: &RMElement) -> Result<RMElement> {
        self.rm_involution(a)
    }
}
