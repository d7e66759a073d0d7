use std::collections::{BTreeSet, HashMap};

use super::closure::Closure;
use super::semigroup::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::structure::Structure;

/// A two-sided ideal of a [`FiniteSemigroup`], as a set of indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    members: BTreeSet<usize>,
}

impl IdealSpec {
    /// Checks that `members` is closed under multiplication by every
    /// element on either side.
    pub fn new(s: &FiniteSemigroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.iter().any(|&x| x >= s.size()) {
            return Err(Error::NotAnIdeal);
        }
        let closed = members.iter().all(|&x| {
            (0..s.size()).all(|y| members.contains(&s.mul(x, y)) && members.contains(&s.mul(y, x)))
        });
        if !closed {
            return Err(Error::NotAnIdeal);
        }
        Ok(IdealSpec { members })
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_involution_closed(&self, s: &FiniteSemigroup) -> bool {
        match s.involution_table() {
            Some(inv) => self.members.iter().all(|&x| self.members.contains(&inv[x])),
            None => true,
        }
    }
}

/// The smallest ideal `S^1 · seed · S^1`.
pub fn ideal_generated(s: &FiniteSemigroup, seed: &[usize]) -> Result<IdealSpec> {
    let mut members: BTreeSet<usize> = BTreeSet::new();
    let mut stack: Vec<usize> = Vec::new();
    for &x in seed {
        if x >= s.size() {
            return Err(Error::OutOfRange {
                what: "element",
                index: x,
                min: 0,
                max: s.size() - 1,
            });
        }
        if members.insert(x) {
            stack.push(x);
        }
    }
    while let Some(x) = stack.pop() {
        for y in 0..s.size() {
            for z in [s.mul(x, y), s.mul(y, x)] {
                if members.insert(z) {
                    stack.push(z);
                }
            }
        }
    }
    Ok(IdealSpec { members })
}

/// The Rees quotient `S/I`: elements of `S \ I` in their original order,
/// followed by a zero labelled `0` that absorbs everything landing in `I`.
///
/// With `keep_involution`, the involution of `S` descends to the quotient;
/// this needs `I` to be closed under it.
pub fn rees_quotient(
    s: &FiniteSemigroup,
    ideal: &IdealSpec,
    keep_involution: bool,
) -> Result<FiniteSemigroup> {
    let ideal = IdealSpec::new(s, ideal.members.iter().copied())?;
    if keep_involution {
        if s.involution_table().is_none() {
            return Err(Error::NoInvolution);
        }
        if !ideal.is_involution_closed(s) {
            return Err(Error::InvolutionNotClosed);
        }
    }
    let survivors: Vec<usize> = (0..s.size()).filter(|x| !ideal.contains(*x)).collect();
    let zero = survivors.len();
    let mut position = vec![zero; s.size()];
    for (new, &old) in survivors.iter().enumerate() {
        position[old] = new;
    }
    let k = zero + 1;
    let mut table = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            table.push(if x == zero || y == zero {
                zero
            } else {
                position[s.mul(survivors[x], survivors[y])]
            });
        }
    }
    let mut labels: Vec<String> = survivors.iter().map(|&x| s.label(x).to_string()).collect();
    labels.push("0".into());
    let quotient = FiniteSemigroup::from_flat_unchecked(labels, table);
    if keep_involution {
        let inv = s.involution_table().expect("checked above");
        let table = survivors
            .iter()
            .map(|&x| position[inv[x]])
            .chain(std::iter::once(zero))
            .collect();
        return quotient.with_involution(table);
    }
    Ok(quotient)
}

/// Rees quotient of a possibly infinite structure by an ideal given as a
/// membership predicate. `representatives` must list every element outside
/// the ideal that products of representatives can reach; the result has
/// them in the given order followed by `0`.
pub fn rees_quotient_by_predicate<S: Structure>(
    structure: &S,
    representatives: &[S::Elem],
    in_ideal: impl Fn(&S::Elem) -> Result<bool>,
    keep_involution: bool,
) -> Result<Closure<Option<S::Elem>>> {
    let lookup: HashMap<&S::Elem, usize> = representatives
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    for r in representatives {
        if in_ideal(r)? {
            return Err(Error::InvalidTable(format!("representative {r:?} lies in the ideal")));
        }
    }
    let zero = representatives.len();
    let classify = |e: &S::Elem| -> Result<usize> {
        if in_ideal(e)? {
            return Ok(zero);
        }
        lookup.get(e).copied().ok_or_else(|| {
            Error::InvalidTable(format!("{e:?} is neither a representative nor in the ideal"))
        })
    };
    let k = zero + 1;
    let mut table = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            table.push(if x == zero || y == zero {
                zero
            } else {
                classify(&structure.multiply(&representatives[x], &representatives[y])?)?
            });
        }
    }
    let mut labels: Vec<String> = representatives.iter().map(|e| format!("{e:?}")).collect();
    labels.push("0".into());
    let mut semigroup = FiniteSemigroup::from_flat_unchecked(labels, table);
    if keep_involution {
        let mut inv = Vec::with_capacity(k);
        for r in representatives {
            let image = classify(&structure.involution(r)?)?;
            if image == zero {
                return Err(Error::InvolutionNotClosed);
            }
            inv.push(image);
        }
        inv.push(zero);
        semigroup = semigroup.with_involution(inv)?;
    }
    let elements = representatives
        .iter()
        .cloned()
        .map(Some)
        .chain(std::iter::once(None))
        .collect();
    Ok(Closure {
        semigroup,
        elements,
    })
}
