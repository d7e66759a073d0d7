use std::collections::HashMap;

use super::semigroup::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::structure::Structure;

pub const DEFAULT_CLOSURE_LIMIT: usize = 100_000;

/// A finite sub(semi)group materialized as a Cayley table, together with
/// the concrete element behind each index.
#[derive(Clone, Debug)]
pub struct Closure<E> {
    pub semigroup: FiniteSemigroup,
    pub elements: Vec<E>,
}

impl<E: Eq + std::hash::Hash> Closure<E> {
    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClosureOptions {
    /// Start from the identity of the structure, producing a submonoid.
    pub include_identity: bool,
    pub limit: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            include_identity: true,
            limit: DEFAULT_CLOSURE_LIMIT,
        }
    }
}

/// Breadth-first closure of `generators` under the multiplication of
/// `structure`.
///
/// Elements are listed in discovery order (identity first when included,
/// then generators, then products by word length). The involution table is
/// attached when the structure has one and the generated set is closed
/// under it.
pub fn closure<S: Structure>(
    structure: &S,
    generators: &[S::Elem],
    options: ClosureOptions,
) -> Result<Closure<S::Elem>> {
    let mut elements: Vec<S::Elem> = Vec::new();
    let mut index: HashMap<S::Elem, usize> = HashMap::new();
    let mut push = |e: S::Elem, elements: &mut Vec<S::Elem>| -> Result<bool> {
        if index.contains_key(&e) {
            return Ok(false);
        }
        if elements.len() >= options.limit {
            return Err(Error::LimitExceeded(options.limit));
        }
        index.insert(e.clone(), elements.len());
        elements.push(e);
        Ok(true)
    };

    if options.include_identity {
        let one = structure.identity().ok_or(Error::NoIdentity)?;
        push(one, &mut elements)?;
    }
    for g in generators {
        push(g.clone(), &mut elements)?;
    }
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        for g in generators {
            let y = structure.multiply(&x, g)?;
            push(y, &mut elements)?;
        }
        next += 1;
    }
    if elements.is_empty() {
        return Err(Error::InvalidTable("closure of nothing is empty".into()));
    }

    let lookup: HashMap<&S::Elem, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let k = elements.len();
    let mut table = Vec::with_capacity(k * k);
    for x in &elements {
        for y in &elements {
            let xy = structure.multiply(x, y)?;
            let i = *lookup.get(&xy).ok_or_else(|| {
                Error::InvalidTable("multiplication is not closed on the generated set".into())
            })?;
            table.push(i);
        }
    }
    let labels = elements.iter().map(|e| format!("{e:?}")).collect();
    let mut semigroup = FiniteSemigroup::from_flat_unchecked(labels, table);
    if structure.has_involution() {
        let inv: Option<Vec<usize>> = elements
            .iter()
            .map(|e| structure.involution(e).ok().and_then(|i| lookup.get(&i).copied()))
            .collect();
        if let Some(inv) = inv {
            semigroup = semigroup.with_involution(inv)?;
        }
    }
    Ok(Closure {
        semigroup,
        elements,
    })
}
