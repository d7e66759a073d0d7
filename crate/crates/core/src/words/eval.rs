use std::collections::{BTreeMap, HashSet};

use super::{Identity, InvWord, Letter};
use crate::error::{Error, Result};
use crate::monoid::FiniteSemigroup;
use crate::structure::Structure;

/// Values of letters.
pub type Assignment<E> = BTreeMap<Letter, E>;

/// Left-to-right product of the letter images, with starred letters sent
/// through the involution of `structure`.
pub fn evaluate<S: Structure>(
    structure: &S,
    word: &InvWord,
    assignment: &Assignment<S::Elem>,
) -> Result<S::Elem> {
    let mut acc: Option<S::Elem> = None;
    for sym in word.symbols() {
        let value = assignment
            .get(&sym.letter)
            .ok_or(Error::MissingAssignment(sym.letter.0))?;
        let value = if sym.starred {
            structure.involution(value)?
        } else {
            value.clone()
        };
        acc = Some(match acc {
            None => value,
            Some(a) => structure.multiply(&a, &value)?,
        });
    }
    Ok(acc.expect("words are non-empty"))
}

fn check_involution(has_involution: bool, id: &Identity) -> Result<()> {
    if !id.is_plain() && !has_involution {
        return Err(Error::NoInvolution);
    }
    Ok(())
}

/// Index-level evaluation over a table, for the exhaustive scans.
fn eval_indices(m: &FiniteSemigroup, word: &InvWord, slot: &[usize], values: &[usize]) -> usize {
    let inv = m.involution_table();
    let mut acc = usize::MAX;
    for (sym, &k) in word.symbols().iter().zip(slot) {
        let mut v = values[k];
        if sym.starred {
            v = inv.expect("checked before evaluation")[v];
        }
        acc = if acc == usize::MAX { v } else { m.mul(acc, v) };
    }
    acc
}

/// The lexicographically first assignment (letters in increasing order,
/// first letter most significant) under which the two sides differ.
pub fn first_counterexample(m: &FiniteSemigroup, id: &Identity) -> Result<Option<Assignment<usize>>> {
    check_involution(m.involution_table().is_some(), id)?;
    let letters: Vec<Letter> = id.letters().into_iter().collect();
    let slot_of = |w: &InvWord| -> Vec<usize> {
        w.symbols()
            .iter()
            .map(|s| letters.binary_search(&s.letter).expect("letter of the identity"))
            .collect()
    };
    let (lhs_slots, rhs_slots) = (slot_of(&id.lhs), slot_of(&id.rhs));
    let k = m.size();
    let mut values = vec![0usize; letters.len()];
    loop {
        if eval_indices(m, &id.lhs, &lhs_slots, &values) != eval_indices(m, &id.rhs, &rhs_slots, &values)
        {
            return Ok(Some(letters.iter().copied().zip(values.iter().copied()).collect()));
        }
        // odometer, last letter fastest
        let mut pos = letters.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < k {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Whether `m` satisfies `id` under all `|m|^(#letters)` assignments.
pub fn satisfies_identity(m: &FiniteSemigroup, id: &Identity) -> Result<bool> {
    Ok(first_counterexample(m, id)?.is_none())
}

/// Searches assignments mapping each letter to a product of at most
/// `depth` generators (the empty product being the identity, when the
/// structure has one) for one on which the two sides of `id` differ.
///
/// Candidates are ordered by word length, then lexicographically by
/// generator position, with duplicates dropped; assignments are tried in
/// lexicographic order. `None` only means no witness was found.
pub fn refute_identity<S: Structure>(
    structure: &S,
    generators: &[S::Elem],
    id: &Identity,
    depth: usize,
) -> Result<Option<Assignment<S::Elem>>> {
    check_involution(structure.has_involution(), id)?;
    let mut candidates: Vec<S::Elem> = Vec::new();
    let mut seen: HashSet<S::Elem> = HashSet::new();
    if let Some(one) = structure.identity() {
        seen.insert(one.clone());
        candidates.push(one);
    }
    let mut layer: Vec<S::Elem> = Vec::new();
    for len in 1..=depth {
        let next: Vec<S::Elem> = if len == 1 {
            generators.to_vec()
        } else {
            let mut next = Vec::with_capacity(layer.len() * generators.len());
            for x in &layer {
                for g in generators {
                    next.push(structure.multiply(x, g)?);
                }
            }
            next
        };
        for x in &next {
            if seen.insert(x.clone()) {
                candidates.push(x.clone());
            }
        }
        layer = next;
    }
    let domains: BTreeMap<Letter, Vec<S::Elem>> = id
        .letters()
        .into_iter()
        .map(|l| (l, candidates.clone()))
        .collect();
    refute_identity_in(structure, id, &domains)
}

/// Like [`refute_identity`], but each letter ranges over its own list of
/// values.
pub fn refute_identity_in<S: Structure>(
    structure: &S,
    id: &Identity,
    domains: &BTreeMap<Letter, Vec<S::Elem>>,
) -> Result<Option<Assignment<S::Elem>>> {
    check_involution(structure.has_involution(), id)?;
    let letters: Vec<Letter> = id.letters().into_iter().collect();
    let mut lists = Vec::with_capacity(letters.len());
    for l in &letters {
        let d = domains.get(l).ok_or(Error::MissingAssignment(l.0))?;
        if d.is_empty() {
            return Ok(None);
        }
        lists.push(d);
    }
    let mut pick = vec![0usize; letters.len()];
    loop {
        let assignment: Assignment<S::Elem> = letters
            .iter()
            .zip(&pick)
            .zip(&lists)
            .map(|((&l, &i), d)| (l, d[i].clone()))
            .collect();
        if evaluate(structure, &id.lhs, &assignment)? != evaluate(structure, &id.rhs, &assignment)? {
            return Ok(Some(assignment));
        }
        let mut pos = letters.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < lists[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}
