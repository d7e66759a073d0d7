use std::collections::HashMap;

use super::{InvWord, Letter, Symbol};
use crate::error::{Error, Result};
use crate::monoid::FiniteSemigroup;

const MAX_ASSIGNMENTS: usize = 1 << 22;

/// Every word `v' != v` of length at most `max_len` over the letters of `v`
/// plus one fresh letter such that `m` satisfies `v ≈ v'`. Starred letters
/// are used iff `m` has an involution. Results are sorted by length, then
/// lexicographically.
///
/// The search is bounded: an empty result says nothing about longer words
/// or larger alphabets.
pub fn isoterm_witnesses(m: &FiniteSemigroup, v: &InvWord, max_len: usize) -> Result<Vec<InvWord>> {
    let inv = m.involution_table();
    if !v.is_plain() && inv.is_none() {
        return Err(Error::NoInvolution);
    }
    let k = m.size();
    if k > u16::MAX as usize {
        return Err(Error::InvalidTable("isoterm search supports at most 65535 elements".into()));
    }
    let mut letters: Vec<Letter> = v.letters().into_iter().collect();
    letters.push(Letter(letters.last().map_or(1, |l| l.0 + 1)));
    let assignments = (0..letters.len())
        .try_fold(1usize, |acc, _| acc.checked_mul(k))
        .filter(|&a| a <= MAX_ASSIGNMENTS)
        .ok_or_else(|| {
            Error::InvalidTable(format!(
                "{k}^{} assignments exceed the search limit {MAX_ASSIGNMENTS}",
                letters.len()
            ))
        })?;

    // value of letter j under assignment a: digit j of a in base k
    let digit = |a: usize, j: usize| (a / k.pow((letters.len() - 1 - j) as u32)) % k;
    let mut symbols = Vec::new();
    for (j, &letter) in letters.iter().enumerate() {
        let plain: Vec<u16> = (0..assignments).map(|a| digit(a, j) as u16).collect();
        symbols.push((Symbol { letter, starred: false }, plain.clone()));
        if let Some(inv) = inv {
            let starred = plain.iter().map(|&x| inv[x as usize] as u16).collect();
            symbols.push((Symbol { letter, starred: true }, starred));
        }
    }
    let column = |s: &Symbol| &symbols.iter().find(|(t, _)| t == s).expect("known symbol").1;

    let mut target: Vec<u16> = column(&v.symbols()[0]).clone();
    for s in &v.symbols()[1..] {
        let col = column(s);
        for (t, &c) in target.iter_mut().zip(col) {
            *t = m.mul(*t as usize, c as usize) as u16;
        }
    }

    // y is reachable from x if y ∈ {x} ∪ xM
    let mut reach = vec![false; k * k];
    for x in 0..k {
        reach[x * k + x] = true;
        for y in 0..k {
            reach[x * k + m.mul(x, y)] = true;
        }
    }

    let mut search = Search {
        m,
        k,
        symbols: &symbols,
        target: &target,
        reach: &reach,
        dead: HashMap::new(),
        word: Vec::with_capacity(max_len),
        found: Vec::new(),
    };
    for (s, col) in &symbols {
        if max_len == 0 {
            break;
        }
        if search.viable(col) {
            search.word.push(*s);
            search.descend(col.clone(), max_len - 1);
            search.word.pop();
        }
    }
    let mut found: Vec<InvWord> = search
        .found
        .into_iter()
        .filter(|w| w != v.symbols())
        .map(|w| InvWord::new(w).expect("non-empty"))
        .collect();
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

struct Search<'a> {
    m: &'a FiniteSemigroup,
    k: usize,
    symbols: &'a [(Symbol, Vec<u16>)],
    target: &'a [u16],
    reach: &'a [bool],
    /// prefix values known to admit no satisfying completion within the
    /// stored number of extra symbols
    dead: HashMap<Vec<u16>, usize>,
    word: Vec<Symbol>,
    found: Vec<Vec<Symbol>>,
}

impl Search<'_> {
    fn viable(&self, prefix: &[u16]) -> bool {
        prefix
            .iter()
            .zip(self.target)
            .all(|(&p, &t)| self.reach[p as usize * self.k + t as usize])
    }

    /// Returns the number of satisfying words extending the current prefix
    /// (including the prefix itself).
    fn descend(&mut self, prefix: Vec<u16>, remaining: usize) -> usize {
        if self.dead.get(&prefix).is_some_and(|&r| r >= remaining) {
            return 0;
        }
        let mut count = 0;
        if prefix == self.target {
            self.found.push(self.word.clone());
            count += 1;
        }
        if remaining > 0 {
            for (s, col) in self.symbols {
                let next: Vec<u16> = prefix
                    .iter()
                    .zip(col)
                    .map(|(&p, &c)| self.m.mul(p as usize, c as usize) as u16)
                    .collect();
                if !self.viable(&next) {
                    continue;
                }
                self.word.push(*s);
                count += self.descend(next, remaining - 1);
                self.word.pop();
            }
        }
        if count == 0 {
            let r = self.dead.entry(prefix).or_insert(0);
            *r = (*r).max(remaining);
        }
        count
    }
}
