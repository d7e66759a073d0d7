//! Plain and involutory words over letters `x1, x2, ...`, identities
//! between them, and their evaluation in (involution) semigroups.
//!
//! Literals: `x1 x2* x1` (spaces optional), identities `LHS = RHS`.

mod eval;
mod fingerprint;
mod isoterm;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use eval::{
    evaluate, first_counterexample, refute_identity, refute_identity_in, satisfies_identity,
    Assignment,
};
pub use fingerprint::{zimin_fingerprint_k3, FingerprintLetter};
pub use isoterm::isoterm_witnesses;

use crate::error::{Error, Result};
use crate::parse::Cursor;

/// The letter `x_i` (numbered from 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A letter or its starred copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub letter: Letter,
    pub starred: bool,
}

impl Symbol {
    pub fn plain(i: u32) -> Self {
        Symbol {
            letter: Letter(i),
            starred: false,
        }
    }

    pub fn starred(i: u32) -> Self {
        Symbol {
            letter: Letter(i),
            starred: true,
        }
    }

    pub fn star(self) -> Self {
        Symbol {
            starred: !self.starred,
            ..self
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, if self.starred { "*" } else { "" })
    }
}

/// A non-empty involutory word; plain words have no starred symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvWord(Vec<Symbol>);

impl InvWord {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(InvWord(symbols))
    }

    pub fn plain(letters: &[u32]) -> Result<Self> {
        InvWord::new(letters.iter().map(|&i| Symbol::plain(i)).collect())
    }

    pub fn letter(i: u32) -> Self {
        InvWord(vec![Symbol::plain(i)])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_plain(&self) -> bool {
        self.0.iter().all(|s| !s.starred)
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        self.0.iter().map(|s| s.letter).collect()
    }

    pub fn concat(&self, other: &InvWord) -> InvWord {
        InvWord(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// `(x_1 ⋯ x_m)* = x_m* ⋯ x_1*`.
    pub fn star(&self) -> InvWord {
        InvWord(self.0.iter().rev().map(|s| s.star()).collect())
    }

    /// Occurrences of `letter`, starred or not.
    pub fn occurrences(&self, letter: Letter) -> usize {
        self.0.iter().filter(|s| s.letter == letter).count()
    }

    pub fn starred_occurrences(&self, letter: Letter) -> usize {
        self.0.iter().filter(|s| s.letter == letter && s.starred).count()
    }
}

/// `Z_1 = x1`, `Z_{n+1} = Z_n x_{n+1} Z_n`.
pub fn zimin(n: u32) -> InvWord {
    assert!(n >= 1, "Zimin words are indexed from 1");
    let mut w = vec![Symbol::plain(1)];
    for k in 2..=n {
        let mut next = Vec::with_capacity(2 * w.len() + 1);
        next.extend_from_slice(&w);
        next.push(Symbol::plain(k));
        next.extend_from_slice(&w);
        w = next;
    }
    InvWord(w)
}

pub fn word_star(w: &InvWord) -> InvWord {
    w.star()
}

pub fn occurrences(w: &InvWord, letter: Letter) -> usize {
    w.occurrences(letter)
}

impl fmt::Display for InvWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for InvWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InvWord({self})")
    }
}

fn parse_symbols(cur: &mut Cursor) -> Result<Vec<Symbol>> {
    let mut symbols = Vec::new();
    while cur.peek() == Some('x') {
        cur.expect('x')?;
        let col = cur.column();
        let i = cur.uint()?;
        let i = u32::try_from(i)
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| Error::parse(col, "letter index must be in 1..=4294967295"))?;
        let starred = cur.eat('*');
        symbols.push(Symbol {
            letter: Letter(i),
            starred,
        });
    }
    if symbols.is_empty() {
        return Err(cur.error("expected a letter 'x<i>'"));
    }
    Ok(symbols)
}

impl FromStr for InvWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let symbols = parse_symbols(&mut cur)?;
        cur.finish()?;
        InvWord::new(symbols)
    }
}

/// An identity `lhs ≈ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: InvWord,
    pub rhs: InvWord,
}

impl Identity {
    pub fn new(lhs: InvWord, rhs: InvWord) -> Self {
        Identity { lhs, rhs }
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut l = self.lhs.letters();
        l.extend(self.rhs.letters());
        l
    }

    pub fn is_plain(&self) -> bool {
        self.lhs.is_plain() && self.rhs.is_plain()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let lhs = InvWord::new(parse_symbols(&mut cur)?)?;
        cur.expect('=')?;
        let rhs = InvWord::new(parse_symbols(&mut cur)?)?;
        cur.finish()?;
        Ok(Identity { lhs, rhs })
    }
}
