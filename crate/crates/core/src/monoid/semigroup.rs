use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::structure::Structure;

/// A finite semigroup given by its Cayley table, with optional involution,
/// identity and zero.
///
/// Elements are the indices `0..size()`; `labels` only name them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    labels: Vec<String>,
    table: Vec<usize>,
    involution: Option<Vec<usize>>,
    identity: Option<usize>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table, checking closure and
    /// associativity. Identity and zero are detected automatically.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let k = labels.len();
        if table.len() != k || table.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidTable(format!("table must be {k}x{k}")));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().find(|&&x| x >= k) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        let s = Self::from_flat_unchecked(labels, flat);
        if let Some((x, y, z)) = s.associativity_failure() {
            return Err(Error::InvalidTable(format!(
                "not associative: ({x}*{y})*{z} != {x}*({y}*{z})"
            )));
        }
        Ok(s)
    }

    /// Trusted constructor for tables computed from an associative operation.
    pub(crate) fn from_flat_unchecked(labels: Vec<String>, table: Vec<usize>) -> Self {
        let mut s = FiniteSemigroup {
            labels,
            table,
            involution: None,
            identity: None,
            zero: None,
        };
        s.identity = s.find_identity();
        s.zero = s.find_zero();
        s
    }

    /// Attaches a unary table after checking `x** = x` and `(xy)* = y*x*`.
    pub fn with_involution(mut self, involution: Vec<usize>) -> Result<Self> {
        let k = self.size();
        if involution.len() != k || involution.iter().any(|&x| x >= k) {
            return Err(Error::InvalidTable("involution must map 0..k to 0..k".into()));
        }
        for x in 0..k {
            if involution[involution[x]] != x {
                return Err(Error::InvalidTable(format!("involution is not involutive at {x}")));
            }
            for y in 0..k {
                if involution[self.mul(x, y)] != self.mul(involution[y], involution[x]) {
                    return Err(Error::InvalidTable(format!(
                        "involution is not an anti-automorphism at ({x}, {y})"
                    )));
                }
            }
        }
        self.involution = Some(involution);
        Ok(self)
    }

    pub fn without_involution(&self) -> Self {
        FiniteSemigroup {
            involution: None,
            ..self.clone()
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size() + y]
    }

    pub fn inv(&self, x: usize) -> Option<usize> {
        self.involution.as_ref().map(|t| t[x])
    }

    pub fn involution_table(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn row(&self, x: usize) -> &[usize] {
        let k = self.size();
        &self.table[x * k..(x + 1) * k]
    }

    /// All `x` with `x·x = x`.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.size();
        (0..k).all(|x| (0..k).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let k = self.size();
        for x in 0..k {
            for y in 0..k {
                let xy = self.mul(x, y);
                for z in 0..k {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    fn find_identity(&self) -> Option<usize> {
        let k = self.size();
        (0..k).find(|&e| (0..k).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    fn find_zero(&self) -> Option<usize> {
        let k = self.size();
        (0..k).find(|&z| (0..k).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// `S^1`: a fresh identity (labelled `1`, index 0) is prepended even if
    /// `S` already has one.
    pub fn adjoin_identity(&self) -> Self {
        let k = self.size();
        let mut labels = Vec::with_capacity(k + 1);
        labels.push("1".to_string());
        labels.extend(self.labels.iter().cloned());
        let mut table = Vec::with_capacity((k + 1) * (k + 1));
        for x in 0..=k {
            for y in 0..=k {
                table.push(match (x, y) {
                    (0, y) => y,
                    (x, 0) => x,
                    (x, y) => self.mul(x - 1, y - 1) + 1,
                });
            }
        }
        let mut s = Self::from_flat_unchecked(labels, table);
        s.identity = Some(0);
        s.involution = self.involution.as_ref().map(|inv| {
            std::iter::once(0)
                .chain(inv.iter().map(|&x| x + 1))
                .collect()
        });
        s
    }

    /// The subsemigroup on `members` (which must be closed under
    /// multiplication), re-indexed in the given order.
    pub fn restrict(&self, members: &[usize]) -> Result<Self> {
        let mut position = vec![usize::MAX; self.size()];
        for (new, &old) in members.iter().enumerate() {
            position[old] = new;
        }
        let mut table = Vec::with_capacity(members.len() * members.len());
        for &x in members {
            for &y in members {
                let p = position[self.mul(x, y)];
                if p == usize::MAX {
                    return Err(Error::InvalidTable("subset is not closed".into()));
                }
                table.push(p);
            }
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let mut s = Self::from_flat_unchecked(labels, table);
        if let Some(inv) = &self.involution {
            let t: Option<Vec<usize>> = members
                .iter()
                .map(|&x| Some(position[inv[x]]).filter(|&p| p != usize::MAX))
                .collect();
            s.involution = t;
        }
        Ok(s)
    }

    /// Plain-text form: `k`, then `k` table rows, then optional `inv:`,
    /// `one:` and `zero:` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let k = self.size();
        writeln!(out, "{k}").unwrap();
        for x in 0..k {
            let row: Vec<String> = self.row(x).iter().map(usize::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        if let Some(inv) = &self.involution {
            let row: Vec<String> = inv.iter().map(usize::to_string).collect();
            writeln!(out, "inv: {}", row.join(" ")).unwrap();
        }
        if let Some(e) = self.identity {
            writeln!(out, "one: {e}").unwrap();
        }
        if let Some(z) = self.zero {
            writeln!(out, "zero: {z}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err = |line: usize, message: String| Error::Parse {
            line,
            column: 1,
            message,
        };
        let numbers = |line: usize, s: &str| -> Result<Vec<usize>> {
            s.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err(line, format!("'{t}' is not an index")))
                })
                .collect()
        };

        let (line, first) = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty table".into()))?;
        let k: usize = first
            .parse()
            .map_err(|_| parse_err(line, format!("expected element count, found '{first}'")))?;
        if k == 0 {
            return Err(parse_err(line, "a semigroup must be non-empty".into()));
        }
        let mut table = Vec::with_capacity(k);
        for _ in 0..k {
            let (line, row) = lines
                .next()
                .ok_or_else(|| parse_err(line, format!("expected {k} table rows")))?;
            let row = numbers(line, row)?;
            if row.len() != k {
                return Err(parse_err(line, format!("expected {k} entries, found {}", row.len())));
            }
            table.push(row);
        }
        let labels = (0..k).map(|x| x.to_string()).collect();
        let mut s = FiniteSemigroup::new(labels, table)?;
        for (line, rest) in lines {
            let (key, value) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line, format!("unexpected line '{rest}'")))?;
            let values = numbers(line, value)?;
            match key.trim() {
                "inv" => s = s.with_involution(values)?,
                "one" | "zero" => {
                    let [x] = values[..] else {
                        return Err(parse_err(line, format!("'{key}' takes one index")));
                    };
                    let found = if key.trim() == "one" { s.identity } else { s.zero };
                    if found != Some(x) {
                        return Err(parse_err(line, format!("{x} is not the {}", key.trim())));
                    }
                }
                other => return Err(parse_err(line, format!("unknown key '{other}'"))),
            }
        }
        Ok(s)
    }

    /// Replaces the labels, e.g. after loading from text.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::InvalidTable("label count differs from size".into()));
        }
        self.labels = labels;
        Ok(self)
    }
}

impl Structure for FiniteSemigroup {
    type Elem = usize;

    fn multiply(&self, a: &usize, b: &usize) -> Result<usize> {
        let k = self.size();
        for &x in [a, b] {
            if x >= k {
                return Err(Error::OutOfRange {
                    what: "element",
                    index: x,
                    min: 0,
                    max: k - 1,
                });
            }
        }
        Ok(self.mul(*a, *b))
    }

    fn identity(&self) -> Option<usize> {
        self.identity
    }

    fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    fn involution(&self, a: &usize) -> Result<usize> {
        self.inv(*a).ok_or(Error::NoInvolution)
    }
}
