//! The chip literal `W<n>:<pin>-<pin>,...;<circles>`, e.g. `W3:1-2,1'-2',3-3';0`.

use std::collections::HashSet;
use std::str::FromStr;

use super::chip::Chip;
use super::matching::Pin;
use crate::error::{Error, Result};
use crate::parse::Cursor;

fn pin(cur: &mut Cursor, n: usize) -> Result<Pin> {
    let col = cur.column();
    let i = cur.usize()?;
    if i == 0 || i > n {
        return Err(Error::parse(col, format!("pin {i} out of range 1..={n}")));
    }
    Ok(if cur.eat('\'') {
        Pin::Right(i)
    } else {
        Pin::Left(i)
    })
}

pub fn parse_chip(input: &str) -> Result<Chip> {
    let mut cur = Cursor::new(input);
    cur.expect('W')?;
    let col = cur.column();
    let n = cur.usize()?;
    if n == 0 {
        return Err(Error::parse(col, "degree must be positive"));
    }
    cur.expect(':')?;
    let mut pairs = Vec::with_capacity(n);
    let mut seen = HashSet::new();
    loop {
        let mut ends = [Pin::Left(1); 2];
        for (k, end) in ends.iter_mut().enumerate() {
            if k == 1 {
                cur.expect('-')?;
            }
            let col = cur.column();
            *end = pin(&mut cur, n)?;
            if !seen.insert(*end) {
                return Err(Error::parse(col, format!("pin {} is used twice", *end)));
            }
        }
        pairs.push((ends[0], ends[1]));
        if !cur.eat(',') {
            break;
        }
    }
    let end_col = cur.column();
    cur.expect(';')?;
    if cur.peek() == Some('-') {
        return Err(cur.error("circle count must be non-negative"));
    }
    let circles = cur.uint()?;
    cur.finish()?;
    Chip::new(n, &pairs, circles).map_err(|e| Error::parse(end_col, e.to_string()))
}

impl FromStr for Chip {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_chip(s)
    }
}
