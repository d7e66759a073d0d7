//! Whitespace-insensitive scanner shared by the literal grammars.

use crate::error::{Error, Result};

pub(crate) struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
}

impl Cursor {
    pub(crate) fn new(input: &str) -> Self {
        let chars: Vec<(usize, char)> = input
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Cursor {
            chars,
            pos: 0,
            end_column: input.chars().count() + 1,
        }
    }

    pub(crate) fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(col, _)| col)
            .unwrap_or(self.end_column)
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        let message = message.into();
        match self.peek() {
            Some(c) => Error::parse(self.column(), format!("{message}, found '{c}'")),
            None => Error::parse(self.column(), format!("{message}, found end of input")),
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// An unsigned decimal integer.
    pub(crate) fn uint(&mut self) -> Result<u64> {
        let start = self.column();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(self.error("expected a non-negative integer"));
        }
        digits
            .parse()
            .map_err(|_| Error::parse(start, "integer does not fit in 64 bits"))
    }

    /// A signed decimal integer.
    pub(crate) fn int(&mut self) -> Result<i64> {
        let start = self.column();
        let negative = self.eat('-');
        let magnitude = self.uint()?;
        let value = i64::try_from(magnitude)
            .map_err(|_| Error::parse(start, "integer does not fit in 64 bits"))?;
        Ok(if negative { -value } else { value })
    }

    pub(crate) fn usize(&mut self) -> Result<usize> {
        let start = self.column();
        let v = self.uint()?;
        usize::try_from(v).map_err(|_| Error::parse(start, "integer too large"))
    }
}
