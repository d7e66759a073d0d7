//! Monoids named on the command line and letter assignments into them.

use std::fs;

use diagmon::rees::{a2, brandt_b21, tsl};
use diagmon::structure::{Involution, WireMonoid};
use diagmon::words::Assignment;
use diagmon::{Chip, FiniteSemigroup, Letter};

use crate::Failure;

pub enum Target {
    Kauffman(WireMonoid),
    Table(FiniteSemigroup),
}

/// `k<N>`, `b21`, `a2`, `tsl`, `table FILE`, or a bare path to a table file.
pub fn parse_target(tokens: &[String], involution: Option<Involution>) -> Result<Target, Failure> {
    let usage = || Failure::usage("expected k<N>, b21, a2, tsl, 'table FILE' or a table path");
    let (first, rest) = tokens.split_first().ok_or_else(usage)?;
    if first == "table" {
        let [path] = rest else { return Err(usage()) };
        return load_table(path).map(Target::Table);
    }
    if !rest.is_empty() {
        return Err(Failure::usage(format!("unexpected argument '{}'", rest[0])));
    }
    if let Some(n) = first.strip_prefix('k').or_else(|| first.strip_prefix('K')) {
        if let Ok(n) = n.parse::<usize>() {
            if n == 0 {
                return Err(Failure::usage("K_n needs n >= 1"));
            }
            return Ok(Target::Kauffman(WireMonoid { degree: n, involution }));
        }
    }
    let named = match first.as_str() {
        "b21" => Some(brandt_b21()),
        "a2" => Some(a2()),
        "tsl" => Some(tsl()),
        _ => None,
    };
    match named {
        Some(s) => Ok(Target::Table(s)),
        None => load_table(first).map(Target::Table),
    }
}

pub fn load_table(path: &str) -> Result<FiniteSemigroup, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read '{path}': {e}")))?;
    FiniteSemigroup::from_text(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

/// Splits `x1=v1,x2=v2` at each `x<k>=` that starts the string or follows a
/// comma or whitespace. Values may themselves contain commas (chip literals).
fn split_assignment(text: &str) -> Result<Vec<(Letter, String)>, Failure> {
    let bytes = text.as_bytes();
    let mut starts = Vec::new();
    for k in 0..bytes.len() {
        let boundary = k == 0 || matches!(bytes[k - 1], b',' | b' ' | b'\t');
        if !boundary || bytes[k] != b'x' {
            continue;
        }
        let digits = bytes[k + 1..].iter().take_while(|b| b.is_ascii_digit()).count();
        if digits > 0 && bytes.get(k + 1 + digits) == Some(&b'=') {
            starts.push((k, k + 1 + digits));
        }
    }
    if starts.first().map(|s| s.0) != Some(0) {
        return Err(Failure::usage(format!(
            "assignment must look like 'x1=VALUE,x2=VALUE', got '{text}'"
        )));
    }
    let mut out = Vec::new();
    for (j, &(k, eq)) in starts.iter().enumerate() {
        let end = starts.get(j + 1).map_or(text.len(), |s| s.0);
        let letter: u32 = text[k + 1..eq]
            .parse()
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| Failure::usage(format!("bad letter '{}'", &text[k..eq])))?;
        let value = text[eq + 1..end].trim_end_matches([',', ' ', '\t']).to_string();
        if value.is_empty() {
            return Err(Failure::usage(format!("x{letter} has an empty value")));
        }
        out.push((Letter(letter), value));
    }
    Ok(out)
}

/// A chip literal, or a product of `1`, `c` and `h<i>` such as `h1h2c`.
pub fn parse_kauffman_value(n: usize, text: &str) -> Result<Chip, Failure> {
    if text.starts_with('W') {
        let chip: Chip = text.parse().map_err(|e| Failure::input(e, Some(text)))?;
        if chip.degree() != n {
            return Err(Failure::usage(format!(
                "value '{text}' has degree {}, target has degree {n}",
                chip.degree()
            )));
        }
        return Ok(chip);
    }
    let mut acc = Chip::identity(n);
    let mut rest = text;
    while !rest.is_empty() {
        let factor = if let Some(r) = rest.strip_prefix('1') {
            rest = r;
            Chip::identity(n)
        } else if let Some(r) = rest.strip_prefix('c') {
            rest = r;
            Chip::circle(n)
        } else if let Some(r) = rest.strip_prefix('h') {
            let digits = r.chars().take_while(char::is_ascii_digit).count();
            let i: usize = r[..digits]
                .parse()
                .map_err(|_| Failure::usage(format!("'h' needs an index in '{text}'")))?;
            rest = &r[digits..];
            Chip::hook(n, i).map_err(|e| Failure::input(e, None))?
        } else {
            return Err(Failure::usage(format!(
                "cannot read '{text}': use a chip literal or a product of 1, c, h<i>"
            )));
        };
        acc = acc.multiply(&factor).map_err(|e| Failure::input(e, None))?;
    }
    Ok(acc)
}

/// An element label, or a 0-based index when no label matches.
pub fn parse_table_value(s: &FiniteSemigroup, text: &str) -> Result<usize, Failure> {
    s.index_of(text)
        .or_else(|| text.parse::<usize>().ok().filter(|&x| x < s.size()))
        .ok_or_else(|| {
            Failure::usage(format!(
                "'{text}' is neither a label ({}) nor an index below {}",
                s.labels().join(", "),
                s.size()
            ))
        })
}

pub fn kauffman_assignment(n: usize, text: &str) -> Result<Assignment<Chip>, Failure> {
    split_assignment(text)?
        .into_iter()
        .map(|(l, v)| Ok((l, parse_kauffman_value(n, &v)?)))
        .collect()
}

pub fn table_assignment(s: &FiniteSemigroup, text: &str) -> Result<Assignment<usize>, Failure> {
    split_assignment(text)?
        .into_iter()
        .map(|(l, v)| Ok((l, parse_table_value(s, &v)?)))
        .collect()
}
