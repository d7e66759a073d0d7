use super::group::{AbelianGroup, GroupElem};
use crate::error::{Error, Result};
use crate::parse::Cursor;

/// A `Λ × I` matrix over `G ∪ {0}`; `None` is the zero symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichMatrix {
    rows: Vec<Vec<Option<GroupElem>>>,
}

impl SandwichMatrix {
    pub fn new(group: &AbelianGroup, rows: Vec<Vec<Option<GroupElem>>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidRees(
                "sandwich matrix must be a non-empty rectangle".into(),
            ));
        }
        if rows.iter().flatten().flatten().any(|g| !group.contains(g)) {
            return Err(Error::InvalidRees("entry is not an element of the group".into()));
        }
        Ok(SandwichMatrix { rows })
    }

    /// Rows separated by `;`, entries by `,`; `0` is the zero symbol, `e`
    /// the group identity, otherwise `(a1,...,am|b1,...,br)`.
    pub fn parse(literal: &str, group: &AbelianGroup) -> Result<Self> {
        let mut cur = Cursor::new(literal);
        let mut rows = Vec::new();
        loop {
            let mut row = Vec::new();
            loop {
                if cur.eat('0') {
                    row.push(None);
                } else {
                    row.push(Some(group.parse_element(&mut cur)?));
                }
                if !cur.eat(',') {
                    break;
                }
            }
            if let Some(first) = rows.first() {
                let first: &Vec<Option<GroupElem>> = first;
                if first.len() != row.len() {
                    return Err(cur.error(format!(
                        "row {} has {} entries, expected {}",
                        rows.len() + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
            if !cur.eat(';') {
                break;
            }
        }
        cur.finish()?;
        SandwichMatrix::new(group, rows)
    }

    /// `|Λ|`.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// `|I|`.
    pub fn column_count(&self) -> usize {
        self.rows[0].len()
    }

    /// `p_{λ i}`.
    pub fn entry(&self, lambda: usize, i: usize) -> Option<&GroupElem> {
        self.rows[lambda][i].as_ref()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.row_count();
        n == self.column_count()
            && (0..n).all(|a| (0..n).all(|b| self.rows[a][b] == self.rows[b][a]))
    }

    /// Every non-zero entry replaced by the identity of the trivial group.
    pub fn collapsed(&self) -> SandwichMatrix {
        SandwichMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|g| g.as_ref().map(|_| GroupElem(Vec::new()))).collect())
                .collect(),
        }
    }

    pub fn format(&self, group: &AbelianGroup) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|g| g.as_ref().map_or("0".to_string(), |g| group.format_element(g)))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_form_three_over_integers() {
        let z = AbelianGroup::integers();
        let p = SandwichMatrix::parse("e,e;e,(0|1)", &z).unwrap();
        assert_eq!(p.row_count(), 2);
        assert_eq!(p.entry(1, 1), Some(&z.element(vec![1]).unwrap()));
        assert_eq!(p.format(&z), "e,e;e,(|1)");
        assert!(p.is_symmetric());
    }

    #[test]
    fn rejects_ragged_rows() {
        let e = AbelianGroup::trivial();
        assert!(SandwichMatrix::parse("e,e;e", &e).is_err());
        assert!(SandwichMatrix::parse("e,0;0,e", &e).is_ok());
        assert!(SandwichMatrix::parse("e,x", &e).is_err());
    }
}
