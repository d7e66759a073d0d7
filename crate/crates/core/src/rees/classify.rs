use std::fmt;

use super::group::AbelianGroup;
use super::matrix::SandwichMatrix;

/// The three 2×2 patterns that certify the hypothesis of the Rees matrix
/// theorem (rows are `Λ`, columns are `I`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubmatrixForm {
    /// `((a,b),(c,0))` with `a, b, c` in `G`.
    OneZero,
    /// `((0,b),(c,0))` with `b, c` in `G`.
    AntiDiagonal,
    /// `((e,e),(e,d))` with `d` of infinite order.
    InfiniteCorner,
}

impl SubmatrixForm {
    pub fn number(self) -> u8 {
        match self {
            SubmatrixForm::OneZero => 1,
            SubmatrixForm::AntiDiagonal => 2,
            SubmatrixForm::InfiniteCorner => 3,
        }
    }
}

/// Where the pattern sits: `rows[0], rows[1]` of `Λ` and `columns[0],
/// columns[1]` of `I`, in the order that matches the form (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub form: SubmatrixForm,
    pub rows: [usize; 2],
    pub columns: [usize; 2],
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "form {} at rows {},{} columns {},{}",
            self.form.number(),
            self.rows[0] + 1,
            self.rows[1] + 1,
            self.columns[0] + 1,
            self.columns[1] + 1
        )
    }
}

/// Scans ordered row pairs, then ordered column pairs, then the forms in
/// order, and returns the first certificate.
pub fn nfb_submatrix_classify(p: &SandwichMatrix, group: &AbelianGroup) -> Option<Certificate> {
    let (rows, cols) = (p.row_count(), p.column_count());
    for r0 in 0..rows {
        for r1 in (0..rows).filter(|&r| r != r0) {
            for c0 in 0..cols {
                for c1 in (0..cols).filter(|&c| c != c0) {
                    let tl = p.entry(r0, c0);
                    let tr = p.entry(r0, c1);
                    let bl = p.entry(r1, c0);
                    let br = p.entry(r1, c1);
                    let form = match (tl, tr, bl, br) {
                        (Some(_), Some(_), Some(_), None) => Some(SubmatrixForm::OneZero),
                        (None, Some(_), Some(_), None) => Some(SubmatrixForm::AntiDiagonal),
                        (Some(a), Some(b), Some(c), Some(d))
                            if group.is_identity(a)
                                && group.is_identity(b)
                                && group.is_identity(c)
                                && group.order(d).is_none() =>
                        {
                            Some(SubmatrixForm::InfiniteCorner)
                        }
                        _ => None,
                    };
                    if let Some(form) = form {
                        return Some(Certificate {
                            form,
                            rows: [r0, r1],
                            columns: [c0, c1],
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(literal: &str, group: &str) -> Option<Certificate> {
        let g: AbelianGroup = group.parse().unwrap();
        nfb_submatrix_classify(&SandwichMatrix::parse(literal, &g).unwrap(), &g)
    }

    #[test]
    fn three_forms() {
        let c = classify("e,e;e,(0|1)", "Z").unwrap();
        assert_eq!(c.form, SubmatrixForm::InfiniteCorner);
        assert_eq!((c.rows, c.columns), ([0, 1], [0, 1]));
        assert_eq!(classify("0,e;e,0", "trivial").unwrap().form, SubmatrixForm::AntiDiagonal);
        assert_eq!(classify("(1),(2);(3),0", "Z4").unwrap().form, SubmatrixForm::OneZero);
        assert_eq!(classify("e,e;e,e", "Z"), None);
    }

    #[test]
    fn finite_order_corner_is_not_a_certificate() {
        assert_eq!(classify("e,e;e,(1)", "Z6"), None);
        assert_eq!(classify("e,e;e,(1|0)", "Z2xZ"), None);
        assert!(classify("e,e;e,(1|3)", "Z2xZ").is_some());
    }

    #[test]
    fn zero_position_is_found_by_permuting() {
        let c = classify("0,e;e,e", "trivial").unwrap();
        assert_eq!(c.form, SubmatrixForm::OneZero);
        assert_eq!((c.rows, c.columns), ([1, 0], [1, 0]));
    }
}
