use super::classify::{Certificate, SubmatrixForm};
use super::group::GroupElem;
use super::semigroup::{RMElement, ReesMatrixSemigroup};
use crate::error::{Error, Result};
use crate::monoid::{rees_quotient_by_predicate, Closure};

/// For a `((e,e),(e,d))` certificate with `d` of infinite order: the
/// subsemigroup `R` of triples `(k, d^n, ν)` with `n ≥ 0` over the two
/// certified indices on each side, and its ideal `J` where `n ≥ 1`.
///
/// Both sets are infinite; they are exposed as membership predicates and as
/// truncations to exponents `n ≤ bound`.
#[derive(Clone, Debug)]
pub struct InfiniteCornerWitness<'a> {
    semigroup: &'a ReesMatrixSemigroup,
    columns: [usize; 2],
    rows: [usize; 2],
    d: GroupElem,
}

impl<'a> InfiniteCornerWitness<'a> {
    pub fn new(semigroup: &'a ReesMatrixSemigroup, cert: &Certificate) -> Result<Self> {
        if cert.form != SubmatrixForm::InfiniteCorner {
            return Err(Error::InvalidRees("certificate is not of the infinite-corner form".into()));
        }
        let d = semigroup
            .matrix()
            .entry(cert.rows[1], cert.columns[1])
            .cloned()
            .ok_or_else(|| Error::InvalidRees("corner entry is zero".into()))?;
        if semigroup.group().order(&d).is_some() {
            return Err(Error::InvalidRees("corner entry has finite order".into()));
        }
        Ok(InfiniteCornerWitness {
            semigroup,
            columns: cert.columns,
            rows: cert.rows,
            d,
        })
    }

    pub fn corner(&self) -> &GroupElem {
        &self.d
    }

    /// `n` with `g = d^n`, if `n ≥ 0` exists.
    pub fn exponent(&self, g: &GroupElem) -> Option<u64> {
        let group = self.semigroup.group();
        let free = group.orders().len();
        let c = (free..self.d.coordinates().len()).find(|&c| self.d.coordinates()[c] != 0)?;
        let (x, y) = (g.coordinates()[c], self.d.coordinates()[c]);
        if x % y != 0 || x / y < 0 {
            return None;
        }
        let n = x / y;
        (group.times(&self.d, n) == *g).then_some(n as u64)
    }

    fn triple_exponent(&self, a: &RMElement) -> Option<u64> {
        match a {
            RMElement::Triple { i, g, lambda }
                if self.columns.contains(i) && self.rows.contains(lambda) =>
            {
                self.exponent(g)
            }
            _ => None,
        }
    }

    pub fn in_r(&self, a: &RMElement) -> bool {
        self.triple_exponent(a).is_some()
    }

    pub fn in_j(&self, a: &RMElement) -> bool {
        self.triple_exponent(a).is_some_and(|n| n >= 1)
    }

    /// Elements of `R` with exponent at most `bound`, ordered by exponent,
    /// then column, then row.
    pub fn truncated_r(&self, bound: u64) -> Vec<RMElement> {
        let group = self.semigroup.group();
        let mut out = Vec::new();
        for n in 0..=bound {
            let g = group.times(&self.d, n as i64);
            for &i in &self.columns {
                for &lambda in &self.rows {
                    out.push(RMElement::triple(i, g.clone(), lambda));
                }
            }
        }
        out
    }

    pub fn truncated_j(&self, bound: u64) -> Vec<RMElement> {
        self.truncated_r(bound).into_iter().filter(|a| self.in_j(a)).collect()
    }

    /// Checks, inside the truncation, that `R` is closed under products and
    /// that `J` absorbs multiplication by `R` on both sides. Products whose
    /// exponent leaves the truncation are still checked for membership.
    pub fn check_closure(&self, bound: u64) -> Result<bool> {
        let r = self.truncated_r(bound);
        for a in &r {
            for b in &r {
                let ab = self.semigroup.rm_multiply(a, b)?;
                if !self.in_r(&ab) {
                    return Ok(false);
                }
                if (self.in_j(a) || self.in_j(b)) && !self.in_j(&ab) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `R/J` over the four exponent-0 representatives, then `0`.
    pub fn quotient(&self) -> Result<Closure<Option<RMElement>>> {
        let reps = self.truncated_r(0);
        let mut q = rees_quotient_by_predicate(self.semigroup, &reps, |a| Ok(self.in_j(a)), false)?;
        let labels = reps
            .iter()
            .map(|a| self.semigroup.format(a))
            .chain(std::iter::once("0".to_string()))
            .collect();
        q.semigroup = q.semigroup.with_labels(labels)?;
        Ok(q)
    }
}
