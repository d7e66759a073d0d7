use std::fmt;

use crate::error::{Error, Result};
use crate::parse::Cursor;

/// The abelian group `Z_{k_1} × ⋯ × Z_{k_m} × Z^r`, written additively.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Vec<u64>,
    rank: usize,
}

/// An element of an [`AbelianGroup`]: residues first, then free
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem(pub(crate) Vec<i64>);

impl GroupElem {
    pub fn coordinates(&self) -> &[i64] {
        &self.0
    }
}

impl AbelianGroup {
    pub fn new(orders: Vec<u64>, rank: usize) -> Result<Self> {
        if orders.iter().any(|&k| k == 0 || k > i64::MAX as u64) {
            return Err(Error::InvalidRees("cyclic orders must be positive".into()));
        }
        Ok(AbelianGroup { orders, rank })
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            orders: Vec::new(),
            rank: 0,
        }
    }

    pub fn cyclic(k: u64) -> Result<Self> {
        AbelianGroup::new(vec![k], 0)
    }

    pub fn integers() -> Self {
        AbelianGroup {
            orders: Vec::new(),
            rank: 1,
        }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn dim(&self) -> usize {
        self.orders.len() + self.rank
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of elements, or `None` if infinite or too large for `u64`.
    pub fn size(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        self.orders.iter().try_fold(1u64, |acc, &k| acc.checked_mul(k))
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.dim()])
    }

    /// Builds an element, reducing residues into `0..k_i`.
    pub fn element(&self, coordinates: Vec<i64>) -> Result<GroupElem> {
        if coordinates.len() != self.dim() {
            return Err(Error::InvalidRees(format!(
                "element has {} coordinates, group needs {}",
                coordinates.len(),
                self.dim()
            )));
        }
        Ok(self.normalize(coordinates))
    }

    fn normalize(&self, mut c: Vec<i64>) -> GroupElem {
        for (x, &k) in c.iter_mut().zip(&self.orders) {
            *x = x.rem_euclid(k as i64);
        }
        GroupElem(c)
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        g.0.len() == self.dim()
            && g.0.iter().zip(&self.orders).all(|(&x, &k)| 0 <= x && (x as u64) < k)
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let sum = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.normalize(sum)
    }

    pub fn negate(&self, a: &GroupElem) -> GroupElem {
        self.normalize(a.0.iter().map(|x| -x).collect())
    }

    /// `n·g` (written `g^n` multiplicatively).
    pub fn times(&self, g: &GroupElem, n: i64) -> GroupElem {
        self.normalize(g.0.iter().map(|x| x * n).collect())
    }

    pub fn is_identity(&self, g: &GroupElem) -> bool {
        g.0.iter().all(|&x| x == 0)
    }

    /// Order of `g`: `None` when infinite (some free coordinate non-zero),
    /// otherwise the lcm of `k_i / gcd(k_i, g_i)`.
    pub fn order(&self, g: &GroupElem) -> Option<u64> {
        let (finite, free) = g.0.split_at(self.orders.len());
        if free.iter().any(|&x| x != 0) {
            return None;
        }
        Some(
            finite
                .iter()
                .zip(&self.orders)
                .map(|(&x, &k)| k / gcd(k, x.unsigned_abs()))
                .fold(1, lcm),
        )
    }

    /// All elements in lexicographic order of coordinates, for finite
    /// groups.
    pub fn elements(&self) -> Result<Vec<GroupElem>> {
        let size = self
            .size()
            .filter(|&s| s <= 1 << 20)
            .ok_or_else(|| Error::InvalidRees("group is infinite or too large to list".into()))?;
        let mut out = Vec::with_capacity(size as usize);
        let mut c = vec![0i64; self.orders.len()];
        loop {
            out.push(GroupElem(c.clone()));
            let mut pos = c.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                c[pos] += 1;
                if (c[pos] as u64) < self.orders[pos] {
                    break;
                }
                c[pos] = 0;
            }
        }
    }

    /// `e`, or `(a1,...,am|b1,...,br)`. When the group has no finite
    /// factors, a single placeholder `0` before `|` is accepted.
    pub(crate) fn parse_element(&self, cur: &mut Cursor) -> Result<GroupElem> {
        if cur.eat('e') {
            return Ok(self.identity());
        }
        let col = cur.column();
        cur.expect('(')?;
        let mut finite = Vec::new();
        if cur.peek() != Some('|') {
            loop {
                finite.push(cur.int()?);
                if !cur.eat(',') {
                    break;
                }
            }
        }
        let mut free = Vec::new();
        if cur.eat('|') && cur.peek() != Some(')') {
            loop {
                free.push(cur.int()?);
                if !cur.eat(',') {
                    break;
                }
            }
        }
        cur.expect(')')?;
        if self.orders.is_empty() && finite == [0] {
            finite.clear();
        }
        if finite.len() != self.orders.len() || free.len() != self.rank {
            return Err(Error::parse(
                col,
                format!(
                    "group element needs {} residues and {} free coordinates",
                    self.orders.len(),
                    self.rank
                ),
            ));
        }
        finite.extend(free);
        Ok(self.normalize(finite))
    }

    pub fn parse_element_str(&self, s: &str) -> Result<GroupElem> {
        let mut cur = Cursor::new(s);
        let g = self.parse_element(&mut cur)?;
        cur.finish()?;
        Ok(g)
    }

    pub fn format_element(&self, g: &GroupElem) -> String {
        if self.is_identity(g) {
            return "e".into();
        }
        let (finite, free) = g.0.split_at(self.orders.len());
        let join = |xs: &[i64]| xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        format!("({}|{})", join(finite), join(free))
    }
}

impl std::str::FromStr for AbelianGroup {
    type Err = Error;

    /// `trivial` (or `E`), or factors `Z<k>` / `Z` joined by `x`, e.g.
    /// `Z4`, `Z`, `Z2xZ3xZ`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "trivial" || s == "E" || s == "1" {
            return Ok(AbelianGroup::trivial());
        }
        let mut orders = Vec::new();
        let mut rank = 0;
        let mut column = 1;
        for factor in s.split(['x', '×']) {
            let digits = factor.trim().strip_prefix('Z').ok_or_else(|| {
                Error::parse(column, format!("expected a factor 'Z' or 'Z<k>', found '{factor}'"))
            })?;
            if digits.is_empty() {
                rank += 1;
            } else {
                let k: u64 = digits
                    .parse()
                    .ok()
                    .filter(|&k| k > 0)
                    .ok_or_else(|| Error::parse(column + 1, format!("bad cyclic order '{digits}'")))?;
                orders.push(k);
            }
            column += factor.chars().count() + 1;
        }
        // free factors are listed after finite ones internally
        AbelianGroup::new(orders, rank)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 0 {
            return f.write_str("trivial");
        }
        let factors: Vec<String> = self
            .orders
            .iter()
            .map(|k| format!("Z{k}"))
            .chain(std::iter::repeat_n("Z".to_string(), self.rank))
            .collect();
        f.write_str(&factors.join("x"))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
