use std::fmt;

use crate::error::{Error, Result};

/// A boundary pin of a chip, numbered from 1.
///
/// `Left(i)` is the pin `i`, `Right(i)` is the pin `i'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pin {
    Left(usize),
    Right(usize),
}

impl Pin {
    pub fn number(self) -> usize {
        match self {
            Pin::Left(i) | Pin::Right(i) => i,
        }
    }

    pub fn is_right(self) -> bool {
        matches!(self, Pin::Right(_))
    }

    /// Index in the partner array of a degree-`n` matching.
    pub fn index(self, n: usize) -> Result<usize> {
        let i = self.number();
        if i == 0 || i > n {
            return Err(Error::OutOfRange {
                what: "pin",
                index: i,
                min: 1,
                max: n,
            });
        }
        Ok(match self {
            Pin::Left(i) => i - 1,
            Pin::Right(i) => n + i - 1,
        })
    }

    pub fn from_index(k: usize, n: usize) -> Pin {
        if k < n {
            Pin::Left(k + 1)
        } else {
            Pin::Right(k - n + 1)
        }
    }

    /// Sort key of the literal format: `1 < 1' < 2 < 2' < ...`.
    pub(crate) fn literal_key(self) -> (usize, bool) {
        (self.number(), self.is_right())
    }
}

impl fmt::Display for Pin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pin::Left(i) => write!(f, "{i}"),
            Pin::Right(i) => write!(f, "{i}'"),
        }
    }
}

/// Classification of a wire by the sides of its two pins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WireKind {
    /// Joins two left pins.
    LWire,
    /// Joins two right pins.
    RWire,
    /// Joins a left pin with a right pin.
    TWire,
}

/// A partition of the `2n` pins `1..n, 1'..n'` into two-element blocks.
///
/// Stored as a fixed-point-free involution on pin indices: left pin `i` has
/// index `i - 1`, right pin `i'` has index `n + i - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    /// Builds a matching of degree `n` from a list of pin pairs covering
    /// every pin exactly once.
    pub fn new(n: usize, pairs: &[(Pin, Pin)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatching("degree must be positive".into()));
        }
        const FREE: usize = usize::MAX;
        let mut partner = vec![FREE; 2 * n];
        for &(p, q) in pairs {
            let (a, b) = (p.index(n)?, q.index(n)?);
            if a == b {
                return Err(Error::InvalidMatching(format!("pin {p} is joined to itself")));
            }
            for (k, pin) in [(a, p), (b, q)] {
                if partner[k] != FREE {
                    return Err(Error::InvalidMatching(format!("pin {pin} is used twice")));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(k) = partner.iter().position(|&x| x == FREE) {
            return Err(Error::InvalidMatching(format!(
                "pin {} is not covered",
                Pin::from_index(k, n)
            )));
        }
        Ok(Matching { partner })
    }

    /// Wraps a partner array after checking the involution invariants.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let len = partner.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::InvalidMatching(format!(
                "partner array length {len} is not a positive even number"
            )));
        }
        for (k, &p) in partner.iter().enumerate() {
            if p >= len || p == k || partner[p] != k {
                return Err(Error::InvalidMatching(format!(
                    "partner array is not a fixed-point-free involution at index {k}"
                )));
            }
        }
        Ok(Matching { partner })
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(Matching::from_partner(partner.clone()).is_ok());
        Matching { partner }
    }

    /// The matching `{j, j'}` for all `j`.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "degree must be positive");
        let partner = (0..2 * n).map(|k| (k + n) % (2 * n)).collect();
        Matching { partner }
    }

    pub fn degree(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner_array(&self) -> &[usize] {
        &self.partner
    }

    pub fn partner(&self, pin: Pin) -> Result<Pin> {
        let n = self.degree();
        Ok(Pin::from_index(self.partner[pin.index(n)?], n))
    }

    /// Blocks as index pairs `(a, b)` with `a < b`, ordered by `a`.
    pub fn index_blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(k, &p)| k < p)
            .map(|(k, &p)| (k, p))
    }

    /// Blocks in literal order: each pair sorted by `1 < 1' < 2 < ...`, and
    /// the list sorted by first pin.
    pub fn pin_pairs(&self) -> Vec<(Pin, Pin)> {
        let n = self.degree();
        let mut pairs: Vec<(Pin, Pin)> = self
            .index_blocks()
            .map(|(a, b)| {
                let (p, q) = (Pin::from_index(a, n), Pin::from_index(b, n));
                if p.literal_key() <= q.literal_key() {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        pairs.sort_by_key(|(p, _)| p.literal_key());
        pairs
    }

    pub fn wire_kind(&self, block: (Pin, Pin)) -> Result<WireKind> {
        let (p, q) = block;
        let n = self.degree();
        let (a, b) = (p.index(n)?, q.index(n)?);
        if self.partner[a] != b {
            return Err(Error::InvalidMatching(format!("{p}-{q} is not a block")));
        }
        Ok(match (p.is_right(), q.is_right()) {
            (false, false) => WireKind::LWire,
            (true, true) => WireKind::RWire,
            _ => WireKind::TWire,
        })
    }

    /// Mirror image: swaps `k` and `k'` for every `k`.
    pub fn star(&self) -> Self {
        let n = self.degree();
        let swap = |k: usize| if k < n { k + n } else { k - n };
        let mut partner = vec![0; 2 * n];
        for (k, &p) in self.partner.iter().enumerate() {
            partner[swap(k)] = swap(p);
        }
        Matching { partner }
    }

    /// Half-turn: left pin `i` goes to right pin `(n+1-i)'` and vice versa.
    pub fn rotate(&self) -> Self {
        let n = self.degree();
        let turn = |k: usize| 2 * n - 1 - k;
        let mut partner = vec![0; 2 * n];
        for (k, &p) in self.partner.iter().enumerate() {
            partner[turn(k)] = turn(p);
        }
        Matching { partner }
    }

    /// Whether no two blocks interleave in the boundary order
    /// `1, 2, ..., n, n', ..., 1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.degree();
        // boundary position of pin index k
        let position = |k: usize| if k < n { k } else { 3 * n - 1 - k };
        let mut at = vec![0usize; 2 * n];
        for k in 0..2 * n {
            at[position(k)] = k;
        }
        let mut stack = Vec::with_capacity(n);
        for &k in &at {
            let p = self.partner[k];
            if position(p) > position(k) {
                stack.push(k);
            } else if stack.pop() != Some(p) {
                return false;
            }
        }
        true
    }

    /// Places `top` straight wires before pin 1 and `bottom` after pin `n`.
    pub fn pad(&self, top: usize, bottom: usize) -> Self {
        let n = self.degree();
        let m = n + top + bottom;
        let mut partner = vec![0; 2 * m];
        let lift = |k: usize| if k < n { k + top } else { k - n + top + m };
        for (k, &p) in self.partner.iter().enumerate() {
            partner[lift(k)] = lift(p);
        }
        for j in (0..top).chain(top + n..m) {
            partner[j] = j + m;
            partner[j + m] = j;
        }
        Matching { partner }
    }

    /// Two disjoint copies: the original on pins `1..n`, a shifted copy on
    /// `n+1..2n`.
    pub fn double(&self) -> Self {
        let n = self.degree();
        let m = 2 * n;
        let lift = |k: usize, shift: usize| {
            if k < n {
                k + shift
            } else {
                k - n + m + shift
            }
        };
        let mut partner = vec![0; 2 * m];
        for shift in [0, n] {
            for (k, &p) in self.partner.iter().enumerate() {
                partner[lift(k, shift)] = lift(p, shift);
            }
        }
        Matching { partner }
    }

    /// Inserts a straight wire at position `n/2 + 1` of an even-degree
    /// matching.
    pub fn insert_middle(&self) -> Result<Self> {
        let n = self.degree();
        if !n.is_multiple_of(2) {
            return Err(Error::OddDegree(n));
        }
        let half = n / 2;
        let m = n + 1;
        let lift = |k: usize| {
            let (side, j) = if k < n { (0, k) } else { (m, k - n) };
            side + if j < half { j } else { j + 1 }
        };
        let mut partner = vec![0; 2 * m];
        for (k, &p) in self.partner.iter().enumerate() {
            partner[lift(k)] = lift(p);
        }
        partner[half] = half + m;
        partner[half + m] = half;
        Ok(Matching { partner })
    }

    /// Concatenates `self` with `other` along the shared interface.
    ///
    /// Returns the product matching and the number of closed loops that
    /// stay inside the interface.
    pub(crate) fn compose(&self, other: &Matching) -> Result<(Matching, u64)> {
        let n = self.degree();
        if other.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: other.degree(),
            });
        }
        let first = &self.partner;
        let second = &other.partner;
        let mut partner = vec![usize::MAX; 2 * n];
        let mut seen = vec![false; n];

        // A path entering the interface at node `m` from the first chip
        // continues through an l-wire of the second chip, then an r-wire of
        // the first chip, alternating until it leaves at a boundary pin.
        // Product pin indices: left pins 0..n from `self`, right pins
        // n..2n from `other`.
        let exit_from_interface = |mut m: usize, seen: &mut [bool], came_from_first: bool| {
            let mut in_second = came_from_first;
            loop {
                seen[m] = true;
                if in_second {
                    let q = second[m];
                    if q >= n {
                        return q;
                    }
                    m = q;
                } else {
                    let q = first[n + m];
                    if q < n {
                        return q;
                    }
                    m = q - n;
                }
                in_second = !in_second;
            }
        };

        for k in 0..n {
            if partner[k] != usize::MAX {
                continue;
            }
            let p = first[k];
            let end = if p < n {
                p
            } else {
                exit_from_interface(p - n, &mut seen, true)
            };
            partner[k] = end;
            partner[end] = k;
        }
        for k in n..2 * n {
            if partner[k] != usize::MAX {
                continue;
            }
            let p = second[k];
            let end = if p >= n {
                p
            } else {
                exit_from_interface(p, &mut seen, false)
            };
            partner[k] = end;
            partner[end] = k;
        }

        let mut loops = 0u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut m = start;
            loop {
                seen[m] = true;
                m = second[m];
                seen[m] = true;
                m = first[n + m] - n;
                if m == start {
                    break;
                }
            }
        }
        Ok((Matching { partner }, loops))
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, q)) in self.pin_pairs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}-{q}")?;
        }
        Ok(())
    }
}
