use crate::diagram::Matching;
use crate::error::{Error, Result};

pub const DEFAULT_BRAUER_BOUND: usize = 7;
pub const DEFAULT_JONES_BOUND: usize = 10;

/// All `(2n-1)!!` perfect matchings of degree `n`, sorted by partner array.
pub fn enumerate_brauer(n: usize) -> Result<Vec<Matching>> {
    enumerate_brauer_bounded(n, DEFAULT_BRAUER_BOUND)
}

pub fn enumerate_brauer_bounded(n: usize, bound: usize) -> Result<Vec<Matching>> {
    check_degree("Brauer enumeration", n, bound)?;
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; 2 * n];
    all_matchings(&mut partner, &mut out);
    out.sort();
    Ok(out)
}

fn all_matchings(partner: &mut [usize], out: &mut Vec<Matching>) {
    let Some(k) = partner.iter().position(|&p| p == usize::MAX) else {
        out.push(Matching::from_partner_unchecked(partner.to_vec()));
        return;
    };
    for j in k + 1..partner.len() {
        if partner[j] == usize::MAX {
            partner[k] = j;
            partner[j] = k;
            all_matchings(partner, out);
            partner[j] = usize::MAX;
        }
    }
    partner[k] = usize::MAX;
}

/// All planar matchings of degree `n` (the Jones monoid `J_n`), sorted by
/// partner array. Generated directly as non-crossing matchings of the
/// boundary circle, so the count is the Catalan number.
pub fn enumerate_jones(n: usize) -> Result<Vec<Matching>> {
    enumerate_jones_bounded(n, DEFAULT_JONES_BOUND)
}

pub fn enumerate_jones_bounded(n: usize, bound: usize) -> Result<Vec<Matching>> {
    check_degree("Jones enumeration", n, bound)?;
    let mut arcs = Vec::new();
    let mut out = Vec::new();
    non_crossing(0, 2 * n, &mut arcs, &mut |arcs| {
        // boundary position -> pin index
        let pin = |p: usize| if p < n { p } else { 3 * n - 1 - p };
        let mut partner = vec![0; 2 * n];
        for &(a, b) in arcs {
            partner[pin(a)] = pin(b);
            partner[pin(b)] = pin(a);
        }
        out.push(Matching::from_partner_unchecked(partner));
    });
    out.sort();
    Ok(out)
}

/// Calls `emit` with every non-crossing perfect matching of positions
/// `lo..hi`, appended to `arcs`.
fn non_crossing(
    lo: usize,
    hi: usize,
    arcs: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if lo >= hi {
        emit(arcs);
        return;
    }
    for j in (lo + 1..hi).step_by(2) {
        arcs.push((lo, j));
        let depth = arcs.len();
        // match inside (lo, j) first, then the rest after j
        non_crossing(lo + 1, j, arcs, &mut |inner| {
            let mut inner = inner.to_vec();
            non_crossing(j + 1, hi, &mut inner, emit);
        });
        arcs.truncate(depth - 1);
    }
}

fn check_degree(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidMatching("degree must be positive".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what,
            degree: n,
            bound,
        });
    }
    Ok(())
}
