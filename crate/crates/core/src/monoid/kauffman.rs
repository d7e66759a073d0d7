use std::collections::HashSet;

use super::closure::Closure;
use super::ideal::rees_quotient_by_predicate;
use crate::diagram::{Chip, Matching};
use crate::error::{Error, Result};
use crate::structure::{Involution, WireMonoid};

/// For a Brauer idempotent `π`, the number `m` of circles created by
/// `(π;0)(π;0) = (π;m)`.
pub fn fiber_increment(pi: &Matching) -> Result<u64> {
    let (square, loops) = pi.compose(pi)?;
    if &square != pi {
        return Err(Error::NotIdempotent);
    }
    Ok(loops)
}

/// Membership in the ideal of `K_n` generated by the circle `c`.
///
/// Every planar `(π;d)` equals `(π;0)·c^d` and products never lose
/// circles, so the ideal is exactly the planar chips with `d ≥ 1`.
pub fn kauffman_ideal_c_member(xi: &Chip) -> Result<bool> {
    if !xi.is_planar() {
        return Err(Error::NotPlanar);
    }
    Ok(xi.circles() >= 1)
}

/// Circle-free elements of `K_n`, each with a shortest hook word, in
/// breadth-first order over words in `h_1, ..., h_{n-1}`.
pub fn circle_free_kauffman(n: usize) -> Result<Vec<(String, Chip)>> {
    let hooks: Vec<Chip> = (1..n).map(|i| Chip::hook(n, i)).collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    let mut out = vec![("1".to_string(), Chip::identity(n))];
    seen.insert(Chip::identity(n));
    let mut next = 0;
    while next < out.len() {
        let (word, x) = out[next].clone();
        for (i, h) in hooks.iter().enumerate() {
            let y = x.multiply(h)?;
            if y.circles() == 0 && seen.insert(y.clone()) {
                let label = if word == "1" {
                    format!("h{}", i + 1)
                } else {
                    format!("{word}h{}", i + 1)
                };
                out.push((label, y));
            }
        }
        next += 1;
    }
    Ok(out)
}

/// The Rees quotient `K_n / C` by the ideal generated by the circle,
/// realized on the circle-free chips plus `0`. With an involution, the
/// induced involution of the quotient is attached.
pub fn kauffman_quotient(n: usize, involution: Option<Involution>) -> Result<Closure<Option<Chip>>> {
    let reps = circle_free_kauffman(n)?;
    let monoid = WireMonoid {
        degree: n,
        involution,
    };
    let chips: Vec<Chip> = reps.iter().map(|(_, c)| c.clone()).collect();
    let mut q = rees_quotient_by_predicate(&monoid, &chips, kauffman_ideal_c_member, involution.is_some())?;
    let labels = reps
        .into_iter()
        .map(|(l, _)| l)
        .chain(std::iter::once("0".to_string()))
        .collect();
    q.semigroup = q.semigroup.with_labels(labels)?;
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_circle_free_part() {
        let reps = circle_free_kauffman(3).unwrap();
        let labels: Vec<&str> = reps.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(labels, ["1", "h1", "h2", "h1h2", "h2h1"]);
    }

    #[test]
    fn fiber_increment_examples() {
        assert_eq!(fiber_increment(&Matching::identity(3)).unwrap(), 0);
        assert_eq!(fiber_increment(&Chip::hook(3, 1).unwrap().forget()).unwrap(), 1);
        assert_eq!(fiber_increment(&Chip::alpha(2).forget()), Err(Error::NotIdempotent));
    }

    #[test]
    fn circle_membership() {
        assert!(kauffman_ideal_c_member(&Chip::circle(3)).unwrap());
        assert!(!kauffman_ideal_c_member(&Chip::hook(3, 1).unwrap()).unwrap());
        assert_eq!(kauffman_ideal_c_member(&Chip::alpha(2)), Err(Error::NotPlanar));
    }
}
