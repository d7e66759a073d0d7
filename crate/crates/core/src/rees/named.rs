//! The small semigroups that recur in the theory: the Brandt monoid, the
//! twisted semilattice and `A_2`.

use super::group::AbelianGroup;
use super::matrix::SandwichMatrix;
use super::semigroup::ReesMatrixSemigroup;
use crate::monoid::FiniteSemigroup;

/// The 6-element Brandt monoid `B_2^1` on `1, a, b, ab, ba, 0` with
/// `a² = b² = 0`, `aba = a`, `bab = b`.
///
/// The involution fixes `1, a, b, 0` and swaps `ab` with `ba`; it is the
/// one induced by reflection on `K_3/C`.
pub fn brandt_b21() -> FiniteSemigroup {
    // non-identity, non-zero elements are alternating words of length 1 or 2
    let labels = ["1", "a", "b", "ab", "ba", "0"];
    let word = |x: usize| -> Option<&'static str> {
        match x {
            1 => Some("a"),
            2 => Some("b"),
            3 => Some("ab"),
            4 => Some("ba"),
            _ => None,
        }
    };
    let mul = |x: usize, y: usize| -> usize {
        match (x, y) {
            (5, _) | (_, 5) => 5,
            (0, y) => y,
            (x, 0) => x,
            _ => {
                let (u, v) = (word(x).unwrap(), word(y).unwrap());
                if u.ends_with(&v[..1]) {
                    return 5;
                }
                // alternating word: determined by first and last letters
                let first = &u[..1];
                let last = &v[v.len() - 1..];
                let reduced = if first == last { first.to_string() } else { format!("{first}{last}") };
                labels.iter().position(|l| *l == reduced).unwrap()
            }
        }
    };
    let table = (0..6).map(|x| (0..6).map(|y| mul(x, y)).collect()).collect();
    FiniteSemigroup::new(labels.iter().map(|s| s.to_string()).collect(), table)
        .and_then(|s| s.with_involution(vec![0, 1, 2, 4, 3, 5]))
        .expect("Brandt monoid is a valid involution monoid")
}

/// The twisted semilattice on `e, f, 0`: `e² = e`, `f² = f`, every other
/// product is `0`, and `e* = f`.
pub fn tsl() -> FiniteSemigroup {
    let labels = vec!["e".to_string(), "f".to_string(), "0".to_string()];
    let table = vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]];
    FiniteSemigroup::new(labels, table)
        .and_then(|s| s.with_involution(vec![1, 0, 2]))
        .expect("TSL is a valid involution semigroup")
}

/// `A_2` as a Rees matrix semigroup over the trivial group with sandwich
/// matrix `((e,e),(e,0))`.
pub fn a2_rees() -> ReesMatrixSemigroup {
    let e = AbelianGroup::trivial();
    let p = SandwichMatrix::parse("e,e;e,0", &e).expect("valid literal");
    ReesMatrixSemigroup::new(e, p)
}

/// The 5-element semigroup `A_2`, with the transpose involution.
pub fn a2() -> FiniteSemigroup {
    a2_rees().to_finite().expect("A_2 is finite")
}

/// `B_2` as a Rees matrix semigroup over the trivial group with sandwich
/// matrix `((0,e),(e,0))`.
pub fn brandt_rees() -> ReesMatrixSemigroup {
    let e = AbelianGroup::trivial();
    let p = SandwichMatrix::parse("0,e;e,0", &e).expect("valid literal");
    ReesMatrixSemigroup::new(e, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brandt_relations() {
        let b = brandt_b21();
        let [one, a, bb, ab, ba, zero] = [0, 1, 2, 3, 4, 5];
        assert_eq!(b.mul(a, a), zero);
        assert_eq!(b.mul(bb, bb), zero);
        assert_eq!(b.mul(b.mul(a, bb), a), a);
        assert_eq!(b.mul(b.mul(bb, a), bb), bb);
        assert_eq!(b.mul(ab, ab), ab);
        assert_eq!(b.inv(ab), Some(ba));
        assert_eq!(b.identity(), Some(one));
        assert_eq!(b.zero(), Some(zero));
    }

    #[test]
    fn tsl_products() {
        let t = tsl();
        assert_eq!(t.mul(0, 0), 0);
        assert_eq!(t.mul(0, 1), 2);
        assert_eq!(t.inv(0), Some(1));
    }

    #[test]
    fn a2_has_five_elements() {
        let a = a2();
        assert_eq!(a.size(), 5);
        assert_eq!(a.zero(), Some(4));
        assert_eq!(a.adjoin_identity().size(), 6);
    }
}
