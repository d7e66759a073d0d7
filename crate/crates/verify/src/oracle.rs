//! Reference computations kept apart from the library code they check.

use std::collections::HashSet;

use diagmon::{Chip, Matching};
use rand::seq::SliceRandom;
use rand::Rng;

/// Product by gluing both diagrams into one graph and reading off its
/// connected components with a union-find.
pub fn glue_product(a: &Chip, b: &Chip) -> Chip {
    let n = a.degree();
    let mut parent: Vec<usize> = (0..4 * n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (find(p, x), find(p, y));
        p[rx] = ry;
    };
    for (k, &q) in a.matching().partner_array().iter().enumerate() {
        union(&mut parent, k, q);
    }
    for (k, &q) in b.matching().partner_array().iter().enumerate() {
        union(&mut parent, 2 * n + k, 2 * n + q);
    }
    for i in 0..n {
        union(&mut parent, n + i, 2 * n + i);
    }
    let boundary: Vec<usize> = (0..n).chain(3 * n..4 * n).collect();
    let position = |v: usize| if v < n { v } else { v - 2 * n };
    let mut partner = vec![0; 2 * n];
    let mut open = HashSet::new();
    for &u in &boundary {
        let ru = find(&mut parent, u);
        open.insert(ru);
        for &v in &boundary {
            if u != v && find(&mut parent, v) == ru {
                partner[position(u)] = position(v);
            }
        }
    }
    let all: HashSet<usize> = (0..4 * n).map(|v| find(&mut parent, v)).collect();
    let loops = all.difference(&open).count() as u64;
    let m = Matching::from_partner(partner).expect("components pair the boundary");
    Chip::from_matching(m, a.circles() + b.circles() + loops)
}

pub fn random_chip<R: Rng>(rng: &mut R, n: usize, max_circles: u64) -> Chip {
    let mut pins: Vec<usize> = (0..2 * n).collect();
    pins.shuffle(rng);
    let mut partner = vec![0; 2 * n];
    for pair in pins.chunks(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    let m = Matching::from_partner(partner).expect("shuffled pairs form a matching");
    Chip::from_matching(m, rng.gen_range(0..=max_circles))
}

/// `(2n-1)!!` by the first pin choosing its partner.
pub fn count_matchings(n: u64) -> u64 {
    (1..=n).map(|k| 2 * k - 1).product()
}

pub fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Number of non-crossing matchings, found by pairing boundary positions
/// (the walk `1..n, n'..1'`) in order and rejecting a block as soon as it
/// interleaves an earlier one.
pub fn brute_planar_count(n: usize) -> u64 {
    fn go(free: &mut Vec<usize>, blocks: &mut Vec<(usize, usize)>) -> u64 {
        let Some(&first) = free.first() else {
            return 1;
        };
        let mut count = 0;
        for j in 1..free.len() {
            let other = free[j];
            // positions are already boundary positions, so first < other
            let crosses = blocks
                .iter()
                .any(|&(a, b)| (a < first && first < b && b < other) || (first < a && a < other && other < b));
            if crosses {
                continue;
            }
            free.remove(j);
            free.remove(0);
            blocks.push((first, other));
            count += go(free, blocks);
            blocks.pop();
            free.insert(0, first);
            free.insert(j, other);
        }
        count
    }
    go(&mut (0..2 * n).collect(), &mut Vec::new())
}
