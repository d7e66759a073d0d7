//! Independent reference implementations used as oracles.
#![allow(dead_code)]

use diagmon::{Chip, Matching};
use rand::seq::SliceRandom;
use rand::Rng;

/// Product of two chips by gluing both diagrams into one graph and reading
/// off its connected components with a union-find.
pub fn glue_product(a: &Chip, b: &Chip) -> Chip {
    let n = a.degree();
    assert_eq!(n, b.degree());
    // vertices: a's pins 0..2n, b's pins 2n..4n
    let mut parent: Vec<usize> = (0..4 * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut union = |x: usize, y: usize| {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent[rx] = ry;
    };
    for (k, &p) in a.matching().partner_array().iter().enumerate() {
        union(k, p);
    }
    for (k, &p) in b.matching().partner_array().iter().enumerate() {
        union(2 * n + k, 2 * n + p);
    }
    for i in 0..n {
        union(n + i, 2 * n + i);
    }
    // boundary: a's left pins and b's right pins
    let boundary: Vec<usize> = (0..n).chain(3 * n..4 * n).collect();
    let position = |v: usize| if v < n { v } else { v - 2 * n };
    let mut partner = vec![usize::MAX; 2 * n];
    let mut roots_with_boundary = std::collections::HashSet::new();
    for &u in &boundary {
        let ru = find(&mut parent, u);
        roots_with_boundary.insert(ru);
        for &v in &boundary {
            if u != v && find(&mut parent, v) == ru {
                partner[position(u)] = position(v);
            }
        }
    }
    let mut roots = std::collections::HashSet::new();
    for v in 0..4 * n {
        roots.insert(find(&mut parent, v));
    }
    let loops = roots.difference(&roots_with_boundary).count() as u64;
    let m = Matching::from_partner(partner).expect("glued graph yields a matching");
    Chip::from_matching(m, a.circles() + b.circles() + loops)
}

/// Uniformly random perfect matching on `2n` pins.
pub fn random_matching<R: Rng>(rng: &mut R, n: usize) -> Matching {
    let mut pins: Vec<usize> = (0..2 * n).collect();
    pins.shuffle(rng);
    let mut partner = vec![0; 2 * n];
    for pair in pins.chunks(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    Matching::from_partner(partner).unwrap()
}

pub fn random_chip<R: Rng>(rng: &mut R, n: usize, max_circles: u64) -> Chip {
    Chip::from_matching(random_matching(rng, n), rng.gen_range(0..=max_circles))
}

/// Position of a pin index on the boundary walk 1..n, n'..1'.
fn boundary_position(k: usize, n: usize) -> usize {
    if k < n {
        k
    } else {
        3 * n - 1 - k
    }
}

/// Planarity by checking every pair of blocks for interleaving.
pub fn no_interleaving(m: &Matching) -> bool {
    let n = m.degree();
    let blocks: Vec<(usize, usize)> = m
        .partner_array()
        .iter()
        .enumerate()
        .filter(|(k, &p)| *k < p)
        .map(|(k, &p)| {
            let (x, y) = (boundary_position(k, n), boundary_position(p, n));
            (x.min(y), x.max(y))
        })
        .collect();
    blocks.iter().all(|&(a, b)| {
        blocks
            .iter()
            .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
    })
}

/// All perfect matchings on `2n` pins, by pairing the lowest free pin.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    fn go(free: &mut Vec<usize>, partner: &mut Vec<usize>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching::from_partner(partner.clone()).unwrap());
            return;
        }
        let first = free.remove(0);
        for j in 0..free.len() {
            let other = free.remove(j);
            partner[first] = other;
            partner[other] = first;
            go(free, partner, out);
            free.insert(j, other);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    go(&mut (0..2 * n).collect(), &mut vec![0; 2 * n], &mut out);
    out
}

pub fn count_matchings(n: usize) -> u64 {
    // (2n-1)!! as a recursion: the first pin picks one of 2n-1 partners
    if n == 0 {
        1
    } else {
        (2 * n as u64 - 1) * count_matchings(n - 1)
    }
}

pub fn catalan(n: u64) -> u64 {
    let mut c = 1u64;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Chip from a list of 1-based pins, negative numbers meaning primed.
pub fn chip(n: usize, pairs: &[(i64, i64)], d: u64) -> Chip {
    let index = |p: i64| if p > 0 { p as usize - 1 } else { n + (-p) as usize - 1 };
    let mut partner = vec![usize::MAX; 2 * n];
    for &(a, b) in pairs {
        partner[index(a)] = index(b);
        partner[index(b)] = index(a);
    }
    Chip::from_matching(Matching::from_partner(partner).unwrap(), d)
}
