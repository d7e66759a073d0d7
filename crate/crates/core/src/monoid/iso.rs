use std::collections::BTreeSet;

use super::semigroup::FiniteSemigroup;

/// Isomorphism-invariant description of one element, used to prune the
/// candidate images of generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    is_identity: bool,
    is_zero: bool,
    idempotent: bool,
    fixed_by_involution: Option<bool>,
    /// index and period of the cyclic subsemigroup `<x>`
    index_period: (usize, usize),
    left_image: usize,
    right_image: usize,
}

fn signatures(s: &FiniteSemigroup) -> Vec<Signature> {
    let k = s.size();
    (0..k)
        .map(|x| {
            let mut powers = vec![x];
            let index_period = loop {
                let next = s.mul(*powers.last().unwrap(), x);
                if let Some(i) = powers.iter().position(|&p| p == next) {
                    break (i + 1, powers.len() - i);
                }
                powers.push(next);
            };
            let left_image: BTreeSet<usize> = (0..k).map(|y| s.mul(x, y)).collect();
            let right_image: BTreeSet<usize> = (0..k).map(|y| s.mul(y, x)).collect();
            Signature {
                is_identity: s.identity() == Some(x),
                is_zero: s.zero() == Some(x),
                idempotent: s.mul(x, x) == x,
                fixed_by_involution: s.inv(x).map(|i| i == x),
                index_period,
                left_image: left_image.len(),
                right_image: right_image.len(),
            }
        })
        .collect()
}

/// Greedy generating set together with a spanning description of every
/// element as `parent · generator`.
struct Generation {
    generators: Vec<usize>,
    /// For each element: `None` if it is a generator, otherwise
    /// `(parent, generator position)` with `element = parent · generator`.
    parent: Vec<Option<(usize, usize)>>,
    /// Elements in an order where parents precede children.
    order: Vec<usize>,
}

fn generate(s: &FiniteSemigroup, sig: &[Signature]) -> Generation {
    let k = s.size();
    let mut reached = vec![false; k];
    let mut parent = vec![None; k];
    let mut order = Vec::with_capacity(k);
    let mut generators = Vec::new();
    // rarer signatures first gives tighter candidate lists
    let mut by_rarity: Vec<usize> = (0..k).collect();
    by_rarity.sort_by_key(|&x| (sig.iter().filter(|t| **t == sig[x]).count(), x));
    for &g in &by_rarity {
        if reached[g] {
            continue;
        }
        generators.push(g);
        reached[g] = true;
        order.push(g);
        // extend the reached set: everything times every generator so far
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for (gi, &h) in generators.iter().enumerate() {
                let y = s.mul(x, h);
                if !reached[y] {
                    reached[y] = true;
                    parent[y] = Some((x, gi));
                    order.push(y);
                }
            }
            i += 1;
        }
    }
    Generation {
        generators,
        parent,
        order,
    }
}

/// Searches for a bijection `f` with `f(xy) = f(x)f(y)`, and `f(x*) = f(x)*`
/// when both sides carry an involution. Returns `f` as an index map, or
/// `None`. Structures where only one side has an involution are never
/// isomorphic.
pub fn is_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<usize>> {
    if s.size() != t.size()
        || s.involution_table().is_some() != t.involution_table().is_some()
    {
        return None;
    }
    let sig_s = signatures(s);
    let sig_t = signatures(t);
    let mut sorted_s = sig_s.clone();
    let mut sorted_t = sig_t.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }

    let gen = generate(s, &sig_s);
    let candidates: Vec<Vec<usize>> = gen
        .generators
        .iter()
        .map(|&g| {
            let mut c: Vec<usize> = (0..t.size()).filter(|&y| sig_t[y] == sig_s[g]).collect();
            // try the same index first so that equal tables map identically
            c.sort_by_key(|&y| (y != g, y));
            c
        })
        .collect();
    let mut images = vec![0; gen.generators.len()];
    search(s, t, &gen, &candidates, &mut images, 0)
}

fn search(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    gen: &Generation,
    candidates: &[Vec<usize>],
    images: &mut [usize],
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == images.len() {
        return extend(s, t, gen, images);
    }
    for &c in &candidates[depth] {
        if images[..depth].contains(&c) {
            continue;
        }
        images[depth] = c;
        if let Some(f) = search(s, t, gen, candidates, images, depth + 1) {
            return Some(f);
        }
    }
    None
}

fn extend(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    gen: &Generation,
    images: &[usize],
) -> Option<Vec<usize>> {
    let k = s.size();
    let mut f = vec![usize::MAX; k];
    for (gi, &g) in gen.generators.iter().enumerate() {
        f[g] = images[gi];
    }
    for &x in &gen.order {
        if let Some((p, gi)) = gen.parent[x] {
            f[x] = t.mul(f[p], images[gi]);
        }
    }
    let mut hit = vec![false; k];
    for &y in &f {
        if hit[y] {
            return None;
        }
        hit[y] = true;
    }
    for x in 0..k {
        for y in 0..k {
            if f[s.mul(x, y)] != t.mul(f[x], f[y]) {
                return None;
            }
        }
    }
    if let (Some(si), Some(ti)) = (s.involution_table(), t.involution_table()) {
        if (0..k).any(|x| f[si[x]] != ti[f[x]]) {
            return None;
        }
    }
    Some(f)
}
