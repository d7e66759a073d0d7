use std::collections::BTreeMap;

use diagmon::monoid::FiniteSemigroup;
use diagmon::rees::{a2, brandt_b21, tsl};
use diagmon::structure::{Involution, WireMonoid};
use diagmon::words::{
    evaluate, first_counterexample, isoterm_witnesses, refute_identity, refute_identity_in,
    satisfies_identity, word_star, zimin, zimin_fingerprint_k3, Assignment, FingerprintLetter,
    Symbol,
};
use diagmon::{Chip, Error, Identity, InvWord, Letter};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn word(s: &str) -> InvWord {
    s.parse().unwrap()
}

fn identity(s: &str) -> Identity {
    s.parse().unwrap()
}

/// `B_2^1` as 2×2 matrix units: `1 = I`, `a = E12`, `b = E21`,
/// `ab = E11`, `ba = E22`, `0`; the involution is the transpose composed
/// with the swap of `a` and `b`, i.e. it fixes `a`, `b` and swaps `E11`,
/// `E22`.
fn matrix_b21() -> Vec<[[u8; 2]; 2]> {
    vec![
        [[1, 0], [0, 1]],
        [[0, 1], [0, 0]],
        [[0, 0], [1, 0]],
        [[1, 0], [0, 0]],
        [[0, 0], [0, 1]],
        [[0, 0], [0, 0]],
    ]
}

fn matrix_mul(x: [[u8; 2]; 2], y: [[u8; 2]; 2]) -> [[u8; 2]; 2] {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = (0..2).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    z
}

#[test]
fn brandt_table_matches_matrix_units() {
    let b = brandt_b21();
    let m = matrix_b21();
    for x in 0..6 {
        for y in 0..6 {
            assert_eq!(m[b.mul(x, y)], matrix_mul(m[x], m[y]));
        }
    }
}

#[test]
fn brandt_and_xyxyx_against_xyx() {
    let m = matrix_b21();
    let mut holds = true;
    for x in &m {
        for y in &m {
            let xyx = matrix_mul(matrix_mul(*x, *y), *x);
            let xyxyx = matrix_mul(matrix_mul(xyx, *y), *x);
            holds &= xyx == xyxyx;
        }
    }
    let id = identity("x1 x2 x1 x2 x1 = x1 x2 x1");
    assert_eq!(satisfies_identity(&brandt_b21(), &id).unwrap(), holds);
    // golden: fails already at x1 = 1, x2 = a, where xyx = a but xyxyx = 0
    assert!(!holds);
    let w = first_counterexample(&brandt_b21(), &id).unwrap().unwrap();
    assert_eq!((w[&Letter(1)], w[&Letter(2)]), (0, 1));
}

#[test]
fn zimin_words_and_occurrences() {
    assert_eq!(zimin(1), word("x1"));
    assert_eq!(zimin(3), word("x1x2x1x3x1x2x1"));
    for n in 1..=8 {
        let z = zimin(n);
        assert_eq!(z.len(), (1 << n) - 1);
        for i in 1..=n {
            assert_eq!(z.occurrences(Letter(i)), 1 << (n - i));
        }
        let grown = z.concat(&InvWord::letter(n + 1)).concat(&z);
        assert_eq!(zimin(n + 1), grown);
    }
    assert_eq!(word("x1 x1*").occurrences(Letter(1)), 2);
    assert_eq!(word("x1 x1*").starred_occurrences(Letter(1)), 1);
}

#[test]
fn star_of_words() {
    assert_eq!(word_star(&word("x1 x2")), word("x2* x1*"));
    assert_eq!(word_star(&word("x3*")), word("x3"));
    let w = word("x1 x2* x3 x1");
    assert_eq!(word_star(&word_star(&w)), w);
}

#[test]
fn word_literal_errors() {
    assert!(matches!("x1 x2 = y".parse::<Identity>(), Err(Error::Parse { column: 9, .. })));
    assert!("x0".parse::<InvWord>().is_err());
    assert!("".parse::<InvWord>().is_err());
    assert_eq!(identity("x1x2=x2 x1").to_string(), "x1 x2 = x2 x1");
}

#[test]
fn evaluation_in_k3() {
    let k3 = WireMonoid::new(3);
    let x = Chip::hook(3, 2).unwrap();
    let one: Assignment<Chip> = [(Letter(1), x.clone())].into();
    assert_eq!(evaluate(&k3, &word("x1"), &one).unwrap(), x);
    assert_eq!(evaluate(&k3, &word("x2"), &one), Err(Error::MissingAssignment(2)));
    assert_eq!(evaluate(&k3, &word("x1*"), &one), Err(Error::NoInvolution));
    let k3r = WireMonoid::with_involution(3, Involution::Rotation);
    assert_eq!(evaluate(&k3r, &word("x1*"), &one).unwrap(), Chip::hook(3, 1).unwrap());
}

#[test]
fn zimin_substitutions_in_k3() {
    let k3 = WireMonoid::new(3);
    let c = Chip::circle(3);
    let h1 = Chip::hook(3, 1).unwrap();
    for n in 1..=6u32 {
        for i in 1..=n {
            let power = 1u64 << (n - i);
            let mut a: Assignment<Chip> = (1..=n).map(|k| (Letter(k), Chip::identity(3))).collect();
            a.insert(Letter(i), c.clone());
            let expected_c = c.pow(power).unwrap();
            assert_eq!(evaluate(&k3, &zimin(n), &a).unwrap(), expected_c);
            assert_eq!(zimin_fingerprint_k3(n, i, FingerprintLetter::Circle).unwrap(), expected_c);
            a.insert(Letter(i), h1.clone());
            let expected_h = c.pow(power - 1).unwrap().multiply(&h1).unwrap();
            assert_eq!(evaluate(&k3, &zimin(n), &a).unwrap(), expected_h);
            assert_eq!(zimin_fingerprint_k3(n, i, FingerprintLetter::Hook).unwrap(), expected_h);
        }
    }
    assert_eq!(zimin_fingerprint_k3(3, 3, FingerprintLetter::Circle).unwrap(), c);
    assert_eq!(
        zimin_fingerprint_k3(4, 2, FingerprintLetter::Circle).unwrap(),
        Chip::identity(3).with_circles(4)
    );
    assert!(zimin_fingerprint_k3(3, 4, FingerprintLetter::Circle).is_err());
    assert_eq!(zimin_fingerprint_k3(70, 1, FingerprintLetter::Circle), Err(Error::CircleOverflow));
}

#[test]
fn refutation_over_k3() {
    let k3 = WireMonoid::new(3);
    let gens = k3.kauffman_generators();
    let w = refute_identity(&k3, &gens, &identity("x1 x2 = x2 x1"), 1).unwrap().unwrap();
    assert_eq!(w[&Letter(1)], Chip::hook(3, 1).unwrap());
    assert_eq!(w[&Letter(2)], Chip::hook(3, 2).unwrap());
    let id = identity("x1 x2 x1 = x1 x1 x2");
    let w = refute_identity(&k3, &gens, &id, 1).unwrap().unwrap();
    assert_ne!(evaluate(&k3, &id.lhs, &w).unwrap(), evaluate(&k3, &id.rhs, &w).unwrap());
    assert_eq!(refute_identity(&k3, &gens, &identity("x1 = x1"), 3).unwrap(), None);
    for n in 3..=6 {
        let k = WireMonoid::new(n);
        for i in 1..n - 1 {
            let domains: BTreeMap<Letter, Vec<Chip>> = [
                (Letter(1), vec![Chip::hook(n, i).unwrap()]),
                (Letter(2), vec![Chip::hook(n, i + 1).unwrap()]),
            ]
            .into();
            for id in ["x1 x2 x1 = x1", "x2 x1 x2 = x2"] {
                assert_eq!(refute_identity_in(&k, &identity(id), &domains).unwrap(), None);
            }
        }
    }
}

#[test]
fn involutory_identity_needs_an_involution() {
    let plain = brandt_b21().without_involution();
    assert_eq!(satisfies_identity(&plain, &identity("x1 = x1*")), Err(Error::NoInvolution));
    assert!(!satisfies_identity(&tsl(), &identity("x1 = x1*")).unwrap());
    assert!(satisfies_identity(&brandt_b21(), &identity("x1 x1* x1 = x1 x1* x1 x1* x1")).unwrap());
}

#[test]
fn first_counterexample_is_lexicographic() {
    let b = brandt_b21();
    // x1 x2 = x2 x1 first fails at x1 = a (index 1), x2 = b (index 2)
    let w = first_counterexample(&b, &identity("x1 x2 = x2 x1")).unwrap().unwrap();
    assert_eq!((w[&Letter(1)], w[&Letter(2)]), (1, 2));
}

fn trivial_monoid() -> FiniteSemigroup {
    FiniteSemigroup::from_text("1\n0\n").unwrap()
}

#[test]
fn isoterm_small_cases() {
    let found = isoterm_witnesses(&trivial_monoid(), &word("x1"), 2).unwrap();
    assert!(found.contains(&word("x1 x1")));
    let found = isoterm_witnesses(&tsl(), &word("x1"), 1).unwrap();
    assert!(!found.contains(&word("x1*")));
    assert!(found.is_empty());
    // x^3 = x^2 holds in B_2^1
    let found = isoterm_witnesses(&brandt_b21(), &word("x1 x1"), 3).unwrap();
    assert!(found.contains(&word("x1 x1 x1")));
}

/// Every word up to `max_len` over the given symbols, checked one by one.
fn brute_isoterm(m: &FiniteSemigroup, v: &InvWord, symbols: &[Symbol], max_len: usize) -> Vec<InvWord> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Symbol>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                symbols.iter().map(move |s| {
                    let mut w = w.clone();
                    w.push(*s);
                    w
                })
            })
            .collect();
        for w in &layer {
            let w = InvWord::new(w.clone()).unwrap();
            if &w != v && satisfies_identity(m, &Identity::new(v.clone(), w.clone())).unwrap() {
                out.push(w);
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[test]
fn isoterm_search_matches_brute_force() {
    let plain = |ls: &[u32]| ls.iter().map(|&l| Symbol::plain(l)).collect::<Vec<_>>();
    let with_stars = |ls: &[u32]| {
        ls.iter()
            .flat_map(|&l| [Symbol::plain(l), Symbol::starred(l)])
            .collect::<Vec<_>>()
    };
    let b = brandt_b21();
    let a = a2();
    let cases: Vec<(&FiniteSemigroup, &str, Vec<Symbol>, usize)> = vec![
        (&b, "x1 x1", with_stars(&[1, 2]), 4),
        (&b, "x1 x2 x1", with_stars(&[1, 2, 3]), 4),
        (&a, "x1 x2", with_stars(&[1, 2, 3]), 4),
        (&a, "x1 x1*", with_stars(&[1, 2]), 5),
    ];
    for (m, v, symbols, len) in cases {
        let v = word(v);
        assert_eq!(isoterm_witnesses(m, &v, len).unwrap(), brute_isoterm(m, &v, &symbols, len), "{v}");
    }
    let plain_b = b.without_involution();
    let v = word("x1 x2");
    assert_eq!(
        isoterm_witnesses(&plain_b, &v, 5).unwrap(),
        brute_isoterm(&plain_b, &v, &plain(&[1, 2, 3]), 5)
    );
}

#[test]
fn zimin_words_are_isoterms_for_brandt() {
    let b = brandt_b21();
    assert!(isoterm_witnesses(&b, &zimin(2), 6).unwrap().is_empty());
    assert!(isoterm_witnesses(&b, &zimin(3), 8).unwrap().is_empty());
}

fn random_identity<R: Rng>(rng: &mut R, starred: bool) -> Identity {
    let side = |rng: &mut R| {
        let len = rng.gen_range(1..=4);
        let symbols = (0..len)
            .map(|_| Symbol {
                letter: Letter(rng.gen_range(1..=3)),
                starred: starred && rng.gen_bool(0.3),
            })
            .collect();
        InvWord::new(symbols).unwrap()
    };
    Identity::new(side(rng), side(rng))
}

#[test]
fn exhaustive_check_agrees_with_refutation() {
    let mut rng = StdRng::seed_from_u64(11);
    for m in [brandt_b21(), a2(), tsl()] {
        let gens: Vec<usize> = (0..m.size()).collect();
        for _ in 0..50 {
            let id = random_identity(&mut rng, true);
            let holds = satisfies_identity(&m, &id).unwrap();
            let refuted = refute_identity(&m, &gens, &id, m.size()).unwrap();
            assert_eq!(holds, refuted.is_none(), "{id}");
        }
    }
}

fn b21_word() -> impl Strategy<Value = (InvWord, InvWord, Vec<usize>)> {
    let sym = (1u32..=3, any::<bool>()).prop_map(|(l, s)| Symbol { letter: Letter(l), starred: s });
    (
        prop::collection::vec(sym.clone(), 1..6),
        prop::collection::vec(sym, 1..6),
        prop::collection::vec(0usize..6, 3),
    )
        .prop_map(|(u, v, a)| (InvWord::new(u).unwrap(), InvWord::new(v).unwrap(), a))
}

proptest! {
    #[test]
    fn evaluation_is_multiplicative((u, v, values) in b21_word()) {
        let b = brandt_b21();
        let a: Assignment<usize> = values.iter().enumerate().map(|(i, &x)| (Letter(i as u32 + 1), x)).collect();
        let eu = evaluate(&b, &u, &a).unwrap();
        let ev = evaluate(&b, &v, &a).unwrap();
        prop_assert_eq!(evaluate(&b, &u.concat(&v), &a).unwrap(), b.mul(eu, ev));
        prop_assert_eq!(evaluate(&b, &word_star(&u), &a).unwrap(), b.inv(eu).unwrap());
    }
}
