use diagmon::monoid::is_isomorphic;
use diagmon::rees::{
    a2, a2_rees, brandt_b21, brandt_rees, nfb_submatrix_classify, tsl, AbelianGroup, GroupElem,
    InfiniteCornerWitness, RMElement, ReesMatrixSemigroup, SandwichMatrix, SubmatrixForm,
};
use diagmon::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_elem<R: Rng>(rng: &mut R, g: &AbelianGroup) -> GroupElem {
    let mut coords: Vec<i64> = g.orders().iter().map(|&k| rng.gen_range(0..k as i64)).collect();
    for _ in 0..g.rank() {
        coords.push(rng.gen_range(-3..=3));
    }
    g.element(coords).unwrap()
}

fn random_element<R: Rng>(rng: &mut R, s: &ReesMatrixSemigroup) -> RMElement {
    match rng.gen_range(0..10) {
        0 => RMElement::Zero,
        1 if s.has_adjoined_identity() => RMElement::One,
        _ => RMElement::triple(
            rng.gen_range(0..s.index_count()),
            random_elem(rng, s.group()),
            rng.gen_range(0..s.lambda_count()),
        ),
    }
}

/// Matrix with the zero pattern given by the bits of `pattern`.
fn patterned<R: Rng>(rng: &mut R, g: &AbelianGroup, rows: usize, cols: usize, pattern: u32) -> SandwichMatrix {
    let entries = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| (pattern >> (r * cols + c) & 1 == 1).then(|| random_elem(rng, g)))
                .collect()
        })
        .collect();
    SandwichMatrix::new(g, entries).unwrap()
}

#[test]
fn associativity_is_exhaustive_on_small_cases() {
    let mut rng = StdRng::seed_from_u64(3);
    let groups = ["trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2"];
    for g in groups {
        let g: AbelianGroup = g.parse().unwrap();
        for (rows, cols) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for pattern in 0..1u32 << (rows * cols) {
                let s = ReesMatrixSemigroup::new(g.clone(), patterned(&mut rng, &g, rows, cols, pattern));
                let t = s.to_finite().unwrap();
                assert_eq!(t.associativity_failure(), None, "{s}");
                assert_eq!(t.size(), rows * cols * g.size().unwrap() as usize + 1);
                let t1 = s.adjoin_identity().to_finite().unwrap();
                assert_eq!(t1.associativity_failure(), None);
                assert_eq!(t1.identity(), Some(0));
            }
        }
    }
}

#[test]
fn associativity_over_the_integers() {
    let z = AbelianGroup::integers();
    let p = SandwichMatrix::parse("0,(|2);(|-1),0", &z).unwrap();
    let s = ReesMatrixSemigroup::new(z, p).adjoin_identity();
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..1000 {
        let (a, b, c) = (random_element(&mut rng, &s), random_element(&mut rng, &s), random_element(&mut rng, &s));
        let left = s.rm_multiply(&s.rm_multiply(&a, &b).unwrap(), &c).unwrap();
        let right = s.rm_multiply(&a, &s.rm_multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn products_in_a2() {
    let s = a2_rees();
    let e = AbelianGroup::trivial().identity();
    let x = RMElement::triple(0, e.clone(), 1);
    let y = RMElement::triple(1, e.clone(), 0);
    assert_eq!(s.rm_multiply(&x, &y).unwrap(), RMElement::Zero);
    assert_eq!(s.rm_multiply(&y, &x).unwrap(), RMElement::triple(1, e.clone(), 1));
    assert_eq!(s.rm_multiply(&x, &RMElement::Zero).unwrap(), RMElement::Zero);
    assert!(matches!(
        s.rm_multiply(&RMElement::triple(2, e.clone(), 0), &x),
        Err(Error::OutOfRange { .. })
    ));
    assert!(s.rm_multiply(&RMElement::One, &x).is_err());
    let s1 = s.adjoin_identity();
    assert_eq!(s1.rm_multiply(&RMElement::One, &RMElement::One).unwrap(), RMElement::One);
    assert_eq!(s1.to_finite().unwrap().size(), 6);
    assert_eq!(a2().size(), 5);
}

#[test]
fn brandt_monoid_from_the_rees_construction() {
    let rm = brandt_rees().adjoin_identity();
    let t = rm.to_finite().unwrap();
    let b = brandt_b21();
    let e = AbelianGroup::trivial().identity();
    let at = |i, l| t.index_of(&rm.format(&RMElement::triple(i, e.clone(), l))).unwrap();
    // 1 ↦ 1, 0 ↦ 0, (i,λ) ↦ a, (j,μ) ↦ b, (i,μ) ↦ ab, (j,λ) ↦ ba
    let mut map = vec![0; 6];
    map[t.index_of("1").unwrap()] = b.index_of("1").unwrap();
    map[t.index_of("0").unwrap()] = b.index_of("0").unwrap();
    map[at(0, 0)] = b.index_of("a").unwrap();
    map[at(1, 1)] = b.index_of("b").unwrap();
    map[at(0, 1)] = b.index_of("ab").unwrap();
    map[at(1, 0)] = b.index_of("ba").unwrap();
    for x in 0..6 {
        assert_eq!(map[t.inv(x).unwrap()], b.inv(map[x]).unwrap());
        for y in 0..6 {
            assert_eq!(map[t.mul(x, y)], b.mul(map[x], map[y]));
        }
    }
    assert!(is_isomorphic(&t, &b).is_some());
}

#[test]
fn named_semigroups_are_valid() {
    for s in [brandt_b21(), a2(), tsl(), a2().adjoin_identity()] {
        assert_eq!(s.associativity_failure(), None);
        let inv = s.involution_table().unwrap();
        for x in 0..s.size() {
            assert_eq!(inv[inv[x]], x);
            for y in 0..s.size() {
                assert_eq!(inv[s.mul(x, y)], s.mul(inv[y], inv[x]));
            }
        }
    }
}

#[test]
fn tsl_embeds_in_the_brandt_monoid() {
    let t = tsl();
    let b = brandt_b21();
    let map = [b.index_of("ab").unwrap(), b.index_of("ba").unwrap(), b.index_of("0").unwrap()];
    for x in 0..3 {
        assert_eq!(map[t.inv(x).unwrap()], b.inv(map[x]).unwrap());
        for y in 0..3 {
            assert_eq!(map[t.mul(x, y)], b.mul(map[x], map[y]));
        }
    }
    let sub = b.restrict(&map).unwrap();
    assert_eq!(is_isomorphic(&sub, &t), Some(vec![0, 1, 2]));
}

#[test]
fn collapse_is_a_homomorphism_with_commutative_idempotent_fibers() {
    let mut rng = StdRng::seed_from_u64(9);
    let z4: AbelianGroup = "Z4".parse().unwrap();
    let z = AbelianGroup::integers();
    let cases = [
        (z4.clone(), SandwichMatrix::parse("(1),0;(3),(2)", &z4).unwrap()),
        (z.clone(), SandwichMatrix::parse("e,e;e,(|1)", &z).unwrap()),
    ];
    for (g, p) in cases {
        let s = ReesMatrixSemigroup::new(g, p).adjoin_identity();
        let t = s.collapse_to_trivial();
        for _ in 0..1000 {
            let (a, b) = (random_element(&mut rng, &s), random_element(&mut rng, &s));
            let ab = s.rm_multiply(&a, &b).unwrap();
            assert_eq!(s.collapse(&ab), t.rm_multiply(&s.collapse(&a), &s.collapse(&b)).unwrap());
        }
        // every element of the collapsed monoid has a preimage
        for x in t.elements().unwrap() {
            let pre = match &x {
                RMElement::Triple { i, lambda, .. } => RMElement::triple(*i, s.group().identity(), *lambda),
                other => other.clone(),
            };
            assert_eq!(s.collapse(&pre), x);
        }
        // fibers over idempotent triples commute
        for x in t.elements().unwrap() {
            if t.rm_multiply(&x, &x).unwrap() != x {
                continue;
            }
            if let RMElement::Triple { i, lambda, .. } = x {
                for _ in 0..200 {
                    let a = RMElement::triple(i, random_elem(&mut rng, s.group()), lambda);
                    let b = RMElement::triple(i, random_elem(&mut rng, s.group()), lambda);
                    assert_eq!(s.rm_multiply(&a, &b).unwrap(), s.rm_multiply(&b, &a).unwrap());
                }
            }
        }
    }
    // over Z_4 the fibers are finite, so check all pairs
    let s = ReesMatrixSemigroup::new(z4.clone(), SandwichMatrix::parse("(1),0;(3),(2)", &z4).unwrap());
    let t = s.collapse_to_trivial();
    let all = s.elements().unwrap();
    for x in t.elements().unwrap() {
        if t.rm_multiply(&x, &x).unwrap() != x {
            continue;
        }
        let fiber: Vec<&RMElement> = all.iter().filter(|a| s.collapse(a) == x).collect();
        for a in &fiber {
            for b in &fiber {
                assert_eq!(s.rm_multiply(a, b).unwrap(), s.rm_multiply(b, a).unwrap());
            }
        }
    }
}

#[test]
fn transpose_involution_over_z6() {
    let mut rng = StdRng::seed_from_u64(13);
    let z6 = AbelianGroup::cyclic(6).unwrap();
    let mut rows = vec![vec![None; 3]; 3];
    for r in 0..3 {
        for c in r..3 {
            let v = rng.gen_bool(0.7).then(|| random_elem(&mut rng, &z6));
            rows[r][c] = v.clone();
            rows[c][r] = v;
        }
    }
    let s = ReesMatrixSemigroup::new(z6.clone(), SandwichMatrix::new(&z6, rows).unwrap());
    assert!(s.is_symmetric());
    let g = z6.element(vec![5]).unwrap();
    assert_eq!(
        s.rm_involution(&RMElement::triple(0, g.clone(), 2)).unwrap(),
        RMElement::triple(2, g, 0)
    );
    assert_eq!(s.rm_involution(&RMElement::Zero).unwrap(), RMElement::Zero);
    for _ in 0..1000 {
        let (a, b) = (random_element(&mut rng, &s), random_element(&mut rng, &s));
        let ab = s.rm_multiply(&a, &b).unwrap();
        let star = |x: &RMElement| s.rm_involution(x).unwrap();
        assert_eq!(star(&ab), s.rm_multiply(&star(&b), &star(&a)).unwrap());
        assert_eq!(star(&star(&a)), a);
    }
    let lopsided = ReesMatrixSemigroup::new(z6.clone(), SandwichMatrix::parse("e,0;(1),e", &z6).unwrap());
    assert_eq!(lopsided.rm_involution(&RMElement::Zero), Err(Error::NotSymmetric));
}

#[test]
fn classifier_on_the_three_forms() {
    let z = AbelianGroup::integers();
    let classify = |lit: &str, g: &AbelianGroup| nfb_submatrix_classify(&SandwichMatrix::parse(lit, g).unwrap(), g);
    assert_eq!(classify("e,e;e,(0|1)", &z).unwrap().form, SubmatrixForm::InfiniteCorner);
    assert_eq!(classify("0,(|2);(|5),0", &z).unwrap().form, SubmatrixForm::AntiDiagonal);
    assert_eq!(classify("(|1),(|2);(|3),0", &z).unwrap().form, SubmatrixForm::OneZero);
    for g in ["Z", "trivial", "Z3", "Z2xZ"] {
        let g: AbelianGroup = g.parse().unwrap();
        assert_eq!(classify("e,e;e,e", &g), None);
    }
    let c = classify("e,e,e;e,e,e;e,e,(|-2)", &z).unwrap();
    assert_eq!((c.form, c.rows, c.columns), (SubmatrixForm::InfiniteCorner, [0, 2], [0, 2]));
    assert_eq!(c.to_string(), "form 3 at rows 1,3 columns 1,3");
}

#[test]
fn infinite_corner_quotient_is_a2() {
    let z = AbelianGroup::integers();
    let p = SandwichMatrix::parse("e,e;e,(|1)", &z).unwrap();
    let cert = nfb_submatrix_classify(&p, &z).unwrap();
    let s = ReesMatrixSemigroup::new(z.clone(), p);
    let w = InfiniteCornerWitness::new(&s, &cert).unwrap();
    for bound in [0, 1, 3, 6] {
        assert!(w.check_closure(bound).unwrap());
        assert_eq!(w.truncated_r(bound).len() as u64, 4 * (bound + 1));
        assert_eq!(w.truncated_j(bound).len() as u64, 4 * bound);
    }
    let d = z.element(vec![1]).unwrap();
    assert!(w.in_j(&RMElement::triple(1, d.clone(), 0)));
    assert!(!w.in_r(&RMElement::triple(1, z.negate(&d), 0)));
    assert!(!w.in_r(&RMElement::Zero));
    let q = w.quotient().unwrap();
    assert_eq!(q.semigroup.size(), 5);
    assert!(is_isomorphic(&q.semigroup, &a2().without_involution()).is_some());

    let p = SandwichMatrix::parse("0,e;e,0", &AbelianGroup::trivial()).unwrap();
    let other = nfb_submatrix_classify(&p, &AbelianGroup::trivial()).unwrap();
    assert!(InfiniteCornerWitness::new(&s, &other).is_err());
}

#[test]
fn infinite_corner_with_a_larger_exponent_step() {
    let g: AbelianGroup = "Z3xZ".parse().unwrap();
    let p = SandwichMatrix::parse("e,(1|0),e;e,e,(1|0);e,(2|0),(0|-3)", &g).unwrap();
    let cert = nfb_submatrix_classify(&p, &g).unwrap();
    assert_eq!(cert.form, SubmatrixForm::InfiniteCorner);
    assert_eq!((cert.rows, cert.columns), ([0, 2], [0, 2]));
    let s = ReesMatrixSemigroup::new(g.clone(), p);
    let w = InfiniteCornerWitness::new(&s, &cert).unwrap();
    assert!(w.check_closure(4).unwrap());
    assert_eq!(w.exponent(&g.element(vec![0, -6]).unwrap()), Some(2));
    assert_eq!(w.exponent(&g.element(vec![1, -6]).unwrap()), None);
    assert_eq!(w.exponent(&g.element(vec![0, 3]).unwrap()), None);
    let q = w.quotient().unwrap();
    assert!(is_isomorphic(&q.semigroup, &a2().without_involution()).is_some());
}
