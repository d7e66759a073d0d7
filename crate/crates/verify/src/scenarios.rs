use std::collections::{BTreeMap, HashSet};

use diagmon::monoid::{
    brauer_multiply, enumerate_brauer, enumerate_jones, fiber_increment, is_isomorphic,
    kauffman_quotient,
};
use diagmon::rees::{
    a2, brandt_b21, brandt_rees, nfb_submatrix_classify, tsl, AbelianGroup, GroupElem, RMElement,
    ReesMatrixSemigroup, SandwichMatrix, SubmatrixForm,
};
use diagmon::structure::{Involution, WireMonoid};
use diagmon::words::{
    evaluate, isoterm_witnesses, refute_identity, refute_identity_in, satisfies_identity, zimin,
    zimin_fingerprint_k3, Assignment, FingerprintLetter, Symbol,
};
use diagmon::{Chip, FiniteSemigroup, Identity, InvWord, Letter, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::oracle;
use crate::Report;

const SEED: u64 = 0x5eed;

fn hooks(n: usize) -> Vec<Chip> {
    (1..n).map(|i| Chip::hook(n, i).expect("hook in range")).collect()
}

pub(crate) fn relations() -> Result<Report> {
    let mut r = Report::default();
    for n in 2..=8 {
        let c = Chip::circle(n);
        let h = hooks(n);
        let (mut tl1, mut tl2, mut tl4, mut jones) = (true, true, true, true);
        for i in 0..n - 1 {
            let hi = &h[i];
            tl4 &= hi.multiply(hi)? == c.multiply(hi)? && c.multiply(hi)? == hi.multiply(&c)?;
            let f = hi.forget();
            jones &= brauer_multiply(&f, &f)? == f;
            for j in 0..n - 1 {
                let hj = &h[j];
                let fj = hj.forget();
                if i.abs_diff(j) >= 2 {
                    tl1 &= hi.multiply(hj)? == hj.multiply(hi)?;
                    jones &= brauer_multiply(&f, &fj)? == brauer_multiply(&fj, &f)?;
                }
                if i.abs_diff(j) == 1 {
                    tl2 &= hi.multiply(hj)?.multiply(hi)? == *hi;
                    jones &= brauer_multiply(&brauer_multiply(&f, &fj)?, &f)? == f;
                }
            }
        }
        r.check(tl1, format!("n={n}: h_i h_j = h_j h_i for |i-j| >= 2"));
        r.check(tl2, format!("n={n}: h_i h_j h_i = h_i for |i-j| = 1"));
        r.check(tl4, format!("n={n}: h_i h_i = c h_i = h_i c"));
        r.check(jones, format!("n={n}: forget images satisfy the Jones relations"));
    }
    Ok(r)
}

pub(crate) fn catalan() -> Result<Report> {
    let mut r = Report::default();
    let expected = [1u64, 2, 5, 14, 42, 132, 429, 1430];
    for n in 1..=8 {
        let listed = enumerate_jones(n)?.len() as u64;
        let brute = oracle::brute_planar_count(n);
        let formula = oracle::catalan(n as u64);
        r.check(
            listed == expected[n - 1] && brute == listed && formula == listed,
            format!("n={n}: |J_n| = {listed}, brute force {brute}, Catalan {formula}"),
        );
    }
    Ok(r)
}

pub(crate) fn brauer_count() -> Result<Report> {
    let mut r = Report::default();
    for n in 1..=6 {
        let listed = enumerate_brauer(n)?;
        let distinct: HashSet<_> = listed.iter().collect();
        let expected = oracle::count_matchings(n as u64);
        r.check(
            listed.len() as u64 == expected && distinct.len() == listed.len(),
            format!("n={n}: |B_n| = {} (expected {expected})", listed.len()),
        );
    }
    Ok(r)
}

pub(crate) fn associativity() -> Result<Report> {
    let mut r = Report::default();
    let mut rng = StdRng::seed_from_u64(SEED);
    for n in 2..=6 {
        let mut bad = 0;
        for _ in 0..10_000 {
            let (a, b, c) = (
                oracle::random_chip(&mut rng, n, 3),
                oracle::random_chip(&mut rng, n, 3),
                oracle::random_chip(&mut rng, n, 3),
            );
            let ab = a.multiply(&b)?;
            let bc = b.multiply(&c)?;
            if ab.multiply(&c)? != a.multiply(&bc)? || ab != oracle::glue_product(&a, &b) {
                bad += 1;
            }
        }
        r.check(bad == 0, format!("n={n}: 10000 random triples, {bad} failures"));
    }
    Ok(r)
}

pub(crate) fn involutions() -> Result<Report> {
    let mut r = Report::default();
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    for n in 1..=6 {
        let mut bad = 0;
        for _ in 0..10_000 {
            let a = oracle::random_chip(&mut rng, n, 3);
            let b = oracle::random_chip(&mut rng, n, 3);
            let ab = a.multiply(&b)?;
            let ok = a.star().star() == a
                && a.rotate().rotate() == a
                && ab.star() == b.star().multiply(&a.star())?
                && ab.rotate() == b.rotate().multiply(&a.rotate())?;
            bad += usize::from(!ok);
        }
        r.check(bad == 0, format!("n={n}: star and rotate on 10000 random pairs, {bad} failures"));
    }
    for n in 1..=8 {
        let h = hooks(n);
        let rotated = (0..n.saturating_sub(1)).all(|i| h[i].rotate() == h[n - 2 - i]);
        let c = Chip::circle(n);
        r.check(
            rotated && c.star() == c && c.rotate() == c,
            format!("n={n}: rotate(h_i) = h_(n-i), c fixed by both"),
        );
    }
    Ok(r)
}

pub(crate) fn fiber_law() -> Result<Report> {
    let mut r = Report::default();
    for n in 1..=4 {
        let mut count = 0;
        let mut ok = true;
        for pi in enumerate_jones(n)? {
            if brauer_multiply(&pi, &pi)? != pi {
                continue;
            }
            count += 1;
            let m = fiber_increment(&pi)?;
            for k in 0..=3 {
                for l in 0..=3 {
                    let a = Chip::from_matching(pi.clone(), k);
                    let b = Chip::from_matching(pi.clone(), l);
                    ok &= a.multiply(&b)? == Chip::from_matching(pi.clone(), k + l + m);
                    ok &= a.multiply(&b)? == b.multiply(&a)?;
                }
            }
        }
        r.check(ok, format!("n={n}: fiber law on {count} idempotents of J_n"));
    }
    Ok(r)
}

pub(crate) fn k3_quotient() -> Result<Report> {
    let mut r = Report::default();
    let star_q = kauffman_quotient(3, Some(Involution::Reflection))?;
    let q = &star_q.semigroup;
    let b = brandt_b21();
    r.check(q.size() == 6, format!("K_3/C has {} elements", q.size()));
    let Some(map) = is_isomorphic(q, &b) else {
        r.check(false, "K_3/C with reflection is isomorphic to B_2^1");
        return Ok(r);
    };
    let pairs: Vec<String> = (0..q.size())
        .map(|x| format!("{} -> {}", q.label(x), b.label(map[x])))
        .collect();
    r.note(format!("bijection: {}", pairs.join(", ")));
    r.check(true, "K_3/C with reflection is isomorphic to B_2^1");

    let rot_q = kauffman_quotient(3, Some(Involution::Rotation))?;
    let rot = rot_q.semigroup.involution_table().expect("rotation attached");
    let preimage = |label: &str| (0..q.size()).find(|&x| b.label(map[x]) == label).expect("bijective");
    let (ab, ba) = (preimage("ab"), preimage("ba"));
    r.note(format!(
        "rotation on the quotient: {}",
        (0..q.size())
            .map(|x| format!("{} -> {}", b.label(map[x]), b.label(map[rot[x]])))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    r.check(
        rot[ab] == ba && rot[ba] == ab,
        "the rotation-induced involution swaps ab and ba",
    );
    Ok(r)
}

pub(crate) fn zimin_fingerprints() -> Result<Report> {
    let mut r = Report::default();
    let k3 = WireMonoid::new(3);
    let c = Chip::circle(3);
    let h1 = Chip::hook(3, 1)?;
    for n in 1..=6u32 {
        let z = zimin(n);
        let mut ok = true;
        for i in 1..=n {
            let power = 1u64 << (n - i);
            let mut a: Assignment<Chip> = (1..=n).map(|k| (Letter(k), Chip::identity(3))).collect();
            a.insert(Letter(i), c.clone());
            let want_c = Chip::identity(3).with_circles(power);
            ok &= evaluate(&k3, &z, &a)? == want_c;
            ok &= zimin_fingerprint_k3(n, i, FingerprintLetter::Circle)? == want_c;
            a.insert(Letter(i), h1.clone());
            let want_h = h1.with_circles(power - 1);
            ok &= evaluate(&k3, &z, &a)? == want_h;
            ok &= zimin_fingerprint_k3(n, i, FingerprintLetter::Hook)? == want_h;
        }
        r.check(ok, format!("n={n}: Z_n(x_i -> c) = c^(2^(n-i)), Z_n(x_i -> h_1) = c^(2^(n-i)-1) h_1"));
    }
    Ok(r)
}

pub(crate) fn isoterm() -> Result<Report> {
    let mut r = Report::default();
    let b = brandt_b21();
    for (n, len) in [(2u32, 6usize), (3, 8)] {
        let found = isoterm_witnesses(&b, &zimin(n), len)?;
        let shown: Vec<String> = found.iter().take(3).map(ToString::to_string).collect();
        r.check(
            found.is_empty(),
            format!("Z_{n} has no partner up to length {len} in B_2^1 (found {}: {})", found.len(), shown.join("; ")),
        );
    }
    Ok(r)
}

pub(crate) fn refutation() -> Result<Report> {
    let mut r = Report::default();
    let k3 = WireMonoid::new(3);
    let gens = k3.kauffman_generators();
    for text in ["x1 x2 = x2 x1", "x1 x2 x1 = x1 x1 x2"] {
        let id: Identity = text.parse()?;
        let found = refute_identity(&k3, &gens, &id, 1)?;
        let differs = match &found {
            Some(a) => evaluate(&k3, &id.lhs, a)? != evaluate(&k3, &id.rhs, a)?,
            None => false,
        };
        r.check(differs, format!("{id}: witness at depth 1"));
        if let Some(a) = found {
            let shown: Vec<String> = a.iter().map(|(l, v)| format!("{l} -> {v}")).collect();
            r.note(format!("  {}", shown.join(", ")));
        }
    }
    let h = hooks(3);
    for (i, j) in [(0, 1), (1, 0)] {
        let domains: BTreeMap<Letter, Vec<Chip>> =
            [(Letter(1), vec![h[i].clone()]), (Letter(2), vec![h[j].clone()])].into();
        let id: Identity = "x1 x2 x1 = x1".parse()?;
        r.check(
            refute_identity_in(&k3, &id, &domains)?.is_none(),
            format!("{id} with x1 = h{}, x2 = h{}: no witness", i + 1, j + 1),
        );
    }
    Ok(r)
}

pub(crate) fn embeddings() -> Result<Report> {
    let mut r = Report::default();
    let planar = |n: usize| -> Result<Vec<Chip>> {
        Ok(enumerate_jones(n)?
            .into_iter()
            .flat_map(|m| (0..=2).map(move |d| Chip::from_matching(m.clone(), d)))
            .collect())
    };
    type Map = fn(&Chip) -> Result<Chip>;
    let cases: [(&str, Map, Map, &[usize]); 4] = [
        ("pad(1,1) with star", |x| Ok(x.embed_pad(1, 1)), |x| Ok(x.star()), &[2, 3]),
        ("pad(0,2) with star", |x| Ok(x.embed_pad(0, 2)), |x| Ok(x.star()), &[2, 3]),
        ("double with rotate", |x| x.embed_double(), |x| Ok(x.rotate()), &[2, 3]),
        ("insert-middle with rotate", |x| x.embed_insert_middle(), |x| Ok(x.rotate()), &[2, 4]),
    ];
    for (name, embed, inv, degrees) in cases {
        for &n in degrees {
            let chips = planar(n)?;
            let mut images = HashSet::new();
            let mut ok = true;
            for a in &chips {
                images.insert(embed(a)?);
                ok &= embed(&inv(a)?)? == inv(&embed(a)?)?;
                for b in &chips {
                    ok &= embed(&a.multiply(b)?)? == embed(a)?.multiply(&embed(b)?)?;
                }
            }
            r.check(
                ok && images.len() == chips.len(),
                format!("{name} on {} planar chips of degree {n}", chips.len()),
            );
        }
    }
    let mut images = true;
    for n in 2..=6 {
        for (i, h) in hooks(n).iter().enumerate() {
            let i = i + 1;
            images &= h.embed_pad(1, 1) == Chip::hook(n + 2, i + 1)?;
            images &= h.embed_pad(0, 2) == Chip::hook(n + 2, i)?;
            images &= h.embed_double()? == Chip::hook(2 * n, i)?.multiply(&Chip::hook(2 * n, n + i)?)?;
        }
        let c = Chip::circle(n);
        images &= c.embed_pad(1, 1) == Chip::circle(n + 2);
        images &= c.embed_double()? == Chip::circle(2 * n).multiply(&Chip::circle(2 * n))?;
    }
    r.check(images, "generator images: h_i -> h_(i+1), h_i -> h_i, c -> c, c -> c^2, h_i -> h_i h_(n+i)");
    Ok(r)
}

fn valid_involution_semigroup(s: &FiniteSemigroup) -> bool {
    let Some(inv) = s.involution_table() else {
        return false;
    };
    s.associativity_failure().is_none()
        && (0..s.size()).all(|x| {
            inv[inv[x]] == x && (0..s.size()).all(|y| inv[s.mul(x, y)] == s.mul(inv[y], inv[x]))
        })
}

fn collapse_checks<R: Rng>(rng: &mut R, s: &ReesMatrixSemigroup, samples: usize) -> Result<bool> {
    let t = s.collapse_to_trivial();
    let elem = |rng: &mut R| -> GroupElem {
        let g = s.group();
        let mut coords: Vec<i64> = g.orders().iter().map(|&k| rng.gen_range(0..k as i64)).collect();
        for _ in 0..g.rank() {
            coords.push(rng.gen_range(-4..=4));
        }
        g.element(coords).expect("right length")
    };
    let pick = |rng: &mut R| -> RMElement {
        match rng.gen_range(0..8) {
            0 => RMElement::Zero,
            1 => RMElement::One,
            _ => RMElement::triple(
                rng.gen_range(0..s.index_count()),
                elem(rng),
                rng.gen_range(0..s.lambda_count()),
            ),
        }
    };
    let mut ok = true;
    for _ in 0..samples {
        let (a, b) = (pick(rng), pick(rng));
        ok &= s.collapse(&s.rm_multiply(&a, &b)?) == t.rm_multiply(&s.collapse(&a), &s.collapse(&b))?;
    }
    for x in t.elements()? {
        if t.rm_multiply(&x, &x)? != x {
            continue;
        }
        if let RMElement::Triple { i, lambda, .. } = x {
            for _ in 0..100 {
                let a = RMElement::triple(i, elem(rng), lambda);
                let b = RMElement::triple(i, elem(rng), lambda);
                ok &= s.rm_multiply(&a, &b)? == s.rm_multiply(&b, &a)?;
            }
        }
    }
    Ok(ok)
}

pub(crate) fn rees_matrix() -> Result<Report> {
    let mut r = Report::default();
    let (b, a, t) = (brandt_b21(), a2(), tsl());
    r.check(valid_involution_semigroup(&a) && a.size() == 5, "A_2 from its sandwich matrix");
    r.check(valid_involution_semigroup(&b) && b.size() == 6, "B_2^1 from its relations");
    r.check(valid_involution_semigroup(&t) && t.size() == 3, "TSL from its definition");
    let rm = brandt_rees().adjoin_identity().to_finite()?;
    r.check(is_isomorphic(&rm, &b).is_some(), "B_2^1 is M0(2,E,2;((0,e),(e,0)))^1");

    let embed = [b.index_of("ab"), b.index_of("ba"), b.index_of("0")];
    let embed: Vec<usize> = embed.into_iter().map(|x| x.expect("Brandt label")).collect();
    let tsl_in_b = (0..3).all(|x| {
        t.inv(x).map(|y| embed[y]) == b.inv(embed[x])
            && (0..3).all(|y| embed[t.mul(x, y)] == b.mul(embed[x], embed[y]))
    });
    r.check(tsl_in_b, "TSL embeds into B_2^1 via e -> ab, f -> ba, 0 -> 0");

    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let z4: AbelianGroup = "Z4".parse()?;
    let z = AbelianGroup::integers();
    for (g, lit) in [(&z4, "(1),0;(3),(2)"), (&z, "e,e;e,(0|1)")] {
        let s = ReesMatrixSemigroup::new(g.clone(), SandwichMatrix::parse(lit, g)?).adjoin_identity();
        r.check(
            collapse_checks(&mut rng, &s, 1000)?,
            format!("collapse over {g} with P = {lit}: homomorphism, commutative idempotent fibers"),
        );
    }

    let forms = [
        ("e,e;e,(0|1)", &z, Some(SubmatrixForm::InfiniteCorner)),
        ("0,(0|2);(0|3),0", &z, Some(SubmatrixForm::AntiDiagonal)),
        ("(0|1),(0|2);(0|3),0", &z, Some(SubmatrixForm::OneZero)),
        ("e,e;e,e", &z, None),
    ];
    for (lit, g, want) in forms {
        let got = nfb_submatrix_classify(&SandwichMatrix::parse(lit, g)?, g);
        let shown = got.map_or("no certificate".to_string(), |c| c.to_string());
        r.check(got.map(|c| c.form) == want, format!("classify {lit} over {g}: {shown}"));
    }
    Ok(r)
}

fn random_identity<R: Rng>(rng: &mut R) -> Identity {
    let side = |rng: &mut R| {
        let len = rng.gen_range(1..=4);
        let symbols = (0..len)
            .map(|_| Symbol {
                letter: Letter(rng.gen_range(1..=3)),
                starred: rng.gen_bool(0.25),
            })
            .collect();
        InvWord::new(symbols).expect("non-empty")
    };
    let lhs = side(rng);
    if rng.gen_bool(0.3) {
        // w^2 = w^3 holds in every aperiodic monoid of index at most 2
        let square = lhs.concat(&lhs);
        let cube = square.concat(&lhs);
        return Identity::new(square, cube);
    }
    Identity::new(lhs, side(rng))
}

pub(crate) fn cross_oracle() -> Result<Report> {
    let mut r = Report::default();
    let mut rng = StdRng::seed_from_u64(SEED + 3);
    let mut bad = 0;
    for _ in 0..10_000 {
        let a = oracle::random_chip(&mut rng, 5, 2);
        let b = oracle::random_chip(&mut rng, 5, 2);
        if a.multiply(&b)?.forget() != brauer_multiply(&a.forget(), &b.forget())? {
            bad += 1;
        }
    }
    r.check(bad == 0, format!("forget(ab) = forget(a) forget(b) on 10000 degree-5 pairs, {bad} failures"));
    for (name, m) in [("B_2^1", brandt_b21()), ("A_2", a2()), ("TSL", tsl())] {
        let gens: Vec<usize> = (0..m.size()).collect();
        let mut disagree = 0;
        let mut holding = 0;
        for _ in 0..50 {
            let id = random_identity(&mut rng);
            let holds = satisfies_identity(&m, &id)?;
            let refuted = refute_identity(&m, &gens, &id, m.size())?.is_some();
            holding += usize::from(holds);
            disagree += usize::from(holds == refuted);
        }
        r.check(
            disagree == 0,
            format!("{name}: exhaustive check and refutation agree on 50 identities ({holding} hold)"),
        );
    }
    Ok(r)
}
