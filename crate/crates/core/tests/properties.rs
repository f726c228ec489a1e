use cocycle_core::biext::{check_alt_quadruple, check_biext_pair, lambda_of, second_difference};
use cocycle_core::cohomology::cocycle_space;
use cocycle_core::commutator::{classify_braiding, solve_braiding, Braidings};
use cocycle_core::zlin::{quotient_invariants, smith_normal_form, IntMatrix};
use cocycle_core::{
    AltQuadruple, BiextPair, BraidingClass, BraidingData, Cochain, FinAbGroup, GrCategoryData, Limits,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn group() -> impl Strategy<Value = FinAbGroup> {
    prop_oneof![
        Just(FinAbGroup::cyclic(2)),
        Just(FinAbGroup::cyclic(3)),
        Just(FinAbGroup::cyclic(4)),
        Just(FinAbGroup::cyclic(6)),
        Just(FinAbGroup::elementary(2, 2)),
    ]
}

fn cochain(arity: usize) -> impl Strategy<Value = Cochain> {
    (group(), group(), any::<u64>()).prop_map(move |(b, a, seed)| {
        Cochain::random(&b, &a, arity, &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundary_is_additive(seed in any::<u64>(), b in group(), a in group(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Cochain::random(&b, &a, n, &mut rng);
        let y = Cochain::random(&b, &a, n, &mut rng);
        prop_assert_eq!((&x + &y).coboundary(), &x.coboundary() + &y.coboundary());
        prop_assert_eq!((-&x).coboundary(), -&x.coboundary());
    }

    #[test]
    fn shuffles_of_a_coboundary_pair_split(c in cochain(2)) {
        // the commutator pair of dl is the split pair of l(y,x) - l(x,y)
        let f = c.coboundary();
        let g = f.shuffle_sym(2, 1).unwrap();
        let h = f.shuffle_sym(1, -1).unwrap();
        let k = Cochain::from_fn(c.domain(), c.codomain(), 2, |t, out| {
            let v: Vec<u64> = c.at(&[t[1], t[0]]).to_vec();
            let w: Vec<u64> = c.at(t).to_vec();
            for (i, o) in out.iter_mut().enumerate() {
                let m = c.codomain().orders()[i];
                *o = (v[i] + m - w[i]) % m;
            }
        });
        let split = BiextPair::split(&k);
        prop_assert_eq!(g, split.g);
        prop_assert_eq!(h, split.h);
    }

    #[test]
    fn split_quadruples_pass(k in cochain(2)) {
        let q = AltQuadruple::split(&k);
        let r = check_alt_quadruple(&q);
        prop_assert!(r.passed(), "{}", r);
        let lam = lambda_of(&q.pair).unwrap();
        // lambda of a split pair is k(s,s) - k(x,x) - k(y,y) - k(x,y) - k(y,x)
        let b = k.domain();
        for x in 0..b.order() {
            for y in 0..b.order() {
                let s = b.add_idx(x, y);
                let a = k.codomain();
                let mut want = a.zero();
                for (args, sign) in [([s, s], 1i64), ([x, x], -1), ([y, y], -1), ([x, y], -1), ([y, x], -1)] {
                    let v = a.element(k.at(&args).to_vec()).unwrap();
                    want = if sign > 0 { a.add(&want, &v).unwrap() } else { a.add(&want, &a.neg(&v).unwrap()).unwrap() };
                }
                prop_assert_eq!(lam.at(&[x, y]), want.coords());
            }
        }
    }

    #[test]
    fn second_difference_is_symmetric(u in cochain(1)) {
        let t = second_difference(&u);
        let n = u.domain().order();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    prop_assert_eq!(t.at(&[x, y, z]), t.at(&[y, x, z]));
                    prop_assert_eq!(t.at(&[x, y, z]), t.at(&[x, z, y]));
                }
            }
        }
    }

    #[test]
    fn snf_postconditions(rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rng.gen_range(-30i64..=30));
            }
        }
        let s = smith_normal_form(&m);
        prop_assert!(&(&s.u * &m) * &s.v == s.d);
        let again = smith_normal_form(&m);
        prop_assert!(again.d == s.d && again.u == s.u && again.v == s.v);
    }

    #[test]
    fn quotient_order_matches_determinant(seed in any::<u64>()) {
        use num_traits::Signed;
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..4);
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rng.gen_range(-6i64..=6));
            }
        }
        let det = m.determinant().abs();
        let inv = quotient_invariants(&m, &vec![0; n]);
        if det == 0u32.into() {
            prop_assert!(inv.contains(&0));
        } else {
            let order: num_bigint::BigInt = inv.iter().map(|&d| num_bigint::BigInt::from(d)).product();
            prop_assert_eq!(order, det);
        }
    }
}

#[test]
fn derived_pairs_over_sampled_cocycles_are_weak_biextensions() {
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for b in [FinAbGroup::cyclic(6), FinAbGroup::new([2, 4]).unwrap()] {
        for a in [FinAbGroup::cyclic(2), FinAbGroup::cyclic(3)] {
            let space = cocycle_space(&b, &a, 3, &l).unwrap();
            for _ in 0..4 {
                let c = GrCategoryData::new(space.sample(&mut rng)).unwrap();
                let p = cocycle_core::commutator::derive_commutator_pair(&c);
                assert!(check_biext_pair(&p, false).passed());
            }
        }
    }
}

/// Every braiding found is classified, and a strict one is always symmetric.
#[test]
fn strict_implies_symmetric_on_listed_braidings() {
    let l = Limits::default();
    let mut seen = [0usize; 3];
    for b in [FinAbGroup::cyclic(2), FinAbGroup::cyclic(4), FinAbGroup::elementary(2, 2)] {
        for a in [FinAbGroup::cyclic(2), FinAbGroup::cyclic(4)] {
            let space = cocycle_space(&b, &a, 3, &l).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..4 {
                let c = GrCategoryData::new(space.sample(&mut rng)).unwrap();
                let Braidings::Listed(all) = solve_braiding(&c, &l).unwrap() else { continue };
                for g in all {
                    let bd = BraidingData::new(c.clone(), g.clone()).unwrap();
                    let class = classify_braiding(&bd).unwrap();
                    let sym = cocycle_core::commutator::symmetry_report(&g);
                    if sym.holds("strict") {
                        assert!(sym.holds("symmetric"));
                        assert_eq!(class, BraidingClass::StrictPicard);
                    }
                    seen[class as usize] += 1;
                }
            }
        }
    }
    assert!(seen.iter().all(|&n| n > 0), "{seen:?}");
}
