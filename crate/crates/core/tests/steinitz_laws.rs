use morita_core::steinitz::{
    anti_automorphism_test, dyadic_dual_rank, example_12_check, is_isomorphic_symbol, rank_double_module, rank_hom,
    saltman_rank_bound, AntiAutomorphismTest, ClassGroup, ProjectiveSymbol,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn group_strategy() -> impl Strategy<Value = ClassGroup> {
    proptest::collection::vec(1u64..=12, 1..=3).prop_map(|f| ClassGroup::new(f).unwrap())
}

fn symbol(g: &ClassGroup, rank: u64, coords: &[i64]) -> ProjectiveSymbol {
    let c: Vec<i64> = coords.iter().take(g.invariant_factors().len()).copied().collect();
    ProjectiveSymbol::new(rank, g.element(&c).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symbol_calculus(
        g in group_strategy(),
        (r1, r2, r3) in (1u64..6, 1u64..6, 1u64..6),
        c in proptest::collection::vec(-20i64..20, 9),
    ) {
        let a = symbol(&g, r1, &c[0..3]);
        let b = symbol(&g, r2, &c[3..6]);
        let d = symbol(&g, r3, &c[6..9]);
        prop_assert_eq!(a.tensor(&b).unwrap(), b.tensor(&a).unwrap());
        prop_assert_eq!(
            a.tensor(&b).unwrap().tensor(&d).unwrap(),
            a.tensor(&b.tensor(&d).unwrap()).unwrap()
        );
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert!(is_isomorphic_symbol(&a.hom(&b).unwrap(), &a.dual().tensor(&b).unwrap()).unwrap());
        // det(P ⊗ Q) = det(P)^rank(Q) det(Q)^rank(P)
        let expected = a.class().scale(r2 as i64).add(&b.class().scale(r1 as i64)).unwrap();
        let ab = a.tensor(&b).unwrap();
        prop_assert_eq!(ab.class(), &expected);
    }

    #[test]
    fn test_agrees_with_brute_force(
        g in group_strategy(),
        rank in 1u64..20,
        c in proptest::collection::vec(-30i64..30, 6),
    ) {
        let p = symbol(&g, rank, &c[0..3]);
        let p_dual = symbol(&g, rank, &c[3..6]);
        let brute = g.elements().find(|x| x.scale(rank as i64).add(p.class()).unwrap() == *p_dual.class());
        let test = anti_automorphism_test(&p, &p_dual).unwrap();
        prop_assert_eq!(test.exists(), brute.is_some());
        if let AntiAutomorphismTest::Exists { witness } = test {
            prop_assert_eq!(&witness.scale(rank as i64).add(p.class()).unwrap(), p_dual.class());
        }
    }

    #[test]
    fn dyadic_map_has_no_nonzero_fixed_point(num in 1i64..100_000, k in 0u32..20) {
        let x = BigRational::new(BigInt::from(num), BigInt::from(2).pow(k));
        let y = dyadic_dual_rank(&x).unwrap();
        prop_assert!(y != x);
        prop_assert_eq!(&y + &y, x);
    }
}

#[test]
fn rank_mismatch_is_reported() {
    let g = ClassGroup::new(vec![6]).unwrap();
    let t = anti_automorphism_test(&symbol(&g, 2, &[1]), &symbol(&g, 3, &[1])).unwrap();
    assert!(matches!(t, AntiAutomorphismTest::RankMismatch { rank: 2, dual_rank: 3 }));
}

#[test]
fn class_group_of_order_48_example() {
    let g = ClassGroup::new(vec![48]).unwrap();
    let l = g.element(&[3]).unwrap();
    for j0 in [0, 1, 5, 47] {
        let j = g.element(&[j0]).unwrap();
        let ex = example_12_check(&g, &l, &j).unwrap();
        // class(P^[1]) = -4[L] + 4[J], class(P) = 4[L] + 4[J]
        assert_eq!(ex.p_dual.class(), &l.scale(-4).add(&j.scale(4)).unwrap());
        assert_eq!(ex.p.class(), &l.scale(4).add(&j.scale(4)).unwrap());
        assert_eq!(ex.p.rank(), 16);
        match ex.test {
            AntiAutomorphismTest::Impossible { modulus, gcd, delta, .. } => {
                assert_eq!((modulus, gcd, delta), (48, 16, 24));
            }
            other => panic!("expected impossible, got {other:?}"),
        }
        assert_eq!(ex.order_of_l, 16);
        assert!(ex.sixteen_l_zero);
        // class(I ⊗ P) = 16[I] + 4[L] + 4[J]
        let i = g.element(&[7]).unwrap();
        let ip = ProjectiveSymbol::line(i.clone()).tensor(&ex.p).unwrap();
        assert_eq!(ip.class(), &i.scale(16).add(&l.scale(4)).unwrap().add(&j.scale(4)).unwrap());
    }
}

#[test]
fn rank_formulas() {
    assert_eq!(rank_hom(4, 4, 4).unwrap(), BigRational::from_integer(4.into()));
    for n in [1u64, 2, 3, 4] {
        assert_eq!(rank_double_module(n * n, n * n).unwrap(), (n * n, n * n));
    }
    for ra in [4u64, 16, 64] {
        assert_eq!(saltman_rank_bound(ra, ra).unwrap(), 4 * ra);
    }
    assert_eq!(dyadic_dual_rank(&BigRational::from_integer(2.into())).unwrap(), BigRational::from_integer(1.into()));
    assert_eq!(dyadic_dual_rank(&BigRational::from_integer(0.into())).unwrap(), BigRational::from_integer(0.into()));
}
