use std::sync::Arc;

use morita_core::algebra::{center, jacobson_radical};
use morita_core::posets::{
    incidence_algebra, order_reversing_maps, poset_isomorphism, poset_of_algebra, scharlau_gate, scharlau_poset,
    Poset,
};
use morita_core::search::SearchConfig;
use morita_core::Field;
use proptest::prelude::*;

/// The poset on `0..n` generated by `i < j` for the chosen pairs with `i < j`.
fn poset_from_edges(n: usize, edges: &[(usize, usize)]) -> Poset {
    let cover: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&(i, j)| i < n && j < n && i != j)
        .map(|&(i, j)| (i.min(j), i.max(j)))
        .collect();
    Poset::from_cover(n, &cover).unwrap()
}

fn fixed_corpus() -> Vec<Poset> {
    vec![
        Poset::chain(1),
        Poset::chain(4),
        Poset::antichain(3),
        poset_from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
        poset_from_edges(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]),
        poset_from_edges(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (3, 5)]),
        poset_from_edges(4, &[(0, 1), (2, 3)]),
    ]
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn check_poset(p: &Poset) {
    let a = Arc::new(incidence_algebra(Field::Rationals, p).unwrap());
    let pairs = p.comparable_pairs();
    assert_eq!(a.dim(), pairs.len());
    let j = jacobson_radical(&a).unwrap();
    assert_eq!(j.len(), pairs.iter().filter(|(i, k)| i != k).count());
    assert_eq!(center(&a).dim() == 1, p.is_connected());
    let back = poset_of_algebra(&a, &SearchConfig::default()).unwrap();
    assert!(poset_isomorphism(&back.poset, p).is_some());
    let maps = order_reversing_maps(p, None);
    for phi in &maps {
        for x in 0..p.size() {
            for y in 0..p.size() {
                assert_eq!(p.leq(x, y), p.leq(phi[y], phi[x]));
            }
        }
    }
    for (f, g) in maps.iter().zip(maps.iter().rev()) {
        let h = compose(f, g);
        for x in 0..p.size() {
            for y in 0..p.size() {
                assert_eq!(p.leq(x, y), p.leq(h[x], h[y]));
            }
        }
    }
}

#[test]
fn fixed_posets() {
    for p in fixed_corpus() {
        check_poset(&p);
    }
}

#[test]
fn disconnected_posets_have_large_centre() {
    let p = poset_from_edges(5, &[(0, 1), (2, 3)]);
    let a = incidence_algebra(Field::Rationals, &p).unwrap();
    // one central idempotent per component
    assert_eq!(center(&a).dim(), 3);
}

#[test]
fn scharlau_example() {
    let gate = scharlau_gate();
    assert!(gate.passed());
    assert!(gate.involutions.is_empty());
    let p = scharlau_poset();
    assert!(order_reversing_maps(&p, Some(2)).is_empty());
    let a = Arc::new(incidence_algebra(Field::Rationals, &p).unwrap());
    assert_eq!(center(&a).dim(), 1);
    let back = poset_of_algebra(&a, &SearchConfig::default()).unwrap();
    assert!(poset_isomorphism(&back.poset, &p).is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_posets_up_to_eight(n in 1usize..=8, edges in proptest::collection::vec((0usize..8, 0usize..8), 0..12)) {
        check_poset(&poset_from_edges(n, &edges));
    }
}
