mod common;

use common::{corpus, first_ideal, Case};
use morita_core::forms::{
    adjoints, corresponding_anti_automorphism, dual_map, dual_module, form_from_anti_automorphism,
    is_double_progenerator, phi_map, standard_double_module, standard_involution, BilinearForm,
    FormSpace,
};
use morita_core::linalg::vec_add;
use morita_core::module::{endomorphism_algebra, is_isomorphic, Module};
use morita_core::search::SearchConfig;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn modules(case: &Case) -> Vec<Module> {
    let r = Module::regular(case.algebra.clone());
    vec![r.clone(), r.direct_sum(&case.self_dual_ideal())]
}

#[test]
fn standard_double_modules_are_progenerators() {
    for case in corpus() {
        let k = standard_double_module(&case.gamma).unwrap();
        assert!(is_double_progenerator(&k).unwrap(), "{}", case.name);
        for r0 in k.action(0) {
            for r1 in k.action(1) {
                assert_eq!(r0 * r1, r1 * r0, "{}", case.name);
            }
        }
    }
}

#[test]
fn correspondence_round_trip() {
    let search = SearchConfig::default();
    for case in corpus() {
        let k = standard_double_module(&case.gamma).unwrap();
        for m in modules(&case) {
            let end = endomorphism_algebra(&m).unwrap();
            let space = FormSpace::new(&m, &k).unwrap();
            for salt in 0..2 {
                let b = space.random_regular_form(&search, salt).unwrap();
                let alpha = corresponding_anti_automorphism(&b, &end).unwrap();
                let back = form_from_anti_automorphism(&end, &alpha).unwrap();
                let again = corresponding_anti_automorphism(&back.form, &end).unwrap();
                assert_eq!(again, alpha, "{} dim {}", case.name, m.dim());
            }
        }
    }
}

#[test]
fn double_duals_are_isomorphic_to_the_module() {
    let search = SearchConfig::default();
    for case in corpus() {
        let k = standard_double_module(&case.gamma).unwrap();
        for m in modules(&case).into_iter().chain([first_ideal(&case.algebra)]) {
            for i in 0..2 {
                let once = dual_module(&m, &k, i).unwrap();
                let twice = dual_module(&once.module, &k, 1 - i).unwrap();
                assert!(
                    is_isomorphic(&m, &twice.module, &search).unwrap().is_some(),
                    "{} dim {} order {i}",
                    case.name,
                    m.dim()
                );
            }
        }
    }
}

#[test]
fn left_regular_iff_right_regular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut regular = 0;
    let mut total = 0;
    for case in corpus() {
        let k = standard_double_module(&case.gamma).unwrap();
        for m in modules(&case) {
            let space = FormSpace::new(&m, &k).unwrap();
            for height in [0, 1, 1, 2] {
                let b = space.random_form(&mut rng, height).unwrap();
                let ad = adjoints(&b).unwrap();
                assert_eq!(ad.left_regular, ad.right_regular, "{} dim {}", case.name, m.dim());
                total += 1;
                regular += usize::from(ad.left_regular);
            }
        }
    }
    assert!(total >= 20);
    assert!(regular > 0 && regular < total, "{regular} of {total} regular");
}

#[test]
fn dual_of_right_adjoint_after_phi_is_left_adjoint() {
    let search = SearchConfig::default();
    for case in corpus() {
        let k = standard_double_module(&case.gamma).unwrap();
        for m in modules(&case) {
            let b = FormSpace::new(&m, &k).unwrap().random_regular_form(&search, 3).unwrap();
            let ad = adjoints(&b).unwrap();
            let phi = phi_map(&m, &k).unwrap();
            let dual_right = dual_map(&ad.right, &phi.second, &ad.left_dual).unwrap();
            assert_eq!(&dual_right * &phi.matrix, ad.left, "{} dim {}", case.name, m.dim());
        }
    }
}

/// `b(x, y) + θ(b(y, x))`, which is θ-symmetric when θ is an involution of K.
fn symmetrize(b: &BilinearForm, theta: &morita_core::forms::DoubleModuleInvolution) -> BilinearForm {
    let n = b.dim();
    let tensor = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| vec_add(b.value(x, y), &theta.apply(b.value(y, x))))
        .collect();
    BilinearForm::new(b.module().clone(), b.values().clone(), tensor).unwrap()
}

#[test]
fn symmetric_regular_forms_give_involutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = 0;
    for case in corpus() {
        if !case.gamma.is_involution() {
            continue;
        }
        let theta = standard_involution(&case.gamma).unwrap();
        let k = theta.double_module().clone();
        for m in modules(&case) {
            let end = endomorphism_algebra(&m).unwrap();
            let space = FormSpace::new(&m, &k).unwrap();
            for _ in 0..6 {
                let b = symmetrize(&space.random_form(&mut rng, 2).unwrap(), &theta);
                assert!(b.is_symmetric(&theta));
                if !adjoints(&b).unwrap().is_regular() {
                    continue;
                }
                let alpha = corresponding_anti_automorphism(&b, &end).unwrap();
                assert!(alpha.is_involution(), "{} dim {}", case.name, m.dim());
                seen += 1;
            }
        }
    }
    assert!(seen >= 5, "only {seen} regular symmetric forms");
}
