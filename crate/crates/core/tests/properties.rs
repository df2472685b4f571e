mod common;

use common::*;
use proptest::prelude::*;
use qcsd::analysis::{self, AnalysisOptions};
use qcsd::buildup::{self, ExtensionWitness};
use qcsd::classify::{self, ClassifyOptions};
use qcsd::equiv::{self, EquivOptions};
use qcsd::qc;
use qcsd::{FieldElem, RingCode, RingElem, RingSpec};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn branch_i_extensions_are_self_dual(seed in any::<u64>(), which in 0..BRANCH_I.len(), steps in 1usize..=3) {
        let (q, m) = BRANCH_I[which];
        let spec = RingSpec::from_params(q, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_branch_i(&spec, steps, &mut rng);
        prop_assert!(code.is_self_dual());
        let d = code.expand();
        prop_assert!(d.is_self_dual());
        prop_assert!(d.is_shift_invariant(code.ell()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn branch_ii_extensions_are_self_dual(seed in any::<u64>(), steps in 1usize..=2) {
        let spec = RingSpec::from_params(3, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_branch_ii(&spec, steps, &mut rng);
        prop_assert!(code.is_self_dual());
        prop_assert!(code.expand().is_self_dual());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn enumerators_are_divisible_and_self_consistent(seed in any::<u64>(), which in 0..BRANCH_I.len(), steps in 1usize..=2) {
        let (q, m) = BRANCH_I[which];
        let spec = RingSpec::from_params(q, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_branch_i(&spec, steps, &mut rng);
        let d = code.expand();
        let w = enumerator(&d);
        prop_assert!(analysis::divisibility_check(&w, m as u64), "{}", w.render_poly());
        if w.complete {
            prop_assert!(analysis::is_macwilliams_invariant(&w, spec.field()).unwrap());
        }
    }

    #[test]
    fn standard_form_of_extensions(seed in any::<u64>(), which in 0..BRANCH_I.len(), steps in 1usize..=3) {
        let (q, m) = BRANCH_I[which];
        let spec = RingSpec::from_params(q, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_branch_i(&spec, steps, &mut rng);
        if spec.cyclotomic_ok() {
            check_standard_form(&code);
        }
    }

    #[test]
    fn monomial_images_are_equivalent(seed in any::<u64>(), which in 0..BRANCH_I.len()) {
        let (q, m) = BRANCH_I[which];
        let spec = RingSpec::from_params(q, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_branch_i(&spec, 1, &mut rng).expand();
        let mut perm: Vec<usize> = (0..d.n()).collect();
        perm.shuffle(&mut rng);
        let nonzero: Vec<FieldElem> = spec.field().nonzero().collect();
        let scalars: Vec<FieldElem> = (0..d.n()).map(|_| *nonzero.choose(&mut rng).unwrap()).collect();
        let e = d.monomial_image(&perm, &scalars);
        let opts = EquivOptions::default();
        let map = equiv::are_equivalent(&d, &e, &opts).unwrap();
        prop_assert!(map.is_some_and(|m| m.apply(&d) == e));
        prop_assert_eq!(equiv::fingerprint(&d, &opts).unwrap(), equiv::fingerprint(&e, &opts).unwrap());
    }
}

proptest! {
    #[test]
    fn crt_is_multiplicative(which in 0..2usize, a in any::<u64>(), b in any::<u64>()) {
        let spec = RingSpec::from_params([3, 5][which], 7).unwrap();
        let (a, b) = (spec.elem_at(a % spec.size()), spec.elem_at(b % spec.size()));
        let (sa, sb) = (spec.crt_split(&a).unwrap(), spec.crt_split(&b).unwrap());
        prop_assert_eq!(spec.crt_split(&spec.mul(&a, &b)).unwrap(), spec.crt_mul(&sa, &sb).unwrap());
        prop_assert_eq!(spec.crt_split(&spec.add(&a, &b)).unwrap(), spec.crt_add(&sa, &sb));
        prop_assert_eq!(spec.crt_combine(&sa).unwrap(), a);
    }

    #[test]
    fn unit_tests_agree(which in 0..4usize, a in any::<u64>()) {
        let (q, m) = [(2, 5), (3, 5), (3, 7), (5, 7)][which];
        let spec = RingSpec::from_params(q, m).unwrap();
        let a = spec.elem_at(a % spec.size());
        prop_assert_eq!(spec.is_unit(&a), spec.is_unit_by_factors(&a));
    }

    #[test]
    fn hermitian_product_is_sesquilinear(seed in any::<u64>(), ell in 1usize..6) {
        let spec = RingSpec::from_params(4, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<RingElem> = (0..ell).map(|_| random_elem(&spec, &mut rng)).collect();
        let y: Vec<RingElem> = (0..ell).map(|_| random_elem(&spec, &mut rng)).collect();
        let c = random_elem(&spec, &mut rng);
        let cx: Vec<RingElem> = x.iter().map(|e| spec.mul(&c, e)).collect();
        prop_assert_eq!(spec.hermitian_ip(&x, &y).unwrap(), spec.conj(&spec.hermitian_ip(&y, &x).unwrap()));
        prop_assert_eq!(spec.hermitian_ip(&cx, &y).unwrap(), spec.mul(&c, &spec.hermitian_ip(&x, &y).unwrap()));
    }
}

fn count_units(spec: &RingSpec) -> u64 {
    spec.elements().filter(|a| spec.is_unit(a)).count() as u64
}

#[test]
fn unit_count_formula() {
    for (q, p) in [(2u64, 3u32), (2, 5), (3, 5), (5, 7), (3, 7)] {
        let spec = RingSpec::from_params(q as u32, p as usize).unwrap();
        assert!(spec.cyclotomic_ok());
        assert_eq!(count_units(&spec), (q - 1) * (q.pow(p - 1) - 1), "q = {q}, p = {p}");
        assert_eq!(spec.units().len() as u64, count_units(&spec));
    }
    // 2 has order 3 mod 7, so Y^7 - 1 splits into three factors
    let spec = RingSpec::from_params(2, 7).unwrap();
    assert!(!spec.cyclotomic_ok());
    assert_eq!(count_units(&spec), 49);
}

#[test]
fn crt_exhaustive_small() {
    for (q, m) in [(2, 3), (2, 5), (3, 5), (5, 3), (3, 7)] {
        let spec = RingSpec::from_params(q, m).unwrap();
        let all: Vec<RingElem> = spec.elements().collect();
        for a in &all {
            assert_eq!(spec.crt_combine(&spec.crt_split(a).unwrap()).unwrap(), *a);
        }
        if all.len() <= 256 {
            for a in &all {
                let sa = spec.crt_split(a).unwrap();
                for b in &all {
                    let sb = spec.crt_split(b).unwrap();
                    assert_eq!(spec.crt_split(&spec.mul(a, b)).unwrap(), spec.crt_mul(&sa, &sb).unwrap());
                }
            }
        }
    }
}

#[test]
fn expand_collapse_exhaustive_small() {
    for (q, m, ell) in [(2, 3, 2), (2, 5, 2), (4, 3, 1), (3, 5, 1)] {
        let spec = RingSpec::from_params(q, m).unwrap();
        let total = spec.size().pow(ell as u32);
        for i in 0..total {
            let v: Vec<RingElem> =
                (0..ell).map(|j| spec.elem_at(i / spec.size().pow(j as u32) % spec.size())).collect();
            let flat = qc::expand_vector(&spec, &v);
            assert_eq!(flat.len(), m * ell);
            assert_eq!(qc::collapse_vector(&spec, ell, &flat), v);
            if v.iter().any(|e| !e.is_zero()) {
                let code = RingCode::new(spec, ell, vec![v.clone()]).unwrap();
                let d = code.expand();
                assert!(d.contains(&flat));
                assert!(d.is_shift_invariant(ell));
                assert_eq!(qc::collapse(&d, m, ell).unwrap().expand(), d);
            }
        }
    }
}

#[test]
fn classified_codes_satisfy_the_structure_facts() {
    let opts = ClassifyOptions::default();
    for (q, m, ell) in [(2, 3, 6), (2, 5, 4)] {
        let spec = RingSpec::from_params(q, m).unwrap();
        let run = classify::classify(&spec, ell, &opts).unwrap();
        for class in &run.classes {
            check_standard_form(&class.code);
            let w = analysis::weight_enumerator(&class.expansion, &AnalysisOptions::default()).unwrap();
            assert!(analysis::divisibility_check(&w, m as u64));
            assert!(analysis::is_macwilliams_invariant(&w, spec.field()).unwrap());
            let red = buildup::reduce(&class.code).unwrap();
            assert!(red.base.is_self_dual());
            assert!(matches!(red.witness, ExtensionWitness::BranchI { .. }));
        }
    }
}
