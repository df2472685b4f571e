#![allow(dead_code)]

use qcsd::analysis::{self, AnalysisOptions, WeightEnum};
use qcsd::buildup;
use qcsd::qc::FieldCode;
use qcsd::ring::NormTable;
use qcsd::{RingCode, RingElem, RingSpec};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub const BRANCH_I: [(u32, usize); 5] = [(2, 3), (2, 5), (2, 7), (4, 3), (5, 7)];

pub fn table(spec: RingSpec) -> &'static NormTable {
    static TABLES: OnceLock<Mutex<HashMap<(u32, usize), &'static NormTable>>> = OnceLock::new();
    let mut map = TABLES.get_or_init(Default::default).lock().unwrap();
    map.entry((spec.field().q(), spec.m())).or_insert_with(|| Box::leak(Box::new(NormTable::new(spec))))
}

pub fn random_elem(spec: &RingSpec, rng: &mut ChaCha8Rng) -> RingElem {
    spec.elem_at(rng.gen_range(0..spec.size()))
}

/// Random x ∈ R^ell with <x, x> = target; the last coordinate is solved from the norm table.
pub fn vector_with_norm(spec: &RingSpec, ell: usize, target: &RingElem, rng: &mut ChaCha8Rng) -> Vec<RingElem> {
    let t = table(*spec);
    loop {
        let mut x: Vec<RingElem> = (0..ell - 1).map(|_| random_elem(spec, rng)).collect();
        let partial = x.iter().fold(spec.zero(), |acc, e| spec.add(&acc, &spec.norm(e)));
        let need = spec.sub(target, &partial);
        let last: Vec<RingElem> = t.elements_with_norm(&need).collect();
        if let Some(z) = last.choose(rng) {
            x.push(*z);
            return x;
        }
    }
}

pub fn random_branch_i(spec: &RingSpec, steps: usize, rng: &mut ChaCha8Rng) -> RingCode {
    let scalars = buildup::branch_i_scalars(spec);
    let mut code = buildup::seed(spec).unwrap().choose(rng).unwrap().clone();
    for _ in 0..steps {
        let c = scalars.choose(rng).unwrap();
        let x = vector_with_norm(spec, code.ell(), &spec.minus_one(), rng);
        code = buildup::extend_i(&code, c, &x).unwrap();
    }
    code
}

pub fn random_branch_ii(spec: &RingSpec, steps: usize, rng: &mut ChaCha8Rng) -> RingCode {
    let (a, b) = spec.field().sum_of_squares_minus_one().unwrap();
    let (alpha, beta) = (spec.scalar(a), spec.scalar(b));
    let mut code = buildup::seed(spec).unwrap().choose(rng).unwrap().clone();
    for _ in 0..steps {
        let ell = code.ell();
        let x1 = vector_with_norm(spec, ell, &spec.minus_one(), rng);
        let x2 = loop {
            let j = match x1.iter().position(|e| spec.is_unit(e)) {
                Some(j) => j,
                None => break None,
            };
            // solve coordinate j of x2 from <x1, x2> = 0, then keep it if the norm is right
            let mut x2: Vec<RingElem> = (0..ell).map(|_| random_elem(spec, rng)).collect();
            x2[j] = spec.zero();
            let rest = spec.hermitian_ip(&x1, &x2).unwrap();
            let cj = spec.neg(&spec.mul(&spec.inv(&x1[j]).unwrap(), &rest));
            x2[j] = spec.conj(&cj);
            if spec.hermitian_ip(&x2, &x2).unwrap() == spec.minus_one() {
                break Some(x2);
            }
        };
        let Some(x2) = x2 else { continue };
        code = buildup::extend_ii(&code, &alpha, &beta, &x1, &x2).unwrap();
    }
    code
}

pub fn enumerator(d: &FieldCode) -> WeightEnum {
    let opts = AnalysisOptions::default();
    if analysis::codeword_count(d) <= 1 << 22 {
        analysis::weight_enumerator(d, &opts).unwrap()
    } else {
        analysis::weight_enumerator_prefix(d, 6, &opts).unwrap()
    }
}

pub fn check_standard_form(code: &RingCode) {
    let sf = code.standard_form().unwrap();
    assert_eq!(sf.k3, 0);
    assert_eq!(2 * (sf.k1 + sf.k2), code.ell());
    assert!(sf.k1 >= 2 || code.ell() < 4, "k1 = {}", sf.k1);
}

