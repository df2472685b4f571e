use qcsd::analysis::{self, AnalysisOptions};
use qcsd::buildup;
use qcsd::corpus::{self, Tier, VerifyOptions, ENTRIES};
use qcsd::equiv::{self, EquivOptions};
use qcsd::format;

#[test]
fn every_entry_passes_by_default() {
    let opts = VerifyOptions::default();
    for e in ENTRIES {
        let r = corpus::verify(e, &opts).unwrap();
        assert!(r.pass(), "{}", r.line());
        assert_eq!(r.exact, e.tier == Tier::Exact);
    }
}

#[test]
fn report_lines() {
    let opts = VerifyOptions::default();
    let line = |name| corpus::verify(corpus::find(name).unwrap(), &opts).unwrap().line();
    assert_eq!(line("G_14"), "PASS: G_14: [42,21], d=8, A_8=84, A_10=1449, W2 β=0");
    assert_eq!(line("G_8"), "PASS: G_8: [40,20], d=8, A_8=285, A_12=21280, Type II");
    assert_eq!(line("C_54_4"), "PASS: C_54_4: [54,27], d=10, W1 β=3, |Aut|=3");
    assert_eq!(line("K_8"), "PASS: K_8 [bound mode]: [56,28], d≥12, Type II");
}

#[test]
fn files_round_trip() {
    for e in ENTRIES {
        let d = e.field_code().unwrap();
        assert_eq!(format::parse_field_code(&format::render_field_code(&d, Some(e.name))).unwrap(), d);
        if let Some(c) = e.ring_code().unwrap() {
            let again = format::parse_ring_code(&format::render_ring_code(&c, None)).unwrap();
            assert_eq!(again.expand(), d, "{}", e.name);
        }
    }
}

#[test]
fn ring_and_field_forms_agree() {
    let opts = EquivOptions::default();
    for (ring, field) in [("M_4", "SSD_28_4"), ("J_6", "QSD_30_4"), ("I_8", "QSD_40_3"), ("M_6", "SSD_42_4")] {
        let a = corpus::find(ring).unwrap().field_code().unwrap();
        let b = corpus::find(field).unwrap().field_code().unwrap();
        assert!(equiv::are_equivalent(&a, &b, &opts).unwrap().is_some(), "{ring} vs {field}");
    }
}

#[test]
fn c48_witnesses_need_the_inner_g14() {
    let printed = corpus::find("G_14").unwrap().ring_code().unwrap().unwrap();
    let inner = corpus::find("G_14_inner").unwrap().ring_code().unwrap().unwrap();
    let spec = printed.spec();
    let opts = AnalysisOptions::default();
    assert_ne!(printed.expand(), inner.expand());
    for i in 1..=4 {
        let entry = corpus::find(&format!("C_48_{i}")).unwrap();
        let corpus::Source::Extension { witness, .. } = entry.source else { panic!("{}", entry.name) };
        let w = buildup::parse_witness_log(&spec, witness).unwrap().remove(0);
        let from_printed = analysis::min_distance(&w.apply(&printed).unwrap().expand(), &opts).unwrap();
        let from_inner = analysis::min_distance(&w.apply(&inner).unwrap().expand(), &opts).unwrap();
        assert_eq!((from_printed.value, from_inner.value), (8, 10));
    }
}

#[test]
fn shortening_checks_its_arguments() {
    let k2 = corpus::find("K_2").unwrap().ring_code().unwrap().unwrap();
    assert!(corpus::shorten(&k2, 1, 2).is_ok());
    assert!(corpus::shorten(&k2, 5, 2).is_err());
    assert!(corpus::shorten(&k2, 1, 9).is_err());
}
