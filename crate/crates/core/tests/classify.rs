use qcsd::classify::{self, ClassifyOptions, Manifest};
use qcsd::equiv::{self, EquivOptions};
use qcsd::{buildup, Error, FieldCode, RingSpec};
use std::path::PathBuf;

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qcsd-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn cubic() -> RingSpec {
    RingSpec::from_params(2, 3).unwrap()
}

#[test]
fn cubic_counts_up_to_length_six() {
    let opts = ClassifyOptions::default();
    let run = classify::classify(&cubic(), 6, &opts).unwrap();
    let counts: Vec<usize> = run.levels.iter().map(|l| l.classes).collect();
    assert_eq!(counts.last(), Some(&3));
    assert!(run.complete && run.exhaustive);
    for class in &run.classes {
        assert!(class.code.is_self_dual());
        assert_eq!(class.trail.replay(&cubic()).unwrap().expand(), class.expansion);
    }
}

#[test]
fn quintic_counts_up_to_length_four() {
    let spec = RingSpec::from_params(2, 5).unwrap();
    let opts = ClassifyOptions::default();
    assert_eq!(classify::classify(&spec, 2, &opts).unwrap().classes.len(), 1);
    let run = classify::classify(&spec, 4, &opts).unwrap();
    assert_eq!(run.classes.len(), 3);
    let report = classify::filter_report(&run, &opts).unwrap();
    assert_eq!(report.by_distance.last(), Some(&(4, 2)));
}

#[test]
fn crt_enumeration_agrees_with_building_up() {
    let opts = ClassifyOptions::default();
    for (m, ells) in [(3, &[2, 4, 6][..]), (5, &[2, 4][..])] {
        let spec = RingSpec::from_params(2, m).unwrap();
        for &ell in ells {
            let a: Vec<FieldCode> = classify::classify(&spec, ell, &opts).unwrap().classes.into_iter().map(|c| c.expansion).collect();
            let b: Vec<FieldCode> =
                classify::enumerate_via_crt(&spec, ell, &opts).unwrap().iter().map(|c| c.expand()).collect();
            assert!(classify::same_classes(&a, &b, &opts.equiv).unwrap(), "m = {m}, ell = {ell}");
        }
    }
}

#[test]
fn reduction_lands_in_a_smaller_class() {
    let opts = ClassifyOptions::default();
    let small = classify::classify(&cubic(), 4, &opts).unwrap();
    let run = classify::classify(&cubic(), 6, &opts).unwrap();
    for class in &run.classes {
        let red = buildup::reduce(&class.code).unwrap();
        assert_eq!(red.base.ell(), 4);
        let base = red.base.expand();
        assert!(small.classes.iter().any(|c| equiv::are_equivalent(&c.expansion, &base, &opts.equiv).unwrap().is_some()));
        let back = red.witness.apply(&red.base).unwrap().expand();
        assert!(equiv::are_equivalent(&back, &class.expansion, &opts.equiv).unwrap().is_some());
    }
}

#[test]
fn distance_filter_applies_to_the_last_level() {
    let opts = ClassifyOptions { min_distance: Some(4), ..Default::default() };
    let run = classify::classify(&cubic(), 6, &opts).unwrap();
    assert_eq!(run.classes.len(), 1);
    let report = classify::filter_report(&run, &opts).unwrap();
    assert_eq!(report.rows[0].d, 4);
    assert_eq!(report.best_count, 1);
}

#[test]
fn interrupted_runs_resume() {
    let dir = scratch_dir("resume");
    let checkpoint = dir.join("checkpoint.json");
    let opts = ClassifyOptions { budget: 100, checkpoint: Some(checkpoint.clone()), ..Default::default() };
    let partial = classify::classify(&cubic(), 6, &opts).unwrap();
    assert!(!partial.complete);
    assert!(partial.reached_ell < 6);
    assert!(checkpoint.exists());

    let finished = classify::resume(&checkpoint, &ClassifyOptions::default()).unwrap();
    assert!(finished.complete);
    assert_eq!(finished.classes.len(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn manifests_round_trip() {
    let dir = scratch_dir("manifest");
    let opts = ClassifyOptions::default();
    let run = classify::classify(&cubic(), 4, &opts).unwrap();
    let path = dir.join("manifest.json");
    Manifest::from_run(&run, &[]).write(&path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let manifest: Manifest = serde_json::from_str(&text).unwrap();
    assert_eq!(manifest.classes.len(), 2);
    let restored = manifest.restore(&cubic(), &opts.equiv).unwrap();
    for (a, b) in restored.iter().zip(&run.classes) {
        assert_eq!(a.fingerprint, b.fingerprint);
        assert_eq!(a.expansion, b.expansion);
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn dedup_keeps_one_per_class() {
    let opts = ClassifyOptions::default();
    let run = classify::classify(&cubic(), 6, &opts).unwrap();
    let mut codes = Vec::new();
    for class in &run.classes {
        let n = class.expansion.n();
        let perm: Vec<usize> = (0..n).map(|i| (5 * i + 1) % n).collect();
        codes.push(class.expansion.clone());
        codes.push(class.expansion.permuted(&perm));
    }
    assert_eq!(classify::dedup_codes(&codes, &EquivOptions::default()).unwrap().len(), 3);
}

#[test]
fn bad_requests_are_refused() {
    let opts = ClassifyOptions::default();
    let no_crt = RingSpec::from_params(2, 7).unwrap();
    assert!(!classify::completeness_guaranteed(&no_crt));
    assert!(matches!(classify::classify(&no_crt, 4, &opts), Err(Error::Unsupported(_))));
    assert!(matches!(classify::classify(&cubic(), 5, &opts), Err(Error::Domain(_))));
    let ternary = RingSpec::from_params(3, 5).unwrap();
    assert!(matches!(classify::classify(&ternary, 6, &opts), Err(Error::Unsupported(_) | Error::Domain(_))));
    assert!(matches!(classify::enumerate_via_crt(&ternary, 4, &opts), Err(Error::Unsupported(_))));
}

#[test]
fn constructive_mode_runs_without_the_guarantee() {
    let spec = RingSpec::from_params(2, 7).unwrap();
    let opts = ClassifyOptions { constructive: true, ..Default::default() };
    let run = classify::classify(&spec, 4, &opts).unwrap();
    assert!(!run.exhaustive);
    assert!(!run.classes.is_empty());
    assert!(run.classes.iter().all(|c| c.code.is_self_dual()));
}
