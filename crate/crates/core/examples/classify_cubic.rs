// Classify the binary cubic self-dual codes of length 18.

use qcsd::classify::{self, ClassifyOptions};
use qcsd::RingSpec;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = RingSpec::from_params(2, 3)?;
    let opts = ClassifyOptions::default();
    let run = classify::classify(&r, 6, &opts)?;
    for level in &run.levels {
        println!(
            "length {:>2}: {:>2} classes from {} candidates",
            level.ell, level.classes, level.candidates
        );
    }
    assert_eq!(run.classes.len(), 3);

    let report = classify::filter_report(&run, &opts)?;
    print!("{}", report.render_csv());
    for class in &run.classes {
        let rebuilt = class.trail.replay(&r)?;
        assert!(rebuilt.is_self_dual());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
