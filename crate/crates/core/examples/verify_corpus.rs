// Check reference matrices against their published parameters.

use qcsd::corpus::{self, VerifyOptions};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = VerifyOptions::default();
    for name in ["G_14", "C_48_2", "C_54_1", "G_10", "K_6", "I_4"] {
        let entry = corpus::find(name).ok_or("unknown entry")?;
        let report = corpus::verify(entry, &opts)?;
        println!("{}", report.line());
        assert!(report.pass());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
