// A quaternary quasi-cyclic code, its binary Gray image and the Type II tests.

use qcsd::analysis::{self, AnalysisOptions};
use qcsd::{corpus, qc};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let code = corpus::find("SSD_28_4").ok_or("missing entry")?.field_code()?;
    let opts = AnalysisOptions::default();

    let image = qc::gray_image(&code)?;
    println!("[{}, {}] over F_4 -> [{}, {}] binary", code.n(), code.k(), image.n(), image.k());
    assert!(image.is_self_dual());
    assert!(analysis::is_type_ii_f4(&code)?);
    assert!(analysis::is_type_ii_binary(&image));

    let lee = analysis::lee_distance(&code, &opts)?;
    println!("Lee distance {}", lee.value);
    assert_eq!(lee.value, 12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
