// Expand a ring code and compute its weight enumerator, enumerator form and divisibility.

use qcsd::analysis::{self, AnalysisOptions};
use qcsd::corpus;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = corpus::find("G_16").ok_or("missing G_16")?.ring_code()?.ok_or("not a ring code")?;
    let code = ring.expand();
    let opts = AnalysisOptions::default();

    let d = analysis::min_distance(&code, &opts)?;
    println!("[{}, {}, {}]", code.n(), code.k(), d.value);

    let w = analysis::weight_enumerator_auto(&code, 12, &opts)?;
    println!("W(y) = {}", w.render_poly());
    assert_eq!(w.a(10), Some(768));
    assert_eq!(w.a(12), Some(8592));

    if let Some(t) = analysis::match_template(&w).matched() {
        println!("matches {}", t.name);
    }
    assert!(analysis::divisibility_check(&w, ring.spec().m() as u64));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
