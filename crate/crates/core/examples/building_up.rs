// Grow a self-dual code over R two columns at a time, then undo the last step.

use qcsd::buildup::{self, ExtensionWitness};
use qcsd::RingSpec;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = RingSpec::from_params(2, 3)?;
    let mut code = buildup::seed(&r)?.remove(0);
    let c = buildup::canonical_branch_i_scalars(&r).remove(0);

    while code.ell() < 8 {
        let x = r
            .enumerate_solutions(code.ell(), r.minus_one(), 1 << 24)?
            .take(4096)
            .max_by_key(|x| x.iter().filter(|e| !e.is_zero()).count())
            .ok_or("no vector of norm -1")?;
        let w = ExtensionWitness::BranchI { c: c.clone(), x };
        println!("{}", w.render(&r));
        code = w.apply(&code)?;
        assert!(code.is_self_dual());
    }
    let expanded = code.expand();
    let d = qcsd::analysis::min_distance(&expanded, &Default::default())?.value;
    println!("length {} over R, a [{}, {}, {}] binary code", code.ell(), expanded.n(), expanded.k(), d);

    let red = buildup::reduce(&code)?;
    println!("reduced to length {}", red.base.ell());
    let again = red.witness.apply(&red.base)?;
    assert_eq!(again.expand(), code.reorder_columns(&red.column_order).expand());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
