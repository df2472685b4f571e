// Arithmetic in R = F_q[Y]/(Y^m - 1): conjugation, units, the CRT split
// and the Hermitian inner product.

use qcsd::RingSpec;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = RingSpec::from_params(2, 3)?;
    let a = r.parse("Y^2 + 1")?;
    let b = r.parse("Y")?;
    println!("({}) * ({}) = {}", r.render(&a), r.render(&b), r.render(&r.mul(&a, &b)));
    println!("conj({}) = {}", r.render(&a), r.render(&r.conj(&a)));

    let units = r.units();
    println!("{} units in F_2[Y]/(Y^3 - 1)", units.len());
    assert_eq!(units.len(), 3);
    for u in &units {
        assert_eq!(r.mul(u, &r.inv(u)?), r.one());
    }

    let split = r.crt_split(&a)?;
    assert_eq!(r.crt_combine(&split)?, a);

    let x = r.parse_vec("(1, Y, Y + 1, 0)")?;
    println!("<x, x> = {}", r.render(&r.hermitian_ip(&x, &x)?));

    let solutions = r.enumerate_solutions(2, r.minus_one(), 1 << 20)?.count();
    println!("{solutions} vectors of length 2 with <x, x> = -1");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
