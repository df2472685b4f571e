// Monomial equivalence and automorphism group orders.

use qcsd::equiv::{self, EquivOptions};
use qcsd::gf::{FieldElem, FieldSpec};
use qcsd::qc::FieldCode;
use std::error::Error;

fn golay() -> Result<FieldCode, Box<dyn Error>> {
    // [I | A] with A the bordered circulant of the quadratic residues mod 11
    let qr = [1, 3, 4, 5, 9];
    let mut rows = Vec::new();
    for i in 0..12 {
        let mut row = vec![FieldElem(0); 24];
        row[i] = FieldElem(1);
        for j in 0..12 {
            let bit = match (i, j) {
                (0, 0) => 0,
                (0, _) | (_, 0) => 1,
                _ => u8::from(!qr.contains(&((j + 11 - i) % 11))),
            };
            row[12 + j] = FieldElem(bit);
        }
        rows.push(row);
    }
    Ok(FieldCode::from_rows(FieldSpec::F2, 24, &rows)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = golay()?;
    let opts = EquivOptions::default();
    let perm: Vec<usize> = (0..24).map(|i| (7 * i + 3) % 24).collect();
    let h = g.permuted(&perm);

    let map = equiv::are_equivalent(&g, &h, &opts)?.ok_or("expected an equivalence")?;
    assert_eq!(map.apply(&g), h);
    println!("map: {}", map.render(FieldSpec::F2));

    let order = equiv::automorphism_order(&g, &opts)?;
    println!("|Aut| = {order}");
    assert_eq!(order, 244_823_040);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
