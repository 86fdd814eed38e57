// The twist-rule Poincaré polynomial and its specialization at `t = -1`.
//
// ```bash
// cargo run -p rtq --example poincare_oracle
// ```

use rtq::skeinoracle::{poincare, specialize_t, twist_apply, WebLabel, WebPoly};
use rtq::tanglecore::{Letter, Orientation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let start = WebPoly::basis(WebLabel { orientation: Orientation::UP, j: 1, k: 0 });
    let mut w = start;
    for n in 1..=3 {
        w = twist_apply(Letter::T, &w);
        println!("T^{n} UP[1,0] = {w}");
    }
    assert_eq!(w, poincare("3/1".parse()?, 1));
    println!("at t = -1    = {}", specialize_t(&w));

    let w = poincare("5/2".parse()?, 2);
    println!("5/2 at color 2 has {} webs:", w.terms().count());
    for (label, coeff) in w.terms() {
        println!("  {label}: {} terms", coeff.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("poincare_oracle example");
}
