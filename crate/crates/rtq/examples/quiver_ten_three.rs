// Quiver-form data of `τ_{10/3}`, full and reduced, in several output formats.
//
// ```bash
// cargo run -p rtq --example quiver_ten_three
// ```

use rtq::arcdiagram::{build, BasisOrder};
use rtq::quiverforms::{compute_q_conf2, compute_quiver_on, reduce_almost};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = build("10/3".parse()?)?;
    let full = compute_quiver_on(&d)?;
    assert_eq!(compute_q_conf2(&d)?, full.q, "both routes to Q agree");
    let reduced = reduce_almost(&full, &d)?;

    println!("{}", full.to_pretty());
    println!("{}", reduced.reordered(&d, BasisOrder::Arc).to_pretty());
    println!("{}", reduced.to_json());
    print!("{}", reduced.to_csv());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quiver_ten_three example");
}
