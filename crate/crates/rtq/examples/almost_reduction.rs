// Reduction to almost-quiver form: capped couples are merged, and the
// expansion with the `(-t^{-1}q²;q²)_{K·d}` factor matches the full form exactly.
//
// ```bash
// cargo run -p rtq --example almost_reduction
// ```

use rtq::arcdiagram::{build, BasisOrder};
use rtq::quiverforms::{closed_form_n1, compute_quiver_on, reduce_almost};
use rtq::seriescheck::{expand_almost_form, expand_quiver_form};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = build("8/1".parse()?)?;
    let part = d.partition_xyz()?;
    println!("8/1 couples: {:?}", part.couples);
    let full = compute_quiver_on(&d)?;
    let reduced = reduce_almost(&full, &d)?;
    let arc = reduced.reordered(&d, BasisOrder::Arc);
    println!("{}", arc.to_pretty());
    let closed = closed_form_n1(8, true)?;
    assert_eq!((&arc.k, &arc.s, &arc.q), (&closed.k, &closed.s, &closed.q));
    for j in 0..=3 {
        let same = expand_almost_form(&reduced, j) == expand_quiver_form(&full, j);
        println!("color {j}: almost-quiver expansion equals quiver expansion: {same}");
        assert!(same);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("almost_reduction example");
}
