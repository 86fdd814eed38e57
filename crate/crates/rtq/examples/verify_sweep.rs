// Expands quiver forms over a sweep of tangles and compares each with the
// twist-rule polynomial, printing one JSON line per `(tangle, color)`.
//
// ```bash
// cargo run --release -p rtq --example verify_sweep
// ```

use rtq::seriescheck::verify_sweep;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let records = verify_sweep(8, 2)?;
    for r in &records {
        println!("{}", r.to_json_line());
    }
    let bad = records.iter().filter(|r| !r.is_ok()).count();
    println!("{} checks, {bad} mismatches", records.len());
    if bad > 0 {
        return Err("verification mismatch".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify_sweep example");
}
