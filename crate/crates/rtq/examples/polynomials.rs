// Exact Laurent polynomials in `q, a, t` and the quantum combinatorics built on them.
//
// ```bash
// cargo run -p rtq --example polynomials
// ```

use rtq::qlaurent::{
    multinomial_by_inversions, q_pochhammer, quantum_binomial, quantum_binomial_minus, quantum_multinomial,
    LaurentPoly3,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Polynomials print in a canonical, parseable form.
    let x: LaurentPoly3 = "1*q^0*a^0*t^0 + 1*q^1*a^1*t^-1".parse()?;
    let square = &x * &x;
    println!("x      = {x}");
    println!("x^2    = {square}");
    println!("x^2/x  = {}", square.checked_div(&x)?);
    println!("t = -1 : {}", square.specialize_t_minus_one());

    // Quantum binomials and their q -> 1/q mirror images.
    println!("[4;2]+ = {}", quantum_binomial(4, 2));
    println!("[4;2]- = {}", quantum_binomial_minus(4, 2));

    // A multinomial as a quotient of Pochhammer symbols equals the inversion sum over words.
    let parts = [2, 1, 1];
    let by_division = quantum_multinomial(4, &parts)?;
    assert_eq!(by_division, multinomial_by_inversions(&parts));
    println!("[4;2,1,1] = {by_division}");
    println!("(q^2;q^2)_3 = {}", q_pochhammer(3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("polynomials example");
}
