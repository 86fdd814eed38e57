// Winding numbers of planar loops and half-turn counts of two-point loops,
// evaluated on the values that pin down the sign conventions.
//
// ```bash
// cargo run -p rtq --example windings_calibration
// ```

use rtq::arcdiagram::build;
use rtq::tanglecore::Role;
use rtq::windings::{loop_gamma_pair, loop_hat, loop_s, loop_s_hat, loop_tilde, psi, rectangle_move};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = build("5/2".parse()?)?;
    let g = loop_gamma_pair(&d, 7, 4)?;
    println!("5/2: Ψ_Y(γ_7,4) = {}", psi(&d, &[Role::Y], &g)?);
    for (i, j) in [(1, 2), (1, 7), (1, 4), (1, 6)] {
        let l = loop_tilde(&d, i, j)?;
        println!("5/2: Φ(γ̃_{i},{j}) = {:>2}   braid {}", l.phi()?, l.braid_word()?);
    }
    println!("5/2: Φ(s) = {}, Φ(ŝ) = {}, rectangle move Φ = {}",
        loop_s(&d, 1, 2)?.phi()?, loop_s_hat(&d, 1, 2)?.phi()?, rectangle_move(&d, 1, 2)?.phi()?);
    println!("5/2: Φ(γ̃_1,2) = {}, Φ(γ̂_1,2) = {}", loop_tilde(&d, 1, 2)?.phi()?, loop_hat(&d, 1, 2)?.phi()?);

    let d = build("10/3".parse()?)?;
    println!("10/3: Φ(γ̃_10,6) = {}", loop_tilde(&d, 10, 6)?.phi()?);
    println!("10/3: Ψ_X+(γ_10,6) = {}", psi(&d, &[Role::XPlus], &loop_gamma_pair(&d, 10, 6)?)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("windings_calibration example");
}
