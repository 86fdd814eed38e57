// Twist words of fractions and the orientation/puncture state they reach.
//
// ```bash
// cargo run -p rtq --example twist_words
// ```

use rtq::tanglecore::{continued_fraction, fraction_walk, state_of, Fraction, TwistWord};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6}  {:<14} state", "u/v", "word");
    for s in ["0/1", "1/1", "3/1", "5/2", "2/5", "10/3", "7/4"] {
        let f: Fraction = s.parse()?;
        let word = continued_fraction(f);
        assert_eq!(fraction_walk(&word), f);
        println!("{:>6}  {:<14} {}", f.to_string(), word.to_string(), state_of(&word));
    }

    // Words can be written by hand; repeated letters merge into runs.
    let w: TwistWord = "T^3 R R T".parse()?;
    println!("{w} builds {}", fraction_walk(&w));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("twist_words example");
}
