//! Fractions, twist words and the puncture state machine.

use proptest::prelude::*;
use rtq::tanglecore::{
    continued_fraction, fraction_walk, state_of, Fraction, Letter, Orientation, Role, TangleError, TangleState,
    TwistWord,
};

#[test]
fn parses_and_validates_fractions() {
    let f: Fraction = "10/3".parse().unwrap();
    assert_eq!((f.u(), f.v(), f.size()), (10, 3, 13));
    assert_eq!(f.to_string(), "10/3");
    assert_eq!("4/2".parse::<Fraction>(), Err(TangleError::NotCoprime { u: 4, v: 2 }));
    assert_eq!("1/0".parse::<Fraction>(), Err(TangleError::ZeroDenominator { u: 1, v: 0 }));
    assert!(matches!("x/3".parse::<Fraction>(), Err(TangleError::ParseFraction(_))));
    assert!(matches!("-1/3".parse::<Fraction>(), Err(TangleError::ParseFraction(_))));
    assert!(Fraction::trivial().is_trivial());
}

#[test]
fn twist_words_of_examples() {
    let word = |s: &str| continued_fraction(s.parse().unwrap()).to_string();
    assert_eq!(word("0/1"), "");
    assert_eq!(word("1/1"), "T");
    assert_eq!(word("3/1"), "T^3");
    assert_eq!(word("1/2"), "R T");
    assert_eq!(word("5/2"), "T^2 R T");
    assert_eq!(word("10/3"), "T^3 R^2 T");
    assert_eq!(continued_fraction("10/3".parse().unwrap()).runs(), &[3, 2, 1]);
}

#[test]
fn parses_twist_words() {
    let w: TwistWord = "T^3 R R T".parse().unwrap();
    assert_eq!(w.runs(), &[3, 2, 1]);
    assert_eq!(fraction_walk(&w).to_string(), "10/3");
    assert!("T R".parse::<TwistWord>().is_err());
    assert!("T X".parse::<TwistWord>().is_err());
    assert_eq!(w.final_letter(), Some(Letter::T));
}

#[test]
fn states_of_examples() {
    let st = |s: &str| state_of(&continued_fraction(s.parse().unwrap())).to_string();
    assert_eq!(st("0/1"), "(UP, Y|X-|X+)");
    assert_eq!(st("1/1"), "(UP, X-|Y|X+)");
    assert_eq!(st("10/3"), "(UP, Y|X-|X+)");
    assert_eq!(TangleState::initial().middle(), Role::XMinus);
}

#[test]
fn orientation_rules() {
    use Orientation::*;
    assert_eq!([UP, OP, RI].map(|o| o.after(Letter::T)), [UP, RI, OP]);
    assert_eq!([UP, OP, RI].map(|o| o.after(Letter::R)), [OP, UP, RI]);
}

#[test]
fn sweep_is_ordered_and_coprime() {
    let s = Fraction::sweep(5);
    let shown: Vec<String> = s.iter().map(|f| f.to_string()).collect();
    assert_eq!(shown[..6], ["0/1", "1/1", "1/2", "2/1", "1/3", "3/1"]);
    assert_eq!(s.len(), 1 + 1 + 2 + 2 + 4);
}

proptest! {
    #[test]
    fn continued_fraction_inverts_the_walk(u in 0u64..200, v in 1u64..200) {
        if let Ok(f) = Fraction::new(u, v) {
            let w = continued_fraction(f);
            prop_assert_eq!(fraction_walk(&w), f);
            prop_assert_eq!(w.to_string().parse::<TwistWord>().unwrap(), w.clone());
            if !f.is_trivial() {
                prop_assert_eq!(w.final_letter(), Some(if u >= v { Letter::T } else { Letter::R }));
            }
        }
    }

    #[test]
    fn states_are_permutations(u in 0u64..60, v in 1u64..60) {
        if let Ok(f) = Fraction::new(u, v) {
            let st = state_of(&continued_fraction(f));
            let mut roles = st.arrangement.to_vec();
            roles.sort();
            prop_assert_eq!(roles, Role::ALL.to_vec());
        }
    }
}
