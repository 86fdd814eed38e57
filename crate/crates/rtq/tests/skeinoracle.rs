//! The twist-rule oracle on its worked examples and structural properties.

use rtq::qlaurent::LaurentPoly3;
use rtq::skeinoracle::{poincare, specialize_t, twist_apply, WebLabel, WebPoly};
use rtq::tanglecore::{continued_fraction, state_of, Fraction, Letter, Orientation};

fn up(j: usize, k: usize) -> WebLabel {
    WebLabel { orientation: Orientation::UP, j, k }
}

fn poly(terms: &[((i64, i64, i64), i64)]) -> LaurentPoly3 {
    LaurentPoly3::from_terms(terms.iter().copied())
}

#[test]
fn trivial_tangle_is_up_j_0() {
    for j in 0..4 {
        assert_eq!(poincare(Fraction::trivial(), j), WebPoly::basis(up(j, 0)));
    }
}

#[test]
fn one_top_twist_at_color_one() {
    let w = twist_apply(Letter::T, &WebPoly::basis(up(1, 0)));
    assert_eq!(w.coefficient(&up(1, 0)), LaurentPoly3::one());
    assert_eq!(w.coefficient(&up(1, 1)), poly(&[((1, 0, -1), 1)]));
}

#[test]
fn two_one_and_three_one_at_color_one() {
    let w = poincare("2/1".parse().unwrap(), 1);
    assert_eq!(w.coefficient(&up(1, 1)), poly(&[((3, 0, -2), 1), ((1, 0, -1), 1)]));
    assert_eq!(w.coefficient(&up(1, 0)), LaurentPoly3::one());

    let w = poincare("3/1".parse().unwrap(), 1);
    assert_eq!(w.coefficient(&up(1, 1)), poly(&[((5, 0, -3), 1), ((3, 0, -2), 1), ((1, 0, -1), 1)]));
    assert_eq!(w.coefficient(&up(1, 0)), LaurentPoly3::one());
    assert_eq!(w.terms().count(), 2);

    let s = specialize_t(&w);
    assert_eq!(s.coefficient(&up(1, 1)), poly(&[((5, 0, 0), -1), ((3, 0, 0), 1), ((1, 0, 0), -1)]));
    let s2 = specialize_t(&poincare("2/1".parse().unwrap(), 1));
    assert_eq!(s2.coefficient(&up(1, 1)), poly(&[((3, 0, 0), 1), ((1, 0, 0), -1)]));
}

#[test]
fn right_twist_on_weight_zero_only_changes_orientation() {
    for j in 0..4 {
        let w = twist_apply(Letter::R, &WebPoly::basis(up(j, 0)));
        let op = WebLabel { orientation: Orientation::OP, j, k: 0 };
        assert_eq!(w, WebPoly::basis(op));
    }
}

#[test]
fn orientation_color_and_t_degree_over_the_sweep() {
    for f in Fraction::sweep(12) {
        let want = state_of(&continued_fraction(f)).orientation;
        for j in 0..=4 {
            let w = poincare(f, j);
            assert!(!w.is_zero());
            assert_eq!(w.orientations(), vec![want], "{f} j={j}");
            for (l, p) in w.terms() {
                assert_eq!(l.j, j);
                assert!(l.k <= j);
                assert!(p.terms().all(|(&(_, _, t), _)| t <= 0), "{f} j={j}");
            }
        }
    }
}

#[test]
fn specialization_removes_t() {
    let w = specialize_t(&poincare("7/4".parse().unwrap(), 3));
    assert!(w.terms().all(|(_, p)| p.terms().all(|(&(_, _, t), _)| t == 0)));
}

#[test]
fn display_style() {
    let w = poincare("1/1".parse().unwrap(), 1);
    assert_eq!(w.to_string(), "1*q^1*a^0*t^-1 · UP[1,1] + 1*q^0*a^0*t^0 · UP[1,0]");
    assert_eq!(WebPoly::zero().to_string(), "0");
}
