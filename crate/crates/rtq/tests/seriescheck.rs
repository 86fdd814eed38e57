//! Quiver-form expansions against the twist-rule oracle.

use rtq::quiverforms::{compute_quiver, compute_reduced};
use rtq::seriescheck::{
    compare_up_to_shift, expand_almost_form, expand_quiver_form, verify_sweep, verify_tangle, ShiftMonomial, Status,
};
use rtq::skeinoracle::{poincare, WebLabel};
use rtq::qlaurent::LaurentPoly3;
use rtq::tanglecore::{Fraction, Orientation};

fn frac(s: &str) -> Fraction {
    s.parse().unwrap()
}

#[test]
fn color_zero_is_a_single_web() {
    for s in ["3/1", "10/3", "2/5"] {
        let q = compute_quiver(frac(s)).unwrap();
        let w = expand_quiver_form(&q, 0);
        assert_eq!(w.terms().count(), 1);
        let (l, p) = w.terms().next().unwrap();
        assert_eq!((l.j, l.k), (0, 0));
        assert_eq!(*p, LaurentPoly3::one());
    }
}

#[test]
fn trivial_tangle_expands_to_up_j_0() {
    let q = compute_quiver(Fraction::trivial()).unwrap();
    for j in 0..4 {
        assert_eq!(expand_quiver_form(&q, j), poincare(Fraction::trivial(), j));
    }
}

#[test]
fn three_one_at_color_one_up_to_shift() {
    let f = frac("3/1");
    let oracle = poincare(f, 1);
    let expanded = expand_quiver_form(&compute_quiver(f).unwrap(), 1);
    let shift = compare_up_to_shift(&oracle, &expanded).unwrap();
    assert_eq!(oracle, expanded.shift((shift.x, shift.y, shift.z)));
}

#[test]
fn identical_and_mismatching_inputs() {
    let w = poincare(frac("3/1"), 2);
    assert_eq!(compare_up_to_shift(&w, &w).unwrap(), ShiftMonomial { x: 0, y: 0, z: 0 });
    let err = compare_up_to_shift(&poincare(frac("2/1"), 1), &poincare(frac("3/1"), 1)).unwrap_err();
    assert!(err.detail.contains("UP[1,1]"), "{err}");
    let zero = rtq::skeinoracle::WebPoly::zero();
    assert!(compare_up_to_shift(&zero, &w).is_err());
    let other = rtq::skeinoracle::WebPoly::basis(WebLabel { orientation: Orientation::OP, j: 2, k: 0 });
    assert!(compare_up_to_shift(&other, &w).is_err());
}

#[test]
fn almost_form_equals_quiver_form_on_fixtures() {
    for s in ["8/1", "10/3"] {
        let f = frac(s);
        let full = compute_quiver(f).unwrap();
        let red = compute_reduced(f).unwrap();
        for j in 0..=3 {
            assert_eq!(expand_almost_form(&red, j), expand_quiver_form(&full, j), "{s} j={j}");
        }
    }
}

#[test]
fn main_sweep_up_to_ten() {
    let records = verify_sweep(10, 3).unwrap();
    assert_eq!(records.len(), 4 * Fraction::sweep(10).len());
    for r in &records {
        assert_eq!(r.status, Status::Ok, "{}", r.to_json_line());
        assert!(r.shift.is_some());
    }
}

#[test]
fn records_serialize_as_json_lines() {
    let recs = verify_tangle(frac("3/1"), 1).unwrap();
    assert_eq!(recs[0].to_json_line(), r#"{"tangle":"3/1","j":0,"status":"ok","shift":[0,0,0]}"#);
    assert!(recs[1].to_json_line().starts_with(r#"{"tangle":"3/1","j":1,"status":"ok","shift":["#));
}
