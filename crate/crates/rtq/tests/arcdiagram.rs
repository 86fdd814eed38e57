//! Arc diagrams: geometry, intersection bookkeeping, partition and rendering.

use rtq::arcdiagram::{build, build_diagram, rat, ratio, BasisOrder, DiagramError};
use rtq::tanglecore::{Fraction, Role, TangleState};

#[test]
fn five_two_layout() {
    let d = build("5/2".parse().unwrap()).unwrap();
    assert_eq!(d.state.to_string(), "(OP, X-|X+|Y)");
    assert_eq!((d.x_a, d.x_i), (rat(0), ratio(8, 5)));
    assert_eq!(d.chords.len(), 6);
    assert_eq!(d.chords[0].from, d.puncture_x(Role::XMinus));
    assert_eq!(d.chords.last().unwrap().to, d.puncture_x(Role::XPlus));
    assert_eq!(d.order, vec![3, 1, 5, 7, 6, 4, 2]);
    assert_eq!(d.omega, 2);
    let part = d.partition_xyz().unwrap();
    assert_eq!(part.couples, vec![(7, 6)]);
    assert_eq!(part.z_block, vec![1, 2, 3, 4, 5]);
}

#[test]
fn trivial_tangle_layout() {
    let d = build(Fraction::trivial()).unwrap();
    assert_eq!(d.size(), 1);
    assert_eq!((d.x_a, d.x_i), (rat(0), ratio(5, 4)));
    assert!(!d.is_active(1));
    assert_eq!(d.omega, 1);
}

#[test]
fn every_small_tangle_builds_with_consistent_indices() {
    for f in Fraction::sweep(16) {
        let d = build(f).unwrap();
        let (u, v) = (d.u(), d.v());
        assert_eq!(d.size(), u + v, "{f}");
        let mut ranks: Vec<usize> = d.xi.iter().map(|p| p.arc_rank).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (1..=u + v).collect::<Vec<_>>(), "{f}");
        for p in &d.xi {
            assert_eq!(p.active, p.index <= u, "{f}");
            assert_eq!(p.position.x, d.vertical_x(p.index));
            assert_eq!(d.point_at(d.param_of(p.index, rat(0))), p.position);
        }
        // Standard indices increase with height on each vertical.
        for w in d.xi.windows(2) {
            if w[0].active == w[1].active {
                assert!(w[0].position.y < w[1].position.y, "{f}");
            }
        }
        assert!(d.epsilon > rat(0));
        assert!(d.chords.iter().all(|c| c.height() < d.top && -c.height() < d.top));
        let part = d.partition_xyz().unwrap();
        assert_eq!(2 * part.couples.len() + part.z_block.len(), u + v, "{f}");
    }
}

#[test]
fn ten_three_partition() {
    let d = build("10/3".parse().unwrap()).unwrap();
    let part = d.partition_xyz().unwrap();
    assert_eq!(part.couples.len(), 5);
    assert_eq!(d.basis_order(BasisOrder::Arc, &part.z_block).len(), 3);
}

#[test]
fn state_must_match_fraction() {
    let err = build_diagram("5/2".parse().unwrap(), &TangleState::initial()).unwrap_err();
    assert!(matches!(err, DiagramError::StateMismatch { .. }));
}

#[test]
fn path_along_is_reversible() {
    let d = build("7/3".parse().unwrap()).unwrap();
    let (p, q) = (d.param_of(1, rat(0)), d.param_of(9, rat(0)));
    let mut back = d.path_along(q, p);
    back.reverse();
    assert_eq!(d.path_along(p, q), back);
}

#[test]
fn svg_output_is_well_formed() {
    let d = build("5/2".parse().unwrap()).unwrap();
    let svg = rtq::arcdiagram::emit_svg(&d);
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1""#));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches(r#"class="xi""#).count(), 7);
    assert_eq!(svg.matches(r#"class="puncture""#).count(), 3);
    assert_eq!(svg.matches(r#"class="vertical""#).count(), 2);
    assert_eq!(svg, rtq::arcdiagram::emit_svg(&d), "rendering is deterministic");
}

#[test]
fn json_dump_lists_every_point() {
    let d = build("3/4".parse().unwrap()).unwrap();
    let j = d.to_json();
    assert_eq!(j["xi"].as_array().unwrap().len(), 7);
    assert_eq!(j["tangle"], "3/4");
    assert_eq!(j["omega"].as_u64().unwrap() as usize, d.omega);
}
