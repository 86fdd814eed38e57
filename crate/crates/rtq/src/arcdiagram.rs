//! Exact geometric diagram of a rational tangle: three punctures on the real
//! axis, the arc joining the `X-` and `X+` punctures, and the two vertical
//! lines `l_A` (active, left) and `l_I` (inactive, right).
//!
//! The arc is drawn as the image of a straight line of slope `v/u` on the
//! pillowcase (the square `[0,1] x [-1,1]` with its boundary folded onto the
//! real axis of the punctured plane). Each visit to the real axis becomes a
//! vertex, so the arc is a chain of *chords* `a -> b` on the real line, each
//! living in the upper or lower half-plane. A chord is realized as a box
//! `(a,0) -> (a,h) -> (b,h) -> (b,0)` with `h = ±|b - a|`; nested chords get
//! distinct heights, so all later winding counts are exact ray crossings.
//! All coordinates are exact rationals.

use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde_json::json;
use thiserror::Error;

use crate::tanglecore::{continued_fraction, state_of, Fraction, Role, TangleState};
use crate::windings;

/// Exact rational scalar used for every coordinate.
pub type Rat = Ratio<i128>;

/// Shorthand for an integer rational.
pub fn rat(n: i128) -> Rat {
    Rat::from_integer(n)
}

/// Shorthand for `n/d`.
pub fn ratio(n: i128, d: i128) -> Rat {
    Rat::new(n, d)
}

/// A point of the plane with exact coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Self { x, y }
    }
}

/// Failures of diagram construction. These signal a convention bug, never bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("vertical {vertical} meets the arc {got} times, expected {expected}")]
    CountMismatch { vertical: &'static str, expected: usize, got: usize },
    #[error("arc endpoints do not sit on the X- and X+ punctures")]
    EndpointMismatch,
    #[error("arc is not simple: chords {0} and {1} cross")]
    NotSimple(usize, usize),
    #[error("state {given} does not belong to tangle {fraction} (expected {expected})")]
    StateMismatch { fraction: Fraction, given: TangleState, expected: TangleState },
    #[error("pillowcase point does not reduce to the real axis")]
    OffAxis,
    #[error("block partition is ambiguous at point {0}")]
    AmbiguousPartition(usize),
    #[error("winding computation failed: {0}")]
    Winding(String),
}

/// One puncture and its role.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Puncture {
    pub role: Role,
    pub x: Rat,
}

/// A piece of the arc from `from` to `to` on the real line, in the half-plane `face` (±1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub from: Rat,
    pub to: Rat,
    pub face: i8,
}

impl Chord {
    /// Signed height of the box realizing the chord.
    pub fn height(&self) -> Rat {
        let span = (self.to - self.from).abs();
        if self.face > 0 {
            span
        } else {
            -span
        }
    }

    /// Whether the vertical line at `x` meets the chord (strictly inside its span).
    pub fn spans(&self, x: Rat) -> bool {
        let (lo, hi) = if self.from < self.to { (self.from, self.to) } else { (self.to, self.from) };
        lo < x && x < hi
    }

    fn interval(&self) -> (Rat, Rat) {
        if self.from < self.to {
            (self.from, self.to)
        } else {
            (self.to, self.from)
        }
    }
}

/// Position along the arc: segment index of the box polyline and a fraction in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcParam {
    pub segment: usize,
    pub t: Rat,
}

/// An intersection of the arc with a vertical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    /// Standard index: active points `1..=u` bottom to top, then inactive `u+1..=u+v`.
    pub index: usize,
    pub active: bool,
    /// Position on its vertical, 1 = lowest.
    pub height_rank: usize,
    /// Position along the arc from `X-`, 1 = first.
    pub arc_rank: usize,
    /// Chord carrying the point.
    pub chord: usize,
    pub position: Point,
}

/// Maximal matching of same-vertical couples whose connecting arc piece caps around `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    /// Couples in arc order, each listed as `(earlier, later)` along the arc.
    pub couples: Vec<(usize, usize)>,
    /// Indices in no couple.
    pub z_block: Vec<usize>,
}

/// The full diagram of `τ_{u/v}`.
#[derive(Clone, Debug)]
pub struct ArcDiagram {
    pub fraction: Fraction,
    pub state: TangleState,
    pub punctures: [Puncture; 3],
    pub chords: Vec<Chord>,
    pub x_a: Rat,
    pub x_i: Rat,
    /// Intersection points indexed by `standard index - 1`.
    pub xi: Vec<IntersectionPoint>,
    /// Standard indices in arc order; the last one is `omega`.
    pub order: Vec<usize>,
    pub omega: usize,
    /// Push-off distance for parallel copies of the verticals.
    pub epsilon: Rat,
    /// Height above every chord, used for slides between the verticals.
    pub top: Rat,
}

/// Folds a point of the plane onto the pillowcase domain `[0,1] x [-1,1)`.
fn reduce_point(x: Rat, y: Rat) -> (Rat, Rat) {
    let two = rat(2);
    let mut xm = x - two * (x / two).floor();
    let mut y = y;
    if xm > rat(1) {
        xm = two - xm;
        y = -y;
    }
    let y = (y + rat(1)) - two * ((y + rat(1)) / two).floor() - rat(1);
    (xm, y)
}

/// Real-axis position of a boundary point of the pillowcase domain.
fn boundary_position(xm: Rat, y: Rat) -> Result<Rat, DiagramError> {
    if xm.is_zero() {
        Ok(-rat(1) - y.abs())
    } else if xm == rat(1) {
        Ok(rat(1) + y.abs())
    } else if y.is_zero() {
        Ok(-rat(1) + rat(2) * xm)
    } else if y.abs() == rat(1) {
        Ok(rat(2) + rat(2) * (rat(1) - xm))
    } else {
        Err(DiagramError::OffAxis)
    }
}

/// Real-axis visits and half-plane faces of the line of slope `v/u`, for `u >= v >= 1`.
fn pillowcase_arc(u: u64, v: u64) -> Result<(Vec<Rat>, Vec<i8>), DiagramError> {
    let (u, v) = (u as i128, v as i128);
    let sx = if u % 2 == 1 { rat(0) } else { rat(1) };
    let sy = rat(0);
    let mut ts: Vec<Rat> = (1..u).map(|k| ratio(k, u)).chain((1..v).map(|m| ratio(m, v))).collect();
    ts.sort();
    ts.dedup();
    let mut all = vec![rat(0)];
    all.extend(ts);
    all.push(rat(1));
    let at = |t: Rat| reduce_point(sx + t * rat(u), sy + t * rat(v));
    let mut pts = Vec::with_capacity(all.len());
    for &t in &all {
        let (xm, y) = at(t);
        pts.push(boundary_position(xm, y)?);
    }
    let faces = all
        .windows(2)
        .map(|w| {
            let (_, y) = at((w[0] + w[1]) / rat(2));
            if y > rat(0) {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok((pts, faces))
}

/// Midpoints of the gaps between consecutive points of `pts` inside `(lo, hi)`.
fn gap_midpoints(pts: &[Rat], lo: Rat, hi: Rat) -> Vec<Rat> {
    let mut cuts: Vec<Rat> = pts.iter().copied().filter(|&p| lo < p && p < hi).collect();
    cuts.push(lo);
    cuts.push(hi);
    cuts.sort();
    cuts.dedup();
    cuts.windows(2).map(|w| (w[0] + w[1]) / rat(2)).collect()
}

/// Builds the diagram of `f`, deriving the state from its twist word.
pub fn build(f: Fraction) -> Result<ArcDiagram, DiagramError> {
    let state = state_of(&continued_fraction(f));
    build_diagram(f, &state)
}

/// Builds the diagram of `f` with puncture roles read from `state`.
pub fn build_diagram(f: Fraction, state: &TangleState) -> Result<ArcDiagram, DiagramError> {
    let expected = state_of(&continued_fraction(f));
    if expected != *state {
        return Err(DiagramError::StateMismatch { fraction: f, given: *state, expected });
    }
    let (u, v) = (f.u(), f.v());
    let (mut pts, mut faces, puncture_x) = if f.is_trivial() {
        (vec![rat(1), ratio(3, 2), rat(2)], vec![1, -1], [rat(-1), rat(1), rat(2)])
    } else if u >= v {
        let (p, fc) = pillowcase_arc(u, v)?;
        (p, fc, [rat(-1), rat(1), rat(2)])
    } else {
        let (p, fc) = pillowcase_arc(v, u)?;
        (p.into_iter().map(|x| -x).collect(), fc, [rat(-2), rat(-1), rat(1)])
    };
    let punctures = [0, 1, 2].map(|k| Puncture { role: state.arrangement[k], x: puncture_x[k] });
    let role_x = |r: Role| punctures.iter().find(|p| p.role == r).expect("all roles present").x;
    let (xm, xp) = (role_x(Role::XMinus), role_x(Role::XPlus));
    if pts[0] == xp && *pts.last().expect("non-empty arc") == xm {
        pts.reverse();
        faces.reverse();
    }
    if pts[0] != xm || *pts.last().expect("non-empty arc") != xp {
        return Err(DiagramError::EndpointMismatch);
    }
    let chords: Vec<Chord> = faces
        .iter()
        .enumerate()
        .map(|(k, &face)| Chord { from: pts[k], to: pts[k + 1], face })
        .collect();
    check_simple(&chords)?;

    let count = |x: Rat| chords.iter().filter(|c| c.spans(x)).count();
    let (x_a, x_i) = if f.is_trivial() {
        (rat(0), ratio(5, 4))
    } else if u >= v {
        let x_a = gap_midpoints(&pts, rat(-1), rat(1))
            .into_iter()
            .min_by_key(|&x| (x.abs(), x))
            .expect("gap exists");
        let x_i = gap_midpoints(&pts, rat(1), rat(2))
            .into_iter()
            .min_by_key(|&x| (count(x), x))
            .expect("gap exists");
        (x_a, x_i)
    } else {
        let x_i = gap_midpoints(&pts, rat(-1), rat(1))
            .into_iter()
            .min_by_key(|&x| (x.abs(), x))
            .expect("gap exists");
        let x_a = gap_midpoints(&pts, rat(-2), rat(-1))
            .into_iter()
            .min_by_key(|&x| (count(x), -x))
            .expect("gap exists");
        (x_a, x_i)
    };
    for (name, x, want) in [("l_A", x_a, u as usize), ("l_I", x_i, v as usize)] {
        let got = count(x);
        if got != want {
            return Err(DiagramError::CountMismatch { vertical: name, expected: want, got });
        }
    }

    // Intersection points with their height keys and arc positions.
    struct Raw {
        chord: usize,
        active: bool,
        x: Rat,
        key: (i8, Rat),
        arc: (usize, Rat),
    }
    let mut raw = Vec::new();
    for (k, c) in chords.iter().enumerate() {
        for (x, active) in [(x_a, true), (x_i, false)] {
            if c.spans(x) {
                let span = (c.to - c.from).abs();
                raw.push(Raw {
                    chord: k,
                    active,
                    x,
                    key: (c.face, if c.face > 0 { span } else { -span }),
                    arc: (k, (x - c.from) / (c.to - c.from)),
                });
            }
        }
    }
    let n = raw.len();
    let mut index = vec![0usize; n];
    let mut height_rank = vec![0usize; n];
    for side in [true, false] {
        let mut ids: Vec<usize> = (0..n).filter(|&r| raw[r].active == side).collect();
        ids.sort_by(|&a, &b| raw[a].key.cmp(&raw[b].key));
        for (rank, &r) in ids.iter().enumerate() {
            height_rank[r] = rank + 1;
            index[r] = if side { rank + 1 } else { u as usize + rank + 1 };
        }
    }
    let mut by_arc: Vec<usize> = (0..n).collect();
    by_arc.sort_by(|&a, &b| raw[a].arc.cmp(&raw[b].arc));
    let mut arc_rank = vec![0usize; n];
    for (rank, &r) in by_arc.iter().enumerate() {
        arc_rank[r] = rank + 1;
    }
    let mut xi: Vec<IntersectionPoint> = (0..n)
        .map(|r| IntersectionPoint {
            index: index[r],
            active: raw[r].active,
            height_rank: height_rank[r],
            arc_rank: arc_rank[r],
            chord: raw[r].chord,
            position: Point::new(raw[r].x, chords[raw[r].chord].height()),
        })
        .collect();
    xi.sort_by_key(|p| p.index);
    let order: Vec<usize> = by_arc.iter().map(|&r| index[r]).collect();
    let omega = *order.last().expect("at least one intersection");

    let mut xs: Vec<Rat> = pts.clone();
    xs.extend([x_a, x_i]);
    xs.extend(puncture_x);
    xs.sort();
    xs.dedup();
    let min_gap = xs.windows(2).map(|w| w[1] - w[0]).min().expect("several x-values");
    let epsilon = min_gap / rat(16);
    let top = chords.iter().map(|c| c.height().abs()).max().expect("non-empty arc") + rat(1);

    Ok(ArcDiagram { fraction: f, state: *state, punctures, chords, x_a, x_i, xi, order, omega, epsilon, top })
}

/// Same-face chords must be nested or disjoint, and only consecutive chords may share an endpoint.
fn check_simple(chords: &[Chord]) -> Result<(), DiagramError> {
    for a in 0..chords.len() {
        for b in a + 1..chords.len() {
            let (p, q) = (chords[a].interval(), chords[b].interval());
            let shares = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
            if shares && b != a + 1 {
                return Err(DiagramError::NotSimple(a, b));
            }
            if chords[a].face != chords[b].face || shares {
                continue;
            }
            let disjoint = p.1 <= q.0 || q.1 <= p.0;
            let nested = (p.0 < q.0 && q.1 < p.1) || (q.0 < p.0 && p.1 < q.1);
            if !disjoint && !nested {
                return Err(DiagramError::NotSimple(a, b));
            }
        }
    }
    Ok(())
}

/// Basis orderings used for output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasisOrder {
    /// Active points bottom to top, then inactive points bottom to top.
    #[default]
    Standard,
    /// Active points in arc order, then inactive points in arc order.
    Arc,
}

impl ArcDiagram {
    pub fn u(&self) -> usize {
        self.fraction.u() as usize
    }

    pub fn v(&self) -> usize {
        self.fraction.v() as usize
    }

    /// Number of intersection points.
    pub fn size(&self) -> usize {
        self.xi.len()
    }

    /// Intersection point with standard index `i` (1-based).
    pub fn point(&self, i: usize) -> &IntersectionPoint {
        &self.xi[i - 1]
    }

    pub fn is_active(&self, i: usize) -> bool {
        self.point(i).active
    }

    /// x-coordinate of the puncture with the given role.
    pub fn puncture_x(&self, role: Role) -> Rat {
        self.punctures.iter().find(|p| p.role == role).expect("all roles present").x
    }

    /// Role of the middle puncture `Z`.
    pub fn middle_role(&self) -> Role {
        self.state.middle()
    }

    /// x-coordinate of the vertical through point `i`.
    pub fn vertical_x(&self, i: usize) -> Rat {
        if self.is_active(i) {
            self.x_a
        } else {
            self.x_i
        }
    }

    /// Standard indices in arc order (the last is `omega`).
    pub fn arc_order(&self) -> &[usize] {
        &self.order
    }

    /// Standard indices sorted by the requested basis order.
    pub fn basis_order(&self, order: BasisOrder, indices: &[usize]) -> Vec<usize> {
        let mut out = indices.to_vec();
        match order {
            BasisOrder::Standard => out.sort(),
            BasisOrder::Arc => out.sort_by_key(|&i| (!self.is_active(i), self.point(i).arc_rank)),
        }
        out
    }

    /// Vertices of the box polyline from `X-` to `X+`.
    ///
    /// Chord `k` occupies segments `3k` (up/down from the axis), `3k+1` (the
    /// horizontal top carrying all intersection points) and `3k+2` (back to the axis).
    pub fn arc_vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(3 * self.chords.len() + 1);
        out.push(Point::new(self.chords[0].from, rat(0)));
        for c in &self.chords {
            let h = c.height();
            out.push(Point::new(c.from, h));
            out.push(Point::new(c.to, h));
            out.push(Point::new(c.to, rat(0)));
        }
        out
    }

    /// Arc parameter of the point of chord `k` above `x`.
    pub fn param_at(&self, chord: usize, x: Rat) -> ArcParam {
        let c = &self.chords[chord];
        ArcParam { segment: 3 * chord + 1, t: (x - c.from) / (c.to - c.from) }
    }

    /// Point of the arc at a parameter.
    pub fn point_at(&self, p: ArcParam) -> Point {
        let vs = self.arc_vertices();
        let (a, b) = (vs[p.segment], vs[p.segment + 1]);
        Point::new(a.x + p.t * (b.x - a.x), a.y + p.t * (b.y - a.y))
    }

    /// Polyline following the arc from parameter `p` to parameter `q` (either direction).
    pub fn path_along(&self, p: ArcParam, q: ArcParam) -> Vec<Point> {
        let vs = self.arc_vertices();
        let at = |r: ArcParam| {
            let (a, b) = (vs[r.segment], vs[r.segment + 1]);
            Point::new(a.x + r.t * (b.x - a.x), a.y + r.t * (b.y - a.y))
        };
        let mut out = vec![at(p)];
        if p < q {
            out.extend_from_slice(&vs[p.segment + 1..=q.segment]);
        } else if q < p {
            out.extend(vs[q.segment + 1..=p.segment].iter().rev());
        }
        out.push(at(q));
        out.dedup();
        out
    }

    /// Arc parameter of intersection point `i`, optionally pushed sideways by `dx`.
    pub fn param_of(&self, i: usize, dx: Rat) -> ArcParam {
        let p = self.point(i);
        self.param_at(p.chord, p.position.x + dx)
    }

    /// The block partition into capped couples and the remaining `Z` block.
    pub fn partition_xyz(&self) -> Result<BlockPartition, DiagramError> {
        let y = self.puncture_x(Role::Y);
        let xm = self.puncture_x(Role::XMinus);
        let xp = self.puncture_x(Role::XPlus);
        let mut couples = Vec::new();
        for w in self.order.windows(2) {
            let (a, b) = (w[0], w[1]);
            if self.is_active(a) != self.is_active(b) {
                continue;
            }
            let mut ring = self.path_along(self.param_of(a, rat(0)), self.param_of(b, rat(0)));
            ring.pop();
            let ring = windings::PlanarLoop::new(ring);
            let wind = |px| windings::winding(&ring, px).map_err(|e| DiagramError::Winding(e.to_string()));
            if wind(y)?.abs() == 1 && wind(xm)? == 0 && wind(xp)? == 0 {
                couples.push((a, b));
            }
        }
        let mut used = std::collections::BTreeSet::new();
        for &(a, b) in &couples {
            for p in [a, b] {
                if !used.insert(p) {
                    return Err(DiagramError::AmbiguousPartition(p));
                }
            }
        }
        let z_block = (1..=self.size()).filter(|p| !used.contains(p)).collect();
        Ok(BlockPartition { couples, z_block })
    }

    /// Debug dump: punctures, chords, verticals and the intersection table.
    pub fn to_json(&self) -> serde_json::Value {
        let r = |x: Rat| x.to_string();
        json!({
            "tangle": self.fraction.to_string(),
            "state": self.state,
            "punctures": self.punctures.iter().map(|p| json!({"role": p.role, "x": r(p.x)})).collect::<Vec<_>>(),
            "chords": self.chords.iter().map(|c| json!({"from": r(c.from), "to": r(c.to), "face": c.face})).collect::<Vec<_>>(),
            "x_A": r(self.x_a),
            "x_I": r(self.x_i),
            "xi": self.xi.iter().map(|p| json!({
                "index": p.index,
                "active": p.active,
                "height_rank": p.height_rank,
                "arc_rank": p.arc_rank,
                "chord": p.chord,
                "x": r(p.position.x),
                "y": r(p.position.y),
            })).collect::<Vec<_>>(),
            "order": self.order,
            "omega": self.omega,
        })
    }
}

fn to_f64(x: Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Renders the diagram as an SVG 1.1 document.
///
/// Chords are drawn as half-circles; intersection points are placed on them
/// and labelled by standard index, punctures by role.
pub fn emit_svg(d: &ArcDiagram) -> String {
    let scale = 80.0;
    let xs: Vec<f64> = d
        .chords
        .iter()
        .flat_map(|c| [to_f64(c.from), to_f64(c.to)])
        .chain(d.punctures.iter().map(|p| to_f64(p.x)))
        .collect();
    let (xmin, xmax) = xs.iter().fold((f64::MAX, f64::MIN), |(a, b), &x| (a.min(x), b.max(x)));
    let rmax = d.chords.iter().map(|c| to_f64((c.to - c.from).abs()) / 2.0).fold(0.0, f64::max);
    let pad = 0.6;
    let (x0, x1) = (xmin.min(to_f64(d.x_a)) - pad, xmax.max(to_f64(d.x_i)) + pad);
    let (y0, y1) = (-rmax - pad, rmax + pad);
    let (w, h) = ((x1 - x0) * scale, (y1 - y0) * scale);
    let px = |x: f64| (x - x0) * scale;
    let py = |y: f64| (y1 - y) * scale;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(s, r#"  <title>arc diagram of {}</title>"#, d.fraction);
    let _ = writeln!(s, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    for (name, x) in [("l_A", d.x_a), ("l_I", d.x_i)] {
        let x = px(to_f64(x));
        let _ = writeln!(
            s,
            r##"  <line class="vertical" x1="{x:.2}" y1="0" x2="{x:.2}" y2="{h:.1}" stroke="#777777" stroke-dasharray="6,4"/>"##
        );
        let _ = writeln!(s, r#"  <text x="{:.2}" y="14" font-size="12">{name}</text>"#, x + 4.0);
    }
    let mut path = String::new();
    for (k, c) in d.chords.iter().enumerate() {
        let (a, b) = (to_f64(c.from), to_f64(c.to));
        let r = (b - a).abs() / 2.0 * scale;
        if k == 0 {
            let _ = write!(path, "M {:.2} {:.2} ", px(a), py(0.0));
        }
        // Sweep flag chosen so the half-circle bulges into the chord's half-plane.
        let sweep = i32::from((b > a) == (c.face > 0));
        let _ = write!(path, "A {r:.2} {r:.2} 0 0 {sweep} {:.2} {:.2} ", px(b), py(0.0));
    }
    let _ = writeln!(s, r##"  <path class="arc" d="{}" fill="none" stroke="#1f4e9c" stroke-width="2"/>"##, path.trim_end());
    for p in &d.punctures {
        let x = px(to_f64(p.x));
        let _ = writeln!(s, r##"  <circle class="puncture" cx="{x:.2}" cy="{:.2}" r="5" fill="#000000"/>"##, py(0.0));
        let _ = writeln!(s, r#"  <text x="{:.2}" y="{:.2}" font-size="14">{}</text>"#, x + 6.0, py(0.0) - 6.0, p.role);
    }
    for p in &d.xi {
        let c = &d.chords[p.chord];
        let (a, b) = (to_f64(c.from), to_f64(c.to));
        let (mid, r) = ((a + b) / 2.0, (b - a).abs() / 2.0);
        let x = to_f64(p.position.x);
        let y = f64::from(c.face) * (r * r - (x - mid) * (x - mid)).max(0.0).sqrt();
        let color = if p.active { "#c0392b" } else { "#27ae60" };
        let _ = writeln!(s, r#"  <circle class="xi" cx="{:.2}" cy="{:.2}" r="3.5" fill="{color}"/>"#, px(x), py(y));
        let _ = writeln!(
            s,
            r#"  <text x="{:.2}" y="{:.2}" font-size="11">ξ{}</text>"#,
            px(x) + 5.0,
            py(y) - 4.0,
            p.index
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}
