//! Winding numbers of loops in the punctured plane and in the two-point
//! configuration space.
//!
//! Conventions: windings are counted clockwise-positive, by signed crossings
//! of the downward vertical ray from each puncture. The two-point invariant
//! `Φ` counts clockwise half-turns of the difference vector `p2 - p1`; a
//! rectangle move has `Φ = +1`. All computations are exact.

use num_traits::Signed;
use thiserror::Error;

use crate::arcdiagram::{rat, ArcDiagram, ArcParam, Point, Rat};
use crate::tanglecore::Role;

/// Failures of exact loop bookkeeping.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error("a path passes through the puncture at x = {0}")]
    ThroughPuncture(Rat),
    #[error("the two points collide during a move")]
    Collision,
    #[error("the difference vector is vertical at the basepoint")]
    DegenerateStart,
    #[error("move for component {0} does not start where the component is")]
    Discontinuous(usize),
    #[error("loop does not return to its basepoint")]
    NotClosed,
    #[error("points {0} and {1} are not on the same vertical")]
    NotSameVertical(usize, usize),
    #[error("index {0} is out of range")]
    BadIndex(usize),
}

/// A closed polyline in the plane; the last vertex joins back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarLoop {
    pub vertices: Vec<Point>,
}

impl PlanarLoop {
    pub fn new(vertices: Vec<Point>) -> Self {
        Self { vertices }
    }

    /// The loop as a closed path (first vertex repeated at the end).
    pub fn closed_path(&self) -> Vec<Point> {
        let mut out = self.vertices.clone();
        if let Some(&first) = self.vertices.first() {
            out.push(first);
        }
        out
    }
}

/// Clockwise winding contribution of an open path around the puncture at `(px, 0)`.
///
/// Each crossing of the downward ray counts `-1` when passing rightwards and
/// `+1` when passing leftwards.
pub fn path_winding(path: &[Point], px: Rat) -> Result<i64, LoopError> {
    let mut w = 0;
    for seg in path.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        if (a.x < px) != (b.x < px) {
            let t = (px - a.x) / (b.x - a.x);
            let y = a.y + t * (b.y - a.y);
            if y == rat(0) {
                return Err(LoopError::ThroughPuncture(px));
            }
            if y < rat(0) {
                w += if b.x > a.x { -1 } else { 1 };
            }
        } else if a.x == px && b.x == px && (a.y.min(b.y) <= rat(0)) && (a.y.max(b.y) >= rat(0)) {
            return Err(LoopError::ThroughPuncture(px));
        }
    }
    Ok(w)
}

/// Clockwise winding number of a closed loop around the puncture at `(px, 0)`.
pub fn winding(l: &PlanarLoop, px: Rat) -> Result<i64, LoopError> {
    path_winding(&l.closed_path(), px)
}

/// Sum of windings of a loop around the punctures with the given roles.
pub fn psi(d: &ArcDiagram, roles: &[Role], l: &PlanarLoop) -> Result<i64, LoopError> {
    roles.iter().map(|&r| winding(l, d.puncture_x(r))).sum()
}

fn check_index(d: &ArcDiagram, i: usize) -> Result<(), LoopError> {
    if i == 0 || i > d.size() {
        Err(LoopError::BadIndex(i))
    } else {
        Ok(())
    }
}

/// Return path from `from` to `to` along the verticals: straight when both
/// lie on one vertical, otherwise up to the top level, across, and down.
fn vertical_return(d: &ArcDiagram, from: Point, to: Point) -> Vec<Point> {
    if from.x == to.x {
        vec![from, to]
    } else {
        vec![from, Point::new(from.x, d.top), Point::new(to.x, d.top), to]
    }
}

/// The loop `γ_{i,j}`: along the arc from `ξ_i` to `ξ_j`, then back to `ξ_i` along the verticals.
pub fn loop_gamma_pair(d: &ArcDiagram, i: usize, j: usize) -> Result<PlanarLoop, LoopError> {
    check_index(d, i)?;
    check_index(d, j)?;
    let mut path = d.path_along(d.param_of(i, rat(0)), d.param_of(j, rat(0)));
    let from = *path.last().expect("non-empty path");
    let back = vertical_return(d, from, d.point(i).position);
    path.extend_from_slice(&back[1..]);
    path.pop();
    if path.is_empty() {
        path.push(d.point(i).position);
    }
    Ok(PlanarLoop::new(path))
}

/// The loop `γ_i = γ_{i,ω}`.
pub fn loop_gamma(d: &ArcDiagram, i: usize) -> Result<PlanarLoop, LoopError> {
    loop_gamma_pair(d, i, d.omega)
}

/// One straight-line schedule step: a single component follows a polyline while the other rests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub component: usize,
    pub path: Vec<Point>,
}

/// A loop in the configuration space of two labelled points, as a sequence of moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loop2 {
    pub start: [Point; 2],
    pub moves: Vec<Move>,
}

/// Result of tracking a two-point loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tracked {
    /// Clockwise half-turns of `p2 - p1`.
    pub phi: i64,
    /// Final positions of the components.
    pub end: [Point; 2],
    /// Braid generators: `+1` for a clockwise half-turn, `-1` for a counter-clockwise one.
    pub letters: Vec<i8>,
}

impl Loop2 {
    /// Follows the schedule, counting half-turns of the difference vector exactly.
    pub fn track(&self) -> Result<Tracked, LoopError> {
        let mut p = self.start;
        let diff = |p: &[Point; 2]| (p[1].x - p[0].x, p[1].y - p[0].y);
        let d0 = diff(&p);
        if d0.0 == rat(0) {
            return Err(LoopError::DegenerateStart);
        }
        let mut side_positive = d0.0 > rat(0);
        let mut letters = Vec::new();
        for m in &self.moves {
            let c = m.component;
            if c > 1 || m.path.first() != Some(&p[c]) {
                return Err(LoopError::Discontinuous(c));
            }
            for &q in &m.path[1..] {
                let old = diff(&p);
                p[c] = q;
                let new = diff(&p);
                if new == (rat(0), rat(0)) {
                    return Err(LoopError::Collision);
                }
                let cross = old.0 * new.1 - old.1 * new.0;
                let dot = old.0 * new.0 + old.1 * new.1;
                if cross == rat(0) && dot <= rat(0) && old != new {
                    return Err(LoopError::Collision);
                }
                if new.0 != rat(0) && (new.0 > rat(0)) != side_positive {
                    let t = old.0 / (old.0 - new.0);
                    let y = old.1 + t * (new.1 - old.1);
                    if y == rat(0) {
                        return Err(LoopError::Collision);
                    }
                    let ccw = (side_positive && y > rat(0)) || (!side_positive && y < rat(0));
                    letters.push(if ccw { -1 } else { 1 });
                    side_positive = !side_positive;
                }
            }
        }
        let phi = letters.iter().map(|&l| i64::from(l)).sum();
        Ok(Tracked { phi, end: p, letters })
    }

    /// `Φ`: the number of clockwise half-turns.
    pub fn phi(&self) -> Result<i64, LoopError> {
        Ok(self.track()?.phi)
    }

    /// Whether the loop returns to its basepoint as an unordered pair.
    pub fn is_closed(&self) -> Result<bool, LoopError> {
        let end = self.track()?.end;
        Ok((end[0] == self.start[0] && end[1] == self.start[1])
            || (end[0] == self.start[1] && end[1] == self.start[0]))
    }

    /// Total clockwise winding of both components around the puncture at `px`.
    pub fn winding(&self, px: Rat) -> Result<i64, LoopError> {
        self.moves.iter().map(|m| path_winding(&m.path, px)).sum()
    }

    /// Winding of a single component's trajectory around the puncture at `px`.
    pub fn component_winding(&self, component: usize, px: Rat) -> Result<i64, LoopError> {
        self.moves
            .iter()
            .filter(|m| m.component == component)
            .map(|m| path_winding(&m.path, px))
            .sum()
    }

    /// `Ψ_{X+}` of the two-point loop: `Φ + 2 w_{X+}`.
    pub fn psi_xplus(&self, d: &ArcDiagram) -> Result<i64, LoopError> {
        Ok(self.phi()? + 2 * self.winding(d.puncture_x(Role::XPlus))?)
    }

    /// Braid word of the difference vector, e.g. `σ σ σ⁻¹`; `1` for the empty word.
    pub fn braid_word(&self) -> Result<String, LoopError> {
        let letters = self.track()?.letters;
        if letters.is_empty() {
            return Ok("1".to_string());
        }
        Ok(letters
            .iter()
            .map(|&l| if l > 0 { "σ" } else { "σ⁻¹" })
            .collect::<Vec<_>>()
            .join(" "))
    }
}

/// Basepoint data for a pair of intersection points.
struct Pair {
    /// Component of `ξ_i`; `ξ_j` is the other one. Component 0 carries the lower index.
    ci: usize,
    cj: usize,
    pos_i: Point,
    pos_j: Point,
    /// The point over `ξ_j` on `ξ_i`'s copy of the vertical.
    target: Point,
    t_i: ArcParam,
    t_j: ArcParam,
    t_target: ArcParam,
}

/// Basepoint on the two copies of the verticals.
///
/// For two points on one vertical, one sits on the copy pushed right by `ε`:
/// the higher index in the standard basepoint, the lower one when `swapped`.
fn pair(d: &ArcDiagram, i: usize, j: usize, swapped: bool) -> Result<Pair, LoopError> {
    check_index(d, i)?;
    check_index(d, j)?;
    let eps = d.epsilon;
    let same = d.is_active(i) == d.is_active(j);
    if swapped && !same {
        return Err(LoopError::NotSameVertical(i, j));
    }
    let hi = i.max(j);
    let offset = |k: usize| if same && ((k == hi) != swapped) { eps } else { rat(0) };
    let (pi, pj) = (d.point(i).position, d.point(j).position);
    let pos_i = Point::new(pi.x + offset(i), pi.y);
    let pos_j = Point::new(pj.x + offset(j), pj.y);
    let target_x = if same { pj.x + offset(i) } else if j > i { pj.x - eps } else { pj.x + eps };
    let target = Point::new(target_x, pj.y);
    let ci = if i < j { 0 } else { 1 };
    Ok(Pair {
        ci,
        cj: 1 - ci,
        pos_i,
        pos_j,
        target,
        t_i: d.param_of(i, offset(i)),
        t_j: d.param_of(j, offset(j)),
        t_target: d.param_at(d.point(j).chord, target_x),
    })
}

/// First half of the two-point loops: `ξ_i` travels along the arc to the point
/// next to `ξ_j`. If `ξ_j` is in the way, the two points pass along the arc in
/// turn instead. Returns the moves and the arc parameters of both components.
fn march(d: &ArcDiagram, p: &Pair) -> (Vec<Move>, [(Point, ArcParam); 2]) {
    let between = |a: ArcParam, x: ArcParam, b: ArcParam| (a < x && x < b) || (b < x && x < a);
    let mut at = [(p.pos_i, p.t_i); 2];
    if !between(p.t_i, p.t_j, p.t_target) {
        at[p.ci] = (p.target, p.t_target);
        at[p.cj] = (p.pos_j, p.t_j);
        (vec![Move { component: p.ci, path: d.path_along(p.t_i, p.t_target) }], at)
    } else {
        at[p.cj] = (p.target, p.t_target);
        at[p.ci] = (p.pos_j, p.t_j);
        (
            vec![
                Move { component: p.cj, path: d.path_along(p.t_j, p.t_target) },
                Move { component: p.ci, path: d.path_along(p.t_i, p.t_j) },
            ],
            at,
        )
    }
}

fn start_of(p: &Pair) -> [Point; 2] {
    let mut s = [p.pos_i; 2];
    s[p.ci] = p.pos_i;
    s[p.cj] = p.pos_j;
    s
}

fn tilde_like(d: &ArcDiagram, i: usize, j: usize, swapped: bool) -> Result<Loop2, LoopError> {
    if i == j {
        return Err(LoopError::BadIndex(i));
    }
    let p = pair(d, i, j, swapped)?;
    let (mut moves, at) = march(d, &p);
    let mover = if at[p.ci].0 == p.target { p.ci } else { p.cj };
    moves.push(Move { component: mover, path: vertical_return(d, p.target, p.pos_i) });
    Ok(Loop2 { start: start_of(&p), moves })
}

/// `γ̃_{i,j}`: `ξ_i` follows the arc to `ξ_j` and returns along the verticals.
pub fn loop_tilde(d: &ArcDiagram, i: usize, j: usize) -> Result<Loop2, LoopError> {
    tilde_like(d, i, j, false)
}

/// `γ̂_{i,j}`: as `γ̃_{i,j}` but from the basepoint with the two copies exchanged.
/// Only defined for points on one vertical.
pub fn loop_hat(d: &ArcDiagram, i: usize, j: usize) -> Result<Loop2, LoopError> {
    tilde_like(d, i, j, true)
}

/// Lower and upper point of a same-vertical pair, with their heights.
fn ordered_same(d: &ArcDiagram, i: usize, j: usize) -> Result<(Rat, Rat, Rat), LoopError> {
    check_index(d, i)?;
    check_index(d, j)?;
    if i == j || d.is_active(i) != d.is_active(j) {
        return Err(LoopError::NotSameVertical(i, j));
    }
    let (lo, hi) = (d.point(i.min(j)).position, d.point(i.max(j)).position);
    Ok((lo.x, lo.y, hi.y))
}

/// The swap `s_{i,j}` from the standard basepoint: the lower point rises on
/// the left copy while the upper one descends on the right copy, then both
/// step sideways along the arc. `Φ = +1`.
pub fn loop_s(d: &ArcDiagram, i: usize, j: usize) -> Result<Loop2, LoopError> {
    let (x, ylo, yhi) = ordered_same(d, i, j)?;
    let x2 = x + d.epsilon;
    let (a, b) = (Point::new(x, ylo), Point::new(x2, yhi));
    Ok(Loop2 {
        start: [a, b],
        moves: vec![
            Move { component: 0, path: vec![a, Point::new(x, yhi)] },
            Move { component: 1, path: vec![b, Point::new(x2, ylo)] },
            Move { component: 0, path: vec![Point::new(x, yhi), b] },
            Move { component: 1, path: vec![Point::new(x2, ylo), a] },
        ],
    })
}

/// The swap `ŝ_{i,j}` from the exchanged basepoint. `Φ = -1`.
pub fn loop_s_hat(d: &ArcDiagram, i: usize, j: usize) -> Result<Loop2, LoopError> {
    let (x, ylo, yhi) = ordered_same(d, i, j)?;
    let x2 = x + d.epsilon;
    let (a, b) = (Point::new(x2, ylo), Point::new(x, yhi));
    Ok(Loop2 {
        start: [a, b],
        moves: vec![
            Move { component: 0, path: vec![a, Point::new(x2, yhi)] },
            Move { component: 1, path: vec![b, Point::new(x, ylo)] },
            Move { component: 0, path: vec![Point::new(x2, yhi), b] },
            Move { component: 1, path: vec![Point::new(x, ylo), a] },
        ],
    })
}

/// The rectangle move: the upper point steps right along the arc while the
/// lower steps left, then they pass each other on the two copies. `Φ = +1`.
pub fn rectangle_move(d: &ArcDiagram, i: usize, j: usize) -> Result<Loop2, LoopError> {
    let (x, ylo, yhi) = ordered_same(d, i, j)?;
    let x2 = x + d.epsilon;
    let (top, bottom) = (Point::new(x, yhi), Point::new(x2, ylo));
    Ok(Loop2 {
        start: [top, bottom],
        moves: vec![
            Move { component: 0, path: vec![top, Point::new(x2, yhi)] },
            Move { component: 1, path: vec![bottom, Point::new(x, ylo)] },
            Move { component: 0, path: vec![Point::new(x2, yhi), bottom] },
            Move { component: 1, path: vec![Point::new(x, ylo), top] },
        ],
    })
}

/// The two-point loop `γ²_{i,j}`: first `γ̃_{i,j}`'s march, then both points
/// slide in parallel along the arc to `ξ_ω`, and return to the basepoint
/// along the verticals. For `i = j` the points start at `ξ_i` on both copies.
pub fn loop_conf2(d: &ArcDiagram, i: usize, j: usize) -> Result<Loop2, LoopError> {
    let eps = d.epsilon;
    let (start, mut moves, at) = if i == j {
        check_index(d, i)?;
        let p = d.point(i).position;
        let s = [p, Point::new(p.x + eps, p.y)];
        let at = [(s[0], d.param_of(i, rat(0))), (s[1], d.param_of(i, eps))];
        (s, Vec::new(), at)
    } else {
        let p = pair(d, i, j, false)?;
        let (moves, at) = march(d, &p);
        (start_of(&p), moves, at)
    };

    // Parallel slide to the two copies of ξ_ω: the point ahead moves first when
    // moving forward along the arc, the trailing one first when moving back.
    let w = d.point(d.omega).position;
    let mut targets = [
        (d.param_of(d.omega, rat(0)), w),
        (d.param_of(d.omega, eps), Point::new(w.x + eps, w.y)),
    ];
    targets.sort_by_key(|a| a.0);
    let (trail, lead) = if at[0].1 <= at[1].1 { (0, 1) } else { (1, 0) };
    let lead_move = Move { component: lead, path: d.path_along(at[lead].1, targets[1].0) };
    let trail_move = Move { component: trail, path: d.path_along(at[trail].1, targets[0].0) };
    if at[lead].1 <= targets[1].0 {
        moves.extend([lead_move, trail_move]);
    } else {
        moves.extend([trail_move, lead_move]);
    }
    let mut end = [w; 2];
    end[lead] = targets[1].1;
    end[trail] = targets[0].1;

    // Return to the basepoint along the verticals.
    let (left, right) = if end[0].x <= end[1].x { (0, 1) } else { (1, 0) };
    let on_omega = |p: Point| (p.x - w.x).abs() <= eps;
    let mut assign = [start[0]; 2];
    match (on_omega(start[0]), on_omega(start[1])) {
        (a, b) if a == b => {
            let (l, r) = if start[0].x <= start[1].x { (start[0], start[1]) } else { (start[1], start[0]) };
            assign[left] = l;
            assign[right] = r;
        }
        (a, _) => {
            let (near, far) = if a { (start[0], start[1]) } else { (start[1], start[0]) };
            if far.x > w.x {
                assign[right] = far;
                assign[left] = near;
            } else {
                assign[left] = far;
                assign[right] = near;
            }
        }
    }
    let path_home = |c: usize| -> Vec<Point> {
        let (a, b) = (end[c], assign[c]);
        if on_omega(b) {
            if a.x == b.x {
                vec![a, b]
            } else {
                vec![a, Point::new(a.x, b.y), b]
            }
        } else {
            vec![a, Point::new(a.x, d.top), Point::new(b.x, d.top), b]
        }
    };
    let paths = [path_home(0), path_home(1)];
    let crossers: Vec<usize> = (0..2).filter(|&c| !on_omega(assign[c])).collect();
    match crossers.len() {
        2 => {
            let positive = assign[0].x > end[0].x;
            let mut order = [0, 1];
            order.sort_by_key(|&c| if positive { -end[c].x } else { end[c].x });
            for (c, path) in paths.iter().enumerate() {
                moves.push(Move { component: c, path: path[..2].to_vec() });
            }
            for c in order {
                moves.push(Move { component: c, path: paths[c][1..3].to_vec() });
            }
            for (c, path) in paths.iter().enumerate() {
                moves.push(Move { component: c, path: path[2..].to_vec() });
            }
        }
        1 => {
            let c = crossers[0];
            moves.push(Move { component: c, path: paths[c].clone() });
            moves.push(Move { component: 1 - c, path: paths[1 - c].clone() });
        }
        _ => {
            for (c, path) in paths.iter().enumerate() {
                moves.push(Move { component: c, path: path.clone() });
            }
        }
    }
    let l = Loop2 { start, moves };
    if !l.is_closed()? {
        return Err(LoopError::NotClosed);
    }
    Ok(l)
}
