//! Quiver-form data `(S, A, T, Q)` of a rational tangle, read off from
//! winding numbers on its arc diagram, and the reduction to almost-quiver form.
//!
//! For `ξ_i` with `γ_i = γ_{i,ω}` and `a_i = A_i I_ω - I_i A_ω` (indicators of
//! the active and inactive vertical), and `z = 1` exactly when the middle
//! puncture is `X+`:
//!
//! * `S_i = Ψ_{X±,Y}(γ_i) + a_i`, `A_i = 2Ψ_{X+}(γ_i) + z a_i`, `T = -S`;
//! * `Q_ii = Ψ_{X-,Y}(γ_i) - 3Ψ_{X+}(γ_i) - 2z a_i`;
//! * `Q_ij = Q_ii + Φ(γ̃_{j,i}) - 2Ψ_{X+}(γ_{j,i}) + z(A_i I_j - A_j I_i)`.
//!
//! An independent route computes `Q_ij` from the two-point loop `γ²_{j,i}`
//! ([`compute_q_conf2`]); both must agree.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::arcdiagram::{self, ArcDiagram, BasisOrder, DiagramError};
use crate::tanglecore::{Fraction, Role, TangleState};
use crate::windings::{self, LoopError};

/// Failures while computing quiver data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Loop(#[from] LoopError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Quiver-form (or almost-quiver-form) data over a basis of intersection points.
///
/// JSON keys appear in the order `tangle, state, reduced, basis, K, S, A, T, Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverData {
    pub tangle: Fraction,
    pub state: TangleState,
    pub reduced: bool,
    /// Standard indices of the basis points, in output order.
    pub basis: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<i64>,
    #[serde(rename = "S")]
    pub s: Vec<i64>,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    #[serde(rename = "T")]
    pub t: Vec<i64>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<i64>>,
    /// Points removed by the reduction (the `X` members of each couple).
    #[serde(skip)]
    pub removed: Vec<usize>,
}

impl QuiverData {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether basis position `pos` lies on the active vertical.
    pub fn is_active(&self, pos: usize) -> bool {
        self.basis[pos] <= self.tangle.u() as usize
    }

    /// Position of standard index `i` in the basis.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.basis.iter().position(|&b| b == i)
    }

    /// The same data listed in another order of the basis.
    pub fn permuted(&self, order: &[usize]) -> QuiverData {
        let pos: Vec<usize> = order.iter().map(|&i| self.position(i).expect("index in basis")).collect();
        let pick = |v: &[i64]| pos.iter().map(|&p| v[p]).collect::<Vec<_>>();
        QuiverData {
            tangle: self.tangle,
            state: self.state,
            reduced: self.reduced,
            basis: order.to_vec(),
            k: pick(&self.k),
            s: pick(&self.s),
            a: pick(&self.a),
            t: pick(&self.t),
            q: pos.iter().map(|&r| pos.iter().map(|&c| self.q[r][c]).collect()).collect(),
            removed: self.removed.clone(),
        }
    }

    /// Reorders the basis by a diagram basis order.
    pub fn reordered(&self, d: &ArcDiagram, order: BasisOrder) -> QuiverData {
        self.permuted(&d.basis_order(order, &self.basis))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.q[i][j] == self.q[j][i]))
    }

    /// Pretty block form: the removed set, the `[K|S|A|T]` table and `Q`.
    pub fn to_pretty(&self) -> String {
        let mut s = String::new();
        let kind = if self.reduced { "almost-quiver form" } else { "quiver form" };
        let _ = writeln!(s, "τ_{} {}  {kind}", self.tangle, self.state);
        if self.reduced {
            let x: Vec<String> = self.removed.iter().map(|i| format!("ξ{i}")).collect();
            let _ = writeln!(s, "X = {{{}}}", x.join(", "));
        }
        let labels: Vec<String> = self.basis.iter().map(|i| format!("ξ{i}")).collect();
        let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(3);
        let cell = |v: i64| format!("{v:>4}");
        let _ = writeln!(s, "{:w$} |{:>4}{:>4}{:>4}{:>4}", "", "K", "S", "A", "T");
        for (p, l) in labels.iter().enumerate() {
            let _ = writeln!(
                s,
                "{l:w$} |{}{}{}{}",
                cell(self.k[p]),
                cell(self.s[p]),
                cell(self.a[p]),
                cell(self.t[p])
            );
        }
        let _ = writeln!(s, "Q =");
        let _ = writeln!(s, "{:w$} |{}", "", labels.iter().map(|l| format!("{l:>4}")).collect::<String>());
        for (p, l) in labels.iter().enumerate() {
            let _ = writeln!(s, "{l:w$} |{}", self.q[p].iter().map(|&v| cell(v)).collect::<String>());
        }
        s
    }

    /// CSV dump of `Q`, row-major, with a header row of basis labels.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.basis.iter().map(|i| format!("xi{i}")));
        w.write_record(&header).expect("in-memory write");
        for (p, row) in self.q.iter().enumerate() {
            let mut rec = vec![format!("xi{}", self.basis[p])];
            rec.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    /// JSON document with the documented key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn indicators(d: &ArcDiagram, i: usize) -> (i64, i64) {
    if d.is_active(i) {
        (1, 0)
    } else {
        (0, 1)
    }
}

fn z_flag(d: &ArcDiagram) -> i64 {
    i64::from(d.middle_role() == Role::XPlus)
}

/// Computes the full quiver-form data of `f` in the standard basis.
pub fn compute_quiver(f: Fraction) -> Result<QuiverData, QuiverError> {
    compute_quiver_on(&arcdiagram::build(f)?)
}

/// Computes the full quiver-form data on a prepared diagram.
pub fn compute_quiver_on(d: &ArcDiagram) -> Result<QuiverData, QuiverError> {
    let n = d.size();
    let w = d.omega;
    let z = z_flag(d);
    let (aw, iw) = indicators(d, w);
    let x_plus = [Role::XPlus];
    let mut s = vec![0; n];
    let mut a = vec![0; n];
    let mut qd = vec![0; n];
    for i in 1..=n {
        let g = windings::loop_gamma(d, i)?;
        let (ai, ii) = indicators(d, i);
        let lin = ai * iw - ii * aw;
        let psi_xp = windings::psi(d, &x_plus, &g)?;
        s[i - 1] = windings::psi(d, &Role::ALL, &g)? + lin;
        a[i - 1] = 2 * psi_xp + z * lin;
        qd[i - 1] = windings::psi(d, &[Role::XMinus, Role::Y], &g)? - 3 * psi_xp - 2 * z * lin;
    }
    let mut q = vec![vec![0; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            q[i - 1][j - 1] = if i == j {
                qd[i - 1]
            } else {
                let (ai, ii) = indicators(d, i);
                let (aj, ij) = indicators(d, j);
                let phi = windings::loop_tilde(d, j, i)?.phi()?;
                let psi = windings::psi(d, &x_plus, &windings::loop_gamma_pair(d, j, i)?)?;
                qd[i - 1] + phi - 2 * psi + z * (ai * ij - aj * ii)
            };
        }
    }
    Ok(QuiverData {
        tangle: d.fraction,
        state: d.state,
        reduced: false,
        basis: (1..=n).collect(),
        k: vec![0; n],
        t: s.iter().map(|v| -v).collect(),
        s,
        a,
        q,
        removed: Vec::new(),
    })
}

/// `Q` from the two-point loops `γ²_{j,i}`: `Φ - 2 w_{X+} + Δ_{ij}`, where
/// `Δ` is a correction depending only on which verticals `ξ_i, ξ_j, ξ_ω` lie on.
pub fn compute_q_conf2(d: &ArcDiagram) -> Result<Vec<Vec<i64>>, QuiverError> {
    let n = d.size();
    let z = z_flag(d);
    let (aw, iw) = indicators(d, d.omega);
    let xp = d.puncture_x(Role::XPlus);
    let mut q = vec![vec![0; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            let l = windings::loop_conf2(d, j, i)?;
            let (ai, ii) = indicators(d, i);
            let (aj, ij) = indicators(d, j);
            let delta = z
                * (2 * ii * ij * aw - 2 * ai * aj * iw + ai * ij * aw + ii * aj * aw - ii * aj * iw - ai * ij * iw);
            q[i - 1][j - 1] = l.phi()? - 2 * l.winding(xp)? + delta;
        }
    }
    Ok(q)
}

/// Reduces full data to almost-quiver form: for every capped couple the
/// member with the larger `S` is dropped and the other gets `K = 1`.
///
/// The couple relations `S_x = S_y + 1`, `A_x = A_y`, `Q_xx = Q_yy + 1` are
/// checked and reported as [`QuiverError::Invariant`] if they fail.
pub fn reduce_almost(full: &QuiverData, d: &ArcDiagram) -> Result<QuiverData, QuiverError> {
    let part = d.partition_xyz()?;
    let pos = |i: usize| full.position(i).ok_or_else(|| QuiverError::Invariant(format!("ξ{i} not in basis")));
    let mut removed = Vec::new();
    let mut kept_y = Vec::new();
    for &(p, r) in &part.couples {
        let (x, y) = if full.s[pos(p)?] > full.s[pos(r)?] { (p, r) } else { (r, p) };
        let (px, py) = (pos(x)?, pos(y)?);
        if full.s[px] != full.s[py] + 1 || full.a[px] != full.a[py] || full.q[px][px] != full.q[py][py] + 1 {
            return Err(QuiverError::Invariant(format!("couple (ξ{x}, ξ{y}) breaks the pair relations")));
        }
        removed.push(x);
        kept_y.push(y);
    }
    let keep: Vec<usize> = full.basis.iter().copied().filter(|i| !removed.contains(i)).collect();
    let mut out = full.permuted(&keep);
    out.reduced = true;
    out.k = keep.iter().map(|i| i64::from(kept_y.contains(i))).collect();
    removed.sort_unstable();
    out.removed = removed;
    Ok(out)
}

/// Computes reduced data for `f` in the standard basis.
pub fn compute_reduced(f: Fraction) -> Result<QuiverData, QuiverError> {
    let d = arcdiagram::build(f)?;
    reduce_almost(&compute_quiver_on(&d)?, &d)
}

/// Closed forms for `τ_{n/1}`, listed in arc order.
///
/// Full: `S_i = n - i + 1`, `A = 0`, and `Q_ij = n - max(i, j)` (zero on the last index).
/// Reduced, with `h = ⌊n/2⌋` couples: `K_i = [i ≤ h]`, `S_i = n - 2i + 1` for `i ≤ h`,
/// then `1` (odd `n` only) and `0`; `Q_ij = n - 2max(i, j)` inside the first `h` indices, else 0.
pub fn closed_form_n1(n: u64, reduced: bool) -> Result<QuiverData, QuiverError> {
    let f = Fraction::new(n, 1).map_err(|e| QuiverError::Invariant(e.to_string()))?;
    let d = arcdiagram::build(f)?;
    let n = n as i64;
    let (k, s, q): (Vec<i64>, Vec<i64>, Vec<Vec<i64>>) = if !reduced {
        let m = n + 1;
        let s = (1..=m).map(|i| n - i + 1).collect();
        let q = (1..=m)
            .map(|i| (1..=m).map(|j| if i.max(j) <= n { n - i.max(j) } else { 0 }).collect())
            .collect();
        (vec![0; m as usize], s, q)
    } else {
        let h = n / 2;
        let m = if n % 2 == 0 { h + 1 } else { h + 2 };
        let k = (1..=m).map(|i| i64::from(i <= h)).collect();
        let s = (1..=m)
            .map(|i| {
                if i <= h {
                    n - 2 * i + 1
                } else if i == h + 1 && n % 2 == 1 {
                    1
                } else {
                    0
                }
            })
            .collect();
        let q = (1..=m)
            .map(|i| (1..=m).map(|j| if i.max(j) <= h { n - 2 * i.max(j) } else { 0 }).collect())
            .collect();
        (k, s, q)
    };
    let m = s.len();
    // Basis labels: the diagram's points in arc order (restricted to the kept ones).
    let basis = if reduced {
        let full = compute_quiver_on(&d)?;
        let red = reduce_almost(&full, &d)?;
        d.basis_order(BasisOrder::Arc, &red.basis)
    } else {
        d.basis_order(BasisOrder::Arc, &(1..=m).collect::<Vec<_>>())
    };
    Ok(QuiverData {
        tangle: f,
        state: d.state,
        reduced,
        basis,
        k,
        t: s.iter().map(|v| -v).collect(),
        s,
        a: vec![0; m],
        q,
        removed: Vec::new(),
    })
}
