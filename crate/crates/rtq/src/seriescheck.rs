//! Expansion of (almost-)quiver forms at a fixed color and comparison with
//! the twist-rule oracle up to one overall monomial shift.
//!
//! The quiver form at color `j` is the sum over `d ∈ ℕ^n` with `|d| = j` of
//!
//! `q^{S·d + dQdᵀ} a^{A·d} t^{T·d} [Σ d_act; d_act] [Σ d_inact; d_inact] X[j, Σ d_act]`,
//!
//! and the almost-quiver form carries the extra factor `(-t^{-1}q²;q²)_{K·d}`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::qlaurent::{q_pochhammer, quantum_binomial, t_pochhammer, LaurentPoly3};
use crate::quiverforms::{self, QuiverData, QuiverError};
use crate::skeinoracle::{poincare, specialize_t, WebLabel, WebPoly};
use crate::tanglecore::Fraction;

/// Overall shift `q^x a^y t^z`; serialized as `[x, y, z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "[i64; 3]")]
pub struct ShiftMonomial {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl From<ShiftMonomial> for [i64; 3] {
    fn from(s: ShiftMonomial) -> Self {
        [s.x, s.y, s.z]
    }
}

impl fmt::Display for ShiftMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} a^{} t^{}", self.x, self.y, self.z)
    }
}

/// Why two web polynomials are not shifts of each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.detail)
    }
}

/// Precomputed quantum binomials `[m; k]` for `m <= j`.
struct Binomials {
    table: Vec<Vec<LaurentPoly3>>,
}

impl Binomials {
    fn new(j: usize) -> Self {
        Self { table: (0..=j).map(|m| (0..=m).map(|k| quantum_binomial(m, k)).collect()).collect() }
    }

    /// `[Σ parts; parts]` as a product of binomials.
    fn multinomial(&self, parts: impl Iterator<Item = usize>) -> LaurentPoly3 {
        let mut total = 0;
        let mut out = LaurentPoly3::one();
        for p in parts {
            total += p;
            if p > 0 && p < total {
                out = &out * &self.table[total][p];
            }
        }
        out
    }
}

/// Calls `f` on every composition of `j` into `n` non-negative parts (colexicographic order).
fn for_each_composition(n: usize, j: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(d: &mut Vec<usize>, n: usize, left: usize, f: &mut impl FnMut(&[usize])) {
        if d.len() + 1 == n {
            d.push(left);
            f(d);
            d.pop();
            return;
        }
        for x in 0..=left {
            d.push(x);
            rec(d, n, left - x, f);
            d.pop();
        }
    }
    if n == 0 {
        if j == 0 {
            f(&[]);
        }
        return;
    }
    rec(&mut Vec::with_capacity(n), n, j, f);
}

fn dot(v: &[i64], d: &[usize]) -> i64 {
    v.iter().zip(d).map(|(a, &b)| a * b as i64).sum()
}

fn quad(q: &[Vec<i64>], d: &[usize]) -> i64 {
    let mut s = 0;
    for (r, &dr) in d.iter().enumerate() {
        if dr == 0 {
            continue;
        }
        for (c, &dc) in d.iter().enumerate() {
            s += q[r][c] * (dr * dc) as i64;
        }
    }
    s
}

#[derive(Clone, Copy)]
enum Grading {
    /// Full `(q, a, t)` grading.
    Triply,
    /// Expanded directly at `t = -1`.
    AtMinusOne,
}

fn expand(qd: &QuiverData, j: usize, almost: bool, grading: Grading) -> WebPoly {
    let n = qd.len();
    let bin = Binomials::new(j);
    let mut pochhammers: HashMap<i64, LaurentPoly3> = HashMap::new();
    let mut out = WebPoly::zero();
    let active: Vec<bool> = (0..n).map(|p| qd.is_active(p)).collect();
    for_each_composition(n, j, &mut |d| {
        let sd = dot(&qd.s, d);
        let eq = sd + quad(&qd.q, d);
        let ea = dot(&qd.a, d);
        let mono = match grading {
            Grading::Triply => LaurentPoly3::monomial(1, (eq, ea, dot(&qd.t, d))),
            Grading::AtMinusOne => {
                LaurentPoly3::monomial(if dot(&qd.t, d) % 2 == 0 { 1 } else { -1 }, (eq, ea, 0))
            }
        };
        let act = bin.multinomial(d.iter().zip(&active).filter(|(_, &a)| a).map(|(&x, _)| x));
        let inact = bin.multinomial(d.iter().zip(&active).filter(|(_, &a)| !a).map(|(&x, _)| x));
        let mut term = &(&mono * &act) * &inact;
        if almost {
            let kd = dot(&qd.k, d);
            let factor = pochhammers.entry(kd).or_insert_with(|| match grading {
                Grading::Triply => t_pochhammer(kd as usize),
                Grading::AtMinusOne => q_pochhammer(kd as usize),
            });
            term = &term * factor;
        }
        let weight = d.iter().zip(&active).filter(|(_, &a)| a).map(|(&x, _)| x).sum();
        out.add(WebLabel { orientation: qd.state.orientation, j, k: weight }, &term);
    });
    out
}

/// Expands full quiver-form data at color `j`.
pub fn expand_quiver_form(qd: &QuiverData, j: usize) -> WebPoly {
    expand(qd, j, false, Grading::Triply)
}

/// Expands reduced almost-quiver-form data at color `j`.
pub fn expand_almost_form(qd: &QuiverData, j: usize) -> WebPoly {
    expand(qd, j, true, Grading::Triply)
}

/// Quiver-form expansion performed directly at `t = -1`.
pub fn expand_quiver_form_specialized(qd: &QuiverData, j: usize) -> WebPoly {
    expand(qd, j, false, Grading::AtMinusOne)
}

/// Almost-quiver-form expansion at `t = -1`, where the extra factor becomes `(q²;q²)_{K·d}`.
pub fn expand_almost_form_specialized(qd: &QuiverData, j: usize) -> WebPoly {
    expand(qd, j, true, Grading::AtMinusOne)
}

/// Finds the monomial `μ` with `a = μ · b`, or reports the first difference.
pub fn compare_up_to_shift(a: &WebPoly, b: &WebPoly) -> Result<ShiftMonomial, Mismatch> {
    let la: Vec<&WebLabel> = a.terms().map(|(l, _)| l).collect();
    let lb: Vec<&WebLabel> = b.terms().map(|(l, _)| l).collect();
    if la != lb {
        let show = |v: &[&WebLabel]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ");
        return Err(Mismatch { detail: format!("web labels differ: [{}] vs [{}]", show(&la), show(&lb)) });
    }
    let Some((first, pa)) = a.terms().next() else {
        return Ok(ShiftMonomial { x: 0, y: 0, z: 0 });
    };
    let pb = b.coefficient(first);
    let (ea, eb) = (pa.min_exponent().expect("non-zero"), pb.min_exponent().expect("non-zero"));
    let shift = ShiftMonomial { x: ea.0 - eb.0, y: ea.1 - eb.1, z: ea.2 - eb.2 };
    let moved = b.shift((shift.x, shift.y, shift.z));
    for (l, p) in a.terms() {
        let other = moved.coefficient(l);
        if *p != other {
            return Err(Mismatch {
                detail: format!("coefficient of {l} differs after shift {shift}: {p} vs {other}"),
            });
        }
    }
    Ok(shift)
}

/// Outcome of one `(tangle, color)` comparison; one JSON line each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub tangle: Fraction,
    pub j: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<ShiftMonomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
}

impl VerifyRecord {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Checks `f` at colors `0..=jmax`: the quiver form against the oracle up to
/// shift, the almost-quiver form against the quiver form exactly, and both
/// `t = -1` expansions against the specialized oracle.
pub fn verify_tangle(f: Fraction, jmax: usize) -> Result<Vec<VerifyRecord>, QuiverError> {
    let d = crate::arcdiagram::build(f)?;
    let full = quiverforms::compute_quiver_on(&d)?;
    let reduced = quiverforms::reduce_almost(&full, &d)?;
    let mut out = Vec::with_capacity(jmax + 1);
    for j in 0..=jmax {
        let oracle = poincare(f, j);
        let expanded = expand_quiver_form(&full, j);
        let fail = |detail: String| VerifyRecord { tangle: f, j, status: Status::Mismatch, shift: None, detail: Some(detail) };
        let record = match compare_up_to_shift(&oracle, &expanded) {
            Err(m) => fail(format!("quiver form vs oracle: {m}")),
            Ok(shift) => {
                let almost = expand_almost_form(&reduced, j);
                let spec_oracle = specialize_t(&oracle);
                let spec_full = specialize_t(&expanded);
                if almost != expanded {
                    fail("almost-quiver form differs from quiver form".to_string())
                } else if expand_quiver_form_specialized(&full, j) != spec_full
                    || expand_almost_form_specialized(&reduced, j) != spec_full
                {
                    fail("expansion at t = -1 differs from the specialized expansion".to_string())
                } else if spec_oracle != spec_full.shift((shift.x, shift.y, 0)).scaled_by_sign(shift.z) {
                    fail("specialized oracle differs from the specialized expansion".to_string())
                } else {
                    VerifyRecord { tangle: f, j, status: Status::Ok, shift: Some(shift), detail: None }
                }
            }
        };
        out.push(record);
    }
    Ok(out)
}

trait SignScale {
    fn scaled_by_sign(&self, t_exponent: i64) -> Self;
}

impl SignScale for WebPoly {
    /// Multiplies by `(-1)^e`, the value of `t^e` at `t = -1`.
    fn scaled_by_sign(&self, e: i64) -> Self {
        if e % 2 == 0 {
            return self.clone();
        }
        let mut out = WebPoly::zero();
        for (l, p) in self.terms() {
            out.add(*l, &-p);
        }
        out
    }
}

/// Verifies every coprime `u/v` with `u + v <= max_sum`, fanning out over a thread pool.
/// Records come back in sweep order regardless of scheduling.
pub fn verify_sweep(max_sum: u64, jmax: usize) -> Result<Vec<VerifyRecord>, QuiverError> {
    let per: Vec<Result<Vec<VerifyRecord>, QuiverError>> =
        Fraction::sweep(max_sum).into_par_iter().map(|f| verify_tangle(f, jmax)).collect();
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}
