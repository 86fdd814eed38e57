//! Independent ground truth: the Poincaré polynomial `⟨⟨τ⟩⟩_j` of a rational
//! tangle, computed by applying the twist rules to the trivial tangle
//! `⟨⟨τ_{0/1}⟩⟩_j = UP[j,0]`, and its specialization at `t = -1`.
//!
//! A top twist `T` maps, summing over `h = k..=j`,
//!
//! * `UP[j,k] -> t^{-h} q^{k²+h} [h;k]_+ UP[j,h]`
//! * `OP[j,k] -> t^{-h} a^k q^{k(k-2j)+h} [h;k]_+ RI[j,h]`
//! * `RI[j,k] -> t^{-h} a^h q^{k²+h(1-2j)} [h;k]_+ OP[j,h]`
//!
//! and a right twist `R` maps, summing over `h = 0..=k`,
//!
//! * `UP[j,k] -> t^{-h} a^h q^{k(2j-k)+h(1-2j)} [j-h;k-h]^- OP[j,h]`
//! * `OP[j,k] -> t^{-h} a^k q^{-k²+h} [j-h;k-h]^- UP[j,h]`
//! * `RI[j,k] -> t^{-h} q^{-k(k-2j)+h} [j-h;k-h]^- RI[j,h]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::qlaurent::{quantum_binomial, quantum_binomial_minus, LaurentPoly3};
use crate::tanglecore::{continued_fraction, Fraction, Letter, Orientation};

/// A basis web `X[j,k]` with orientation `X`, color `j` and weight `0 <= k <= j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WebLabel {
    pub orientation: Orientation,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for WebLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.orientation, self.j, self.k)
    }
}

/// A finite linear combination of basis webs with polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WebPoly {
    terms: BTreeMap<WebLabel, LaurentPoly3>,
}

impl WebPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single web `label` with coefficient 1.
    pub fn basis(label: WebLabel) -> Self {
        let mut w = Self::zero();
        w.add(label, &LaurentPoly3::one());
        w
    }

    /// Adds `coeff · label`, dropping the label if it cancels.
    pub fn add(&mut self, label: WebLabel, coeff: &LaurentPoly3) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(label).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in label order.
    pub fn terms(&self) -> impl Iterator<Item = (&WebLabel, &LaurentPoly3)> {
        self.terms.iter()
    }

    /// Coefficient of a label (zero if absent).
    pub fn coefficient(&self, label: &WebLabel) -> LaurentPoly3 {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    /// Orientations occurring among the labels.
    pub fn orientations(&self) -> Vec<Orientation> {
        let mut out: Vec<Orientation> = self.terms.keys().map(|l| l.orientation).collect();
        out.dedup();
        out
    }

    /// Multiplies every coefficient by the monomial `q^x a^y t^z`.
    pub fn shift(&self, e: (i64, i64, i64)) -> Self {
        Self { terms: self.terms.iter().map(|(l, p)| (*l, p.shift(e))).collect() }
    }
}

impl fmt::Display for WebPoly {
    /// Renders `(coeff) · X[j,k] + ...`; the zero combination prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, p)| if p.is_monomial() { format!("{p} · {l}") } else { format!("({p}) · {l}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Applies one twist to every term of `w`.
pub fn twist_apply(letter: Letter, w: &WebPoly) -> WebPoly {
    use Orientation::*;
    let mut out = WebPoly::zero();
    for (label, coeff) in w.terms() {
        let (j, k) = (label.j as i64, label.k as i64);
        let hs: Vec<usize> = match letter {
            Letter::T => (label.k..=label.j).collect(),
            Letter::R => (0..=label.k).collect(),
        };
        for h in hs {
            let hi = h as i64;
            let (orientation, e, binom) = match (letter, label.orientation) {
                (Letter::T, UP) => (UP, (k * k + hi, 0, -hi), quantum_binomial(h, label.k)),
                (Letter::T, OP) => (RI, (k * (k - 2 * j) + hi, k, -hi), quantum_binomial(h, label.k)),
                (Letter::T, RI) => (OP, (k * k + hi * (1 - 2 * j), hi, -hi), quantum_binomial(h, label.k)),
                (Letter::R, UP) => (
                    OP,
                    (k * (2 * j - k) + hi * (1 - 2 * j), hi, -hi),
                    quantum_binomial_minus(label.j - h, label.k - h),
                ),
                (Letter::R, OP) => (UP, (-k * k + hi, k, -hi), quantum_binomial_minus(label.j - h, label.k - h)),
                (Letter::R, RI) => {
                    (RI, (-k * (k - 2 * j) + hi, 0, -hi), quantum_binomial_minus(label.j - h, label.k - h))
                }
            };
            let term = &coeff.shift(e) * &binom;
            out.add(WebLabel { orientation, j: label.j, k: h }, &term);
        }
    }
    out
}

/// `⟨⟨τ_f⟩⟩_j`: the twist word of `f` applied to `UP[j,0]`, innermost letter first.
pub fn poincare(f: Fraction, j: usize) -> WebPoly {
    continued_fraction(f)
        .letters_applied()
        .into_iter()
        .fold(WebPoly::basis(WebLabel { orientation: Orientation::UP, j, k: 0 }), |w, l| {
            twist_apply(l, &w)
        })
}

/// Substitutes `t = -1` in every coefficient.
pub fn specialize_t(w: &WebPoly) -> WebPoly {
    let mut out = WebPoly::zero();
    for (l, p) in w.terms() {
        out.add(*l, &p.specialize_t_minus_one());
    }
    out
}
