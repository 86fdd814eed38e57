//! Exact trivariate Laurent polynomials in `q`, `a`, `t` and the q-combinatorics
//! built on top of them: Pochhammer symbols, quantum binomials and multinomials,
//! and the inversion statistic on words.
//!
//! Coefficients are arbitrary-precision integers, exponents are `i64`, and no
//! zero coefficient is ever stored. Terms iterate in lexicographic order of the
//! exponent triple `(eq, ea, et)`, which is also the order of the canonical text
//! form `c*q^i*a^j*t^k + ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exponent triple `(eq, ea, et)` of a monomial `q^eq a^ea t^et`.
pub type Exponent = (i64, i64, i64);

/// Errors raised by the polynomial layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("multinomial parts sum to {got}, expected {expected}")]
    PartsMismatch { expected: usize, got: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}

/// Exact Laurent polynomial in `q`, `a`, `t` with big-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly3 {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly3 {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(1, (0, 0, 0))
    }

    /// `c * q^eq a^ea t^et`.
    pub fn monomial(c: impl Into<BigInt>, e: Exponent) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Monomial in `q` alone.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, (e, 0, 0))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `c * monomial(e)` in place.
    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, e: Exponent) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lexicographically smallest exponent, if any.
    pub fn min_exponent(&self) -> Option<Exponent> {
        self.terms.keys().next().copied()
    }

    /// Lexicographically largest exponent, if any.
    pub fn max_exponent(&self) -> Option<Exponent> {
        self.terms.keys().next_back().copied()
    }

    /// True when the polynomial is `c * monomial` for a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by the monomial `q^x a^y t^z`.
    pub fn shift(&self, (x, y, z): Exponent) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(q, a, t), c)| ((q.checked_add(x).expect("q exponent overflow"), a + y, t + z), c.clone()))
            .collect();
        Self { terms }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn q_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(q, a, t), c)| ((-q, a, t), c.clone())).collect(),
        }
    }

    /// Substitutes `t -> -1`, leaving a polynomial in `q` and `a` only.
    pub fn specialize_t_minus_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(q, a, t), c) in &self.terms {
            let c = if t.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term((q, a, 0), c);
        }
        out
    }

    /// Non-negative integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division. Fails unless `self = quotient * divisor` for a Laurent polynomial quotient.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        let lead_d = divisor.max_exponent().ok_or(PolyError::DivisionByZero)?;
        let low_d = divisor.min_exponent().expect("non-zero divisor");
        let lead_c = divisor.terms[&lead_d].clone();
        let Some(low_n) = self.min_exponent() else {
            return Ok(Self::zero());
        };
        // Every quotient term lies at or above this bound; crossing it means the division is inexact.
        let floor = sub_exp(low_n, low_d);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(lead_r) = rem.max_exponent() {
            let e = sub_exp(lead_r, lead_d);
            if e < floor {
                return Err(PolyError::InexactDivision);
            }
            let c = &rem.terms[&lead_r];
            if !(c % &lead_c).is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let factor = Self::monomial(c / &lead_c, e);
            rem = &rem - &(&factor * divisor);
            quot = &quot + &factor;
        }
        Ok(quot)
    }

    /// Canonical text form, e.g. `1*q^0*a^0*t^0 + -1*q^2*a^0*t^0`; the zero polynomial is `0`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

fn sub_exp(a: Exponent, b: Exponent) -> Exponent {
    (a.0 - b.0, a.1 - b.1, a.2 - b.2)
}

fn add_exp(a: Exponent, b: Exponent) -> Exponent {
    (
        a.0.checked_add(b.0).expect("q exponent overflow"),
        a.1.checked_add(b.1).expect("a exponent overflow"),
        a.2.checked_add(b.2).expect("t exponent overflow"),
    )
}

impl fmt::Display for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((q, a, t), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*q^{q}*a^{a}*t^{t}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly3 {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for raw in s.split(" + ") {
            let term = raw.trim();
            let bad = || PolyError::Parse(term.to_string());
            let mut parts = term.split('*');
            let c: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let mut exps = [0i64; 3];
            for (slot, var) in exps.iter_mut().zip(["q^", "a^", "t^"]) {
                let piece = parts.next().ok_or_else(bad)?;
                let e = piece.strip_prefix(var).ok_or_else(bad)?;
                *slot = e.parse().map_err(|_| bad())?;
            }
            if parts.next().is_some() {
                return Err(bad());
            }
            p.add_term((exps[0], exps[1], exps[2]), c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a LaurentPoly3> for &'a LaurentPoly3 {
    type Output = LaurentPoly3;
    fn add(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn add(mut self, rhs: LaurentPoly3) -> LaurentPoly3 {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly3> for LaurentPoly3 {
    fn add_assign(&mut self, rhs: &LaurentPoly3) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly3> for LaurentPoly3 {
    fn sub_assign(&mut self, rhs: &LaurentPoly3) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly3> for &'a LaurentPoly3 {
    type Output = LaurentPoly3;
    fn sub(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn sub(mut self, rhs: LaurentPoly3) -> LaurentPoly3 {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        LaurentPoly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly3> for &'a LaurentPoly3 {
    type Output = LaurentPoly3;
    fn mul(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        let mut out = LaurentPoly3::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exp(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn mul(self, rhs: LaurentPoly3) -> LaurentPoly3 {
        &self * &rhs
    }
}

/// `(q^2;q^2)_i = prod_{j=1..i} (1 - q^{2j})`.
pub fn q_pochhammer(i: usize) -> LaurentPoly3 {
    (1..=i as i64).fold(LaurentPoly3::one(), |acc, j| {
        &acc * &LaurentPoly3::from_terms([((0, 0, 0), 1), ((2 * j, 0, 0), -1)])
    })
}

/// `(-t^{-1}q^2;q^2)_i = prod_{j=1..i} (1 + t^{-1} q^{2j})`.
pub fn t_pochhammer(i: usize) -> LaurentPoly3 {
    (1..=i as i64).fold(LaurentPoly3::one(), |acc, j| {
        &acc * &LaurentPoly3::from_terms([((0, 0, 0), 1), ((2 * j, 0, -1), 1)])
    })
}

/// General Pochhammer symbol `(x;q^2)_n = prod_{j=0}^{n-1} (1 - x q^{2j})` for a polynomial `x`.
pub fn pochhammer(x: &LaurentPoly3, n: usize) -> LaurentPoly3 {
    (0..n as i64).fold(LaurentPoly3::one(), |acc, j| {
        &acc * &(&LaurentPoly3::one() - &x.shift((2 * j, 0, 0)))
    })
}

/// Quantum multinomial `[j; parts]` by exact division of q-Pochhammer symbols.
pub fn quantum_multinomial(j: usize, parts: &[usize]) -> Result<LaurentPoly3, PolyError> {
    let got: usize = parts.iter().sum();
    if got != j {
        return Err(PolyError::PartsMismatch { expected: j, got });
    }
    let denominator = parts
        .iter()
        .fold(LaurentPoly3::one(), |acc, &d| &acc * &q_pochhammer(d));
    let result = q_pochhammer(j).checked_div(&denominator)?;
    debug_assert!(
        parts.len() > 4 || j > 6 || result == multinomial_by_inversions(parts),
        "Pochhammer quotient disagrees with the inversion sum"
    );
    Ok(result)
}

/// Quantum binomial `[a; b]_+`; zero when `b > a`.
pub fn quantum_binomial(a: usize, b: usize) -> LaurentPoly3 {
    if b > a {
        return LaurentPoly3::zero();
    }
    gauss_binomial(a, b)
}

/// `[a; b]^-`: the quantum binomial with `q -> q^{-1}`.
pub fn quantum_binomial_minus(a: usize, b: usize) -> LaurentPoly3 {
    quantum_binomial(a, b).q_inverse()
}

/// Gaussian binomial via the recursion `[n;k] = [n-1;k-1] + q^{2k}[n-1;k]`.
fn gauss_binomial(n: usize, k: usize) -> LaurentPoly3 {
    // Row-by-row Pascal triangle; rows are short at the colors used here.
    let mut row = vec![LaurentPoly3::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for kk in 0..=m {
            let left = if kk >= 1 { row[kk - 1].clone() } else { LaurentPoly3::zero() };
            let right = if kk < m { row[kk].shift((2 * kk as i64, 0, 0)) } else { LaurentPoly3::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row[k].clone()
}

/// Number of pairs `a < b` with `seq[a] > seq[b]`.
pub fn inv_statistic(seq: &[usize]) -> u64 {
    let mut count = 0;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                count += 1;
            }
        }
    }
    count
}

/// All words with `parts[i]` copies of the letter `i + 1`, in lexicographic order.
pub fn multiset_words(parts: &[usize]) -> Vec<Vec<usize>> {
    fn rec(left: &mut [usize], cur: &mut Vec<usize>, total: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for letter in 0..left.len() {
            if left[letter] > 0 {
                left[letter] -= 1;
                cur.push(letter + 1);
                rec(left, cur, total, out);
                cur.pop();
                left[letter] += 1;
            }
        }
    }
    let total = parts.iter().sum();
    let mut out = Vec::new();
    rec(&mut parts.to_vec(), &mut Vec::with_capacity(total), total, &mut out);
    out
}

/// `sum over words w of q^{2 inv(w)}`: the combinatorial form of the quantum multinomial.
pub fn multinomial_by_inversions(parts: &[usize]) -> LaurentPoly3 {
    let mut p = LaurentPoly3::zero();
    for w in multiset_words(parts) {
        p.add_term((2 * inv_statistic(&w) as i64, 0, 0), BigInt::one());
    }
    p
}

/// Checks the Pochhammer sum identity
/// `(x^2;q^2)_{|d|} / prod (q^2;q^2)_{d_i} = sum_{alpha+beta=d} (-x^2 q^{-1})^{|alpha|}
///  q^{sum alpha_i^2 + 2 sum_i alpha_{i+1}(d_1+..+d_i)} / prod (q^2;q^2)_{alpha_i}(q^2;q^2)_{beta_i}`
/// with both sides multiplied through by `prod (q^2;q^2)_{d_i}`, for the given instance of `x^2`.
pub fn verify_pochhammer_identity(x_squared: &LaurentPoly3, d: &[usize]) -> bool {
    let total: usize = d.iter().sum();
    let lhs = pochhammer(x_squared, total);
    let base = -x_squared.shift((-1, 0, 0));
    let mut rhs = LaurentPoly3::zero();
    let mut alpha = vec![0usize; d.len()];
    loop {
        let sum_alpha: usize = alpha.iter().sum();
        let mut qexp: i64 = alpha.iter().map(|&x| (x * x) as i64).sum();
        let mut prefix = 0usize;
        for i in 0..d.len() {
            if i > 0 {
                qexp += 2 * (alpha[i] * prefix) as i64;
            }
            prefix += d[i];
        }
        let mut term = base.pow(sum_alpha as u32).shift((qexp, 0, 0));
        for i in 0..d.len() {
            term = &term * &quantum_binomial(d[i], alpha[i]);
        }
        rhs += &term;
        // Advance alpha as a mixed-radix counter bounded by d.
        let mut pos = 0;
        loop {
            if pos == d.len() {
                return lhs == rhs;
            }
            if alpha[pos] < d[pos] {
                alpha[pos] += 1;
                break;
            }
            alpha[pos] = 0;
            pos += 1;
        }
    }
}

/// Sign of the leading coefficient, used by property tests.
pub fn leading_sign(p: &LaurentPoly3) -> i32 {
    match p.max_exponent() {
        None => 0,
        Some(e) => {
            if p.terms[&e].is_negative() {
                -1
            } else {
                1
            }
        }
    }
}
