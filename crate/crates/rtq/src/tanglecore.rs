//! Fraction bookkeeping for rational tangles: the `T`/`R` twist recursion,
//! continued-fraction twist words, and the orientation/puncture state machine.
//!
//! A top twist sends `u/v` to `(u+v)/v` and a right twist sends `u/v` to
//! `u/(u+v)`; every rational tangle is reached from the trivial tangle `0/1`
//! by a unique alternating word whose first (innermost) letter is `T`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

/// Errors for malformed fractions and twist words.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("cannot parse fraction `{0}` (expected `u/v`)")]
    ParseFraction(String),
    #[error("fraction {u}/{v} is not in lowest terms")]
    NotCoprime { u: u64, v: u64 },
    #[error("denominator must be positive in {u}/{v}")]
    ZeroDenominator { u: u64, v: u64 },
    #[error("cannot parse twist word `{0}`")]
    ParseWord(String),
}

/// A reduced fraction `u/v` with `v > 0`; `0/1` is the trivial tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    u: u64,
    v: u64,
}

impl Fraction {
    /// Validates `u/v`: `v > 0` and `gcd(u, v) = 1`.
    pub fn new(u: u64, v: u64) -> Result<Self, TangleError> {
        if v == 0 {
            return Err(TangleError::ZeroDenominator { u, v });
        }
        if u.gcd(&v) != 1 {
            return Err(TangleError::NotCoprime { u, v });
        }
        Ok(Self { u, v })
    }

    /// The trivial tangle `0/1`.
    pub fn trivial() -> Self {
        Self { u: 0, v: 1 }
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn is_trivial(&self) -> bool {
        self.u == 0
    }

    /// Number of intersection points `u + v` of the arc with the two verticals.
    pub fn size(&self) -> usize {
        (self.u + self.v) as usize
    }

    /// The fraction after one more twist.
    pub fn twist(&self, letter: Letter) -> Self {
        match letter {
            Letter::T => Self { u: self.u + self.v, v: self.v },
            Letter::R => Self { u: self.u, v: self.u + self.v },
        }
    }

    /// All coprime fractions `u/v` with `v >= 1`, `u >= 0` and `u + v <= max_sum`, ordered by `(u+v, u)`.
    pub fn sweep(max_sum: u64) -> Vec<Fraction> {
        let mut out = Vec::new();
        for s in 1..=max_sum {
            for u in 0..s {
                if let Ok(f) = Fraction::new(u, s - u) {
                    out.push(f);
                }
            }
        }
        out
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.u, self.v)
    }
}

impl FromStr for Fraction {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TangleError::ParseFraction(s.to_string());
        let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
        let u = a.trim().parse::<u64>().map_err(|_| bad())?;
        let v = b.trim().parse::<u64>().map_err(|_| bad())?;
        Fraction::new(u, v)
    }
}

impl Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A top (`T`) or right (`R`) twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    T,
    R,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::T => "T",
            Letter::R => "R",
        })
    }
}

/// Twist word `X^{a_n} ... R^{a_2} T^{a_1}`, stored as the run lengths `[a_n, ..., a_1]`.
///
/// Runs alternate letters and the rightmost run is always `T`, so the final
/// (leftmost) letter is `T` exactly when the run count is odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TwistWord {
    runs: Vec<u64>,
}

impl TwistWord {
    /// Builds a word from runs `[a_n, ..., a_1]`; every run must be positive.
    pub fn from_runs(runs: Vec<u64>) -> Option<Self> {
        if runs.contains(&0) {
            return None;
        }
        Some(Self { runs })
    }

    /// Run lengths `[a_n, ..., a_1]`.
    pub fn runs(&self) -> &[u64] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Letter of the leftmost (last applied) run, `None` for the empty word.
    pub fn final_letter(&self) -> Option<Letter> {
        match self.runs.len() {
            0 => None,
            n if n % 2 == 1 => Some(Letter::T),
            _ => Some(Letter::R),
        }
    }

    /// Letters in the order they act on the trivial tangle (innermost first).
    pub fn letters_applied(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (k, &run) in self.runs.iter().rev().enumerate() {
            let letter = if k % 2 == 0 { Letter::T } else { Letter::R };
            out.extend(std::iter::repeat_n(letter, run as usize));
        }
        out
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.runs.len();
        for (k, &run) in self.runs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let letter = if (n - 1 - k).is_multiple_of(2) { Letter::T } else { Letter::R };
            if run == 1 {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{run}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = TangleError;

    /// Parses words such as `T^3 R^2 T`; adjacent equal letters are merged.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TangleError::ParseWord(s.to_string());
        let mut runs: Vec<(Letter, u64)> = Vec::new();
        for tok in s.split_whitespace() {
            let (l, count) = match tok.split_once('^') {
                Some((l, c)) => (l, c.parse::<u64>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let letter = match l {
                "T" => Letter::T,
                "R" => Letter::R,
                _ => return Err(bad()),
            };
            if count == 0 {
                continue;
            }
            match runs.last_mut() {
                Some((last, c)) if *last == letter => *c += count,
                _ => runs.push((letter, count)),
            }
        }
        if let Some((Letter::R, _)) = runs.last() {
            return Err(bad());
        }
        Ok(Self { runs: runs.into_iter().map(|(_, c)| c).collect() })
    }
}

/// Continued-fraction twist word of `f`, via the subtractive Euclidean algorithm.
pub fn continued_fraction(f: Fraction) -> TwistWord {
    // Peel twists off from the outside in; this yields the runs as [a_n, ..., a_1].
    let (mut a, mut b) = (f.u, f.v);
    let mut runs = Vec::new();
    while !(a == 0 && b == 1) {
        if a >= b {
            let c = a / b;
            a -= c * b;
            runs.push(c);
        } else {
            let c = if a == 1 { b - 1 } else { b / a };
            b -= c * a;
            runs.push(c);
        }
    }
    TwistWord { runs }
}

/// Applies the word to `0/1`; inverse of [`continued_fraction`].
pub fn fraction_walk(word: &TwistWord) -> Fraction {
    word.letters_applied()
        .into_iter()
        .fold(Fraction::trivial(), |f, l| f.twist(l))
}

/// Orientation of the basis webs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    UP,
    OP,
    RI,
}

impl Orientation {
    /// Orientation after a twist.
    pub fn after(self, letter: Letter) -> Self {
        use Orientation::*;
        match (letter, self) {
            (Letter::T, UP) => UP,
            (Letter::T, OP) => RI,
            (Letter::T, RI) => OP,
            (Letter::R, UP) => OP,
            (Letter::R, OP) => UP,
            (Letter::R, RI) => RI,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Role of a puncture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    XMinus,
    XPlus,
    Y,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::XMinus, Role::XPlus, Role::Y];

    pub fn label(&self) -> &'static str {
        match self {
            Role::XMinus => "X-",
            Role::XPlus => "X+",
            Role::Y => "Y",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Orientation together with the left-to-right arrangement of the puncture roles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TangleState {
    pub orientation: Orientation,
    #[serde(rename = "punctures")]
    pub arrangement: [Role; 3],
}

impl TangleState {
    /// State of the trivial tangle: `(UP, Y|X-|X+)`.
    pub fn initial() -> Self {
        Self {
            orientation: Orientation::UP,
            arrangement: [Role::Y, Role::XMinus, Role::XPlus],
        }
    }

    /// One step of the state machine: `T` exchanges the two left positions,
    /// `R` the two right positions, and the orientation follows the twist rules.
    pub fn after(self, letter: Letter) -> Self {
        let [a, b, c] = self.arrangement;
        let arrangement = match letter {
            Letter::T => [b, a, c],
            Letter::R => [a, c, b],
        };
        Self { orientation: self.orientation.after(letter), arrangement }
    }

    /// The role sitting in the middle position.
    pub fn middle(&self) -> Role {
        self.arrangement[1]
    }
}

impl fmt::Display for TangleState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.arrangement;
        write!(f, "({}, {a}|{b}|{c})", self.orientation)
    }
}

/// Walks the state machine along the word, starting from [`TangleState::initial`].
pub fn state_of(word: &TwistWord) -> TangleState {
    word.letters_applied()
        .into_iter()
        .fold(TangleState::initial(), TangleState::after)
}
