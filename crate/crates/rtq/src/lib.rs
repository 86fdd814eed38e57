//! Exact quiver forms for rational tangles.
//!
//! A rational tangle `τ_{u/v}` is drawn as an arc on the three-punctured
//! plane, crossed by two vertical lines in `u + v` points. Winding numbers of
//! loops through those points give integer data `(S, A, T, Q)` whose
//! generating series reproduces the tangle's colored Poincaré polynomial.
//! Every piece is computed with exact arithmetic and checked against an
//! independent oracle built from the twist rules.
//!
//! * [`qlaurent`]: Laurent polynomials in `q, a, t` and q-combinatorics.
//! * [`tanglecore`]: fractions, twist words and the orientation/puncture state.
//! * [`arcdiagram`]: the arc diagram, intersection points and block partition.
//! * [`windings`]: planar and two-point loops and their winding invariants.
//! * [`quiverforms`]: quiver-form data and its almost-quiver reduction.
//! * [`skeinoracle`]: the twist-rule Poincaré polynomial.
//! * [`seriescheck`]: expansion of quiver forms and comparison up to shift.
//! * [`cli`]: the `rtq` command line.

pub mod arcdiagram;
pub mod cli;
pub mod qlaurent;
pub mod quiverforms;
pub mod seriescheck;
pub mod skeinoracle;
pub mod tanglecore;
pub mod windings;
