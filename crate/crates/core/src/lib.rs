//! Modal logic of causal structures.
//!
//! Formulas and the named axiom catalog live in [`formula`]; finite Kripke
//! frames and cluster analysis in [`kripke`]; satisfaction, validity and
//! bisimulation in [`semantics`]; first-order correspondents in
//! [`correspondence`]; exact causal relations of Minkowski space and null
//! cylinders in [`minkowski`]; causal frames and the ladder classifier in
//! [`ladder`]. [`regress`] runs the acceptance suite end to end.

pub mod correspondence;
pub mod formula;
pub mod io;
pub mod kripke;
pub mod ladder;
pub mod minkowski;
pub mod random;
pub mod regress;
pub mod semantics;
