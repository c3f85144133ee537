//! Finite-stage machinery for sofic approximations of amalgamated free
//! products and graph-of-groups doubles.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`group`] — exact arithmetic for finite groups given by multiplication
//!    tables: subgroups, cosets, normal cores, quotients, regular
//!    representations, and the normalized Hamming distance on permutations.
//! 2. [`amalgam`] — words and canonical normal forms in amalgamated free
//!    products of a family of factors over a common subgroup `H`, including
//!    the decomposition of a graph-of-groups double into copies of the
//!    vertex group and copies of `H × Z`.
//! 3. [`embed`] — word-level embedding homomorphisms between amalgams
//!    (sub-amalgam, product, double-into-line, stagewise) with
//!    multiplicativity and injectivity test surfaces on balls.
//! 4. [`approx`] — `(F, ε)`-approximation data and its verifier: finite
//!    support maps into symmetric groups with exact-rational defect reports,
//!    plus products, pullbacks along stage assignments, and controlled
//!    corruption for verifier calibration.
//! 5. [`builder`] — the end-to-end construction: truncate `Z`-factors, find
//!    an `H`-compatible finite quotient separating a ball, compose with the
//!    left regular representation of the image, and emit a re-checkable
//!    certificate.
//!
//! All verification arithmetic is exact (integer indices and rationals); no
//! floating point is used anywhere. Every search and enumeration is
//! deterministic: identical inputs and budgets yield identical outputs,
//! independent of thread count.

#![forbid(unsafe_code)]

pub mod amalgam;
pub mod approx;
pub mod builder;
pub mod caps;
pub mod embed;
mod exec;
pub mod frac;
pub mod group;

pub use caps::Caps;
pub use frac::Frac;
