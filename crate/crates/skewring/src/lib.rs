//! Construction and analysis of partial skew group rings R₀⋊_αG built from
//! finite set-level partial actions.
//!
//! The crate provides, end to end:
//!
//! - exact linear algebra over prime fields ([`linalg`]);
//! - finite table groups and free-group words ([`group`]);
//! - set-level partial actions, axiom validation, invariant-subset
//!   analysis, and the induced action on the function algebra K^X
//!   ([`paction`]);
//! - the partial skew group ring with its centralizer, ideal closure, and
//!   exhaustive simplicity / ideal-intersection oracles ([`ring`]);
//! - graph-theoretic simplicity criteria for Leavitt path algebras and the
//!   concrete boundary-path realization for finite acyclic graphs
//!   ([`leavitt`]);
//! - finite discrete dynamical models: topological freeness, minimality,
//!   and the simplicity equivalence ([`dynamics`]);
//! - JSON instance formats, analysis reports, and seeded instance
//!   generators ([`mod@format`], [`report`], [`corpus`]).
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `skewring` binary for the file-driven command-line
//! interface.

pub mod corpus;
pub mod dynamics;
pub mod format;
pub mod group;
pub mod leavitt;
pub mod linalg;
pub mod paction;
pub mod report;
pub mod ring;
