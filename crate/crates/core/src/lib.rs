//! Exact resistance-distance toolkit for resistor networks.
//!
//! The crate evaluates effective resistances and Kirchhoff indices three
//! independent ways and lets the routes check each other:
//!
//! * [`chains`] — closed-form values for the linear hexagonal chain `L_n`
//!   and the hexagonal cylinder chain `R_n`, evaluated exactly in ℚ(√2),
//! * [`oracle`] — a ground-truth Laplacian-pseudoinverse solver for
//!   arbitrary connected networks,
//! * [`reduce`] — a series / parallel / Δ-Y circuit-reduction engine with
//!   replayable step traces.
//!
//! [`quad`] supplies the exact ℚ(√2) number type shared by all of them and
//! [`graph`] the resistor-network representation.

#![forbid(unsafe_code)]

pub mod chains;
pub mod graph;
pub mod oracle;
pub mod quad;
pub mod reduce;

pub use chains::{ChainKind, Family, VertexLabel};
pub use graph::{LaplacianMatrix, ResistorNetwork};
pub use quad::{QuadNum, Rational};
