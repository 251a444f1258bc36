//! Exact integer trigonometry of rational simplicial cones.
//!
//! * [`arith`]: big-integer kernels, determinants, continued fractions.
//! * [`lattice`]: cones, simplices, integer lengths, volumes and sines.
//! * [`hnf`]: the normalised Hermite form of a cone and its sines, cosines
//!   and tangents.
//! * [`trig2d`]: planar angles, sails, LLS sequences, best approximations.
//! * [`cone_ops`]: permutations, adjacent cones, reductions, Plücker data.
//! * [`document`]: text/JSON parsers and canonical JSON output.
//! * [`sample`]: seeded random cones and unimodular maps.

pub mod arith;
pub mod cone_ops;
pub mod document;
pub mod error;
pub mod hnf;
pub mod lattice;
pub mod sample;
pub mod trig2d;

pub use arith::{cf_eval, cf_expand, int, CFSeq, ExactInt, ExactRat, IntMatrix, Parity, ProjRat};
pub use error::{Error, Result};
pub use hnf::{arctan_form, congruent, is_simple, ArctanForm};
pub use lattice::{Cone, LatticePoint, Simplex};
pub use trig2d::{Angle2D, LLSSeq};

