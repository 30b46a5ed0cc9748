//! Exact invariants of isolated quasihomogeneous hypersurface singularities
//! and criteria for lifting the Leray residue class to intersection homology
//! or cohomology.
//!
//! The pipeline for a germ `s`:
//!
//! 1. [`exactpoly::parse_polynomial`] reads `s` over an ordered variable list;
//! 2. [`weights::find_weights`] solves for the quasihomogeneous weights;
//! 3. [`milnor`] computes the Poincaré polynomial of the Milnor algebra,
//!    the Milnor number, spectrum and monodromy characteristic polynomial;
//! 4. [`linktopo`] classifies the link and recognizes catalog types;
//! 5. [`residue`] decides whether the residue class lifts.
//!
//! [`numcheck`] verifies the closed-form residue computations numerically.

pub mod catalog;
pub mod exactpoly;
pub mod linalg;
pub mod linktopo;
pub mod milnor;
pub mod numcheck;
pub mod residue;
pub mod weights;

pub use exactpoly::{parse_polynomial, IntPoly, Monomial, Poly, Rat};
pub use weights::{find_weights, WeightSystem};
