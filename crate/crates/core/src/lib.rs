//! Flag codes over finite fields.
//!
//! Exact linear algebra over GF(p^m), constant dimension codes, flag codes
//! and their distances, characterization predicates for codes attaining the
//! second- and third-best distance values, cardinality bounds, and the
//! systematic spread/sunflower constructions, all with brute-force oracles
//! suitable for desk-scale verification.

pub mod analysis;
pub mod cdc;
pub mod characterization;
pub mod constructions;
pub mod error;
pub mod field;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod subspace;

mod flags;

pub use cdc::{
    enumerate_grassmannian, gaussian_binomial, partial_spread_bound, ConstantDimensionCode,
    SpreadBound, SunflowerOutcome,
};
pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FieldSpec};
pub use flags::{CollapseWitness, DisjointnessReport, Flag, FlagCode, LRIndices, TypeVector};
pub use matrix::MatrixGF;
pub use poly::find_irreducible;
pub use subspace::Subspace;
