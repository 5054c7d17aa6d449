//! Affine and projective generalized Reed-Muller codes over small finite
//! fields: parameters, extremal codewords and exhaustive weight enumeration.

pub mod constructions;
pub mod error;
pub mod gf;
pub mod grm;
pub mod linalg;
pub mod oracle;
pub mod pgrm;
pub mod poly;

pub use error::{Error, Result};
pub use gf::{make_field, ExtensionMap, FieldElement, FieldSpec};
pub use poly::{AffineForm, HomogeneousPoly, Monomial, PolyJson, ReducedPoly};
