//! Exact linear algebra over Z, Q and prime fields.

pub mod field;
pub mod homology;
pub mod matrix;
pub mod snf;

pub use homology::{homology_at, Coefficients, HomologyGroup};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
