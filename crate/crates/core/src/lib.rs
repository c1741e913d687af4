//! Bigraded Tor algebras of Stanley–Reisner face rings, computed from
//! simplicial complements through the Taylor complex.
//!
//! The pieces:
//!
//! * [`VertexSet`], [`Complement`], [`SimplicialComplex`]: subsets of `[m]`,
//!   monomial-ideal presentations and the complexes they cut out, with
//!   full subcomplexes, stars, links and `ω`-compression.
//! * [`support`]: the Z/2-algebra of support functions on `2^[m]`.
//! * [`taylor`]: the exterior complex `Λ[P]` and its reduced differential.
//! * [`linalg`]: Smith normal form and exact homology over Z, Q and F_p.
//! * [`oracle`]: reduced simplicial cohomology of full subcomplexes, an
//!   independent check of every Tor block.
//! * [`tor`]: the bigraded Tor module, its product and Poincaré series of
//!   moment-angle complexes.
//! * [`moment_angle`]: graded cohomology of generalized moment-angle complexes.
//! * [`poly`]: graded ranks printed as Poincaré polynomials.
//! * [`resolution`]: the full Taylor differential over the polynomial ring.
//! * [`random`]: seeded random complements and matrices.

pub mod complement;
pub mod complex;
pub mod error;
pub mod linalg;
pub mod moment_angle;
pub mod oracle;
pub mod poly;
pub mod random;
pub mod resolution;
pub mod support;
pub mod taylor;
pub mod tor;
pub mod vertex_set;

pub use complement::Complement;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use linalg::{homology_at, smith_normal_form, Coefficients, HomologyGroup, IntMatrix, SmithForm};
pub use moment_angle::{maz_cohomology, s2s1_poincare, star_tor, PairSpec};
pub use oracle::{reduced_cohomology, verify_complement, VerificationReport};
pub use poly::GradedDims;
pub use support::SupportFunction;
pub use taylor::{reduced_differential, Chain, TaylorGenerator};
pub use tor::{tor_bigraded, zk_poincare, BigradedTor, TorClass};
pub use vertex_set::VertexSet;
