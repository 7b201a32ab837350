//! Exact-arithmetic engine for convex lattice polytopes viewed as toric data.
//!
//! The crate is organized around a small stack of modules:
//!
//! - [`lattice`]: arbitrary-precision lattice vectors and integer matrices
//!   (Hermite and Smith normal forms, determinants, exact solving);
//! - [`polytope`]: full-dimensional lattice polytopes given by vertices, with
//!   exact facet enumeration, incidence, volumes and point counts;
//! - [`toric`]: the invariants of the associated toric space: simplicity,
//!   monotonicity, the Q-Gorenstein vertex condition, singular strata with
//!   orbifold orders, Maslov and area homomorphisms, and the dual / disk
//!   polytope of the central torus fiber;
//! - [`equiv`]: canonical forms and equivalence of polytopes under `GL(n,Z)`,
//!   optionally combined with lattice translations;
//! - [`markov`]: Markov triples, the associated weighted-projective moment
//!   triangles, T-singularity tests, and the certificate that distinct
//!   triples give pairwise inequivalent dual polytopes;
//! - [`corpus`]: the bundled example polytopes used throughout the tests.
//!
//! All arithmetic is exact: integers are `num::BigInt`, rationals are
//! `num::BigRational`. There is no floating point anywhere in the crate.

pub mod corpus;
pub mod equiv;
pub mod lattice;
pub mod markov;
pub mod polytope;
pub mod toric;

mod error;

pub use error::{Error, Result};
pub use lattice::{Int, LatticeMatrix, LatticeVector, Rat};
pub use polytope::{FacetData, LatticePolytope};
