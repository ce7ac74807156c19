//! Special fibers of pencils of plane projective curves, computed exactly.
//!
//! Given two coprime forms `F`, `G` of degree `d` in `X, Y, Z` over a number
//! field `K`, the crate resolves the base locus of the pencil `λF + μG`
//! (proper and infinitely near base points with their generic
//! multiplicities), enumerates candidate classes of possible fiber
//! components, isolates each component as the unique member of a linear
//! system with prescribed virtual multiplicities, and finally groups the
//! components into the special fibers they belong to.
//!
//! The pipeline, bottom up:
//!
//! * [`field`]: exact arithmetic over `Q(α)`, univariate factorization, linear algebra.
//! * [`poly`]: sparse polynomials, blow-up substitutions, exact division.
//! * [`cluster`]: the tree of base points with proximity relations.
//! * [`base_points`]: resolution of the base locus.
//! * [`enumerator`]: candidate multiplicity vectors for each degree.
//! * [`linear_systems`]: condition matrices and the three component filters.
//! * [`driver`]: the main loop, fiber grouping and end-to-end verification.
//! * [`io`]: input parsing, text and JSON output, the CLI runner.

pub mod base_points;
pub mod cluster;
pub mod driver;
pub mod enumerator;
pub mod error;
pub mod field;
pub mod io;
pub mod linear_systems;
pub mod poly;

pub use base_points::{resolve_base_locus, Pencil};
pub use cluster::{Cluster, ClusterPoint};
pub use driver::{group_into_fibers, special_fiber_components, verify_output, CurveComponent, Fiber};
pub use enumerator::{enumerate_candidates, Candidate};
pub use error::{Error, ParseError, ParseErrorKind};
pub use field::{Field, FieldElement, NumberField};
pub use poly::MultiPoly;

// The guide under book/ is compiled as doctests so its snippets stay in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/number_fields.md")]
    mod number_fields {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/clusters.md")]
    mod clusters {}
    #[doc = include_str!("../../../book/src/base_points.md")]
    mod base_points {}
    #[doc = include_str!("../../../book/src/candidates.md")]
    mod candidates {}
    #[doc = include_str!("../../../book/src/linear_systems.md")]
    mod linear_systems {}
    #[doc = include_str!("../../../book/src/fibers.md")]
    mod fibers {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
