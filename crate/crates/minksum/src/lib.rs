//! Closed-form Minkowski sum boundaries between convex superquadrics.
//!
//! For two convex superquadrics related by linear transforms, the boundary of
//! their Minkowski sum (and of the contact space, the sum with the second
//! body negated) admits an exact parameterization: walk the gradients of one
//! body and evaluate a closed-form expression per direction. No sampling,
//! hulls, or optimization is involved in the boundary itself.
//!
//! On top of that kernel this crate provides:
//!
//! - [`geom`]: superquadric bodies, their boundary/gradient maps, volumes.
//! - [`mink`]: the closed-form sum/contact boundary evaluators and grid
//!   clouds, for canonical and linearly transformed pairs.
//! - [`baseline`]: independent slower constructions (definition sampling,
//!   convex hulls, polygon edge merging) and validation metrics used to
//!   check the closed forms.
//! - [`nls`]: a small damped least-squares solver.
//! - [`collide`]: proximity queries (separation status, distance, witness
//!   points) built on the contact-space boundary.
//! - [`cspace`]: configuration-space obstacle boundaries for a robot body
//!   against a set of obstacles over sampled orientations.
//! - [`io`]: JSON body/scene descriptions and cloud serialization.
//! - [`sampling`]: seeded random bodies and placements for testing and
//!   benchmarks.
//!
//! The grid-evaluation entry points run in parallel via rayon when the
//! default `parallel` feature is enabled and fall back to sequential loops
//! without it; results are identical either way.

pub mod baseline;
pub mod collide;
pub mod cspace;
pub mod error;
pub mod fit;
pub mod geom;
pub mod io;
pub mod mink;
pub mod nls;
pub mod sampling;

mod par;

pub use error::{Error, Result};
pub use geom::{
    ellipsoid_normal_point, spow, volume, BodyInstance, ConvexBody, GridSpec, Param2, Param3,
    SphericalParam, Superquadric2, Superquadric3,
};
pub use mink::{
    boundary_cloud, boundary_cloud_at, phi_magnitude, sum_point_gradient, sum_point_normal,
    sum_point_transformed, BoundaryCloud, MinkMode, MinkSumQuery,
};
