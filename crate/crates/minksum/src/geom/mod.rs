//! Convex body geometry: superquadrics, their boundary maps, placements.

mod body;
mod convex;
mod ellipsoid;
pub mod linalg;
mod param;
mod power;
mod superquadric;
mod volume;

pub use body::BodyInstance;
pub use convex::ConvexBody;
pub use ellipsoid::ellipsoid_normal_point;
pub use linalg::{MatrixOps, VectorOps};
pub use param::{wrap_angle, GridSpec, Param2, Param3, SphericalParam};
pub use power::spow;
pub use superquadric::{uniform_quaternion, Superquadric2, Superquadric3};
pub use volume::volume;
