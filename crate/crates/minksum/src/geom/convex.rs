//! The interface every smooth convex body implements.

use std::fmt::Debug;

use crate::error::Result;
use crate::geom::linalg::{MatrixOps, VectorOps};
use crate::geom::param::SphericalParam;

/// A smooth, strictly convex, origin-centered body in its canonical frame.
///
/// The body is the unit level set of an implicit function `psi` with
/// `psi < 1` inside. Four maps connect the three coordinates of a boundary
/// point: the angular parameter `phi`, the point `x`, and the (un-normalized)
/// implicit gradient `m`:
///
/// - `surface_point`: `phi -> x`
/// - `gradient_from_u`: unit vector of `phi` -> `m` (gradient at that point)
/// - `point_from_gradient`: `m -> x` (inverse of the Gauss map, closed form)
/// - `g_inverse_direction`: `m -> u` direction (inverse of `gradient_from_u`)
///
/// All maps are exact closed forms; round-tripping through them is a key
/// correctness check.
pub trait ConvexBody: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Vec: VectorOps;
    type Mat: MatrixOps<Vec = Self::Vec>;
    type Param: SphericalParam<Vec = Self::Vec>;
    /// Rigid orientation of this body's workspace: an angle in 2D, a unit
    /// quaternion in 3D.
    type Orientation: Copy + Clone + Debug + Send + Sync + 'static;

    fn dim(&self) -> usize {
        <Self::Vec as VectorOps>::DIM
    }

    /// Implicit function value; the boundary is the level set 1.
    fn implicit_value(&self, x: &Self::Vec) -> f64;

    /// Gradient of the implicit function at `x` (not normalized).
    fn implicit_gradient(&self, x: &Self::Vec) -> Self::Vec;

    /// Boundary point for the angular parameter.
    fn surface_point(&self, phi: &Self::Param) -> Self::Vec;

    /// Gradient at the boundary point generated by direction `u`; positively
    /// homogeneous in `u`, so any nonzero vector may be passed.
    fn gradient_from_u(&self, u: &Self::Vec) -> Self::Vec;

    /// Boundary point whose outward gradient equals `m` (inverse Gauss map).
    fn point_from_gradient(&self, m: &Self::Vec) -> Result<Self::Vec>;

    /// A direction `u` with `gradient_from_u(u)` parallel to `m`; errors on
    /// zero `m`. The result is not normalized.
    fn g_inverse_direction(&self, m: &Self::Vec) -> Result<Self::Vec>;

    /// Euclidean norm of the semi-axis vector; with a linear map's largest
    /// singular value this bounds the body's circumradius.
    fn semi_axis_norm(&self) -> f64;

    fn semi_axes(&self) -> Vec<f64>;
    fn exponents(&self) -> Vec<f64>;
    fn from_parts(semi_axes: &[f64], exponents: &[f64]) -> Result<Self>;

    fn orientation_matrix(o: &Self::Orientation) -> Self::Mat;
    /// Deterministic orientation samples: uniform angles in 2D, seeded
    /// uniform random rotations in 3D.
    fn sample_orientations(n: usize, seed: u64) -> Vec<Self::Orientation>;
    fn orientation_components(o: &Self::Orientation) -> Vec<f64>;
}
