//! A canonical body placed in the workspace by a linear map and a center.

use crate::error::{Error, Result};
use crate::geom::convex::ConvexBody;
use crate::geom::linalg::{MatrixOps, VectorOps};

/// Relative determinant threshold below which a linear map is rejected.
const DET_REL_TOL: f64 = 1e-12;

/// A convex body under `x -> M x + center` with invertible `M`.
///
/// The inverse and inverse-transpose of `M` are precomputed; points map by
/// `M`, implicit gradients map by `M^{-T}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BodyInstance<B: ConvexBody> {
    shape: B,
    linear: B::Mat,
    inverse: B::Mat,
    inv_transpose: B::Mat,
    center: B::Vec,
}

impl<B: ConvexBody> BodyInstance<B> {
    pub fn new(shape: B, linear: B::Mat, center: B::Vec) -> Result<Self> {
        let det = linear.determinant();
        // Scale-aware singularity check: compare det against the d-th power
        // of the mean entry magnitude so uniformly tiny or huge maps are
        // judged by conditioning, not absolute size.
        let d = <B::Vec as VectorOps>::DIM as i32;
        let scale = (linear.frobenius() / (d as f64).sqrt()).max(f64::MIN_POSITIVE);
        if !det.is_finite() || det.abs() <= DET_REL_TOL * scale.powi(d) {
            return Err(Error::SingularTransform { det });
        }
        let inverse = linear.try_inverse().ok_or(Error::SingularTransform { det })?;
        let inv_transpose = inverse.transpose();
        Ok(BodyInstance { shape, linear, inverse, inv_transpose, center })
    }

    /// Identity placement at the origin.
    pub fn canonical(shape: B) -> Self {
        BodyInstance {
            shape,
            linear: B::Mat::identity(),
            inverse: B::Mat::identity(),
            inv_transpose: B::Mat::identity(),
            center: B::Vec::zeros(),
        }
    }

    pub fn with_center(mut self, center: B::Vec) -> Self {
        self.center = center;
        self
    }

    pub fn shape(&self) -> &B {
        &self.shape
    }

    pub fn linear(&self) -> &B::Mat {
        &self.linear
    }

    pub fn inverse(&self) -> &B::Mat {
        &self.inverse
    }

    pub fn inv_transpose(&self) -> &B::Mat {
        &self.inv_transpose
    }

    pub fn center(&self) -> &B::Vec {
        &self.center
    }

    /// Canonical-frame point to workspace.
    pub fn world_point(&self, local: &B::Vec) -> B::Vec {
        self.linear.mul_vec(local) + self.center
    }

    /// Workspace point to canonical frame.
    pub fn local_point(&self, world: &B::Vec) -> B::Vec {
        self.inverse.mul_vec(&(*world - self.center))
    }

    /// Canonical-frame implicit gradient to workspace.
    pub fn world_gradient(&self, local_gradient: &B::Vec) -> B::Vec {
        self.inv_transpose.mul_vec(local_gradient)
    }

    /// Workspace gradient to canonical frame.
    pub fn pull_gradient(&self, world_gradient: &B::Vec) -> B::Vec {
        self.linear.transpose().mul_vec(world_gradient)
    }

    /// Implicit value of the placed body at a workspace point.
    pub fn implicit_value_world(&self, world: &B::Vec) -> f64 {
        self.shape.implicit_value(&self.local_point(world))
    }

    /// Upper bound on the distance from `center` to any point of the body.
    pub fn bounding_radius(&self) -> f64 {
        self.linear.frobenius() * self.shape.semi_axis_norm()
    }
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;
    use nalgebra::{Matrix2, Vector2};

    use super::*;
    use crate::geom::superquadric::Superquadric2;

    #[test]
    fn rejects_singular_map() {
        let shape = Superquadric2::circle(1.0).unwrap();
        let m = Matrix2::new(1.0, 2.0, 2.0, 4.0);
        assert!(matches!(
            BodyInstance::new(shape, m, Vector2::zeros()),
            Err(Error::SingularTransform { .. })
        ));
    }

    #[test]
    fn rejects_relatively_singular_map() {
        let shape = Superquadric2::circle(1.0).unwrap();
        // Scaled-down near-singular map: absolute det is small relative to
        // the entry scale even though entries are well above zero.
        let m = Matrix2::new(1.0, 1.0, 1.0, 1.0 + 1e-14);
        assert!(BodyInstance::new(shape, m, Vector2::zeros()).is_err());
    }

    #[test]
    fn world_local_round_trip() {
        let shape = Superquadric2::ellipse(2.0, 1.0).unwrap();
        let m = Matrix2::new(1.0, 0.5, -0.3, 2.0);
        let inst = BodyInstance::new(shape, m, Vector2::new(3.0, -1.0)).unwrap();
        let p = Vector2::new(0.7, -0.2);
        let back = inst.local_point(&inst.world_point(&p));
        assert_abs_diff_eq!((back - p).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn gradient_transform_is_inverse_transpose() {
        let shape = Superquadric2::circle(1.0).unwrap();
        let m = Matrix2::new(2.0, 1.0, 0.0, 1.0);
        let inst = BodyInstance::new(shape, m, Vector2::zeros()).unwrap();
        let g = Vector2::new(0.4, -1.2);
        let w = inst.world_gradient(&g);
        let expect = m.try_inverse().unwrap().transpose() * g;
        assert_abs_diff_eq!((w - expect).norm(), 0.0, epsilon = 1e-14);
        let back = inst.pull_gradient(&w);
        assert_abs_diff_eq!((back - g).norm(), 0.0, epsilon = 1e-14);
    }
}
