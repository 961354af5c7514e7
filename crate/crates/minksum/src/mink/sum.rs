//! Closed-form boundary points of Minkowski sums and contact spaces.

use crate::error::Result;
use crate::geom::{ConvexBody, MatrixOps, SphericalParam, VectorOps};
use crate::mink::{phi_magnitude, MinkMode, MinkSumQuery};

/// Boundary point of the combined canonical bodies, parameterized by body 1's
/// angular parameter.
pub fn sum_point_gradient<B: ConvexBody>(
    shape1: &B,
    shape2: &B,
    mode: MinkMode,
    phi: &B::Param,
) -> Result<B::Vec> {
    let m1 = shape1.gradient_from_u(&phi.unit_vector());
    sum_point_gradient_m(shape1, shape2, mode, &m1)
}

/// Same as [`sum_point_gradient`] but parameterized by body 1's gradient.
///
/// The combined boundary point is the sum of the two bodies' boundary points
/// that share the normal line of `m1`: body 1's point for `m1` itself, and
/// body 2's point for the opposing (contact) or aligned (sum) gradient of
/// matched magnitude.
pub fn sum_point_gradient_m<B: ConvexBody>(
    shape1: &B,
    shape2: &B,
    mode: MinkMode,
    m1: &B::Vec,
) -> Result<B::Vec> {
    let x1 = shape1.point_from_gradient(m1)?;
    let scale = phi_magnitude(shape2, m1)? / m1.norm();
    match mode {
        MinkMode::Contact => Ok(x1 - shape2.point_from_gradient(&-(*m1 * scale))?),
        MinkMode::Sum => Ok(x1 + shape2.point_from_gradient(&(*m1 * scale))?),
    }
}

/// Boundary point of two ellipsoids combined, from a shared unit normal.
///
/// `a1`, `a2` are SPD shape matrices; `n1` is the outward normal direction
/// (need not be normalized). This is the ellipsoid specialization: each
/// body contributes its support point `A^2 n / |A n|`.
pub fn sum_point_normal<M: MatrixOps>(a1: &M, a2: &M, n1: &M::Vec) -> Result<M::Vec> {
    let p1 = crate::geom::ellipsoid_normal_point(a1, n1)?;
    let p2 = crate::geom::ellipsoid_normal_point(a2, n1)?;
    Ok(p1 + p2)
}

/// Boundary point of the combined transformed bodies, parameterized by body
/// 1's canonical angular parameter.
pub fn sum_point_transformed<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    phi: &B::Param,
) -> Result<B::Vec> {
    let m1 = query.body1.shape().gradient_from_u(&phi.unit_vector());
    sum_point_transformed_m(query, &m1)
}

/// [`sum_point_transformed`] with body 1's canonical gradient given directly.
///
/// Body 2's matching canonical gradient direction is `M2^T M1^{-T} m1`: the
/// shared workspace normal pulled into each canonical frame.
pub fn sum_point_transformed_m<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    m1: &B::Vec,
) -> Result<B::Vec> {
    let q = query.body2.linear().transpose().mul_vec(&query.body1.world_gradient(m1));
    combine_transformed(query, m1, &q)
}

/// Boundary point parameterized by the workspace gradient direction.
///
/// Only the direction of `m_world` matters: the realizable canonical
/// gradient of body 1 along the pulled-back direction `M1^T m_world` is
/// reconstructed internally, so callers may pass a unit normal or any
/// positive scaling of it. Built from transposes only: no matrix inverse
/// enters this route.
pub fn sum_point_transformed_world<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    m_world: &B::Vec,
) -> Result<B::Vec> {
    let shape1 = query.body1.shape();
    let d1 = query.body1.pull_gradient(m_world);
    let m1 = shape1.gradient_from_u(&shape1.g_inverse_direction(&d1)?.unit());
    let q = query.body2.linear().transpose().mul_vec(m_world);
    combine_transformed(query, &m1, &q)
}

fn combine_transformed<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    m1: &B::Vec,
    q: &B::Vec,
) -> Result<B::Vec> {
    let shape2 = query.body2.shape();
    let arg = *q * (phi_magnitude(shape2, q)? / q.norm());
    let t1 = query.body1.linear().mul_vec(&query.body1.shape().point_from_gradient(m1)?);
    match query.mode {
        MinkMode::Contact => {
            Ok(t1 - query.body2.linear().mul_vec(&shape2.point_from_gradient(&-arg)?))
        }
        MinkMode::Sum => {
            Ok(t1 + query.body2.linear().mul_vec(&shape2.point_from_gradient(&arg)?))
        }
    }
}
