//! Kissing-configuration error metrics for contact-space clouds.
//!
//! A contact-space boundary point is the center displacement at which the
//! two bodies touch externally. Placing body 2's center at a cloud point
//! must therefore leave body 1's candidate contact point exactly on body 2's
//! surface, with anti-parallel outward gradients. The two error metrics
//! quantify how well a computed cloud satisfies this, using only the
//! implicit functions (not the closed-form maps under test).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{ConvexBody, MatrixOps, SphericalParam, VectorOps};
use crate::mink::{BoundaryCloud, MinkMode};

/// Aggregate kissing errors over a cloud.
///
/// `implicit` entries measure `|psi2(contact point) - 1|`; `gradient`
/// entries measure `|<n1, n2> + 1|` for the unit workspace gradients.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct KissingReport {
    pub mean_implicit: f64,
    pub max_implicit: f64,
    pub mean_gradient: f64,
    pub max_gradient: f64,
    pub n_points: usize,
}

/// Evaluates both kissing metrics at every cloud point.
///
/// Only contact-mode clouds describe kissing configurations; sum-mode clouds
/// are rejected.
pub fn kissing_errors<B: ConvexBody>(cloud: &BoundaryCloud<B>) -> Result<KissingReport> {
    if cloud.query.mode != MinkMode::Contact {
        return Err(Error::ContactModeRequired);
    }
    if cloud.is_empty() {
        return Err(Error::GridMismatch("empty cloud".into()));
    }
    let body1 = &cloud.query.body1;
    let body2 = &cloud.query.body2;

    let mut sum_imp = 0.0;
    let mut max_imp = 0.0f64;
    let mut sum_grad = 0.0;
    let mut max_grad = 0.0f64;

    for (phi, x) in cloud.params.iter().zip(&cloud.points) {
        // Candidate contact point on body 1, from the same inverse-gradient
        // route the cloud itself used, so poles stay consistent.
        let m1 = body1.shape().gradient_from_u(&phi.unit_vector());
        let local1 = body1.shape().point_from_gradient(&m1)?;
        let contact = body1.linear().mul_vec(&local1);

        // With body 2's center displaced by the cloud point, the contact
        // point in body 2's canonical frame.
        let local2 = body2.inverse().mul_vec(&(contact - *x));
        let e_imp = (body2.shape().implicit_value(&local2) - 1.0).abs();

        let n1 = body1.world_gradient(&body1.shape().implicit_gradient(&local1)).unit();
        let n2 = body2.world_gradient(&body2.shape().implicit_gradient(&local2)).unit();
        let e_grad = (n1.dot(&n2) + 1.0).abs();

        sum_imp += e_imp;
        max_imp = max_imp.max(e_imp);
        sum_grad += e_grad;
        max_grad = max_grad.max(e_grad);
    }

    let n = cloud.len() as f64;
    Ok(KissingReport {
        mean_implicit: sum_imp / n,
        max_implicit: max_imp,
        mean_gradient: sum_grad / n,
        max_gradient: max_grad,
        n_points: cloud.len(),
    })
}
