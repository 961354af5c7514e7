//! Closed-form Minkowski sum and contact-space boundaries.

mod cloud;
mod phi;
mod sum;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{BodyInstance, ConvexBody};

pub use cloud::{boundary_cloud, boundary_cloud_at, BoundaryCloud};
pub use phi::phi_magnitude;
pub use sum::{
    sum_point_gradient, sum_point_gradient_m, sum_point_normal, sum_point_transformed,
    sum_point_transformed_m, sum_point_transformed_world,
};

/// Which combined body the boundary belongs to.
///
/// `Sum` is the plain Minkowski sum of the two bodies. `Contact` negates the
/// second body first; its boundary is the locus of center displacements at
/// which the two bodies touch externally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinkMode {
    #[default]
    Contact,
    Sum,
}

impl fmt::Display for MinkMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinkMode::Contact => write!(f, "contact"),
            MinkMode::Sum => write!(f, "sum"),
        }
    }
}

impl FromStr for MinkMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contact" => Ok(MinkMode::Contact),
            "sum" => Ok(MinkMode::Sum),
            other => Err(Error::BodyFormat {
                field: "mode".into(),
                message: format!("expected `contact` or `sum`, got `{other}`"),
            }),
        }
    }
}

/// A pair of placed bodies plus the combination mode.
///
/// Boundary points are relative displacements between the body centers; the
/// centers themselves enter only in collision and C-space queries.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkSumQuery<B: ConvexBody> {
    pub body1: BodyInstance<B>,
    pub body2: BodyInstance<B>,
    pub mode: MinkMode,
}

impl<B: ConvexBody> MinkSumQuery<B> {
    pub fn new(body1: BodyInstance<B>, body2: BodyInstance<B>, mode: MinkMode) -> Self {
        MinkSumQuery { body1, body2, mode }
    }

    pub fn contact(body1: BodyInstance<B>, body2: BodyInstance<B>) -> Self {
        Self::new(body1, body2, MinkMode::Contact)
    }

    pub fn sum(body1: BodyInstance<B>, body2: BodyInstance<B>) -> Self {
        Self::new(body1, body2, MinkMode::Sum)
    }

    /// Both shapes in canonical placement.
    pub fn canonical(shape1: B, shape2: B, mode: MinkMode) -> Self {
        Self::new(BodyInstance::canonical(shape1), BodyInstance::canonical(shape2), mode)
    }
}
