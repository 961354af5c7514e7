//! Grid evaluation of combined boundaries.

use crate::error::{Error, Result};
use crate::geom::{ConvexBody, GridSpec, SphericalParam};
use crate::mink::{sum_point_transformed, MinkSumQuery};
use crate::par::map_range;

/// Boundary points of a combined body over a list of parameters.
///
/// Points are relative displacements between body centers (the centers
/// themselves do not enter). `params[i]` generated `points[i]`; the order is
/// deterministic regardless of the parallel back end.
#[derive(Clone, Debug)]
pub struct BoundaryCloud<B: ConvexBody> {
    pub query: MinkSumQuery<B>,
    pub params: Vec<B::Param>,
    pub points: Vec<B::Vec>,
}

impl<B: ConvexBody> BoundaryCloud<B> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Evaluates the combined boundary over the standard grid for `spec`.
pub fn boundary_cloud<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    spec: &GridSpec,
) -> Result<BoundaryCloud<B>> {
    let params = B::Param::grid(spec)?;
    boundary_cloud_at(query, params)
}

/// Evaluates the combined boundary at an explicit parameter list.
///
/// A failed point aborts the whole cloud and reports its index and
/// parameter values.
pub fn boundary_cloud_at<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    params: Vec<B::Param>,
) -> Result<BoundaryCloud<B>> {
    let results = map_range(params.len(), |i| sum_point_transformed(query, &params[i]));
    let mut points = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(p) => points.push(p),
            Err(e) => {
                return Err(Error::CloudPoint {
                    index: i,
                    phi: params[i].components(),
                    source: Box::new(e),
                })
            }
        }
    }
    Ok(BoundaryCloud { query: query.clone(), params, points })
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::geom::{Superquadric2, Superquadric3};
    use crate::mink::MinkMode;

    #[test]
    fn circle_cloud_has_radius_two() {
        let c = Superquadric2::circle(1.0).unwrap();
        let query = MinkSumQuery::canonical(c, c, MinkMode::Sum);
        let cloud = boundary_cloud(&query, &GridSpec::TwoD { n: 4 }).unwrap();
        assert_eq!(cloud.len(), 4);
        for p in &cloud.points {
            assert_abs_diff_eq!(p.norm(), 2.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn grid_count_matches_spec() {
        let s = Superquadric3::new(1.5, 0.8, 2.2, 0.4, 1.3).unwrap();
        let query = MinkSumQuery::canonical(s, s, MinkMode::Contact);
        let spec = GridSpec::ThreeD { n_eta: 7, n_omega: 12 };
        let cloud = boundary_cloud(&query, &spec).unwrap();
        assert_eq!(cloud.len(), spec.total_points());
        assert_eq!(cloud.params.len(), cloud.points.len());
    }

    #[test]
    fn pole_rows_are_exact() {
        let s1 = Superquadric3::new(1.5, 0.8, 2.2, 0.4, 1.3).unwrap();
        let s2 = Superquadric3::new(1.0, 1.2, 0.9, 0.7, 0.5).unwrap();
        let query = MinkSumQuery::canonical(s1, s2, MinkMode::Sum);
        let cloud = boundary_cloud(&query, &GridSpec::ThreeD { n_eta: 5, n_omega: 8 }).unwrap();
        // First grid point is the south pole: x/y vanish, z adds the c axes.
        let south = cloud.points[0];
        assert_abs_diff_eq!(south.z, -(2.2 + 0.9), epsilon = 1e-12);
        assert!(south.x.abs() < 1e-9 && south.y.abs() < 1e-9);
    }
}
