//! Angular surface parameters and sampling grids.
//!
//! A 2D body is parameterized by one angle `theta` in `[-pi, pi]`; a 3D body
//! by latitude `eta` in `[-pi/2, pi/2]` and longitude `omega` in `[-pi, pi]`.
//! The unit vector of a parameter is the direction whose componentwise signed
//! powers generate the surface point.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Debug;

use nalgebra::{Vector2, Vector3};

use crate::error::{Error, Result};
use crate::geom::linalg::VectorOps;

/// Sampling resolution for a parameter grid.
///
/// 2D grids place `n` uniform angles over `[-pi, pi)`. 3D grids place
/// `n_eta` latitudes including both poles and `n_omega` longitudes over
/// `[-pi, pi)`; each pole appears exactly once, so the grid holds
/// `(n_eta - 2) * n_omega + 2` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSpec {
    TwoD { n: usize },
    ThreeD { n_eta: usize, n_omega: usize },
}

impl GridSpec {
    pub fn total_points(&self) -> usize {
        match *self {
            GridSpec::TwoD { n } => n,
            GridSpec::ThreeD { n_eta, n_omega } => n_eta.saturating_sub(2) * n_omega + 2,
        }
    }
}

/// Wraps an angle into `[-pi, pi)`.
pub fn wrap_angle(a: f64) -> f64 {
    (a + PI).rem_euclid(TAU) - PI
}

/// Angular parameter of a convex body surface in a fixed dimension.
pub trait SphericalParam: Copy + Clone + Debug + PartialEq + Send + Sync + 'static {
    type Vec: VectorOps;

    /// Number of angles (degrees of freedom).
    const DOF: usize;

    /// Direction vector on the unit sphere for this parameter.
    fn unit_vector(&self) -> Self::Vec;

    /// Parameter whose unit vector points along `v` (need not be normalized).
    fn from_unit(v: &Self::Vec) -> Self;

    /// Canonical representative: angles wrapped into their principal ranges.
    fn wrap(self) -> Self;

    /// Writes the angles into `out` (length `DOF`).
    fn write_to(&self, out: &mut [f64]);

    /// Reads the angles from `s` (length `DOF`).
    fn from_slice(s: &[f64]) -> Self;

    fn components(&self) -> Vec<f64> {
        let mut out = vec![0.0; Self::DOF];
        self.write_to(&mut out);
        out
    }

    /// Deterministic sampling grid; errors if `spec` has the wrong dimension
    /// or too few points.
    fn grid(spec: &GridSpec) -> Result<Vec<Self>>;

    /// Small set of well-spread parameters used as solver restarts.
    fn spread_seeds() -> Vec<Self>;

    fn column_names() -> &'static [&'static str];
}

/// Surface parameter of a 2D body: a single polar angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Param2 {
    pub theta: f64,
}

impl Param2 {
    pub fn new(theta: f64) -> Self {
        Param2 { theta }
    }
}

impl SphericalParam for Param2 {
    type Vec = Vector2<f64>;

    const DOF: usize = 1;

    fn unit_vector(&self) -> Vector2<f64> {
        Vector2::new(self.theta.cos(), self.theta.sin())
    }

    fn from_unit(v: &Vector2<f64>) -> Self {
        Param2 { theta: v.y.atan2(v.x) }
    }

    fn wrap(self) -> Self {
        Param2 { theta: wrap_angle(self.theta) }
    }

    fn write_to(&self, out: &mut [f64]) {
        out[0] = self.theta;
    }

    fn from_slice(s: &[f64]) -> Self {
        Param2 { theta: s[0] }
    }

    fn grid(spec: &GridSpec) -> Result<Vec<Self>> {
        match *spec {
            GridSpec::TwoD { n } => {
                if n == 0 {
                    return Err(Error::GridMismatch("2D grid needs n >= 1".into()));
                }
                Ok((0..n)
                    .map(|k| Param2 { theta: -PI + TAU * k as f64 / n as f64 })
                    .collect())
            }
            GridSpec::ThreeD { .. } => {
                Err(Error::GridMismatch("3D grid applied to a 2D body".into()))
            }
        }
    }

    fn spread_seeds() -> Vec<Self> {
        (0..4).map(|k| Param2 { theta: -PI + FRAC_PI_2 * k as f64 }).collect()
    }

    fn column_names() -> &'static [&'static str] {
        &["phi0"]
    }
}

/// Surface parameter of a 3D body: latitude `eta` and longitude `omega`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Param3 {
    pub eta: f64,
    pub omega: f64,
}

impl Param3 {
    pub fn new(eta: f64, omega: f64) -> Self {
        Param3 { eta, omega }
    }
}

impl SphericalParam for Param3 {
    type Vec = Vector3<f64>;

    const DOF: usize = 2;

    fn unit_vector(&self) -> Vector3<f64> {
        let (se, ce) = self.eta.sin_cos();
        let (so, co) = self.omega.sin_cos();
        Vector3::new(ce * co, ce * so, se)
    }

    fn from_unit(v: &Vector3<f64>) -> Self {
        Param3 { eta: v.z.atan2(v.x.hypot(v.y)), omega: v.y.atan2(v.x) }
    }

    fn wrap(self) -> Self {
        let mut eta = wrap_angle(self.eta);
        let mut omega = self.omega;
        if eta > FRAC_PI_2 {
            eta = PI - eta;
            omega += PI;
        } else if eta < -FRAC_PI_2 {
            eta = -PI - eta;
            omega += PI;
        }
        Param3 { eta, omega: wrap_angle(omega) }
    }

    fn write_to(&self, out: &mut [f64]) {
        out[0] = self.eta;
        out[1] = self.omega;
    }

    fn from_slice(s: &[f64]) -> Self {
        Param3 { eta: s[0], omega: s[1] }
    }

    fn grid(spec: &GridSpec) -> Result<Vec<Self>> {
        match *spec {
            GridSpec::ThreeD { n_eta, n_omega } => {
                if n_eta < 2 || n_omega == 0 {
                    return Err(Error::GridMismatch(
                        "3D grid needs n_eta >= 2 and n_omega >= 1".into(),
                    ));
                }
                let mut out = Vec::with_capacity((n_eta - 2) * n_omega + 2);
                for i in 0..n_eta {
                    let eta = -FRAC_PI_2 + PI * i as f64 / (n_eta - 1) as f64;
                    if i == 0 || i == n_eta - 1 {
                        // Poles: omega is degenerate, keep a single sample.
                        out.push(Param3 { eta, omega: 0.0 });
                    } else {
                        for j in 0..n_omega {
                            let omega = -PI + TAU * j as f64 / n_omega as f64;
                            out.push(Param3 { eta, omega });
                        }
                    }
                }
                Ok(out)
            }
            GridSpec::TwoD { .. } => {
                Err(Error::GridMismatch("2D grid applied to a 3D body".into()))
            }
        }
    }

    fn spread_seeds() -> Vec<Self> {
        let mut seeds = Vec::with_capacity(8);
        for &sx in &[1.0, -1.0] {
            for &sy in &[1.0, -1.0] {
                for &sz in &[1.0, -1.0] {
                    seeds.push(Param3::from_unit(&Vector3::new(sx, sy, sz)));
                }
            }
        }
        seeds
    }

    fn column_names() -> &'static [&'static str] {
        &["phi0", "phi1"]
    }
}
