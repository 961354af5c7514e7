//! Convex superquadrics in two and three dimensions.
//!
//! Exponents must lie strictly inside (0, 2); that keeps the body strictly
//! convex with a well-defined inverse Gauss map. Exponent 1 recovers an
//! ellipse / ellipsoid; exponents near 0 approach a box.
//!
//! Several maps multiply a vanishing signed power by a diverging one near the
//! coordinate axes (3D only). Those products are rewritten here in polar form
//! around the `x3` axis so each factor stays finite; the rewritten forms are
//! algebraically identical to the textbook ones away from the axes.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix2, Matrix3, Quaternion, UnitQuaternion, Vector2, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::convex::ConvexBody;
use crate::geom::param::{Param2, Param3};
use crate::geom::power::{apow, spow};

/// Tolerance on the realizability constraint of a 3D gradient; values below
/// `-GAMMA_TOL` mean the gradient cannot belong to this body.
const GAMMA_TOL: f64 = 1e-9;

fn check_semi_axis(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::InvalidShape(format!(
            "semi-axis {name} must be finite and positive, got {v}"
        )));
    }
    Ok(())
}

fn check_exponent(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0 && v < 2.0) {
        return Err(Error::InvalidShape(format!(
            "exponent {name} must lie strictly inside (0, 2), got {v}"
        )));
    }
    Ok(())
}

/// 2D convex superquadric (superellipse) with semi-axes `a, b` and exponent
/// `eps`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Superquadric2 {
    a: f64,
    b: f64,
    eps: f64,
}

impl Superquadric2 {
    pub fn new(a: f64, b: f64, eps: f64) -> Result<Self> {
        check_semi_axis("a", a)?;
        check_semi_axis("b", b)?;
        check_exponent("eps", eps)?;
        Ok(Superquadric2 { a, b, eps })
    }

    pub fn circle(r: f64) -> Result<Self> {
        Self::new(r, r, 1.0)
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, 1.0)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
}

impl ConvexBody for Superquadric2 {
    type Vec = Vector2<f64>;
    type Mat = Matrix2<f64>;
    type Param = Param2;
    type Orientation = f64;

    fn implicit_value(&self, x: &Vector2<f64>) -> f64 {
        let p = 2.0 / self.eps;
        apow(x.x / self.a, p) + apow(x.y / self.b, p)
    }

    fn implicit_gradient(&self, x: &Vector2<f64>) -> Vector2<f64> {
        let p = 2.0 / self.eps - 1.0;
        Vector2::new(
            2.0 / (self.eps * self.a) * spow(x.x / self.a, p),
            2.0 / (self.eps * self.b) * spow(x.y / self.b, p),
        )
    }

    fn surface_point(&self, phi: &Param2) -> Vector2<f64> {
        let (s, c) = phi.theta.sin_cos();
        Vector2::new(self.a * spow(c, self.eps), self.b * spow(s, self.eps))
    }

    fn gradient_from_u(&self, u: &Vector2<f64>) -> Vector2<f64> {
        let p = 2.0 - self.eps;
        Vector2::new(
            2.0 / (self.eps * self.a) * spow(u.x, p),
            2.0 / (self.eps * self.b) * spow(u.y, p),
        )
    }

    fn point_from_gradient(&self, m: &Vector2<f64>) -> Result<Vector2<f64>> {
        let p = self.eps / (2.0 - self.eps);
        let q1 = 0.5 * self.a * self.eps * m.x;
        let q2 = 0.5 * self.b * self.eps * m.y;
        Ok(Vector2::new(self.a * spow(q1, p), self.b * spow(q2, p)))
    }

    fn g_inverse_direction(&self, m: &Vector2<f64>) -> Result<Vector2<f64>> {
        if m.x == 0.0 && m.y == 0.0 {
            return Err(Error::ZeroGradient);
        }
        let p = 1.0 / (2.0 - self.eps);
        Ok(Vector2::new(
            spow(0.5 * self.a * self.eps * m.x, p),
            spow(0.5 * self.b * self.eps * m.y, p),
        ))
    }

    fn semi_axis_norm(&self) -> f64 {
        self.a.hypot(self.b)
    }

    fn semi_axes(&self) -> Vec<f64> {
        vec![self.a, self.b]
    }

    fn exponents(&self) -> Vec<f64> {
        vec![self.eps]
    }

    fn from_parts(semi_axes: &[f64], exponents: &[f64]) -> Result<Self> {
        if semi_axes.len() != 2 {
            return Err(Error::BodyFormat {
                field: "semi_axes".into(),
                message: format!("expected 2 entries, got {}", semi_axes.len()),
            });
        }
        if exponents.len() != 1 {
            return Err(Error::BodyFormat {
                field: "exponents".into(),
                message: format!("expected 1 entry, got {}", exponents.len()),
            });
        }
        Self::new(semi_axes[0], semi_axes[1], exponents[0])
    }

    fn orientation_matrix(o: &f64) -> Matrix2<f64> {
        let (s, c) = o.sin_cos();
        Matrix2::new(c, -s, s, c)
    }

    fn sample_orientations(n: usize, _seed: u64) -> Vec<f64> {
        (0..n).map(|k| -PI + TAU * k as f64 / n as f64).collect()
    }

    fn orientation_components(o: &f64) -> Vec<f64> {
        vec![*o]
    }
}

/// 3D convex superquadric with semi-axes `a, b, c`. `eps1` shapes the
/// latitudinal (through-pole) profile, `eps2` the equatorial cross-section.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Superquadric3 {
    a: f64,
    b: f64,
    c: f64,
    eps1: f64,
    eps2: f64,
}

impl Superquadric3 {
    pub fn new(a: f64, b: f64, c: f64, eps1: f64, eps2: f64) -> Result<Self> {
        check_semi_axis("a", a)?;
        check_semi_axis("b", b)?;
        check_semi_axis("c", c)?;
        check_exponent("eps1", eps1)?;
        check_exponent("eps2", eps2)?;
        Ok(Superquadric3 { a, b, c, eps1, eps2 })
    }

    pub fn sphere(r: f64) -> Result<Self> {
        Self::new(r, r, r, 1.0, 1.0)
    }

    pub fn ellipsoid(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(a, b, c, 1.0, 1.0)
    }

    /// Smooth stand-in for an axis-aligned box of side lengths `l, w, h`.
    pub fn cuboid(l: f64, w: f64, h: f64) -> Result<Self> {
        Self::new(0.5 * l, 0.5 * w, 0.5 * h, 0.1, 0.1)
    }

    /// Smooth stand-in for an elliptic cylinder with cross-section semi-axes
    /// `a, b` and height `h`.
    pub fn cylinder(a: f64, b: f64, h: f64) -> Result<Self> {
        Self::new(a, b, 0.5 * h, 0.1, 1.0)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn eps1(&self) -> f64 {
        self.eps1
    }

    pub fn eps2(&self) -> f64 {
        self.eps2
    }
}

impl ConvexBody for Superquadric3 {
    type Vec = Vector3<f64>;
    type Mat = Matrix3<f64>;
    type Param = Param3;
    type Orientation = UnitQuaternion<f64>;

    fn implicit_value(&self, x: &Vector3<f64>) -> f64 {
        let p2 = 2.0 / self.eps2;
        let eq = apow(x.x / self.a, p2) + apow(x.y / self.b, p2);
        eq.powf(self.eps2 / self.eps1) + apow(x.z / self.c, 2.0 / self.eps1)
    }

    fn implicit_gradient(&self, x: &Vector3<f64>) -> Vector3<f64> {
        let (e1, e2) = (self.eps1, self.eps2);
        let m3 = 2.0 / (self.c * e1) * spow(x.z / self.c, 2.0 / e1 - 1.0);
        // Polar rewrite of the equatorial components: with
        // r_j = spow(x_j / s_j, 1/eps2) and s = |(r1, r2)|, the equatorial
        // bracket is s^2 and each component becomes
        // (2 / (s_j eps1)) spow(r_j / s, 2 - eps2) s^(eps2 (2 - eps1) / eps1),
        // which keeps every factor finite on the x3 axis.
        let r1 = spow(x.x / self.a, 1.0 / e2);
        let r2 = spow(x.y / self.b, 1.0 / e2);
        let s = r1.hypot(r2);
        if s == 0.0 {
            return Vector3::new(0.0, 0.0, m3);
        }
        let f = s.powf(e2 * (2.0 - e1) / e1);
        Vector3::new(
            2.0 / (self.a * e1) * spow(r1 / s, 2.0 - e2) * f,
            2.0 / (self.b * e1) * spow(r2 / s, 2.0 - e2) * f,
            m3,
        )
    }

    fn surface_point(&self, phi: &Param3) -> Vector3<f64> {
        let (se, ce) = phi.eta.sin_cos();
        let (so, co) = phi.omega.sin_cos();
        let lat = spow(ce, self.eps1);
        Vector3::new(
            self.a * lat * spow(co, self.eps2),
            self.b * lat * spow(so, self.eps2),
            self.c * spow(se, self.eps1),
        )
    }

    fn gradient_from_u(&self, u: &Vector3<f64>) -> Vector3<f64> {
        let (e1, e2) = (self.eps1, self.eps2);
        let m3 = 2.0 / (self.c * e1) * spow(u.z, 2.0 - e1);
        // Same polar rewrite as implicit_gradient, in terms of w = |(u1, u2)|.
        let w = u.x.hypot(u.y);
        if w == 0.0 {
            return Vector3::new(0.0, 0.0, m3);
        }
        let f = w.powf(2.0 - e1);
        Vector3::new(
            2.0 / (self.a * e1) * spow(u.x / w, 2.0 - e2) * f,
            2.0 / (self.b * e1) * spow(u.y / w, 2.0 - e2) * f,
            m3,
        )
    }

    fn point_from_gradient(&self, m: &Vector3<f64>) -> Result<Vector3<f64>> {
        let (e1, e2) = (self.eps1, self.eps2);
        let q1 = 0.5 * self.a * e1 * m.x;
        let q2 = 0.5 * self.b * e1 * m.y;
        let q3 = 0.5 * self.c * e1 * m.z;
        // gamma is the equatorial share of the implicit sum; a realizable
        // gradient keeps it in [0, 1] up to rounding.
        let gamma_raw = 1.0 - apow(q3, 2.0 / (2.0 - e1));
        if gamma_raw < -GAMMA_TOL {
            return Err(Error::InconsistentGradient { gamma: gamma_raw });
        }
        let gamma = gamma_raw.clamp(0.0, 1.0);
        let x3 = self.c * spow(q3, e1 / (2.0 - e1));
        if gamma == 0.0 {
            return Ok(Vector3::new(0.0, 0.0, x3));
        }
        let g = gamma.powf((e1 - e2) / (2.0 - e2));
        let p = e2 / (2.0 - e2);
        Ok(Vector3::new(self.a * spow(q1, p) * g, self.b * spow(q2, p) * g, x3))
    }

    fn g_inverse_direction(&self, m: &Vector3<f64>) -> Result<Vector3<f64>> {
        if m.x == 0.0 && m.y == 0.0 && m.z == 0.0 {
            return Err(Error::ZeroGradient);
        }
        let (e1, e2) = (self.eps1, self.eps2);
        let u3 = spow(0.5 * self.c * e1 * m.z, 1.0 / (2.0 - e1));
        // Polar rewrite: v_j = spow(q_j, 1/(2-eps2)), s = |(v1, v2)|; the
        // equatorial direction is (v/s) s^((2-eps2)/(2-eps1)).
        let v1 = spow(0.5 * self.a * e1 * m.x, 1.0 / (2.0 - e2));
        let v2 = spow(0.5 * self.b * e1 * m.y, 1.0 / (2.0 - e2));
        let s = v1.hypot(v2);
        if s == 0.0 {
            return Ok(Vector3::new(0.0, 0.0, u3));
        }
        let f = s.powf((2.0 - e2) / (2.0 - e1));
        Ok(Vector3::new(v1 / s * f, v2 / s * f, u3))
    }

    fn semi_axis_norm(&self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c).sqrt()
    }

    fn semi_axes(&self) -> Vec<f64> {
        vec![self.a, self.b, self.c]
    }

    fn exponents(&self) -> Vec<f64> {
        vec![self.eps1, self.eps2]
    }

    fn from_parts(semi_axes: &[f64], exponents: &[f64]) -> Result<Self> {
        if semi_axes.len() != 3 {
            return Err(Error::BodyFormat {
                field: "semi_axes".into(),
                message: format!("expected 3 entries, got {}", semi_axes.len()),
            });
        }
        if exponents.len() != 2 {
            return Err(Error::BodyFormat {
                field: "exponents".into(),
                message: format!("expected 2 entries, got {}", exponents.len()),
            });
        }
        Self::new(semi_axes[0], semi_axes[1], semi_axes[2], exponents[0], exponents[1])
    }

    fn orientation_matrix(o: &UnitQuaternion<f64>) -> Matrix3<f64> {
        o.to_rotation_matrix().into_inner()
    }

    fn sample_orientations(n: usize, seed: u64) -> Vec<UnitQuaternion<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| uniform_quaternion(&mut rng)).collect()
    }

    fn orientation_components(o: &UnitQuaternion<f64>) -> Vec<f64> {
        vec![o.w, o.i, o.j, o.k]
    }
}

/// Uniform random rotation (Shoemake's subgroup algorithm).
pub fn uniform_quaternion<R: Rng>(rng: &mut R) -> UnitQuaternion<f64> {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen();
    let u3: f64 = rng.gen();
    let (s1, c1) = (TAU * u2).sin_cos();
    let (s2, c2) = (TAU * u3).sin_cos();
    let r1 = (1.0 - u1).sqrt();
    let r2 = u1.sqrt();
    UnitQuaternion::from_quaternion(Quaternion::new(r2 * c2, r1 * s1, r1 * c1, r2 * s2))
}
