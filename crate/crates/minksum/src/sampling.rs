//! Seeded random bodies, transforms, and pose pairs for tests and benchmarks.
//!
//! Everything here is deterministic given the seed: the generator is a
//! counter-based stream cipher, so the same seed yields the same bodies on
//! every platform and thread count.

use nalgebra::{Matrix2, Matrix3, Vector2, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{uniform_quaternion, BodyInstance, Superquadric2, Superquadric3};

/// Semi-axis range used by all random shapes.
pub const AXIS_RANGE: (f64, f64) = (0.5, 3.0);
/// Exponent range; stays inside the strictly convex open interval.
pub const EXPONENT_RANGE: (f64, f64) = (0.2, 1.8);
/// Exponent range for workloads that need witness-grade conditioning.
///
/// Near the ends of the convex interval the boundary flattens (high
/// exponent: faces; low exponent: vertices of the dual role), and the
/// gradient direction attainable at double precision near the degenerate
/// axes is quantized at roughly `ulp^(2 - eps)`. Keeping exponents in
/// [0.5, 1.5] keeps that quantum below 1e-7, so closest-point witnesses are
/// determined to solver accuracy everywhere on the body.
pub const CONDITIONED_EXPONENT_RANGE: (f64, f64) = (0.5, 1.5);

/// Deterministic generator for a given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random 2D superquadric with axes in [`AXIS_RANGE`] and exponent drawn
/// from the given range.
pub fn random_superquadric2_with<R: Rng>(rng: &mut R, exponents: (f64, f64)) -> Superquadric2 {
    Superquadric2::new(
        rng.gen_range(AXIS_RANGE.0..AXIS_RANGE.1),
        rng.gen_range(AXIS_RANGE.0..AXIS_RANGE.1),
        rng.gen_range(exponents.0..exponents.1),
    )
    .expect("ranges produce valid shapes")
}

/// Random 2D superquadric with axes in [`AXIS_RANGE`] and exponent in
/// [`EXPONENT_RANGE`].
pub fn random_superquadric2<R: Rng>(rng: &mut R) -> Superquadric2 {
    random_superquadric2_with(rng, EXPONENT_RANGE)
}

/// Random 3D superquadric with axes in [`AXIS_RANGE`] and exponents drawn
/// from the given range.
pub fn random_superquadric3_with<R: Rng>(rng: &mut R, exponents: (f64, f64)) -> Superquadric3 {
    Superquadric3::new(
        rng.gen_range(AXIS_RANGE.0..AXIS_RANGE.1),
        rng.gen_range(AXIS_RANGE.0..AXIS_RANGE.1),
        rng.gen_range(AXIS_RANGE.0..AXIS_RANGE.1),
        rng.gen_range(exponents.0..exponents.1),
        rng.gen_range(exponents.0..exponents.1),
    )
    .expect("ranges produce valid shapes")
}

/// Random 3D superquadric with axes in [`AXIS_RANGE`] and exponents in
/// [`EXPONENT_RANGE`].
pub fn random_superquadric3<R: Rng>(rng: &mut R) -> Superquadric3 {
    random_superquadric3_with(rng, EXPONENT_RANGE)
}

/// Rotation matrix for a plane angle.
pub fn rotation2(angle: f64) -> Matrix2<f64> {
    let (s, c) = angle.sin_cos();
    Matrix2::new(c, -s, s, c)
}

/// Random rotation matrix in the plane.
pub fn random_rotation2<R: Rng>(rng: &mut R) -> Matrix2<f64> {
    rotation2(rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
}

/// Random rotation matrix in space, uniform over the rotation group.
pub fn random_rotation3<R: Rng>(rng: &mut R) -> Matrix3<f64> {
    uniform_quaternion(rng).to_rotation_matrix().into_inner()
}

/// Random invertible 2D map: rotation composed with a unit-determinant shear.
pub fn random_transform2<R: Rng>(rng: &mut R) -> Matrix2<f64> {
    let shear = Matrix2::new(1.0, rng.gen_range(-0.5..0.5), 0.0, 1.0);
    random_rotation2(rng) * shear
}

/// Random invertible 3D map: rotation composed with a unit-determinant shear.
pub fn random_transform3<R: Rng>(rng: &mut R) -> Matrix3<f64> {
    let shear = Matrix3::new(
        1.0,
        rng.gen_range(-0.5..0.5),
        rng.gen_range(-0.5..0.5),
        0.0,
        1.0,
        rng.gen_range(-0.5..0.5),
        0.0,
        0.0,
        1.0,
    );
    random_rotation3(rng) * shear
}

/// Random transformed 2D body centered at the origin, exponent drawn from
/// the given range.
pub fn random_body2_with<R: Rng>(
    rng: &mut R,
    exponents: (f64, f64),
) -> BodyInstance<Superquadric2> {
    let shape = random_superquadric2_with(rng, exponents);
    let linear = random_transform2(rng);
    BodyInstance::new(shape, linear, Vector2::zeros()).expect("unit-determinant map")
}

/// Random transformed 2D body centered at the origin.
pub fn random_body2<R: Rng>(rng: &mut R) -> BodyInstance<Superquadric2> {
    random_body2_with(rng, EXPONENT_RANGE)
}

/// Random transformed 3D body centered at the origin, exponents drawn from
/// the given range.
pub fn random_body3_with<R: Rng>(
    rng: &mut R,
    exponents: (f64, f64),
) -> BodyInstance<Superquadric3> {
    let shape = random_superquadric3_with(rng, exponents);
    let linear = random_transform3(rng);
    BodyInstance::new(shape, linear, Vector3::zeros()).expect("unit-determinant map")
}

/// Random transformed 3D body centered at the origin.
pub fn random_body3<R: Rng>(rng: &mut R) -> BodyInstance<Superquadric3> {
    random_body3_with(rng, EXPONENT_RANGE)
}

fn unit_direction2<R: Rng>(rng: &mut R) -> Vector2<f64> {
    let a = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Vector2::new(a.cos(), a.sin())
}

fn unit_direction3<R: Rng>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}

/// [`separated_pair2`] with the exponent range chosen by the caller.
pub fn separated_pair2_with<R: Rng>(
    rng: &mut R,
    margin: f64,
    exponents: (f64, f64),
) -> (BodyInstance<Superquadric2>, BodyInstance<Superquadric2>) {
    let b1 = random_body2_with(rng, exponents);
    let b2 = random_body2_with(rng, exponents);
    let d = b1.bounding_radius() + b2.bounding_radius() + margin;
    let b2 = b2.with_center(unit_direction2(rng) * d);
    (b1, b2)
}

/// Random 2D pair guaranteed separated: centers farther apart than the sum
/// of bounding radii plus `margin`.
pub fn separated_pair2<R: Rng>(
    rng: &mut R,
    margin: f64,
) -> (BodyInstance<Superquadric2>, BodyInstance<Superquadric2>) {
    separated_pair2_with(rng, margin, EXPONENT_RANGE)
}

/// [`separated_pair3`] with the exponent range chosen by the caller.
pub fn separated_pair3_with<R: Rng>(
    rng: &mut R,
    margin: f64,
    exponents: (f64, f64),
) -> (BodyInstance<Superquadric3>, BodyInstance<Superquadric3>) {
    let b1 = random_body3_with(rng, exponents);
    let b2 = random_body3_with(rng, exponents);
    let d = b1.bounding_radius() + b2.bounding_radius() + margin;
    let b2 = b2.with_center(unit_direction3(rng) * d);
    (b1, b2)
}

/// Random 3D pair guaranteed separated.
pub fn separated_pair3<R: Rng>(
    rng: &mut R,
    margin: f64,
) -> (BodyInstance<Superquadric3>, BodyInstance<Superquadric3>) {
    separated_pair3_with(rng, margin, EXPONENT_RANGE)
}

/// Random 2D pair with a center distance drawn from a range that produces a
/// healthy mix of penetrating, near-touching, and separated poses.
pub fn mixed_pair2<R: Rng>(
    rng: &mut R,
) -> (BodyInstance<Superquadric2>, BodyInstance<Superquadric2>) {
    let b1 = random_body2(rng);
    let b2 = random_body2(rng);
    let scale = b1.bounding_radius() + b2.bounding_radius();
    let d = scale * rng.gen_range(0.2..1.4);
    let b2 = b2.with_center(unit_direction2(rng) * d);
    (b1, b2)
}

/// Random 3D pair with mixed contact statuses.
pub fn mixed_pair3<R: Rng>(
    rng: &mut R,
) -> (BodyInstance<Superquadric3>, BodyInstance<Superquadric3>) {
    let b1 = random_body3(rng);
    let b2 = random_body3(rng);
    let scale = b1.bounding_radius() + b2.bounding_radius();
    let d = scale * rng.gen_range(0.2..1.4);
    let b2 = b2.with_center(unit_direction3(rng) * d);
    (b1, b2)
}
