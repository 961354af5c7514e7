//! Shared brute-force oracles: dense grid searches, rejection sampling, and
//! finite differences. Nothing here touches the closed-form sum formulas
//! being validated.

// Each integration-test binary compiles its own copy and uses a subset.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::{Vector2, Vector3};
use rand::Rng;

use minksum::geom::{BodyInstance, ConvexBody, VectorOps};
use minksum::{Param2, Param3, Superquadric2, Superquadric3};

/// Magnitude of body2's gradient where its direction opposes `m1`, found by
/// dense search over the angular grid instead of any closed form.
pub fn phi_oracle_2d(body2: &Superquadric2, m1: &Vector2<f64>, n: usize) -> f64 {
    let target = -m1.normalize();
    let mut best_dot = f64::NEG_INFINITY;
    let mut best_norm = f64::NAN;
    for k in 0..n {
        let theta = -PI + TAU * k as f64 / n as f64;
        let m2 = body2.gradient_from_u(&Vector2::new(theta.cos(), theta.sin()));
        let d = m2.normalize().dot(&target);
        if d > best_dot {
            best_dot = d;
            best_norm = m2.norm();
        }
    }
    best_norm
}

/// 3D variant of [`phi_oracle_2d`], searching an eta-omega grid.
pub fn phi_oracle_3d(
    body2: &Superquadric3,
    m1: &Vector3<f64>,
    n_eta: usize,
    n_omega: usize,
) -> f64 {
    let target = -m1.normalize();
    let mut best_dot = f64::NEG_INFINITY;
    let mut best_norm = f64::NAN;
    for i in 0..=n_eta {
        let eta = -FRAC_PI_2 + PI * i as f64 / n_eta as f64;
        for j in 0..n_omega {
            let omega = -PI + TAU * j as f64 / n_omega as f64;
            let u = Vector3::new(
                eta.cos() * omega.cos(),
                eta.cos() * omega.sin(),
                eta.sin(),
            );
            let m2 = body2.gradient_from_u(&u);
            let d = m2.normalize().dot(&target);
            if d > best_dot {
                best_dot = d;
                best_norm = m2.norm();
            }
        }
    }
    best_norm
}

/// Monte-Carlo volume of a canonical 3D superquadric by rejection sampling
/// in its bounding box.
pub fn mc_volume3<R: Rng>(shape: &Superquadric3, samples: usize, rng: &mut R) -> f64 {
    let axes = shape.semi_axes();
    let (a, b, c) = (axes[0], axes[1], axes[2]);
    let mut hits = 0usize;
    for _ in 0..samples {
        let p = Vector3::new(
            rng.gen_range(-a..a),
            rng.gen_range(-b..b),
            rng.gen_range(-c..c),
        );
        if shape.implicit_value(&p) <= 1.0 {
            hits += 1;
        }
    }
    8.0 * a * b * c * hits as f64 / samples as f64
}

/// Workspace surface samples of a placed 2D body on a uniform angle grid,
/// plus the largest gap between consecutive samples.
pub fn sampled_surface2(
    body: &BodyInstance<Superquadric2>,
    n: usize,
) -> (Vec<Vector2<f64>>, f64) {
    let pts: Vec<Vector2<f64>> = (0..n)
        .map(|k| {
            let phi = Param2::new(-PI + TAU * k as f64 / n as f64);
            body.world_point(&body.shape().surface_point(&phi))
        })
        .collect();
    let mut spacing: f64 = 0.0;
    for k in 0..n {
        spacing = spacing.max((pts[(k + 1) % n] - pts[k]).norm());
    }
    (pts, spacing)
}

/// Workspace surface samples of a placed 3D body on an eta-omega grid, plus
/// the largest gap between grid-adjacent samples.
pub fn sampled_surface3(
    body: &BodyInstance<Superquadric3>,
    n_eta: usize,
    n_omega: usize,
) -> (Vec<Vector3<f64>>, f64) {
    let mut pts = Vec::with_capacity((n_eta + 1) * n_omega);
    for i in 0..=n_eta {
        let eta = -FRAC_PI_2 + PI * i as f64 / n_eta as f64;
        for j in 0..n_omega {
            let omega = -PI + TAU * j as f64 / n_omega as f64;
            let phi = Param3::new(eta, omega);
            pts.push(body.world_point(&body.shape().surface_point(&phi)));
        }
    }
    let at = |i: usize, j: usize| pts[i * n_omega + (j % n_omega)];
    let mut spacing: f64 = 0.0;
    for i in 0..=n_eta {
        for j in 0..n_omega {
            let p = at(i, j);
            spacing = spacing.max((at(i, j + 1) - p).norm());
            if i < n_eta {
                spacing = spacing.max((at(i + 1, j) - p).norm());
            }
        }
    }
    (pts, spacing)
}

/// Minimum distance between two sampled surfaces by exhaustive pairing.
pub fn brute_distance<V: VectorOps>(pts1: &[V], pts2: &[V]) -> f64 {
    let mut best = f64::INFINITY;
    for p in pts1 {
        for q in pts2 {
            best = best.min((*q - *p).norm());
        }
    }
    best
}

/// Overlap test by membership sampling: any sampled surface point of one
/// body inside the other, or either center inside the other body.
pub fn overlap_oracle<B: ConvexBody>(
    b1: &BodyInstance<B>,
    b2: &BodyInstance<B>,
    pts1: &[B::Vec],
    pts2: &[B::Vec],
) -> bool {
    if b1.implicit_value_world(b2.center()) <= 1.0 || b2.implicit_value_world(b1.center()) <= 1.0
    {
        return true;
    }
    pts2.iter().any(|p| b1.implicit_value_world(p) <= 1.0)
        || pts1.iter().any(|p| b2.implicit_value_world(p) <= 1.0)
}
