//! Gradient magnitude matching between two bodies.

use crate::error::{Error, Result};
use crate::geom::{ConvexBody, VectorOps};

/// Magnitude the second body's gradient takes where its outward gradient
/// direction opposes `m1`.
///
/// At a contact configuration the two bodies share a normal line: body 2's
/// gradient there is `-phi * m1 / |m1|` with `phi` the value computed here.
/// The map depends only on the direction of `m1` and satisfies
/// `phi(-m1) = phi(m1)` for these centrally symmetric bodies.
pub fn phi_magnitude<B: ConvexBody>(body2: &B, m1: &B::Vec) -> Result<f64> {
    if m1.norm() == 0.0 {
        return Err(Error::ZeroGradient);
    }
    let u2 = body2.g_inverse_direction(&-*m1)?.unit();
    Ok(body2.gradient_from_u(&u2).norm())
}
