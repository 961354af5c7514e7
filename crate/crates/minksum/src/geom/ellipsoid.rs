//! Ellipsoid support point from a surface normal.
//!
//! An ellipsoid `{A u : |u| = 1}` with SPD shape matrix `A` has, for outward
//! unit normal `n`, the unique boundary point `A^2 n / |A n|`. This is the
//! ellipsoid specialization of the inverse Gauss map and the anchor the
//! superquadric formulas must reproduce at exponent 1.

use crate::error::{Error, Result};
use crate::geom::linalg::{MatrixOps, VectorOps};

/// Relative symmetry tolerance for the SPD check.
const SPD_TOL: f64 = 1e-9;

/// Boundary point of the ellipsoid with shape matrix `a` whose outward
/// normal is along `n` (`n` need not be normalized). Errors if `a` is not
/// symmetric positive definite or `n` is zero.
pub fn ellipsoid_normal_point<M: MatrixOps>(a: &M, n: &M::Vec) -> Result<M::Vec> {
    if !a.is_spd(SPD_TOL) {
        return Err(Error::NotSpd);
    }
    if n.norm() == 0.0 {
        return Err(Error::ZeroGradient);
    }
    let an = a.mul_vec(n);
    let aan = a.mul_vec(&an);
    Ok(aan * (1.0 / an.norm()))
}
