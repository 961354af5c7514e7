//! Exact volume of a 3D superquadric via Beta functions.

use statrs::function::gamma::ln_gamma;

use crate::geom::superquadric::Superquadric3;

fn beta(x: f64, y: f64) -> f64 {
    (ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)).exp()
}

/// Volume of the superquadric:
/// `2 a b c e1 e2 B(e1/2 + 1, e1) B(e2/2, e2/2)`.
///
/// Reduces to `4/3 pi a b c` at exponents (1, 1).
pub fn volume(body: &Superquadric3) -> f64 {
    let (e1, e2) = (body.eps1(), body.eps2());
    2.0 * body.a() * body.b() * body.c()
        * e1
        * e2
        * beta(0.5 * e1 + 1.0, e1)
        * beta(0.5 * e2, 0.5 * e2)
}
