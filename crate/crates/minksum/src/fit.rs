//! Least-squares line fits for timing and scaling analysis.

use crate::error::{Error, Result};

/// Slope, intercept, and coefficient of determination of a least-squares
/// line through `(x, y)` pairs.
#[derive(Clone, Copy, Debug)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Fits `y = slope * x + intercept` by ordinary least squares.
///
/// Errors if fewer than two points are given, the lengths differ, or all
/// `x` values coincide.
pub fn linear_fit(x: &[f64], y: &[f64]) -> Result<LineFit> {
    if x.len() != y.len() {
        return Err(Error::GridMismatch(format!(
            "fit needs matching lengths, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::GridMismatch("fit needs at least two points".into()));
    }
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mean_x;
        let dy = yi - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::GridMismatch("fit needs at least two distinct x values".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    // A constant target is fit perfectly by the horizontal line.
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(LineFit { slope, intercept, r_squared })
}

/// Fits an exponent `p` in `y ~ c * x^p` by regressing `log y` on `log x`.
///
/// All inputs must be strictly positive.
pub fn loglog_exponent(x: &[f64], y: &[f64]) -> Result<LineFit> {
    if x.iter().chain(y).any(|&v| !(v > 0.0)) {
        return Err(Error::GridMismatch(
            "log-log fit needs strictly positive values".into(),
        ));
    }
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    linear_fit(&lx, &ly)
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    #[test]
    fn exact_line_recovered() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| 2.5 * v - 1.0).collect();
        let fit = linear_fit(&x, &y).unwrap();
        assert_abs_diff_eq!(fit.slope, 2.5, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.intercept, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.r_squared, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn noisy_line_r_squared_below_one() {
        let x = [0.0, 1.0, 2.0, 3.0];
        let y = [0.1, 0.9, 2.2, 2.8];
        let fit = linear_fit(&x, &y).unwrap();
        assert!(fit.r_squared > 0.9 && fit.r_squared < 1.0);
    }

    #[test]
    fn power_law_exponent_recovered() {
        let x = [10.0, 20.0, 40.0, 80.0];
        let y: Vec<f64> = x.iter().map(|v: &f64| 3.0 * v.powf(1.7)).collect();
        let fit = loglog_exponent(&x, &y).unwrap();
        assert_abs_diff_eq!(fit.slope, 1.7, epsilon = 1e-10);
        assert_abs_diff_eq!(fit.intercept, 3.0_f64.ln(), epsilon = 1e-10);
    }

    #[test]
    fn degenerate_inputs_error() {
        assert!(linear_fit(&[1.0], &[2.0]).is_err());
        assert!(linear_fit(&[1.0, 1.0], &[2.0, 3.0]).is_err());
        assert!(linear_fit(&[1.0, 2.0], &[2.0]).is_err());
        assert!(loglog_exponent(&[1.0, -2.0], &[2.0, 3.0]).is_err());
    }
}
