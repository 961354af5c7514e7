//! Damped least-squares (Levenberg-Marquardt) for small residual systems.
//!
//! The residual dimension here is at most six and the parameter dimension at
//! most four, so the normal equations are solved densely and the Jacobian is
//! taken by central finite differences.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Solver tuning knobs.
#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub max_iters: usize,
    /// Converged when the residual norm drops to this.
    pub residual_tol: f64,
    /// Converged when an accepted step is shorter than this.
    pub step_tol: f64,
    pub damping_init: f64,
    pub damping_up: f64,
    pub damping_down: f64,
    /// Central-difference step for the Jacobian.
    pub fd_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iters: 100,
            residual_tol: 1e-10,
            step_tol: 1e-12,
            damping_init: 1e-3,
            damping_up: 10.0,
            damping_down: 0.1,
            fd_step: 1e-6,
        }
    }
}

/// Outcome of a solve. `converged` means either tolerance was met; the
/// residual norm of non-converged solves is still the best one seen.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub x: Vec<f64>,
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Central-difference Jacobian of `f` at `x`.
///
/// Errors if any probe produces a non-finite residual entry.
pub fn fd_jacobian<F>(f: &F, x: &[f64], step: f64) -> Result<DMatrix<f64>>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let n = x.len();
    let mut probe = x.to_vec();

    let eval = |probe: &[f64]| -> Result<Vec<f64>> {
        let r = f(probe);
        if r.iter().any(|v| !v.is_finite()) {
            return Err(Error::ResidualEvaluation { at: probe.to_vec() });
        }
        Ok(r)
    };

    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut rows = 0;
    for j in 0..n {
        let xj = x[j];
        probe[j] = xj + step;
        let rp = eval(&probe)?;
        probe[j] = xj - step;
        let rm = eval(&probe)?;
        probe[j] = xj;
        if rp.len() != rm.len() {
            return Err(Error::ResidualEvaluation { at: x.to_vec() });
        }
        rows = rp.len();
        columns.push(
            rp.iter().zip(&rm).map(|(p, m)| (p - m) / (2.0 * step)).collect(),
        );
    }
    let mut jac = DMatrix::zeros(rows, n);
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            jac[(i, j)] = *v;
        }
    }
    Ok(jac)
}

/// Minimizes `|f(x)|` from `x0`.
///
/// Steps solve `(J^T J + damping I) dx = -J^T r`; a step is accepted only if
/// it lowers the residual norm, otherwise damping grows and the step is
/// retried with the same Jacobian. Accepted residual norms are therefore
/// monotone non-increasing.
pub fn levenberg_marquardt<F>(f: F, x0: &[f64], cfg: &SolverConfig) -> Result<SolveResult>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    levenberg_marquardt_projected(f, x0, cfg, |_| {}, |_| {})
}

/// [`levenberg_marquardt`] with hooks: `project` canonicalizes iterates after
/// each step (angle wrapping), `observe` sees every accepted residual norm.
pub fn levenberg_marquardt_projected<F, P, O>(
    f: F,
    x0: &[f64],
    cfg: &SolverConfig,
    project: P,
    mut observe: O,
) -> Result<SolveResult>
where
    F: Fn(&[f64]) -> Vec<f64>,
    P: Fn(&mut [f64]),
    O: FnMut(f64),
{
    // Damping beyond this cannot make useful progress in f64.
    const DAMPING_MAX: f64 = 1e16;

    let mut x = x0.to_vec();
    project(&mut x);
    let mut r = f(&x);
    if r.iter().any(|v| !v.is_finite()) {
        return Err(Error::ResidualEvaluation { at: x });
    }
    let mut r_norm = norm(&r);
    observe(r_norm);
    if r_norm <= cfg.residual_tol {
        return Ok(SolveResult { x, residual_norm: r_norm, iterations: 0, converged: true });
    }

    let mut damping = cfg.damping_init;
    let mut jac: Option<DMatrix<f64>> = None;
    let mut iterations = 0;

    for _ in 0..cfg.max_iters {
        iterations += 1;
        let j = match &jac {
            Some(j) => j,
            None => {
                jac = Some(fd_jacobian(&f, &x, cfg.fd_step)?);
                jac.as_ref().unwrap()
            }
        };
        let jt = j.transpose();
        let mut a = &jt * j;
        for i in 0..a.nrows() {
            a[(i, i)] += damping;
        }
        let g = &jt * DVector::from_column_slice(&r);
        let step = match a.lu().solve(&(-&g)) {
            Some(s) => s,
            None => {
                damping *= cfg.damping_up;
                if damping > DAMPING_MAX {
                    break;
                }
                continue;
            }
        };

        let mut x_trial: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
        project(&mut x_trial);
        let r_trial = f(&x_trial);
        let trial_norm = norm(&r_trial);

        if trial_norm.is_finite() && trial_norm < r_norm {
            let step_norm = step.norm();
            // The decrease factor shrinks with the square of the achieved
            // residual ratio: a locally linear problem (huge one-step drop)
            // pushes the damping straight to Gauss-Newton territory, which is
            // what makes linear systems finish in two accepted steps.
            let ratio = trial_norm / r_norm;
            x = x_trial;
            r = r_trial;
            r_norm = trial_norm;
            observe(r_norm);
            damping = (damping * cfg.damping_down * ratio * ratio).max(1e-14);
            jac = None;
            if r_norm <= cfg.residual_tol || step_norm <= cfg.step_tol {
                return Ok(SolveResult { x, residual_norm: r_norm, iterations, converged: true });
            }
        } else {
            damping *= cfg.damping_up;
            if damping > DAMPING_MAX {
                break;
            }
        }
    }

    let converged = r_norm <= cfg.residual_tol;
    Ok(SolveResult { x, residual_norm: r_norm, iterations, converged })
}

fn norm(r: &[f64]) -> f64 {
    r.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    #[test]
    fn fd_jacobian_of_square() {
        let f = |x: &[f64]| vec![x[0] * x[0]];
        let j = fd_jacobian(&f, &[3.0], 1e-6).unwrap();
        assert_abs_diff_eq!(j[(0, 0)], 6.0, epsilon = 1e-6);
    }

    #[test]
    fn fd_jacobian_of_linear_map_is_exact() {
        let f = |x: &[f64]| vec![2.0 * x[0] - x[1], 3.0 * x[1]];
        let j = fd_jacobian(&f, &[0.3, -0.7], 1e-6).unwrap();
        assert_abs_diff_eq!(j[(0, 0)], 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(j[(0, 1)], -1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(j[(1, 0)], 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(j[(1, 1)], 3.0, epsilon = 1e-9);
    }

    #[test]
    fn fd_jacobian_rejects_non_finite() {
        let f = |x: &[f64]| vec![(x[0] - 2.0).sqrt()];
        assert!(fd_jacobian(&f, &[1.0], 1e-6).is_err());
    }

    #[test]
    fn scalar_root() {
        let f = |x: &[f64]| vec![x[0] - 2.0];
        let out = levenberg_marquardt(f, &[10.0], &SolverConfig::default()).unwrap();
        assert!(out.converged);
        assert_abs_diff_eq!(out.x[0], 2.0, epsilon = 1e-10);
    }

    #[test]
    fn linear_system_converges_in_two_accepted_steps() {
        let f = |x: &[f64]| vec![2.0 * x[0] + x[1] - 1.0, x[0] - x[1] + 4.0];
        let mut accepted = Vec::new();
        let out = levenberg_marquardt_projected(
            f,
            &[5.0, -3.0],
            &SolverConfig::default(),
            |_| {},
            |r| accepted.push(r),
        )
        .unwrap();
        assert!(out.converged);
        assert!(out.residual_norm < 1e-10, "residual {:.3e}", out.residual_norm);
        // Initial residual plus at most two accepted steps.
        assert!(accepted.len() <= 3, "accepted residuals: {accepted:?}");
    }

    #[test]
    fn rosenbrock_converges() {
        // Classic curved valley in residual form.
        let f = |x: &[f64]| vec![10.0 * (x[1] - x[0] * x[0]), 1.0 - x[0]];
        let out = levenberg_marquardt(f, &[-1.2, 1.0], &SolverConfig::default()).unwrap();
        assert!(out.converged);
        assert_abs_diff_eq!(out.x[0], 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(out.x[1], 1.0, epsilon = 1e-6);
    }

    #[test]
    fn accepted_residuals_are_monotone_and_deterministic() {
        let f = |x: &[f64]| vec![10.0 * (x[1] - x[0] * x[0]), 1.0 - x[0]];
        let run = || {
            let mut seen = Vec::new();
            levenberg_marquardt_projected(
                f,
                &[-1.2, 1.0],
                &SolverConfig::default(),
                |_| {},
                |r| seen.push(r),
            )
            .unwrap();
            seen
        };
        let a = run();
        let b = run();
        assert_eq!(a, b);
        for w in a.windows(2) {
            assert!(w[1] <= w[0], "residuals increased: {w:?}");
        }
    }

    #[test]
    fn projection_hook_keeps_iterates_canonical() {
        use std::f64::consts::PI;
        // Solve cos(t) = -1 with t wrapped into [-pi, pi); the solution
        // should come back wrapped.
        let f = |x: &[f64]| vec![x[0].cos() + 1.0];
        let out = levenberg_marquardt_projected(
            f,
            &[2.5],
            &SolverConfig::default(),
            |x| x[0] = crate::geom::wrap_angle(x[0]),
            |_| {},
        )
        .unwrap();
        assert!(out.converged);
        assert!((-PI..PI).contains(&out.x[0]));
    }
}
