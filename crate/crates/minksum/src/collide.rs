//! Proximity queries built on the contact-space boundary.
//!
//! The contact space of two placed bodies is the set of center displacements
//! at which they touch externally. Whether the actual displacement lies
//! inside, on, or outside that set decides penetration, touching, or
//! separation; all three residual systems below locate the relevant boundary
//! point with the damped least-squares solver.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{BodyInstance, ConvexBody, SphericalParam, VectorOps};
use crate::mink::{sum_point_transformed, MinkMode, MinkSumQuery};
use crate::nls::{levenberg_marquardt_projected, SolveResult, SolverConfig};

/// Tolerance on the ray ratio within which the bodies count as touching.
pub const TOUCH_TOL: f64 = 1e-8;

/// Alignment gate for the flat-face rescue: `1 - cos(angle)` between the
/// best boundary point and the center ray. 4.5e-4 corresponds to 0.03 rad.
const ALIGN_ERR_TOL: f64 = 4.5e-4;

/// Dimensionless direction gate (`1 - cos(angle)`) a distance solve must
/// meet before its witnesses are trusted. A step-limited solve can stop with
/// the `converged` flag set while the geometric directions still disagree at
/// 1e-2; properly converged solves sit at rounding level (~1e-16), so 1e-14
/// (about 1.4e-7 radians) cleanly separates the two and keeps witness error
/// below ~1e-6 for bodies of unit-to-few scale.
const DIRECTION_GATE: f64 = 1e-14;

/// Relation between the two bodies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ContactStatus {
    Separated,
    Touching,
    Penetrating,
    /// The solver failed to converge from every restart.
    Inconclusive,
}

impl std::fmt::Display for ContactStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ContactStatus::Separated => "separated",
            ContactStatus::Touching => "touching",
            ContactStatus::Penetrating => "penetrating",
            ContactStatus::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Which residual system refines the query beyond the separation status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryMethod {
    /// Ray scaling of the contact space only: status and ratio.
    Ray,
    /// Contact-space normal alignment: adds distance and witness points.
    Normal,
    /// Classic two-body common-normal system: adds distance and witnesses.
    Common,
}

impl std::str::FromStr for QueryMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ray" => Ok(QueryMethod::Ray),
            "normal" => Ok(QueryMethod::Normal),
            "common" => Ok(QueryMethod::Common),
            other => Err(Error::BodyFormat {
                field: "method".into(),
                message: format!("expected `ray`, `normal`, or `common`, got `{other}`"),
            }),
        }
    }
}

/// Outcome of a proximity query.
///
/// `lambda` is the ray ratio: the factor by which the center displacement
/// exceeds the contact-space boundary along its direction (`> 1` separated,
/// `= 1` touching, `< 1` penetrating). Distance and witnesses are present
/// only for separated results under the `Normal` and `Common` methods.
#[derive(Clone, Debug)]
pub struct ProximityResult<B: ConvexBody> {
    pub status: ContactStatus,
    pub method: QueryMethod,
    pub lambda: Option<f64>,
    pub distance: Option<f64>,
    pub witness1: Option<B::Vec>,
    pub witness2: Option<B::Vec>,
    pub phi1: Option<B::Param>,
    pub solve: SolveResult,
}

/// Common-normal residual for a candidate contact parameter on each body:
/// the two workspace normals must be parallel, and the segment between the
/// two surface points must be parallel to the first normal.
pub fn residual_common_normal<B: ConvexBody>(
    body1: &BodyInstance<B>,
    body2: &BodyInstance<B>,
    phi1: &B::Param,
    phi2: &B::Param,
) -> Vec<f64> {
    let x1 = body1.world_point(&body1.shape().surface_point(phi1));
    let x2 = body2.world_point(&body2.shape().surface_point(phi2));
    let n1 = body1.world_gradient(&body1.shape().gradient_from_u(&phi1.unit_vector())).unit();
    let n2 = body2.world_gradient(&body2.shape().gradient_from_u(&phi2.unit_vector())).unit();
    let mut out = Vec::with_capacity(6);
    n1.cross_terms(&n2, &mut out);
    n1.cross_terms(&(x2 - x1), &mut out);
    out
}

/// Ray residual: the contact-space boundary point at `phi1` must be parallel
/// to the center displacement. Errors if the centers coincide.
pub fn residual_mink_ray<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    phi1: &B::Param,
) -> Result<Vec<f64>> {
    let dc = center_offset(query)?;
    let x = contact_point(query, phi1)?;
    let mut out = Vec::with_capacity(3);
    x.cross_terms(&dc, &mut out);
    Ok(out)
}

/// Normal residual: body 1's workspace gradient at `phi1` must be parallel
/// to the gap vector from the contact-space boundary point to the center
/// displacement. Errors if the centers coincide.
pub fn residual_mink_normal<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    phi1: &B::Param,
) -> Result<Vec<f64>> {
    let dc = center_offset(query)?;
    let x = contact_point(query, phi1)?;
    let m1 = query.body1.shape().gradient_from_u(&phi1.unit_vector());
    let n = query.body1.world_gradient(&m1);
    let mut out = Vec::with_capacity(3);
    n.cross_terms(&(dc - x), &mut out);
    Ok(out)
}

fn center_offset<B: ConvexBody>(query: &MinkSumQuery<B>) -> Result<B::Vec> {
    let dc = *query.body2.center() - *query.body1.center();
    if dc.norm() == 0.0 {
        return Err(Error::DegenerateQuery);
    }
    Ok(dc)
}

/// Contact-space boundary point regardless of the query's stored mode.
fn contact_point<B: ConvexBody>(query: &MinkSumQuery<B>, phi: &B::Param) -> Result<B::Vec> {
    if query.mode == MinkMode::Contact {
        sum_point_transformed(query, phi)
    } else {
        let contact = MinkSumQuery { mode: MinkMode::Contact, ..query.clone() };
        sum_point_transformed(&contact, phi)
    }
}

/// Ray ratio via the support plane at the solved boundary point: the plane
/// through `x` with the body's outward normal cuts the center ray at
/// parameter ⟨n, x⟩ / ⟨n, dc⟩. This equals ‖dc‖/‖x‖ when `x` lies exactly on
/// the ray, and stays exact on flat faces even when the angular parameters
/// cannot represent the crossing point itself.
fn ray_lambda<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    phi: &B::Param,
    x: &B::Vec,
    dc: &B::Vec,
) -> f64 {
    let m1 = query.body1.shape().gradient_from_u(&phi.unit_vector());
    let n = query.body1.world_gradient(&m1);
    let num = n.dot(dc);
    let den = n.dot(x);
    if num.is_finite() && den.is_finite() && num > 0.0 && den > 0.0 {
        num / den
    } else {
        dc.norm() / x.norm()
    }
}

/// `1 - cos(angle)` between the boundary point at `phi` and the center ray;
/// infinite for far-side or non-finite points so they are never selected.
fn alignment_error<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    dc_unit: &B::Vec,
    phi: &B::Param,
) -> f64 {
    match contact_point(query, phi) {
        Ok(x) if x.all_finite() && x.norm() > 0.0 => {
            let c = x.unit().dot(dc_unit);
            if c <= 0.0 {
                f64::INFINITY
            } else {
                1.0 - c
            }
        }
        _ => f64::INFINITY,
    }
}

/// Derivative-free alignment polish: shrinking coordinate boxes around the
/// best of `starts`. Descent methods stall here because the alignment error
/// has a fractional-power cusp in the angles; direct search keeps making
/// progress as long as any representable parameter aligns better.
fn refine_alignment<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    dc: &B::Vec,
    starts: &[B::Param],
) -> (B::Param, f64) {
    let dc_unit = dc.unit();
    let err = |p: &B::Param| alignment_error(query, &dc_unit, p);
    let (mut center, mut best) = starts
        .iter()
        .map(|p| (*p, err(p)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one start");
    let offsets = [-1.0, -0.5, 0.0, 0.5, 1.0];
    let mut width = 0.5_f64;
    let mut rounds = 0;
    while width > 1e-13 && rounds < 400 {
        rounds += 1;
        let c = center.components();
        let mut improved_at_edge = false;
        let mut improved = false;
        let mut trial = |comps: &[f64], edge: bool| {
            let p = B::Param::from_slice(comps).wrap();
            let e = err(&p);
            if e < best {
                best = e;
                center = p;
                improved = true;
                improved_at_edge = edge;
            }
        };
        if B::Param::DOF == 1 {
            for &o in &offsets {
                if o != 0.0 {
                    trial(&[c[0] + o * width], o.abs() == 1.0);
                }
            }
        } else {
            for &o1 in &offsets {
                for &o2 in &offsets {
                    if o1 != 0.0 || o2 != 0.0 {
                        trial(
                            &[c[0] + o1 * width, c[1] + o2 * width],
                            o1.abs() == 1.0 || o2.abs() == 1.0,
                        );
                    }
                }
            }
        }
        // Pattern-search width control: walking along a descending valley
        // (best at a box edge) keeps the width so the valley is never lost;
        // interior or no improvement shrinks toward the cusp.
        if !improved {
            width *= 0.35;
        } else if !improved_at_edge {
            width *= 0.5;
        }
    }
    (center, best)
}

/// Classifies a ray ratio into a contact status.
pub fn classify_lambda(lambda: f64) -> ContactStatus {
    if (lambda - 1.0).abs() <= TOUCH_TOL {
        ContactStatus::Touching
    } else if lambda > 1.0 {
        ContactStatus::Separated
    } else {
        ContactStatus::Penetrating
    }
}

/// Separation status and, depending on `method`, distance and witness points.
///
/// The ray system is always solved first: its ratio `lambda` decides the
/// status for every method. Separated results under `Normal` and `Common`
/// additionally solve their residual system for the Euclidean distance and
/// the closest points on both bodies. Coincident centers short-circuit to
/// penetrating (a body contains its own center).
pub fn proximity_query<B: ConvexBody>(
    query: &MinkSumQuery<B>,
    method: QueryMethod,
    cfg: &SolverConfig,
) -> Result<ProximityResult<B>> {
    let dc = *query.body2.center() - *query.body1.center();
    if dc.norm() == 0.0 {
        return Ok(ProximityResult {
            status: ContactStatus::Penetrating,
            method,
            lambda: Some(0.0),
            distance: None,
            witness1: None,
            witness2: None,
            phi1: None,
            solve: SolveResult { x: vec![], residual_norm: 0.0, iterations: 0, converged: true },
        });
    }

    // Initial guess: the parameter whose canonical gradient pulls back from
    // the center-offset direction.
    let seed = B::Param::from_unit(&query.body1.pull_gradient(&dc).unit());

    let ray = |phi: &B::Param| -> Vec<f64> {
        residual_mink_ray(query, phi)
            .unwrap_or_else(|_| vec![f64::INFINITY; residual_len::<B>()])
    };
    let on_near_side = |phi: &B::Param| -> bool {
        contact_point(query, phi).map(|x| x.dot(&dc) > 0.0).unwrap_or(false)
    };
    let (ray_phi, ray_solve) = solve_with_restarts::<B, _, _>(&ray, &on_near_side, &seed, cfg);

    // Near the center of a low-curvature face the boundary point moves as a
    // fractional power of the angles, so no double-precision parameter lands
    // exactly on the center ray and the residual tolerance is unreachable.
    // The support plane at a nearby boundary point still cuts the ray at the
    // true crossing (exactly so in the flat limit), so a well-aligned
    // non-converged solve is rescued instead of reported inconclusive.
    let (ray_phi, ray_solve) = match ray_phi {
        Some(phi) => (phi, ray_solve),
        None => {
            let mut starts = scan_seeds::<B, _>(&ray, 3);
            starts.push(B::Param::from_slice(&ray_solve.x));
            let (phi, align_err) = refine_alignment(query, &dc, &starts);
            if align_err > ALIGN_ERR_TOL || !on_near_side(&phi) {
                return Ok(ProximityResult {
                    status: ContactStatus::Inconclusive,
                    method,
                    lambda: None,
                    distance: None,
                    witness1: None,
                    witness2: None,
                    phi1: None,
                    solve: ray_solve,
                });
            }
            let residual_norm = ray(&phi).iter().map(|v| v * v).sum::<f64>().sqrt();
            let solve = SolveResult { x: phi.components(), residual_norm, ..ray_solve };
            (phi, solve)
        }
    };

    let x_star = contact_point(query, &ray_phi)?;
    let lambda = ray_lambda(query, &ray_phi, &x_star, &dc);
    let status = classify_lambda(lambda);

    let mut result = ProximityResult {
        status,
        method,
        lambda: Some(lambda),
        distance: None,
        witness1: None,
        witness2: None,
        phi1: Some(ray_phi),
        solve: ray_solve,
    };

    if status != ContactStatus::Separated {
        return Ok(result);
    }

    match method {
        QueryMethod::Ray => {}
        QueryMethod::Normal => {
            let normal = |phi: &B::Param| -> Vec<f64> {
                residual_mink_normal(query, phi)
                    .unwrap_or_else(|_| vec![f64::INFINITY; residual_len::<B>()])
            };
            // The gap vector must point along the outward normal — and
            // tightly so, not merely into the right half-space: a
            // step-limited stall can carry the `converged` flag while the
            // directions still disagree at 1e-2.
            let gap_outward = |phi: &B::Param| -> bool {
                let Ok(x) = contact_point(query, phi) else { return false };
                let m1 = query.body1.shape().gradient_from_u(&phi.unit_vector());
                let n = query.body1.world_gradient(&m1);
                let gap = dc - x;
                let along = gap.dot(&n);
                along > 0.0 && 1.0 - along / (gap.norm() * n.norm()) <= DIRECTION_GATE
            };
            let (phi, solve) =
                solve_with_restarts::<B, _, _>(&normal, &gap_outward, &ray_phi, cfg);
            let Some(phi) = phi else {
                result.status = ContactStatus::Inconclusive;
                result.solve = solve;
                return Ok(result);
            };
            let x = contact_point(query, &phi)?;
            let m1 = query.body1.shape().gradient_from_u(&phi.unit_vector());
            let local1 = query.body1.shape().point_from_gradient(&m1)?;
            let w1 = query.body1.world_point(&local1);
            let gap = dc - x;
            result.distance = Some(gap.norm());
            result.witness1 = Some(w1);
            result.witness2 = Some(w1 + gap);
            result.phi1 = Some(phi);
            result.solve = solve;
        }
        QueryMethod::Common => {
            let common = |p1: &B::Param, p2: &B::Param| -> Vec<f64> {
                residual_common_normal(&query.body1, &query.body2, p1, p2)
            };
            let pair_geometry = |p1: &B::Param, p2: &B::Param| {
                let x1 = query.body1.world_point(&query.body1.shape().surface_point(p1));
                let x2 = query.body2.world_point(&query.body2.shape().surface_point(p2));
                let n1 = query
                    .body1
                    .world_gradient(&query.body1.shape().gradient_from_u(&p1.unit_vector()));
                let n2 = query
                    .body2
                    .world_gradient(&query.body2.shape().gradient_from_u(&p2.unit_vector()));
                (x1, x2, n1, n2)
            };
            // Loose orientation filter: normals facing each other, gap into
            // body 2's half-space. Selects the closest root's basin among the
            // common-normal roots without demanding any precision.
            let facing = |p1: &B::Param, p2: &B::Param| -> bool {
                let (x1, x2, n1, n2) = pair_geometry(p1, p2);
                n1.dot(&n2) < 0.0 && (x2 - x1).dot(&n1) > 0.0
            };
            // Tight acceptance: anti-parallel normals with the gap along
            // them, all within the direction gate.
            let closest_pair = |p1: &B::Param, p2: &B::Param| -> bool {
                let (x1, x2, n1, n2) = pair_geometry(p1, p2);
                let opp = -n1.dot(&n2);
                let gap = x2 - x1;
                let along = gap.dot(&n1);
                opp > 0.0
                    && along > 0.0
                    && 1.0 - opp / (n1.norm() * n2.norm()) <= DIRECTION_GATE
                    && 1.0 - along / (gap.norm() * n1.norm()) <= DIRECTION_GATE
            };
            let seed2 = B::Param::from_unit(&query.body2.pull_gradient(&-dc).unit());
            let (pair, solve) = solve_pair_with_restarts::<B, _, _, _>(
                &common,
                &closest_pair,
                &facing,
                (&ray_phi, &seed2),
                cfg,
            );
            let Some((p1, p2)) = pair else {
                result.status = ContactStatus::Inconclusive;
                result.solve = solve;
                return Ok(result);
            };
            let x1 = query.body1.world_point(&query.body1.shape().surface_point(&p1));
            let x2 = query.body2.world_point(&query.body2.shape().surface_point(&p2));
            result.distance = Some((x2 - x1).norm());
            result.witness1 = Some(x1);
            result.witness2 = Some(x2);
            result.phi1 = Some(p1);
            result.solve = solve;
        }
    }
    Ok(result)
}

fn residual_len<B: ConvexBody>() -> usize {
    // Cross products have one component in 2D, three in 3D.
    if <B::Vec as VectorOps>::DIM == 2 {
        1
    } else {
        3
    }
}

fn solve_angles<B, F>(f: &F, seed: &B::Param, cfg: &SolverConfig) -> (B::Param, SolveResult)
where
    B: ConvexBody,
    F: Fn(&B::Param) -> Vec<f64>,
{
    let closure = |s: &[f64]| f(&B::Param::from_slice(s));
    let project = |s: &mut [f64]| B::Param::from_slice(s).wrap().write_to(s);
    match levenberg_marquardt_projected(closure, &seed.components(), cfg, project, |_| {}) {
        Ok(r) => (B::Param::from_slice(&r.x), r),
        Err(_) => (
            *seed,
            SolveResult {
                x: seed.components(),
                residual_norm: f64::INFINITY,
                iterations: 0,
                converged: false,
            },
        ),
    }
}

/// Solves from the seed, the antipodal seed, then the spread seeds; returns
/// the first converged solution passing `accept`, else the best-residual
/// failure for diagnostics.
fn solve_with_restarts<B, F, A>(
    f: &F,
    accept: &A,
    seed: &B::Param,
    cfg: &SolverConfig,
) -> (Option<B::Param>, SolveResult)
where
    B: ConvexBody,
    F: Fn(&B::Param) -> Vec<f64>,
    A: Fn(&B::Param) -> bool,
{
    let mut seeds = vec![*seed];
    seeds.push(antipodal::<B>(seed));
    seeds.extend(B::Param::spread_seeds());

    // Best stalled attempt that still satisfies `accept`, and best overall;
    // the former is the better rescue base, the latter the better diagnostic.
    let mut best_ok: Option<(B::Param, SolveResult)> = None;
    let mut best_any: Option<(B::Param, SolveResult)> = None;
    let mut record = |phi: B::Param, solve: SolveResult, ok: bool| {
        if ok && best_ok.as_ref().map_or(true, |(_, b)| solve.residual_norm < b.residual_norm) {
            best_ok = Some((phi, solve.clone()));
        }
        if best_any.as_ref().map_or(true, |(_, b)| solve.residual_norm < b.residual_norm) {
            best_any = Some((phi, solve));
        }
    };
    for phase in 0..2 {
        if phase == 1 {
            // Analytic seeds exhausted; rescue with the lowest-residual
            // points of a coarse deterministic scan.
            seeds = scan_seeds::<B, F>(f, 6);
        }
        for s in &seeds {
            let (phi, solve) = solve_angles::<B, F>(f, s, cfg);
            if solve.converged && accept(&phi) {
                return (Some(phi), solve);
            }
            let ok = accept(&phi);
            // A rejected attempt usually sits near the antipodal alignment,
            // where the cross residual also vanishes; retry once from the
            // antipode, which lands in the near side's attraction basin.
            // Worth doing even when the rejected attempt stalled.
            if !ok {
                let (phi2, solve2) = solve_angles::<B, F>(f, &antipodal::<B>(&phi), cfg);
                if solve2.converged && accept(&phi2) {
                    return (Some(phi2), solve2);
                }
                let ok2 = accept(&phi2);
                record(phi2, solve2, ok2);
            }
            record(phi, solve, ok);
        }
    }
    let (phi, solve) = best_ok.or(best_any).expect("at least one seed attempted");
    (None, SolveResult { x: phi.components(), ..solve })
}

fn antipodal<B: ConvexBody>(phi: &B::Param) -> B::Param {
    B::Param::from_unit(&-phi.unit_vector())
}

/// Lowest-residual pairs from a coarse joint grid, restricted to pairs that
/// already satisfy the basin filter. Used as restart seeds when every
/// analytic pair seed converges onto a rejected root of the pair system.
fn scan_pair_seeds<B, F, G>(f: &F, basin: &G, count: usize) -> Vec<(B::Param, B::Param)>
where
    B: ConvexBody,
    F: Fn(&B::Param, &B::Param) -> Vec<f64>,
    G: Fn(&B::Param, &B::Param) -> bool,
{
    let spec = if <B::Vec as VectorOps>::DIM == 2 {
        crate::geom::GridSpec::TwoD { n: 24 }
    } else {
        crate::geom::GridSpec::ThreeD { n_eta: 7, n_omega: 12 }
    };
    let params = B::Param::grid(&spec).expect("fixed spec is valid");
    let mut scored: Vec<(f64, (B::Param, B::Param))> = Vec::new();
    for p1 in &params {
        for p2 in &params {
            if !basin(p1, p2) {
                continue;
            }
            let score = f(p1, p2).iter().map(|v| v * v).sum::<f64>();
            if score.is_finite() {
                scored.push((score, (*p1, *p2)));
            }
        }
    }
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    scored.truncate(count);
    scored.into_iter().map(|(_, p)| p).collect()
}

/// Lowest-residual parameters from a fixed coarse grid, used as rescue seeds
/// when every analytic seed stalls. Bodies with exponents near the convexity
/// limit map most directions onto near-flat or near-vertex regions, leaving
/// plateaus in the residual that descent alone cannot cross.
fn scan_seeds<B, F>(f: &F, count: usize) -> Vec<B::Param>
where
    B: ConvexBody,
    F: Fn(&B::Param) -> Vec<f64>,
{
    let spec = if <B::Vec as VectorOps>::DIM == 2 {
        crate::geom::GridSpec::TwoD { n: 32 }
    } else {
        crate::geom::GridSpec::ThreeD { n_eta: 9, n_omega: 16 }
    };
    let params = B::Param::grid(&spec).expect("fixed spec is valid");
    let mut scored: Vec<(f64, B::Param)> = params
        .into_iter()
        .map(|p| (f(&p).iter().map(|v| v * v).sum::<f64>(), p))
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    scored.truncate(count);
    scored.into_iter().map(|(_, p)| p).collect()
}

fn solve_pair_with_restarts<B, F, A, G>(
    f: &F,
    accept: &A,
    basin: &G,
    seeds: (&B::Param, &B::Param),
    cfg: &SolverConfig,
) -> (Option<(B::Param, B::Param)>, SolveResult)
where
    B: ConvexBody,
    F: Fn(&B::Param, &B::Param) -> Vec<f64>,
    A: Fn(&B::Param, &B::Param) -> bool,
    G: Fn(&B::Param, &B::Param) -> bool,
{
    let dof = B::Param::DOF;
    let closure = |s: &[f64]| f(&B::Param::from_slice(&s[..dof]), &B::Param::from_slice(&s[dof..]));
    let project = |s: &mut [f64]| {
        B::Param::from_slice(&s[..dof]).wrap().write_to(&mut s[..dof]);
        B::Param::from_slice(&s[dof..]).wrap().write_to(&mut s[dof..]);
    };

    let mut starts: Vec<(B::Param, B::Param)> = vec![(*seeds.0, *seeds.1)];
    starts.push((antipodal::<B>(seeds.0), antipodal::<B>(seeds.1)));
    for s in B::Param::spread_seeds() {
        starts.push((s, antipodal::<B>(&s)));
    }

    let mut best: Option<SolveResult> = None;
    for phase in 0..2 {
        if phase == 1 {
            // The pair system has one root per common-normal line, and
            // descent from the analytic seeds can converge onto a root the
            // accept test rejects (e.g. the farthest line). Restart from the
            // lowest-residual coarse pairs inside the wanted root's basin.
            starts = scan_pair_seeds::<B, F, G>(f, basin, 4);
        }
        for (s1, s2) in &starts {
            let mut x0 = s1.components();
            x0.extend(s2.components());
            let solve = match levenberg_marquardt_projected(&closure, &x0, cfg, &project, |_| {}) {
                Ok(r) => r,
                Err(_) => continue,
            };
            let p1 = B::Param::from_slice(&solve.x[..dof]);
            let p2 = B::Param::from_slice(&solve.x[dof..]);
            if solve.converged && accept(&p1, &p2) {
                return (Some((p1, p2)), solve);
            }
            if best.as_ref().map_or(true, |b| solve.residual_norm < b.residual_norm) {
                best = Some(solve);
            }
        }
    }
    let solve = best.unwrap_or(SolveResult {
        x: vec![],
        residual_norm: f64::INFINITY,
        iterations: 0,
        converged: false,
    });
    (None, solve)
}
