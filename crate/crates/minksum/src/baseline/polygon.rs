//! Convex polygons: hulls and exact polygon Minkowski sums.
//!
//! These are the slow-but-simple 2D constructions the closed-form boundary
//! is validated against.

use nalgebra::Vector2;

use crate::error::{Error, Result};

/// Collinearity tolerance for hull construction and convexity checks.
const CROSS_TOL: f64 = 1e-12;
/// Two vertices closer than this are considered duplicates.
const DUP_TOL: f64 = 1e-12;

type Vec2 = Vector2<f64>;

fn cross(o: &Vec2, a: &Vec2, b: &Vec2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// A strictly convex polygon with vertices in counter-clockwise order.
///
/// A single vertex (degenerate point polygon) is allowed; two vertices are
/// not. For three or more, consecutive edge cross products must be strictly
/// positive and consecutive vertices distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon2D {
    vertices: Vec<Vec2>,
}

impl Polygon2D {
    pub fn new(vertices: Vec<Vec2>) -> Result<Self> {
        match vertices.len() {
            0 => return Err(Error::NonConvexPolygon("no vertices".into())),
            1 => return Ok(Polygon2D { vertices }),
            2 => {
                return Err(Error::NonConvexPolygon(
                    "two vertices form a segment, not a polygon".into(),
                ))
            }
            _ => {}
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).norm() <= DUP_TOL {
                return Err(Error::NonConvexPolygon(format!(
                    "duplicate vertices at index {i}"
                )));
            }
            if cross(&a, &b, &c) <= 0.0 {
                return Err(Error::NonConvexPolygon(format!(
                    "non-left turn at index {}",
                    (i + 1) % n
                )));
            }
        }
        Ok(Polygon2D { vertices })
    }

    /// Degenerate single-point polygon.
    pub fn point(v: Vec2) -> Self {
        Polygon2D { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Translates every vertex by `t`.
    pub fn translated(&self, t: &Vec2) -> Self {
        Polygon2D { vertices: self.vertices.iter().map(|v| v + t).collect() }
    }

    /// True if `p` lies inside or on the boundary within `tol`.
    pub fn contains(&self, p: &Vec2, tol: f64) -> bool {
        if self.vertices.len() == 1 {
            return (p - self.vertices[0]).norm() <= tol;
        }
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = (b - a).norm();
            if cross(&a, &b, p) < -tol * e {
                return false;
            }
        }
        true
    }

    /// Support value `max_v <n, v>` over the vertices.
    pub fn support(&self, n: &Vec2) -> f64 {
        self.vertices.iter().map(|v| n.dot(v)).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Convex hull of a point set (monotone chain).
///
/// Returns vertices in counter-clockwise order starting at the
/// lexicographically smallest point; collinear interior points are dropped.
/// Errors if fewer than three non-collinear points remain.
pub fn hull2d(points: &[Vec2]) -> Result<Polygon2D> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|p, q| p.x.partial_cmp(&q.x).unwrap().then(p.y.partial_cmp(&q.y).unwrap()));
    pts.dedup_by(|a, b| (*a - *b).norm() <= DUP_TOL);
    if pts.len() < 3 {
        return Err(Error::DegenerateHull);
    }

    let mut lower: Vec<Vec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= CROSS_TOL
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= CROSS_TOL
        {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    Polygon2D::new(lower)
}

/// Exact Minkowski sum of two convex polygons by merging edges in slope
/// order. Output size is at most `|p| + |q|` vertices; runs in linear time.
pub fn edge_sort_sum2d(p: &Polygon2D, q: &Polygon2D) -> Result<Polygon2D> {
    // A single-point operand is a pure translation.
    if p.len() == 1 {
        return Ok(q.translated(&p.vertices[0]));
    }
    if q.len() == 1 {
        return Ok(p.translated(&q.vertices[0]));
    }

    let pv = rotate_to_bottom_start(&p.vertices);
    let qv = rotate_to_bottom_start(&q.vertices);
    let pe = edges_with_angles(&pv);
    let qe = edges_with_angles(&qv);

    // Edge directions from the bottommost vertex have angles that increase
    // strictly through [0, 2pi), so a single merge pass suffices. Edges with
    // equal angles (parallel faces) combine into one longer edge.
    const ANGLE_TIE: f64 = 1e-12;
    let mut out: Vec<Vec2> = Vec::with_capacity(pe.len() + qe.len());
    let mut cur = pv[0] + qv[0];
    let (mut i, mut j) = (0, 0);
    while i < pe.len() || j < qe.len() {
        out.push(cur);
        let step = if i < pe.len() && j < qe.len() {
            let (ep, ap) = pe[i];
            let (eq, aq) = qe[j];
            if (ap - aq).abs() <= ANGLE_TIE {
                i += 1;
                j += 1;
                ep + eq
            } else if ap < aq {
                i += 1;
                ep
            } else {
                j += 1;
                eq
            }
        } else if i < pe.len() {
            let (ep, _) = pe[i];
            i += 1;
            ep
        } else {
            let (eq, _) = qe[j];
            j += 1;
            eq
        };
        cur += step;
    }
    Polygon2D::new(out)
}

/// Rotates the vertex list to start at the bottommost (then leftmost) vertex.
fn rotate_to_bottom_start(vs: &[Vec2]) -> Vec<Vec2> {
    let mut start = 0;
    for (i, v) in vs.iter().enumerate() {
        let s = vs[start];
        if v.y < s.y || (v.y == s.y && v.x < s.x) {
            start = i;
        }
    }
    let mut out = Vec::with_capacity(vs.len());
    out.extend_from_slice(&vs[start..]);
    out.extend_from_slice(&vs[..start]);
    out
}

/// Edge vectors and their angles in [0, 2pi), in traversal order.
fn edges_with_angles(vs: &[Vec2]) -> Vec<(Vec2, f64)> {
    let n = vs.len();
    (0..n)
        .map(|i| {
            let e = vs[(i + 1) % n] - vs[i];
            let mut a = e.y.atan2(e.x);
            if e.y < 0.0 {
                a += std::f64::consts::TAU;
            }
            (e, a)
        })
        .collect()
}
