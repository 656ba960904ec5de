//! Plain 2D vector arithmetic and low-level polygon primitives.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at the given angle from the positive x-axis.
    #[inline]
    pub fn unit(angle: f64) -> Self {
        Vec2::new(angle.cos(), angle.sin())
    }

    #[inline]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product.
    #[inline]
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    /// Counterclockwise rotation by 90 degrees.
    #[inline]
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    /// Angle in [0, 2*pi).
    #[inline]
    pub fn angle(self) -> f64 {
        let a = self.y.atan2(self.x);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}

/// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
#[inline]
pub fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b - a).cross(c - a)
}

/// Shoelace area of a polygon given in counterclockwise order.
pub fn shoelace(pts: &[Vec2]) -> f64 {
    if pts.len() < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        s += a.cross(b);
    }
    0.5 * s
}

/// Convex hull in counterclockwise order (monotone chain).
/// Collinear points on the hull boundary are dropped when `strict_eps > 0`.
pub fn convex_hull(points: &[Vec2], strict_eps: f64) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
    pts.dedup_by(|a, b| (*a - *b).norm() == 0.0);
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Vec2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= strict_eps {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= strict_eps {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Distance from point `p` to the segment [a, b].
pub fn dist_point_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Distance from a point to a convex polygon boundary-or-interior (0 inside).
pub fn dist_point_convex(p: Vec2, poly: &[Vec2]) -> f64 {
    match poly.len() {
        0 => f64::INFINITY,
        1 => (p - poly[0]).norm(),
        2 => dist_point_segment(p, poly[0], poly[1]),
        n => {
            let mut inside = true;
            let mut min_edge = f64::INFINITY;
            for i in 0..n {
                let a = poly[i];
                let b = poly[(i + 1) % n];
                if orient(a, b, p) < 0.0 {
                    inside = false;
                }
                min_edge = min_edge.min(dist_point_segment(p, a, b));
            }
            if inside {
                0.0
            } else {
                min_edge
            }
        }
    }
}

/// Hausdorff distance between two convex polygons.
/// For convex sets the maximum over vertices of either polygon suffices.
pub fn hausdorff_convex(a: &[Vec2], b: &[Vec2]) -> f64 {
    let d_ab = a
        .iter()
        .map(|&p| dist_point_convex(p, b))
        .fold(0.0_f64, f64::max);
    let d_ba = b
        .iter()
        .map(|&p| dist_point_convex(p, a))
        .fold(0.0_f64, f64::max);
    d_ab.max(d_ba)
}

/// Clip a convex polygon (counterclockwise) against `n . p <= c`
/// (Sutherland-Hodgman, one plane).
pub fn clip_halfplane(pts: &[Vec2], n: Vec2, c: f64) -> Vec<Vec2> {
    let mut out = Vec::with_capacity(pts.len() + 2);
    let m = pts.len();
    for i in 0..m {
        let a = pts[i];
        let b = pts[(i + 1) % m];
        let da = n.dot(a) - c;
        let db = n.dot(b) - c;
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            let t = da / (da - db);
            out.push(a + (b - a) * t);
        }
    }
    out
}

/// A closed half-plane `n . p <= c`.
#[derive(Clone, Copy, Debug)]
pub struct HalfPlane {
    pub normal: Vec2,
    pub offset: f64,
}

impl HalfPlane {
    pub fn contains(&self, p: Vec2, eps: f64) -> bool {
        self.normal.dot(p) <= self.offset + eps
    }
}

fn line_intersection(a: HalfPlane, b: HalfPlane) -> Option<Vec2> {
    let det = a.normal.cross(b.normal);
    if det.abs() < 1e-300 {
        return None;
    }
    Some(Vec2::new(
        (a.offset * b.normal.y - b.offset * a.normal.y) / det,
        (a.normal.x * b.offset - b.normal.x * a.offset) / det,
    ))
}

/// Intersection of half-planes whose normals are sorted by angle (full circle
/// coverage assumed). Returns the vertices of the resulting convex polygon in
/// counterclockwise order, or an empty vector when the intersection is empty
/// or degenerate.
///
/// Classic deque sweep: a half-plane is kept only while it contributes an
/// active edge.
pub fn halfplane_intersection_sorted(planes: &[HalfPlane]) -> Vec<Vec2> {
    let n = planes.len();
    if n < 3 {
        return Vec::new();
    }
    let mut dq: Vec<HalfPlane> = Vec::with_capacity(n);
    let eps = 1e-12;
    // The corner of a and b falls outside h, so the edge between them is cut.
    let bad = |a: HalfPlane, b: HalfPlane, h: HalfPlane| -> bool {
        match line_intersection(a, b) {
            Some(p) => h.normal.dot(p) > h.offset + eps * (1.0 + h.offset.abs()),
            None => false,
        }
    };
    for &h in planes {
        while dq.len() >= 2 && bad(dq[dq.len() - 2], dq[dq.len() - 1], h) {
            dq.pop();
        }
        // Parallel same-direction duplicates: keep the tighter one.
        if let Some(&last) = dq.last() {
            if last.normal.cross(h.normal).abs() < 1e-15 && last.normal.dot(h.normal) > 0.0 {
                if h.offset < last.offset {
                    dq.pop();
                } else {
                    continue;
                }
            }
        }
        dq.push(h);
    }
    // Wrap-around pruning.
    loop {
        let m = dq.len();
        if m < 3 {
            return Vec::new();
        }
        if bad(dq[m - 2], dq[m - 1], dq[0]) {
            dq.pop();
            continue;
        }
        if bad(dq[0], dq[1], dq[m - 1]) {
            dq.remove(0);
            continue;
        }
        break;
    }
    let m = dq.len();
    let mut verts = Vec::with_capacity(m);
    for i in 0..m {
        if let Some(p) = line_intersection(dq[i], dq[(i + 1) % m]) {
            verts.push(p);
        }
    }
    if shoelace(&verts) <= 0.0 {
        return Vec::new();
    }
    verts
}
