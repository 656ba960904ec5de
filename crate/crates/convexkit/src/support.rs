//! Convex figures in the plane, support functions, and Minkowski arithmetic.

use crate::error::{Error, Result};
use crate::geom::{self, HalfPlane, Vec2};
use crate::lp::{LinearProgram, Rel};
use std::f64::consts::{PI, TAU};

/// A direction on the unit circle, stored as an angle in [0, 2*pi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction {
    angle: f64,
}

impl Direction {
    pub fn new(angle: f64) -> Self {
        let mut a = angle % TAU;
        if a < 0.0 {
            a += TAU;
        }
        // Guard against -0.0 and the a == TAU rounding case.
        if a >= TAU || a == 0.0 {
            a = 0.0;
        }
        Direction { angle: a }
    }

    /// Direction of a nonzero vector.
    pub fn from_vec(v: Vec2) -> Result<Self> {
        if v.norm() == 0.0 {
            return Err(Error::InvalidInput("zero direction vector".into()));
        }
        Ok(Direction::new(v.angle()))
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn unit(&self) -> Vec2 {
        Vec2::unit(self.angle)
    }

    pub fn opposite(&self) -> Direction {
        Direction::new(self.angle + PI)
    }
}

/// `n` equally spaced angles on the circle; `n` even keeps the grid closed
/// under direction negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectionGrid {
    n: usize,
}

impl DirectionGrid {
    pub const DEFAULT_N: usize = 360;

    pub fn new(n: usize) -> Result<Self> {
        if n < 8 || n % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "grid size must be even and at least 8, got {n}"
            )));
        }
        Ok(DirectionGrid { n })
    }

    pub fn default_grid() -> Self {
        DirectionGrid { n: Self::DEFAULT_N }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn delta(&self) -> f64 {
        TAU / self.n as f64
    }

    pub fn angle(&self, i: usize) -> f64 {
        TAU * i as f64 / self.n as f64
    }

    pub fn directions(&self) -> impl Iterator<Item = Direction> + '_ {
        (0..self.n).map(move |i| Direction::new(self.angle(i)))
    }
}

/// A convex figure: an ordered counterclockwise vertex chain. One vertex is a
/// point, two a segment, three or more a full-dimensional polygon.
///
/// Construction canonicalizes: convex hull, collinear vertices merged, start
/// vertex at the lexicographically smallest (y, then x) position.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexFigure {
    vertices: Vec<Vec2>,
}

impl ConvexFigure {
    /// Build from arbitrary points; keeps their convex hull.
    pub fn from_points(points: &[Vec2]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyFigure);
        }
        for p in points {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::InvalidInput("non-finite vertex".into()));
            }
        }
        let diam = diameter_of(points);
        let eps_area = 1e-9 * diam * diam;
        let mut hull = geom::convex_hull(points, eps_area);
        if hull.is_empty() {
            return Err(Error::EmptyFigure);
        }
        // Canonical start: lowest y, then lowest x.
        let start = hull
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.y.partial_cmp(&b.y).unwrap().then(a.x.partial_cmp(&b.x).unwrap())
            })
            .map(|(i, _)| i)
            .unwrap();
        hull.rotate_left(start);
        Ok(ConvexFigure { vertices: hull })
    }

    pub fn point(p: Vec2) -> Self {
        ConvexFigure { vertices: vec![p] }
    }

    pub fn segment(a: Vec2, b: Vec2) -> Result<Self> {
        ConvexFigure::from_points(&[a, b])
    }

    /// Axis-aligned rectangle given two opposite corners.
    pub fn rect(a: Vec2, b: Vec2) -> Result<Self> {
        ConvexFigure::from_points(&[
            Vec2::new(a.x, a.y),
            Vec2::new(b.x, a.y),
            Vec2::new(b.x, b.y),
            Vec2::new(a.x, b.y),
        ])
    }

    /// Disk polygonalized as the inscribed regular polygon with vertices at
    /// the grid angles.
    pub fn disk(center: Vec2, radius: f64, segments: usize) -> Result<Self> {
        if radius <= 0.0 {
            return Err(Error::InvalidInput(format!("radius must be positive, got {radius}")));
        }
        let grid = DirectionGrid::new(segments)?;
        let pts: Vec<Vec2> = grid
            .directions()
            .map(|d| center + d.unit() * radius)
            .collect();
        ConvexFigure::from_points(&pts)
    }

    /// The unit ball realized on a grid.
    pub fn unit_ball(grid: DirectionGrid) -> Self {
        ConvexFigure::disk(Vec2::ZERO, 1.0, grid.len()).unwrap()
    }

    /// Equilateral triangle with side `s`, centroid at the origin, apex up.
    pub fn equilateral_triangle(side: f64) -> Result<Self> {
        if side <= 0.0 {
            return Err(Error::InvalidInput(format!("side must be positive, got {side}")));
        }
        let circumradius = side / 3.0_f64.sqrt();
        ConvexFigure::from_points(&[
            Vec2::unit(PI / 2.0) * circumradius,
            Vec2::unit(PI / 2.0 + TAU / 3.0) * circumradius,
            Vec2::unit(PI / 2.0 + 2.0 * TAU / 3.0) * circumradius,
        ])
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn diameter(&self) -> f64 {
        diameter_of(&self.vertices)
    }

    pub fn centroid(&self) -> Vec2 {
        match self.vertices.len() {
            1 => self.vertices[0],
            2 => (self.vertices[0] + self.vertices[1]) * 0.5,
            _ => {
                // Area centroid.
                let mut a2 = 0.0;
                let mut c = Vec2::ZERO;
                for i in 0..self.vertices.len() {
                    let p = self.vertices[i];
                    let q = self.vertices[(i + 1) % self.vertices.len()];
                    let w = p.cross(q);
                    a2 += w;
                    c = c + (p + q) * w;
                }
                if a2.abs() < 1e-300 {
                    // Thin polygon; fall back to the vertex mean.
                    let mut s = Vec2::ZERO;
                    for &v in &self.vertices {
                        s = s + v;
                    }
                    s / self.vertices.len() as f64
                } else {
                    c / (3.0 * a2)
                }
            }
        }
    }

    pub fn translate(&self, t: Vec2) -> ConvexFigure {
        let vs: Vec<Vec2> = self.vertices.iter().map(|&v| v + t).collect();
        ConvexFigure::from_points(&vs).expect("translate preserves validity")
    }

    /// Outward half-planes whose intersection is the figure. Degenerate
    /// figures get the four tight planes of their affine hull box.
    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        match self.vertices.len() {
            1 => {
                let p = self.vertices[0];
                vec![
                    HalfPlane { normal: Vec2::new(1.0, 0.0), offset: p.x },
                    HalfPlane { normal: Vec2::new(0.0, 1.0), offset: p.y },
                    HalfPlane { normal: Vec2::new(-1.0, 0.0), offset: -p.x },
                    HalfPlane { normal: Vec2::new(0.0, -1.0), offset: -p.y },
                ]
            }
            2 => {
                let a = self.vertices[0];
                let b = self.vertices[1];
                let d = (b - a).normalized();
                let n = -d.perp(); // outward on one side
                vec![
                    HalfPlane { normal: n, offset: n.dot(a) },
                    HalfPlane { normal: -n, offset: -n.dot(a) },
                    HalfPlane { normal: d, offset: d.dot(b) },
                    HalfPlane { normal: -d, offset: -d.dot(a) },
                ]
            }
            n => {
                let mut planes = Vec::with_capacity(n);
                for i in 0..n {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    let normal = -(b - a).perp().normalized();
                    planes.push(HalfPlane { normal, offset: normal.dot(a) });
                }
                planes
            }
        }
    }
}

/// Support function value: max over vertices of the inner product with `u`.
pub fn support_eval(x: &ConvexFigure, u: Direction) -> f64 {
    support_eval_vec(x, u.unit())
}

/// Support evaluated against an arbitrary (not necessarily unit) vector.
pub fn support_eval_vec(x: &ConvexFigure, u: Vec2) -> f64 {
    x.vertices
        .iter()
        .map(|v| v.dot(u))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Sampled support function on a direction grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportVector {
    grid: DirectionGrid,
    values: Vec<f64>,
}

impl SupportVector {
    /// Sample the support function of a figure; always consistent.
    pub fn from_figure(x: &ConvexFigure, grid: DirectionGrid) -> Self {
        let values = grid
            .directions()
            .map(|d| support_eval(x, d))
            .collect();
        SupportVector { grid, values }
    }

    /// Wrap raw values, checking that they are the exact support samples of
    /// the figure they induce (relative tolerance 1e-9).
    pub fn new(grid: DirectionGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} support values, got {}",
                grid.len(),
                values.len()
            )));
        }
        let sv = SupportVector { grid, values };
        let fig = sv.induced_figure()?;
        let resampled = SupportVector::from_figure(&fig, grid);
        let scale = sv
            .values
            .iter()
            .map(|v| v.abs())
            .fold(1e-30, f64::max);
        let mut worst = 0.0_f64;
        for (a, b) in sv.values.iter().zip(resampled.values.iter()) {
            worst = worst.max((a - b).abs());
        }
        if worst > 1e-9 * scale {
            return Err(Error::InvalidSupportVector(worst / scale));
        }
        Ok(sv)
    }

    pub fn grid(&self) -> DirectionGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The polygon cut out by the sampled half-planes.
    pub fn induced_figure(&self) -> Result<ConvexFigure> {
        let planes: Vec<HalfPlane> = self
            .grid
            .directions()
            .zip(self.values.iter())
            .map(|(d, &h)| HalfPlane { normal: d.unit(), offset: h })
            .collect();
        let poly = geom::halfplane_intersection_sorted(&planes);
        if poly.len() < 3 {
            return Err(Error::NotFullDimensional);
        }
        ConvexFigure::from_points(&poly)
    }
}

/// Sample the support function of `x` on grid `g`.
pub fn sample_support(x: &ConvexFigure, g: DirectionGrid) -> SupportVector {
    SupportVector::from_figure(x, g)
}

/// Minkowski sum by merging the two edge fans; exact for polygons including
/// degenerate summands.
pub fn minkowski_sum(x: &ConvexFigure, y: &ConvexFigure) -> ConvexFigure {
    let ex = edge_fan(x);
    let ey = edge_fan(y);
    let start = x.vertices()[0] + y.vertices()[0];
    // Both fans are sorted by unwrapped angle starting at the canonical
    // (lowest) vertex, so a plain merge keeps the result convex.
    let mut edges: Vec<(f64, Vec2)> = Vec::with_capacity(ex.len() + ey.len());
    let (mut i, mut j) = (0, 0);
    while i < ex.len() || j < ey.len() {
        let take_x = if i == ex.len() {
            false
        } else if j == ey.len() {
            true
        } else {
            ex[i].0 <= ey[j].0
        };
        if take_x {
            edges.push(ex[i]);
            i += 1;
        } else {
            edges.push(ey[j]);
            j += 1;
        }
    }
    let mut pts = Vec::with_capacity(edges.len() + 1);
    let mut p = start;
    pts.push(p);
    for (_, e) in &edges {
        p = p + *e;
        pts.push(p);
    }
    ConvexFigure::from_points(&pts).expect("minkowski sum of nonempty figures is nonempty")
}

/// Edges as (unwrapped angle, vector), counterclockwise from the canonical
/// start vertex. A segment contributes its two opposite edges, a point none.
fn edge_fan(x: &ConvexFigure) -> Vec<(f64, Vec2)> {
    let vs = x.vertices();
    match vs.len() {
        0 | 1 => Vec::new(),
        2 => {
            let e = vs[1] - vs[0];
            let a = e.angle();
            vec![(a, e), (a + PI, -e)]
        }
        n => {
            let mut out = Vec::with_capacity(n);
            let mut prev = f64::NEG_INFINITY;
            for i in 0..n {
                let e = vs[(i + 1) % n] - vs[i];
                let mut a = e.angle();
                while a < prev {
                    a += TAU;
                }
                out.push((a, e));
                prev = a;
            }
            out
        }
    }
}

/// Scale a figure by a nonnegative factor about the origin.
pub fn scale(x: &ConvexFigure, lambda: f64) -> Result<ConvexFigure> {
    if lambda < 0.0 {
        return Err(Error::NegativeScale(lambda));
    }
    if lambda == 0.0 {
        return Ok(ConvexFigure::point(Vec2::ZERO));
    }
    let vs: Vec<Vec2> = x.vertices().iter().map(|&v| v * lambda).collect();
    ConvexFigure::from_points(&vs)
}

/// Does `x` contain `y` (no translation allowed)?
pub fn contains(x: &ConvexFigure, y: &ConvexFigure) -> bool {
    let tol = 1e-9 * x.diameter().max(y.diameter()).max(1e-30);
    let planes = x.halfplanes();
    y.vertices()
        .iter()
        .all(|&v| planes.iter().all(|h| h.contains(v, tol)))
}

/// A translation `t` with `y + t` inside `x`, if one exists.
///
/// Linear feasibility over `t`: for every outward half-plane of `x`, the
/// support of `y` in that normal plus the shift must stay within the offset.
pub fn contains_up_to_translation(x: &ConvexFigure, y: &ConvexFigure) -> Option<Vec2> {
    let scale = x.diameter().max(y.diameter()).max(1e-30);
    let (t, violation) = best_translation(x, y);
    if violation <= 1e-9 * scale {
        Some(t)
    } else {
        None
    }
}

/// Minimax translation: minimizes the worst half-plane violation of `y + t`
/// against `x`. Returns (t, violation); violation <= 0 means containment.
pub fn best_translation(x: &ConvexFigure, y: &ConvexFigure) -> (Vec2, f64) {
    // Variables: tx, ty, r. Minimize r subject to
    //   <n, t> - r <= offset - h_y(n)  for each half-plane of x.
    let mut lp = LinearProgram::new(3);
    lp.set_free(0);
    lp.set_free(1);
    lp.set_free(2);
    lp.set_objective(vec![0.0, 0.0, 1.0]);
    for h in x.halfplanes() {
        let hy = support_eval_vec(y, h.normal);
        lp.add_row(vec![h.normal.x, h.normal.y, -1.0], Rel::Le, h.offset - hy);
    }
    let out = lp.solve();
    if !out.feasible() {
        return (Vec2::ZERO, f64::INFINITY);
    }
    (Vec2::new(out.x[0], out.x[1]), out.objective)
}

/// Width of `x` along direction `z`: h(z) + h(-z).
pub fn breadth(x: &ConvexFigure, z: Direction) -> f64 {
    support_eval(x, z) + support_eval(x, z.opposite())
}

/// Integral breadth: the pairing of the support function with arclength on
/// the circle, (1/2) * integral of h. Equals perimeter/2 in the grid limit.
pub fn integral_breadth(x: &ConvexFigure, g: DirectionGrid) -> f64 {
    let dt = g.delta();
    let sum: f64 = g.directions().map(|d| support_eval(x, d)).sum();
    0.5 * sum * dt
}

fn diameter_of(points: &[Vec2]) -> f64 {
    let (mut xmin, mut xmax, mut ymin, mut ymax) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    (xmax - xmin).hypot(ymax - ymin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::shoelace;

    fn unit_square() -> ConvexFigure {
        ConvexFigure::rect(Vec2::ZERO, Vec2::new(1.0, 1.0)).unwrap()
    }

    #[test]
    fn support_unit_square_east() {
        let sq = unit_square();
        assert_eq!(support_eval(&sq, Direction::new(0.0)), 1.0);
    }

    #[test]
    fn support_translation_equivariance() {
        let sq = unit_square();
        let t = Vec2::new(0.3, -1.7);
        let moved = sq.translate(t);
        for k in 0..16 {
            let d = Direction::new(k as f64 * TAU / 16.0);
            let lhs = support_eval(&moved, d) - support_eval(&sq, d);
            assert!((lhs - t.dot(d.unit())).abs() < 1e-12);
        }
    }

    #[test]
    fn support_triangle_edge_normal_is_inradius() {
        // Equilateral triangle side 1 centered at centroid: support at any
        // edge normal equals the inradius 1/(2*sqrt(3)).
        let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
        let inradius = 1.0 / (2.0 * 3.0_f64.sqrt());
        // Bottom edge outward normal points straight down.
        let d = Direction::new(-PI / 2.0);
        let brute = tri
            .vertices()
            .iter()
            .map(|v| v.dot(d.unit()))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((support_eval(&tri, d) - brute).abs() < 1e-15);
        assert!((brute - inradius).abs() < 1e-12);
    }

    #[test]
    fn sample_support_point_is_linear() {
        let p = Vec2::new(0.4, -0.9);
        let fig = ConvexFigure::point(p);
        let g = DirectionGrid::new(16).unwrap();
        let sv = sample_support(&fig, g);
        for (d, &v) in g.directions().zip(sv.values()) {
            assert!((v - p.dot(d.unit())).abs() < 1e-15);
        }
    }

    #[test]
    fn sample_support_unit_ball_all_ones_at_vertices() {
        let g = DirectionGrid::new(64).unwrap();
        let ball = ConvexFigure::unit_ball(g);
        let sv = sample_support(&ball, g);
        for &v in sv.values() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sample_support_square_diagonal() {
        let g = DirectionGrid::new(8).unwrap();
        let sv = sample_support(&unit_square(), g);
        // 45 degrees is index 1: corner (1,1) gives sqrt(2).
        assert!((sv.values()[1] - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn minkowski_point_translates() {
        let sq = unit_square();
        let t = Vec2::new(2.0, 3.0);
        let sum = minkowski_sum(&sq, &ConvexFigure::point(t));
        assert_eq!(sum, sq.translate(t));
    }

    #[test]
    fn minkowski_square_doubles() {
        let sq = unit_square();
        let sum = minkowski_sum(&sq, &sq);
        let expected = ConvexFigure::rect(Vec2::ZERO, Vec2::new(2.0, 2.0)).unwrap();
        assert_eq!(sum, expected);
    }

    #[test]
    fn minkowski_disk_segment_stadium_area() {
        let disk = ConvexFigure::disk(Vec2::ZERO, 1.0, 64).unwrap();
        let seg = ConvexFigure::segment(Vec2::new(-1.0, 0.0), Vec2::new(1.0, 0.0)).unwrap();
        let st = minkowski_sum(&disk, &seg);
        let area = shoelace(st.vertices());
        let expected = PI + 4.0;
        assert!((area - expected).abs() / expected < 5e-3, "area {area}");
    }

    #[test]
    fn minkowski_support_additivity() {
        let a = ConvexFigure::from_points(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.3),
            Vec2::new(1.5, 2.0),
            Vec2::new(-0.5, 1.0),
        ])
        .unwrap();
        let b = ConvexFigure::equilateral_triangle(1.3).unwrap();
        let s = minkowski_sum(&a, &b);
        let g = DirectionGrid::new(48).unwrap();
        for d in g.directions() {
            let lhs = support_eval(&s, d);
            let rhs = support_eval(&a, d) + support_eval(&b, d);
            assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()));
        }
    }

    #[test]
    fn scale_identity_zero_and_area() {
        let sq = unit_square();
        assert_eq!(scale(&sq, 1.0).unwrap(), sq);
        let z = scale(&sq, 0.0).unwrap();
        assert_eq!(z.vertices().len(), 1);
        let s = scale(&sq, 2.5).unwrap();
        assert!((shoelace(s.vertices()) - 2.5 * 2.5).abs() < 1e-12);
        assert!(scale(&sq, -1.0).is_err());
    }

    #[test]
    fn contains_basic() {
        let sq = unit_square();
        let big = ConvexFigure::rect(Vec2::ZERO, Vec2::new(2.0, 2.0)).unwrap();
        assert!(contains(&sq, &sq));
        assert!(!contains(&sq, &big));
        assert!(contains(&big, &sq));
        // Circumdisk contains the triangle.
        let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
        let disk = ConvexFigure::disk(Vec2::ZERO, 1.0 / 3.0_f64.sqrt() + 1e-6, 360).unwrap();
        assert!(contains(&disk, &tri));
    }

    #[test]
    fn contains_up_to_translation_cases() {
        let sq = unit_square();
        let t = contains_up_to_translation(&sq, &sq).unwrap();
        assert!(t.norm() < 1e-7);

        let small_disk = ConvexFigure::disk(Vec2::new(50.0, 50.0), 0.2, 32).unwrap();
        let huge = ConvexFigure::rect(Vec2::ZERO, Vec2::new(10.0, 10.0)).unwrap();
        let t = contains_up_to_translation(&huge, &small_disk).unwrap();
        assert!(contains(&huge, &small_disk.translate(t)));

        // Disk of diameter 2 cannot fit in a square of side 1.9.
        let disk = ConvexFigure::disk(Vec2::ZERO, 1.0, 360).unwrap();
        let sq19 = ConvexFigure::rect(Vec2::ZERO, Vec2::new(1.9, 1.9)).unwrap();
        assert!(contains_up_to_translation(&sq19, &disk).is_none());
    }

    #[test]
    fn breadth_cases() {
        let sq = unit_square();
        assert!((breadth(&sq, Direction::new(0.0)) - 1.0).abs() < 1e-12);
        let p = ConvexFigure::point(Vec2::new(3.0, 4.0));
        assert!(breadth(&p, Direction::new(1.0)).abs() < 1e-12);
        // Stadium: vertical breadth is 2r.
        let disk = ConvexFigure::disk(Vec2::ZERO, 0.7, 360).unwrap();
        let seg = ConvexFigure::segment(Vec2::new(-1.5, 0.0), Vec2::new(1.5, 0.0)).unwrap();
        let st = minkowski_sum(&disk, &seg);
        assert!((breadth(&st, Direction::new(PI / 2.0)) - 1.4).abs() < 1e-9);
    }

    #[test]
    fn integral_breadth_square_and_disk() {
        let g = DirectionGrid::new(360).unwrap();
        let sq = unit_square();
        let ib = integral_breadth(&sq, g);
        assert!((ib - 2.0).abs() / 2.0 < 2e-3, "ib {ib}");
        let disk = ConvexFigure::disk(Vec2::ZERO, 1.7, 360).unwrap();
        let ibd = integral_breadth(&disk, g);
        assert!((ibd - PI * 1.7).abs() / (PI * 1.7) < 1e-4);
        let p = ConvexFigure::point(Vec2::new(1.0, -2.0));
        assert!(integral_breadth(&p, g).abs() < 1e-12);
    }

    #[test]
    fn support_vector_roundtrip_and_validation() {
        let g = DirectionGrid::new(90).unwrap();
        let tri = ConvexFigure::equilateral_triangle(2.0).unwrap();
        let sv = sample_support(&tri, g);
        let ok = SupportVector::new(g, sv.values().to_vec());
        assert!(ok.is_ok());
        // Perturbing one sample upward past any vertex breaks consistency.
        let mut bad = sv.values().to_vec();
        bad[7] += 0.5;
        assert!(SupportVector::new(g, bad).is_err());
    }

    #[test]
    fn containment_mutual_implies_equal() {
        let a = ConvexFigure::from_points(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.7, 1.2),
        ])
        .unwrap();
        let b = a.clone();
        assert!(contains(&a, &b) && contains(&b, &a));
        assert_eq!(a, b);
    }
}
