//! The Blaschke structure: surface-area (Alexandrov) measures on circle
//! directions, reconstruction of a polygon from its measure, Blaschke
//! addition, mixed volumes, and volume.
//!
//! Measures here are finitely atomic. Atoms are read as quadrature cells of a
//! continuum measure: a genuine Alexandrov measure annihilates singletons,
//! which an atomic discretization necessarily cannot, so the atomic
//! representation is a stand-in for arcs of normals.

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::support::{support_eval, ConvexFigure, Direction};
use std::f64::consts::PI;

/// One atom: a direction with a positive weight (edge length in the plane).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureAtom {
    pub direction: Direction,
    pub weight: f64,
}

/// Angular separation below which atoms are merged on construction.
const MERGE_EPS: f64 = 1e-12;

fn sort_and_merge(mut atoms: Vec<MeasureAtom>) -> Result<Vec<MeasureAtom>> {
    for a in &atoms {
        if !(a.weight > 0.0) {
            return Err(Error::NonpositiveWeight(a.weight));
        }
    }
    atoms.sort_by(|a, b| a.direction.angle().partial_cmp(&b.direction.angle()).unwrap());
    let mut out: Vec<MeasureAtom> = Vec::with_capacity(atoms.len());
    for a in atoms {
        if let Some(last) = out.last_mut() {
            if (a.direction.angle() - last.direction.angle()).abs() < MERGE_EPS {
                last.weight += a.weight;
                continue;
            }
        }
        out.push(a);
    }
    // Wrap-around merge: an atom at ~2*pi coincides with one at ~0.
    if out.len() >= 2 {
        let first = out[0];
        let last = *out.last().unwrap();
        if (last.direction.angle() - first.direction.angle() - 2.0 * PI).abs() < MERGE_EPS {
            out[0].weight += last.weight;
            out.pop();
        }
    }
    Ok(out)
}

/// A general positive finitely-atomic measure on circle directions. No
/// closure or nondegeneracy is required; this is the multiplier measure of
/// the optimality certificates.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct DiscreteMeasure {
    atoms: Vec<MeasureAtom>,
}

impl DiscreteMeasure {
    pub fn new(atoms: Vec<MeasureAtom>) -> Result<Self> {
        Ok(DiscreteMeasure { atoms: sort_and_merge(atoms)? })
    }

    pub fn empty() -> Self {
        DiscreteMeasure { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[MeasureAtom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// Vector sum of weight * direction over all atoms.
    pub fn resultant(&self) -> Vec2 {
        self.atoms
            .iter()
            .fold(Vec2::ZERO, |s, a| s + a.direction.unit() * a.weight)
    }

    pub fn add(&self, other: &DiscreteMeasure) -> DiscreteMeasure {
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms);
        DiscreteMeasure::new(atoms).expect("sum of valid measures is valid")
    }

    pub fn scale(&self, lambda: f64) -> Result<DiscreteMeasure> {
        if lambda < 0.0 {
            return Err(Error::NegativeScale(lambda));
        }
        if lambda == 0.0 {
            return Ok(DiscreteMeasure::empty());
        }
        let atoms = self
            .atoms
            .iter()
            .map(|a| MeasureAtom { direction: a.direction, weight: a.weight * lambda })
            .collect();
        DiscreteMeasure::new(atoms)
    }

    /// Mass carried by atoms within angular tolerance of a direction.
    pub fn mass_at(&self, z: Direction, angle_tol: f64) -> f64 {
        self.atoms
            .iter()
            .filter(|a| {
                let mut d = (a.direction.angle() - z.angle()).abs();
                d = d.min(2.0 * PI - d);
                d <= angle_tol
            })
            .map(|a| a.weight)
            .sum()
    }
}

/// A surface-area measure: positive atoms, closed (zero resultant), and not
/// supported on a single antipodal direction pair.
#[derive(Clone, Debug, PartialEq)]
pub struct AlexandrovMeasure {
    inner: DiscreteMeasure,
}

impl AlexandrovMeasure {
    pub fn new(atoms: Vec<MeasureAtom>) -> Result<Self> {
        let inner = DiscreteMeasure::new(atoms)?;
        let mass = inner.total_mass();
        let res = inner.resultant().norm();
        if res > 1e-9 * mass.max(1e-30) {
            return Err(Error::NotTranslationInvariant(res));
        }
        // All atoms on one line through the origin means no area.
        let first = inner.atoms()[0].direction.angle();
        let degenerate = inner.atoms().iter().all(|a| {
            let d = (a.direction.angle() - first).abs() % PI;
            d < 1e-9 || (PI - d) < 1e-9
        });
        if degenerate {
            return Err(Error::GreatHypersphereSupported);
        }
        Ok(AlexandrovMeasure { inner })
    }

    pub fn as_discrete(&self) -> &DiscreteMeasure {
        &self.inner
    }

    pub fn atoms(&self) -> &[MeasureAtom] {
        self.inner.atoms()
    }

    pub fn total_mass(&self) -> f64 {
        self.inner.total_mass()
    }

    pub fn add(&self, other: &AlexandrovMeasure) -> AlexandrovMeasure {
        AlexandrovMeasure { inner: self.inner.add(&other.inner) }
    }
}

/// Surface-area measure of a full-dimensional polygon: one atom per edge,
/// direction the outward normal, weight the edge length.
pub fn surface_measure(x: &ConvexFigure) -> Result<AlexandrovMeasure> {
    if x.is_degenerate() {
        return Err(Error::NotFullDimensional);
    }
    let vs = x.vertices();
    let mut atoms = Vec::with_capacity(vs.len());
    for i in 0..vs.len() {
        let e = vs[(i + 1) % vs.len()] - vs[i];
        let len = e.norm();
        let normal = -(e.perp()) / len;
        atoms.push(MeasureAtom {
            direction: Direction::from_vec(normal)?,
            weight: len,
        });
    }
    AlexandrovMeasure::new(atoms)
}

/// Surface measure of possibly degenerate figures as a plain positive
/// measure: a segment contributes its length on both sides, a point nothing.
pub fn surface_measure_discrete(x: &ConvexFigure) -> Result<DiscreteMeasure> {
    let vs = x.vertices();
    match vs.len() {
        1 => Ok(DiscreteMeasure::empty()),
        2 => {
            let e = vs[1] - vs[0];
            let n = Direction::from_vec(-e.perp())?;
            Ok(DiscreteMeasure::new(vec![
                MeasureAtom { direction: n, weight: e.norm() },
                MeasureAtom { direction: n.opposite(), weight: e.norm() },
            ])?)
        }
        _ => Ok(surface_measure(x)?.as_discrete().clone()),
    }
}

/// Rebuild the polygon with the given surface-area measure (unique up to
/// translation); the returned representative has its centroid at the origin.
pub fn reconstruct(mu: &AlexandrovMeasure) -> Result<ConvexFigure> {
    // Edges follow the atoms sorted by normal angle; closure guarantees the
    // chain closes.
    let mut p = Vec2::ZERO;
    let mut pts = Vec::with_capacity(mu.atoms().len());
    for a in mu.atoms() {
        pts.push(p);
        let edge = a.direction.unit().perp() * a.weight;
        p = p + edge;
    }
    let fig = ConvexFigure::from_points(&pts)?;
    if fig.is_degenerate() {
        return Err(Error::GreatHypersphereSupported);
    }
    let c = fig.centroid();
    Ok(fig.translate(-c))
}

/// Blaschke sum: the figure whose surface measure is the sum of the two
/// surface measures (translate representative with centroid at the origin).
pub fn blaschke_sum(x: &ConvexFigure, y: &ConvexFigure) -> Result<ConvexFigure> {
    let mx = surface_measure(x)?;
    let my = surface_measure(y)?;
    reconstruct(&mx.add(&my))
}

/// Mixed volume V1(y, x) = (1/2) * sum over atoms of mu(y) of h_x * weight;
/// the support function is evaluated exactly on the atom directions.
pub fn mixed_volume(y: &ConvexFigure, x: &ConvexFigure) -> Result<f64> {
    let mu = surface_measure(y)?;
    Ok(pairing(x, mu.as_discrete()))
}

/// The duality pairing (1/2) * integral of h_x against an arbitrary measure.
pub fn pairing(x: &ConvexFigure, mu: &DiscreteMeasure) -> f64 {
    0.5 * mu
        .atoms()
        .iter()
        .map(|a| support_eval(x, a.direction) * a.weight)
        .sum::<f64>()
}

/// Shoelace area of the figure (0 for degenerate figures).
pub fn volume(x: &ConvexFigure) -> f64 {
    crate::geom::shoelace(x.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::hausdorff_convex;
    use crate::support::{minkowski_sum, scale};

    fn unit_square() -> ConvexFigure {
        ConvexFigure::rect(Vec2::ZERO, Vec2::new(1.0, 1.0)).unwrap()
    }

    #[test]
    fn surface_measure_unit_square() {
        let mu = surface_measure(&unit_square()).unwrap();
        assert_eq!(mu.atoms().len(), 4);
        for a in mu.atoms() {
            assert!((a.weight - 1.0).abs() < 1e-12);
        }
        assert!(mu.as_discrete().resultant().norm() < 1e-12);
    }

    #[test]
    fn surface_measure_triangle_weights() {
        let tri = ConvexFigure::equilateral_triangle(1.7).unwrap();
        let mu = surface_measure(&tri).unwrap();
        assert_eq!(mu.atoms().len(), 3);
        for a in mu.atoms() {
            assert!((a.weight - 1.7).abs() < 1e-12);
        }
    }

    #[test]
    fn surface_measure_rejects_degenerate() {
        let seg = ConvexFigure::segment(Vec2::ZERO, Vec2::new(1.0, 0.0)).unwrap();
        assert!(matches!(surface_measure(&seg), Err(Error::NotFullDimensional)));
    }

    #[test]
    fn antipodal_pair_rejected() {
        let atoms = vec![
            MeasureAtom { direction: Direction::new(0.0), weight: 1.0 },
            MeasureAtom { direction: Direction::new(PI), weight: 1.0 },
        ];
        assert!(matches!(
            AlexandrovMeasure::new(atoms),
            Err(Error::GreatHypersphereSupported)
        ));
    }

    #[test]
    fn closure_violation_rejected() {
        let atoms = vec![
            MeasureAtom { direction: Direction::new(0.0), weight: 2.0 },
            MeasureAtom { direction: Direction::new(PI / 2.0), weight: 1.0 },
            MeasureAtom { direction: Direction::new(PI), weight: 1.0 },
        ];
        assert!(matches!(
            AlexandrovMeasure::new(atoms),
            Err(Error::NotTranslationInvariant(_))
        ));
    }

    #[test]
    fn reconstruct_round_trip_square() {
        let sq = unit_square();
        let mu = surface_measure(&sq).unwrap();
        let back = reconstruct(&mu).unwrap();
        let centered = sq.translate(-sq.centroid());
        let d = hausdorff_convex(centered.vertices(), back.vertices());
        assert!(d < 1e-12, "hausdorff {d}");
    }

    #[test]
    fn blaschke_square_doubles() {
        let sq = unit_square();
        let b = blaschke_sum(&sq, &sq).unwrap();
        let m = minkowski_sum(&sq, &sq);
        let m = m.translate(-m.centroid());
        assert!(hausdorff_convex(b.vertices(), m.vertices()) < 1e-9);
    }

    #[test]
    fn blaschke_triangle_reflection_hexagon() {
        let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
        let refl = ConvexFigure::from_points(
            &tri.vertices().iter().map(|&v| -v).collect::<Vec<_>>(),
        )
        .unwrap();
        let hex = blaschke_sum(&tri, &refl).unwrap();
        assert_eq!(hex.vertices().len(), 6);
    }

    #[test]
    fn blaschke_doubles_measure() {
        let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
        let s = blaschke_sum(&tri, &tri).unwrap();
        let mu_s = surface_measure(&s).unwrap();
        let mu_t = surface_measure(&tri).unwrap();
        assert_eq!(mu_s.atoms().len(), mu_t.atoms().len());
        for (a, b) in mu_s.atoms().iter().zip(mu_t.atoms()) {
            assert!((a.weight - 2.0 * b.weight).abs() < 1e-9);
        }
    }

    #[test]
    fn mixed_volume_self_is_area() {
        let sq = unit_square();
        assert!((mixed_volume(&sq, &sq).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_volume_translation_invariant_in_x() {
        let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
        let sq = unit_square();
        let v1 = mixed_volume(&tri, &sq).unwrap();
        let v2 = mixed_volume(&tri, &sq.translate(Vec2::new(5.0, -7.0))).unwrap();
        assert!((v1 - v2).abs() < 1e-9);
    }

    #[test]
    fn mixed_volume_disk_square_is_half_perimeter() {
        let disk = ConvexFigure::disk(Vec2::ZERO, 1.0, 360).unwrap();
        let v = mixed_volume(&disk, &unit_square()).unwrap();
        assert!((v - 2.0).abs() / 2.0 < 2e-3, "v {v}");
    }

    #[test]
    fn volume_dual_computation() {
        let fig = ConvexFigure::from_points(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(3.0, 0.5),
            Vec2::new(2.5, 2.5),
            Vec2::new(-1.0, 1.5),
        ])
        .unwrap();
        let v = volume(&fig);
        let v2 = mixed_volume(&fig, &fig).unwrap();
        assert!((v - v2).abs() < 1e-9 * v.max(1.0));
        assert_eq!(volume(&ConvexFigure::point(Vec2::ZERO)), 0.0);
    }

    #[test]
    fn minkowski_homothety_equality_case() {
        let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
        let y = scale(&tri, 2.0).unwrap();
        let v1 = mixed_volume(&tri, &y).unwrap();
        let lhs = v1 * v1;
        let rhs = volume(&tri) * volume(&y);
        assert!((lhs - rhs).abs() / rhs < 1e-6);
    }
}
