//! JSON schemas for figures, measures, certificates, and reports, plus the
//! 12-significant-digit number canonicalization that keeps emitted JSON
//! byte-stable across platforms and build profiles.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::extremal::{
    ConditionReport, CurrentHyperplaneCertificate, FlatteningCertificate, ParetoPoint, ScanReport,
    UrysohnCertificate, VerificationReport,
};
use crate::geom::Vec2;
use crate::measure::{AlexandrovMeasure, DiscreteMeasure, MeasureAtom};
use crate::support::{ConvexFigure, Direction, DirectionGrid};

/// A figure on disk: polygons are the canonical emitted form; disks,
/// segments, and the unit ball are convenience inputs materialized on a
/// grid.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FigureSpec {
    Polygon { vertices: Vec<[f64; 2]> },
    Disk {
        center: [f64; 2],
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        segments: Option<usize>,
    },
    Segment { a: [f64; 2], b: [f64; 2] },
    Ball,
}

impl FigureSpec {
    /// Materialize the spec as a polygon; `grid` supplies the resolution of
    /// disks and the unit ball when the spec does not fix one.
    pub fn to_figure(&self, grid: DirectionGrid) -> Result<ConvexFigure> {
        match self {
            FigureSpec::Polygon { vertices } => {
                let pts: Vec<Vec2> = vertices.iter().map(|v| Vec2::new(v[0], v[1])).collect();
                ConvexFigure::from_points(&pts)
            }
            FigureSpec::Disk { center, radius, segments } => ConvexFigure::disk(
                Vec2::new(center[0], center[1]),
                *radius,
                segments.unwrap_or(grid.len()),
            ),
            FigureSpec::Segment { a, b } => {
                ConvexFigure::segment(Vec2::new(a[0], a[1]), Vec2::new(b[0], b[1]))
            }
            FigureSpec::Ball => Ok(ConvexFigure::unit_ball(grid)),
        }
    }

    /// Canonical spec of a figure: always a polygon with the figure's
    /// canonical vertex order.
    pub fn from_figure(x: &ConvexFigure) -> FigureSpec {
        FigureSpec::Polygon {
            vertices: x.vertices().iter().map(|p| [p.x, p.y]).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AtomSpec {
    pub angle: f64,
    pub weight: f64,
}

/// A positive atomic measure on circle directions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeasureSpec {
    pub atoms: Vec<AtomSpec>,
}

impl MeasureSpec {
    pub fn to_measure(&self) -> Result<DiscreteMeasure> {
        let atoms = self
            .atoms
            .iter()
            .map(|a| MeasureAtom { direction: Direction::new(a.angle), weight: a.weight })
            .collect();
        DiscreteMeasure::new(atoms)
    }

    pub fn to_alexandrov(&self) -> Result<AlexandrovMeasure> {
        let atoms = self
            .atoms
            .iter()
            .map(|a| MeasureAtom { direction: Direction::new(a.angle), weight: a.weight })
            .collect();
        AlexandrovMeasure::new(atoms)
    }

    pub fn from_measure(mu: &DiscreteMeasure) -> MeasureSpec {
        MeasureSpec {
            atoms: mu
                .atoms()
                .iter()
                .map(|a| AtomSpec { angle: a.direction.angle(), weight: a.weight })
                .collect(),
        }
    }
}

/// External Urysohn certificate on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UrysohnCertSpec {
    pub alpha: f64,
    pub mu: MeasureSpec,
}

impl UrysohnCertSpec {
    pub fn to_cert(&self) -> Result<UrysohnCertificate> {
        Ok(UrysohnCertificate { mu: self.mu.to_measure()?, alpha: self.alpha })
    }

    pub fn from_cert(c: &UrysohnCertificate) -> UrysohnCertSpec {
        UrysohnCertSpec { alpha: c.alpha, mu: MeasureSpec::from_measure(&c.mu) }
    }
}

/// Flattening certificate on disk; `z_angle` is the flattening direction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlatteningCertSpec {
    pub alpha: f64,
    pub beta: f64,
    pub z_angle: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<MeasureSpec>,
}

impl FlatteningCertSpec {
    pub fn to_cert(&self) -> Result<FlatteningCertificate> {
        let residual = match &self.residual {
            Some(m) => Some(m.to_alexandrov()?),
            None => None,
        };
        Ok(FlatteningCertificate {
            alpha: self.alpha,
            beta: self.beta,
            residual,
            z_bar: Direction::new(self.z_angle),
        })
    }

    pub fn from_cert(c: &FlatteningCertificate) -> FlatteningCertSpec {
        FlatteningCertSpec {
            alpha: c.alpha,
            beta: c.beta,
            z_angle: c.z_bar.angle(),
            residual: c.residual.as_ref().map(|m| MeasureSpec::from_measure(m.as_discrete())),
        }
    }
}

/// Current-hyperplane certificate on disk: the two Blaschke components and
/// the hyperplane normal angle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HyperplaneCertSpec {
    pub alpha: f64,
    pub beta: f64,
    pub x: FigureSpec,
    pub y: FigureSpec,
    pub z0_angle: f64,
}

impl HyperplaneCertSpec {
    pub fn to_cert(&self, grid: DirectionGrid) -> Result<CurrentHyperplaneCertificate> {
        Ok(CurrentHyperplaneCertificate {
            alpha: self.alpha,
            beta: self.beta,
            x: self.x.to_figure(grid)?,
            y: self.y.to_figure(grid)?,
            z0: Direction::new(self.z0_angle),
        })
    }

    pub fn from_cert(c: &CurrentHyperplaneCertificate) -> HyperplaneCertSpec {
        HyperplaneCertSpec {
            alpha: c.alpha,
            beta: c.beta,
            x: FigureSpec::from_figure(&c.x),
            y: FigureSpec::from_figure(&c.y),
            z0_angle: c.z0.angle(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionSpec {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
}

/// A verification report on disk: the overall verdict and every condition.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportSpec {
    pub pass: bool,
    pub conditions: Vec<ConditionSpec>,
}

impl ReportSpec {
    pub fn from_report(r: &VerificationReport) -> ReportSpec {
        ReportSpec {
            pass: r.pass(),
            conditions: r
                .conditions
                .iter()
                .map(|c: &ConditionReport| ConditionSpec {
                    name: c.name.clone(),
                    pass: c.pass,
                    residual: c.residual,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanSpec {
    pub samples: usize,
    pub feasible_samples: usize,
    pub best_improvement: f64,
}

impl ScanSpec {
    pub fn from_scan(s: &ScanReport) -> ScanSpec {
        ScanSpec {
            samples: s.samples,
            feasible_samples: s.feasible_samples,
            best_improvement: s.best_improvement,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ParetoSpec {
    pub body: FigureSpec,
    pub objectives: Vec<f64>,
    pub weights: Vec<f64>,
}

impl ParetoSpec {
    pub fn new(body: &ConvexFigure, p: &ParetoPoint) -> ParetoSpec {
        ParetoSpec {
            body: FigureSpec::from_figure(body),
            objectives: p.objectives.clone(),
            weights: p.weights.clone(),
        }
    }
}

/// Round to 12 significant digits (and normalize negative zero) so that
/// serialized numbers are identical across platforms and build profiles.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("rounded float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Canonicalize every number in a JSON value to 12 significant digits.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_f64() {
                    if let Some(m) = serde_json::Number::from_f64(round_sig(f)) {
                        *v = Value::Number(m);
                    }
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_json),
        Value::Object(o) => o.values_mut().for_each(round_json),
        _ => {}
    }
}

/// Serialize with canonical number formatting: the emitted string is a
/// deterministic function of the value.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_json(&mut v);
    Ok(serde_json::to_string_pretty(&v)?)
}

/// Parse a JSON document, mapping syntax errors (with line/column) into the
/// library error type.
pub fn from_json_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(Error::Json)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_idempotent_and_sig12() {
        let x = 0.1 + 0.2;
        let r = round_sig(x);
        assert_eq!(r, 0.3);
        assert_eq!(round_sig(r), r);
        assert_eq!(round_sig(-0.0), 0.0);
        assert_eq!(round_sig(123456789012345.0), 123456789012000.0);
    }

    #[test]
    fn figure_roundtrip_is_fixed_point() {
        let g = DirectionGrid::default_grid();
        let spec = FigureSpec::Disk { center: [0.25, -0.5], radius: 2.0, segments: Some(64) };
        let fig = spec.to_figure(g).unwrap();
        let emitted = to_canonical_json(&FigureSpec::from_figure(&fig)).unwrap();
        let parsed: FigureSpec = from_json_str(&emitted).unwrap();
        let fig2 = parsed.to_figure(g).unwrap();
        let emitted2 = to_canonical_json(&FigureSpec::from_figure(&fig2)).unwrap();
        assert_eq!(emitted, emitted2);
    }

    #[test]
    fn measure_roundtrip() {
        let g = DirectionGrid::default_grid();
        let sq = ConvexFigure::rect(Vec2::new(0.0, 0.0), Vec2::new(1.0, 1.0)).unwrap();
        let mu = crate::measure::surface_measure(&sq).unwrap();
        let spec = MeasureSpec::from_measure(mu.as_discrete());
        let s = to_canonical_json(&spec).unwrap();
        let back: MeasureSpec = from_json_str(&s).unwrap();
        let mu2 = back.to_alexandrov().unwrap();
        assert_eq!(mu2.atoms().len(), 4);
        let _ = g;
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = from_json_str::<FigureSpec>("{\"kind\": \"polygon\", ").unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("line"), "message: {msg}");
    }
}
