//! Bodies of rotation: a planar convex profile symmetric about an axis,
//! swept around that axis. Volume and lateral surface come from exact
//! per-edge integrals of the polygonalized profile, so the only error is
//! the polygonalization itself.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extremal::{project_support, ScanReport};
use crate::geom::{clip_halfplane, Vec2};
use crate::support::{
    breadth, sample_support, scale, ConvexFigure, Direction, DirectionGrid, SupportVector,
};

/// A convex body of rotation: the profile (normalized to a vertical axis
/// through the origin) and the original axis direction.
#[derive(Clone, Debug)]
pub struct RotationBody {
    profile: SupportVector,
    figure: ConvexFigure,
    axis: Direction,
}

impl RotationBody {
    /// Support samples of the normalized profile.
    pub fn profile(&self) -> &SupportVector {
        &self.profile
    }

    /// The normalized profile polygon (axis vertical through the origin).
    pub fn figure(&self) -> &ConvexFigure {
        &self.figure
    }

    pub fn axis(&self) -> Direction {
        self.axis
    }
}

fn mirror_index(i: usize, n: usize) -> usize {
    (3 * n / 2 - i) % n
}

/// Build a body of rotation from a profile symmetric about the axis with
/// direction `z_bar`. The profile is rotated so the axis is vertical and
/// centered on it; asymmetry beyond 1e-9 relative is an error.
pub fn rotate_profile(
    profile: &ConvexFigure,
    z_bar: Direction,
    grid: DirectionGrid,
) -> Result<RotationBody> {
    let rot = PI / 2.0 - z_bar.angle();
    let (s, c) = rot.sin_cos();
    let pts: Vec<Vec2> = profile
        .vertices()
        .iter()
        .map(|p| Vec2::new(p.x * c - p.y * s, p.x * s + p.y * c))
        .collect();
    let fig = ConvexFigure::from_points(&pts)?;
    let fig = fig.translate(Vec2::new(-fig.centroid().x, 0.0));
    let sv = sample_support(&fig, grid);
    let values = sv.values();
    let scale_h = values.iter().map(|v| v.abs()).fold(1e-30, f64::max);
    let n = grid.len();
    let mut asym = 0.0_f64;
    for i in 0..n {
        asym = asym.max((values[i] - values[mirror_index(i, n)]).abs());
    }
    if asym > 1e-9 * scale_h {
        return Err(Error::AsymmetricProfile(asym / scale_h));
    }
    Ok(RotationBody { profile: sv, figure: fig, axis: z_bar })
}

/// Right half of the profile (the part swept around the axis).
fn right_half(b: &RotationBody) -> Vec<Vec2> {
    clip_halfplane(b.figure.vertices(), Vec2::new(-1.0, 0.0), 0.0)
}

/// Volume of the body of rotation: pi times the contour integral of x^2 dz
/// over the clipped profile, exact per edge.
pub fn rotation_volume(b: &RotationBody) -> f64 {
    let half = right_half(b);
    let m = half.len();
    let mut acc = 0.0;
    for i in 0..m {
        let p = half[i];
        let q = half[(i + 1) % m];
        acc += (q.y - p.y) * (p.x * p.x + p.x * q.x + q.x * q.x) / 3.0;
    }
    PI * acc
}

/// Total surface of the body of rotation: 2 pi times the integral of x ds
/// over the clipped profile boundary; edges on the axis contribute nothing.
pub fn rotation_surface(b: &RotationBody) -> f64 {
    let half = right_half(b);
    let m = half.len();
    let mut acc = 0.0;
    for i in 0..m {
        let p = half[i];
        let q = half[(i + 1) % m];
        acc += 0.5 * (p.x + q.x) * (q - p).norm();
    }
    2.0 * PI * acc
}

/// Breadth of the body along its axis: the planar breadth of the profile
/// in the vertical direction.
pub fn rotation_breadth(b: &RotationBody) -> f64 {
    breadth(&b.figure, Direction::new(PI / 2.0))
}

/// Random symmetric perturbations of a rotation body at fixed volume,
/// scored against the objective pair (total surface, axis breadth). The
/// reported improvement is the worst single-objective gain of the best
/// sample; a positive value means some sample dominates the candidate.
pub fn rotation_pareto_scan(
    body: &RotationBody,
    samples: usize,
    magnitude: f64,
    seed: u64,
) -> ScanReport {
    let grid = body.profile.grid();
    let n = grid.len();
    let h0 = body.profile.values();
    let v0 = rotation_volume(body);
    let base_surface = rotation_surface(body);
    let base_breadth = rotation_breadth(body);
    let jitter = magnitude * body.figure.diameter().max(1e-30);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut feasible = 0usize;
    let mut best = f64::NEG_INFINITY;
    for _ in 0..samples {
        // Mirror-symmetric jitter keeps the perturbed vector a symmetric
        // profile candidate.
        let mut vals: Vec<f64> = h0.to_vec();
        for i in 0..n {
            let j = mirror_index(i, n);
            if i <= j {
                let d = jitter * rng.gen_range(-1.0..1.0);
                vals[i] += d;
                if j != i {
                    vals[j] = vals[i];
                }
            }
        }
        let Some((fig, _)) = project_support(grid, &vals) else { continue };
        let Ok(candidate) = rotate_profile(&fig, Direction::new(PI / 2.0), grid) else { continue };
        let v = rotation_volume(&candidate);
        if v <= 1e-30 {
            continue;
        }
        let lambda = (v0 / v).cbrt();
        let Ok(scaled_fig) = scale(&candidate.figure, lambda) else { continue };
        let Ok(scaled) = rotate_profile(&scaled_fig, Direction::new(PI / 2.0), grid) else {
            continue;
        };
        feasible += 1;
        let gain = (base_surface - rotation_surface(&scaled))
            .min(base_breadth - rotation_breadth(&scaled));
        best = best.max(gain);
    }
    ScanReport {
        samples,
        feasible_samples: feasible,
        best_improvement: if feasible == 0 { f64::NEG_INFINITY } else { best },
    }
}
