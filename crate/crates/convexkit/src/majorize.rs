//! Certificate-based order relations between measures: linear (Reshetnyak)
//! majorization on circle measures, affine (Choquet) majorization on point
//! masses, and the decomposition theorem for positive functionals against
//! finitely sampled cones.
//!
//! The quantifier over all finite Borel partitions collapses, for atomic
//! measures, to the atomwise-finest partition: certificates for coarser
//! partitions are sums of the finest one.

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::lp::{LinearProgram, Rel, Status};
use crate::measure::DiscreteMeasure;
use rand::Rng;

/// Max of finitely many linear functionals: p(u) = max_k <a_k, u>.
#[derive(Clone, Debug)]
pub struct SublinearFunction {
    generators: Vec<Vec2>,
}

impl SublinearFunction {
    pub fn new(generators: Vec<Vec2>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("sublinear function needs generators".into()));
        }
        Ok(SublinearFunction { generators })
    }

    pub fn eval(&self, u: Vec2) -> f64 {
        self.generators
            .iter()
            .map(|a| a.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Seeded random instance: max of up to `kmax` vectors in [-1,1]^2.
    pub fn random<R: Rng>(rng: &mut R, kmax: usize) -> Self {
        let k = rng.gen_range(1..=kmax.max(1));
        let generators = (0..k)
            .map(|_| Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        SublinearFunction { generators }
    }
}

/// Max of finitely many affine pieces: f(q) = max_k (<a_k, q> + b_k).
#[derive(Clone, Debug)]
pub struct ConvexTestFunction {
    pieces: Vec<(Vec2, f64)>,
}

impl ConvexTestFunction {
    pub fn new(pieces: Vec<(Vec2, f64)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidInput("convex test function needs pieces".into()));
        }
        Ok(ConvexTestFunction { pieces })
    }

    pub fn pieces(&self) -> &[(Vec2, f64)] {
        &self.pieces
    }

    pub fn eval(&self, q: Vec2) -> f64 {
        self.pieces
            .iter()
            .map(|(a, b)| a.dot(q) + b)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Seeded random instance: max of up to `kmax` affine pieces.
    pub fn random<R: Rng>(rng: &mut R, kmax: usize) -> Self {
        let k = rng.gen_range(1..=kmax.max(1));
        let pieces = (0..k)
            .map(|_| {
                (
                    Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                    rng.gen_range(-1.0..1.0),
                )
            })
            .collect();
        ConvexTestFunction { pieces }
    }
}

/// A feasible transport decomposition: `matrix[j][i]` is the mass moved from
/// atom `i` of the dominating measure into the part matched against atom `j`
/// of the dominated measure. For linear majorization an extra `slack` row
/// holds the leftover part, whose resultant vanishes.
#[derive(Clone, Debug)]
pub struct TransportCertificate {
    pub matrix: Vec<Vec<f64>>,
    pub slack: Option<Vec<f64>>,
}

/// Point masses on (a polytope of) the plane, for the Choquet order.
#[derive(Clone, Debug, Default)]
pub struct PointMeasure {
    atoms: Vec<(Vec2, f64)>,
}

impl PointMeasure {
    pub fn new(atoms: Vec<(Vec2, f64)>) -> Result<Self> {
        for &(_, w) in &atoms {
            if !(w > 0.0) {
                return Err(Error::NonpositiveWeight(w));
            }
        }
        Ok(PointMeasure { atoms })
    }

    pub fn atoms(&self) -> &[(Vec2, f64)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }

    pub fn barycenter(&self) -> Vec2 {
        let m = self.total_mass();
        self.atoms
            .iter()
            .fold(Vec2::ZERO, |s, &(q, w)| s + q * w)
            / m
    }

    /// Read a circle measure as point masses at its atom directions.
    pub fn from_circle_measure(mu: &DiscreteMeasure) -> Self {
        PointMeasure {
            atoms: mu
                .atoms()
                .iter()
                .map(|a| (a.direction.unit(), a.weight))
                .collect(),
        }
    }
}

/// Outcome of a majorization feasibility check, keeping the phase-1 residual
/// for tolerance-aware callers.
#[derive(Clone, Debug)]
pub struct MajorizationOutcome {
    pub feasible: bool,
    pub residual: f64,
    pub certificate: Option<TransportCertificate>,
    /// Phase-1 dual prices, usable as a Farkas certificate when infeasible.
    dual: Option<Vec<f64>>,
}

/// Does `mu` linearly majorize `nu`? Feasibility of the transport program:
/// nonnegative parts summing to `mu` columnwise, one part per `nu` atom with
/// matching resultant, plus a slack part with zero resultant.
pub fn linearly_majorizes(
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
) -> Option<TransportCertificate> {
    let out = linear_majorization_check(mu, nu);
    if out.feasible {
        out.certificate
    } else {
        None
    }
}

pub fn linear_majorization_check(mu: &DiscreteMeasure, nu: &DiscreteMeasure) -> MajorizationOutcome {
    let k = mu.atoms().len();
    let m = nu.atoms().len();
    if m == 0 {
        // Decomposing into zero parts plus slack: need zero resultant of mu.
        let ok = mu.resultant().norm() <= 1e-9 * mu.total_mass().max(1e-30);
        return MajorizationOutcome {
            feasible: ok,
            residual: if ok { 0.0 } else { mu.resultant().norm() },
            certificate: ok.then(|| TransportCertificate {
                matrix: Vec::new(),
                slack: Some(mu.atoms().iter().map(|a| a.weight).collect()),
            }),
            dual: None,
        };
    }
    if k == 0 {
        return MajorizationOutcome {
            feasible: false,
            residual: nu.total_mass(),
            certificate: None,
            dual: None,
        };
    }
    let rows = m + 1; // parts: one per nu atom plus slack
    let var = |j: usize, i: usize| j * k + i;
    let mut lp = LinearProgram::new(rows * k);
    // Column sums reproduce mu.
    for (i, a) in mu.atoms().iter().enumerate() {
        let entries: Vec<(usize, f64)> = (0..rows).map(|j| (var(j, i), 1.0)).collect();
        lp.add_row_sparse(&entries, Rel::Eq, a.weight);
    }
    // Resultant of each part matches the corresponding nu atom.
    let units: Vec<Vec2> = mu.atoms().iter().map(|a| a.direction.unit()).collect();
    for (j, b) in nu.atoms().iter().enumerate() {
        let target = b.direction.unit() * b.weight;
        let ex: Vec<(usize, f64)> = (0..k).map(|i| (var(j, i), units[i].x)).collect();
        let ey: Vec<(usize, f64)> = (0..k).map(|i| (var(j, i), units[i].y)).collect();
        lp.add_row_sparse(&ex, Rel::Eq, target.x);
        lp.add_row_sparse(&ey, Rel::Eq, target.y);
    }
    // Slack part annihilates linear functionals.
    let ex: Vec<(usize, f64)> = (0..k).map(|i| (var(m, i), units[i].x)).collect();
    let ey: Vec<(usize, f64)> = (0..k).map(|i| (var(m, i), units[i].y)).collect();
    lp.add_row_sparse(&ex, Rel::Eq, 0.0);
    lp.add_row_sparse(&ey, Rel::Eq, 0.0);
    let out = lp.solve();
    let feasible = out.status == Status::Optimal && out.residual <= 1e-9 * (1.0 + mu.total_mass());
    let certificate = feasible.then(|| {
        let matrix: Vec<Vec<f64>> = (0..m)
            .map(|j| (0..k).map(|i| out.x[var(j, i)].max(0.0)).collect())
            .collect();
        let slack: Vec<f64> = (0..k).map(|i| out.x[var(m, i)].max(0.0)).collect();
        TransportCertificate { matrix, slack: Some(slack) }
    });
    MajorizationOutcome {
        feasible,
        residual: out.residual,
        certificate,
        dual: Some(out.dual),
    }
}

/// integral of p d(mu) minus integral of p d(nu), as finite sums.
pub fn reshetnyak_gap(
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
    p: &SublinearFunction,
) -> f64 {
    let a: f64 = mu
        .atoms()
        .iter()
        .map(|at| p.eval(at.direction.unit()) * at.weight)
        .sum();
    let b: f64 = nu
        .atoms()
        .iter()
        .map(|at| p.eval(at.direction.unit()) * at.weight)
        .sum();
    a - b
}

/// Does `mu` affinely majorize `nu` (Choquet order)? Parts must match both
/// the mass and the barycenter of each `nu` atom.
pub fn affinely_majorizes(mu: &PointMeasure, nu: &PointMeasure) -> Option<TransportCertificate> {
    let out = affine_majorization_check(mu, nu);
    if out.feasible {
        out.certificate
    } else {
        None
    }
}

pub fn affine_majorization_check(mu: &PointMeasure, nu: &PointMeasure) -> MajorizationOutcome {
    let mass_gap = (mu.total_mass() - nu.total_mass()).abs();
    if mass_gap > 1e-9 * (1.0 + mu.total_mass().max(nu.total_mass())) {
        return MajorizationOutcome {
            feasible: false,
            residual: mass_gap,
            certificate: None,
            dual: None,
        };
    }
    let k = mu.atoms().len();
    let m = nu.atoms().len();
    if m == 0 {
        let feasible = k == 0 || mu.total_mass() <= 1e-12;
        return MajorizationOutcome {
            feasible,
            residual: mu.total_mass(),
            certificate: feasible.then(|| TransportCertificate { matrix: Vec::new(), slack: None }),
            dual: None,
        };
    }
    let var = |j: usize, i: usize| j * k + i;
    let mut lp = LinearProgram::new(m * k);
    for (i, &(_, w)) in mu.atoms().iter().enumerate() {
        let entries: Vec<(usize, f64)> = (0..m).map(|j| (var(j, i), 1.0)).collect();
        lp.add_row_sparse(&entries, Rel::Eq, w);
    }
    for (j, &(qj, wj)) in nu.atoms().iter().enumerate() {
        let mass: Vec<(usize, f64)> = (0..k).map(|i| (var(j, i), 1.0)).collect();
        lp.add_row_sparse(&mass, Rel::Eq, wj);
        let bx: Vec<(usize, f64)> = (0..k).map(|i| (var(j, i), mu.atoms()[i].0.x)).collect();
        let by: Vec<(usize, f64)> = (0..k).map(|i| (var(j, i), mu.atoms()[i].0.y)).collect();
        lp.add_row_sparse(&bx, Rel::Eq, wj * qj.x);
        lp.add_row_sparse(&by, Rel::Eq, wj * qj.y);
    }
    let out = lp.solve();
    let feasible = out.status == Status::Optimal && out.residual <= 1e-9 * (1.0 + mu.total_mass());
    let certificate = feasible.then(|| TransportCertificate {
        matrix: (0..m)
            .map(|j| (0..k).map(|i| out.x[var(j, i)].max(0.0)).collect())
            .collect(),
        slack: None,
    });
    MajorizationOutcome {
        feasible,
        residual: out.residual,
        certificate,
        dual: Some(out.dual),
    }
}

/// When affine majorization fails, extract from the LP dual a convex
/// piecewise-affine function with integral against `nu` exceeding the one
/// against `mu` — an explicit witness of the failure.
pub fn violating_convex_function(mu: &PointMeasure, nu: &PointMeasure) -> Option<ConvexTestFunction> {
    let k = mu.atoms().len();
    let m = nu.atoms().len();
    if m == 0 {
        return None;
    }
    let out = affine_majorization_check(mu, nu);
    if out.feasible {
        return None;
    }
    let f = match out.dual {
        Some(dual) if dual.len() == k + 3 * m => {
            // Row layout: k column rows, then per j (mass, bx, by).
            let pieces: Vec<(Vec2, f64)> = (0..m)
                .map(|j| {
                    let t = dual[k + 3 * j];
                    let wx = dual[k + 3 * j + 1];
                    let wy = dual[k + 3 * j + 2];
                    (Vec2::new(wx, wy), t)
                })
                .collect();
            ConvexTestFunction { pieces }
        }
        _ => {
            // Mass mismatch shortcut: a constant function separates.
            let sign = if nu.total_mass() > mu.total_mass() { 1.0 } else { -1.0 };
            ConvexTestFunction { pieces: vec![(Vec2::ZERO, sign)] }
        }
    };
    // Only return witnesses that genuinely violate.
    let gap = convex_gap(mu, nu, &f);
    if gap < 0.0 {
        Some(f)
    } else {
        None
    }
}

/// integral of f d(mu) minus integral of f d(nu).
pub fn convex_gap(mu: &PointMeasure, nu: &PointMeasure, f: &ConvexTestFunction) -> f64 {
    let a: f64 = mu.atoms().iter().map(|&(q, w)| f.eval(q) * w).sum();
    let b: f64 = nu.atoms().iter().map(|&(q, w)| f.eval(q) * w).sum();
    a - b
}

/// True when every test function in the family dominates: gap >= -1e-9.
pub fn cfm_check(mu: &PointMeasure, nu: &PointMeasure, family: &[ConvexTestFunction]) -> bool {
    family.iter().all(|f| convex_gap(mu, nu, f) >= -1e-9)
}

/// Hypothesis of the decomposition theorem: f(h1 v ... v hN) >= g(h1 v ... v
/// hN) for every tuple with h_k in the cone generated by the k-th sample set.
///
/// A sweep over sample tuples alone is not enough: the join is convex in the
/// tuple, so the inequality can hold at every tuple of generators yet fail at
/// conic combinations of them — and by LP duality those are exactly the
/// points whose failure makes `decomposition_complete` infeasible. The exact
/// infimum of <f - g, h1 v ... v hN> over the generated cones is computed by
/// splitting on which cone attains the join in each coordinate; each split is
/// a small linear program over normalized conic weights.
pub fn decomposition_hypothesis(f: &[f64], g: &[f64], cones: &[Vec<Vec<f64>>]) -> Result<bool> {
    let n = f.len();
    if g.len() != n {
        return Err(Error::DimensionMismatch(format!("f has {} coords, g has {}", n, g.len())));
    }
    for cone in cones {
        for h in cone {
            if h.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "cone sample has {} coords, expected {n}",
                    h.len()
                )));
            }
        }
        if cone.is_empty() {
            return Err(Error::InvalidInput("empty cone sample".into()));
        }
    }
    let scale = f.iter().chain(g.iter()).fold(1.0_f64, |s, v| s.max(v.abs()));
    // Fast necessary check: generator tuples are cone elements.
    let mut idx = vec![0usize; cones.len()];
    'tuples: loop {
        let mut join = vec![f64::NEG_INFINITY; n];
        for (k, cone) in cones.iter().enumerate() {
            for (c, h) in join.iter_mut().zip(cone[idx[k]].iter()) {
                *c = c.max(*h);
            }
        }
        let fv: f64 = f.iter().zip(join.iter()).map(|(a, b)| a * b).sum();
        let gv: f64 = g.iter().zip(join.iter()).map(|(a, b)| a * b).sum();
        if fv < gv - 1e-9 * scale {
            return Ok(false);
        }
        // Advance the mixed-radix counter.
        let mut k = 0;
        loop {
            if k == cones.len() {
                break 'tuples;
            }
            idx[k] += 1;
            if idx[k] < cones[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    // Exact check over the generated cones. Variables are conic weights
    // lambda_{k,j} >= 0 of sample j in cone k; s_k is their combination. For
    // a fixed assignment a: coordinate -> cone of who attains the join, the
    // join is linear and the region is polyhedral, so the infimum restricted
    // to the region (normalized to total weight 1, which scans every ray) is
    // an LP. The regions cover every tuple, so the overall infimum is the
    // minimum over the N^n assignments.
    let ncones = cones.len();
    if ncones == 0 {
        return Ok(true);
    }
    let offsets: Vec<usize> = cones
        .iter()
        .scan(0usize, |acc, c| {
            let o = *acc;
            *acc += c.len();
            Some(o)
        })
        .collect();
    let total: usize = cones.iter().map(|c| c.len()).sum();
    let mut assign = vec![0usize; n];
    loop {
        let mut lp = LinearProgram::new(total);
        lp.add_row(vec![1.0; total], Rel::Eq, 1.0);
        for i in 0..n {
            let lead = assign[i];
            for k in (0..ncones).filter(|&k| k != lead) {
                let mut entries: Vec<(usize, f64)> = cones[lead]
                    .iter()
                    .enumerate()
                    .map(|(j, h)| (offsets[lead] + j, h[i]))
                    .collect();
                entries.extend(
                    cones[k].iter().enumerate().map(|(j, h)| (offsets[k] + j, -h[i])),
                );
                lp.add_row_sparse(&entries, Rel::Ge, 0.0);
            }
        }
        let mut c = vec![0.0; total];
        for i in 0..n {
            let lead = assign[i];
            for (j, h) in cones[lead].iter().enumerate() {
                c[offsets[lead] + j] += (f[i] - g[i]) * h[i];
            }
        }
        lp.set_objective(c);
        let out = lp.solve();
        if out.status == Status::Optimal && out.objective < -1e-9 * scale {
            return Ok(false);
        }
        // Empty regions (infeasible splits) contribute nothing; advance.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(true);
            }
            assign[i] += 1;
            if assign[i] < ncones {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Given a decomposition of g into positive parts, find a matching
/// decomposition of f with f_k(h) >= g_k(h) on every sampled h of cone k.
pub fn decomposition_complete(
    f: &[f64],
    g_parts: &[Vec<f64>],
    cones: &[Vec<Vec<f64>>],
) -> Result<Option<Vec<Vec<f64>>>> {
    let n = f.len();
    let nparts = g_parts.len();
    if nparts != cones.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} g-parts vs {} cones",
            nparts,
            cones.len()
        )));
    }
    for gk in g_parts {
        if gk.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "g part has {} coords, expected {n}",
                gk.len()
            )));
        }
        if gk.iter().any(|&v| v < -1e-12) {
            return Err(Error::InvalidInput("g part has negative coordinates".into()));
        }
    }
    let var = |k: usize, i: usize| k * n + i;
    let mut lp = LinearProgram::new(nparts * n);
    for i in 0..n {
        let entries: Vec<(usize, f64)> = (0..nparts).map(|k| (var(k, i), 1.0)).collect();
        lp.add_row_sparse(&entries, Rel::Eq, f[i]);
    }
    for (k, cone) in cones.iter().enumerate() {
        for h in cone {
            let entries: Vec<(usize, f64)> = (0..n).map(|i| (var(k, i), h[i])).collect();
            let rhs: f64 = g_parts[k].iter().zip(h.iter()).map(|(a, b)| a * b).sum();
            lp.add_row_sparse(&entries, Rel::Ge, rhs);
        }
    }
    let out = lp.solve();
    if out.status != Status::Optimal {
        return Ok(None);
    }
    let parts = (0..nparts)
        .map(|k| (0..n).map(|i| out.x[var(k, i)].max(0.0)).collect())
        .collect();
    Ok(Some(parts))
}
