//! Small dense two-phase simplex for feasibility problems and tiny LPs.
//!
//! Instances in this crate have at most a few thousand variables and a few
//! hundred rows, so a dense tableau with Bland's anticycling rule is enough
//! and keeps results deterministic across runs and platforms.

/// Constraint relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    ncols: usize,
    free: Vec<bool>,
    objective: Vec<f64>,
    rows: Vec<(Vec<f64>, Rel, f64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

#[derive(Clone, Debug)]
pub struct LpOutcome {
    pub status: Status,
    /// Phase-1 optimum: total constraint violation of the closest point found.
    /// Zero (up to tolerance) exactly when the program is feasible.
    pub residual: f64,
    pub x: Vec<f64>,
    pub objective: f64,
    /// Phase-1 dual prices per row (a Farkas certificate when infeasible).
    pub dual: Vec<f64>,
}

impl LpOutcome {
    pub fn feasible(&self) -> bool {
        matches!(self.status, Status::Optimal | Status::Unbounded)
    }
}

const EPS: f64 = 1e-9;

impl LinearProgram {
    /// A program over `ncols` nonnegative variables with zero objective.
    pub fn new(ncols: usize) -> Self {
        LinearProgram {
            ncols,
            free: vec![false; ncols],
            objective: vec![0.0; ncols],
            rows: Vec::new(),
        }
    }

    /// Mark a variable as free (unrestricted in sign).
    pub fn set_free(&mut self, j: usize) {
        self.free[j] = true;
    }

    /// Minimization objective.
    pub fn set_objective(&mut self, c: Vec<f64>) {
        assert_eq!(c.len(), self.ncols);
        self.objective = c;
    }

    pub fn add_row(&mut self, coeffs: Vec<f64>, rel: Rel, rhs: f64) {
        assert_eq!(coeffs.len(), self.ncols);
        self.rows.push((coeffs, rel, rhs));
    }

    /// Sparse variant: (column, coefficient) pairs.
    pub fn add_row_sparse(&mut self, entries: &[(usize, f64)], rel: Rel, rhs: f64) {
        let mut coeffs = vec![0.0; self.ncols];
        for &(j, v) in entries {
            coeffs[j] += v;
        }
        self.rows.push((coeffs, rel, rhs));
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run()
    }
}

struct Tableau {
    m: usize,
    ncols_total: usize,
    art_base: usize,
    /// original column -> (plus index, optional minus index)
    var_map: Vec<(usize, Option<usize>)>,
    obj: Vec<f64>,
    slack_cols: Vec<usize>,
    art_cols: Vec<usize>,
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
    basis: Vec<usize>,
    in_basis: Vec<bool>,
    row_scale: Vec<f64>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let m = lp.rows.len();
        let mut var_map = Vec::with_capacity(lp.ncols);
        let mut nstruct = 0usize;
        for j in 0..lp.ncols {
            if lp.free[j] {
                var_map.push((nstruct, Some(nstruct + 1)));
                nstruct += 2;
            } else {
                var_map.push((nstruct, None));
                nstruct += 1;
            }
        }
        // Normalize rows to nonnegative right-hand sides, then lay out
        // slack and artificial columns.
        let mut norm_rows: Vec<(Vec<f64>, Rel, f64, f64)> = Vec::with_capacity(m);
        for (coeffs, rel, rhs) in &lp.rows {
            let mag = coeffs
                .iter()
                .map(|v| v.abs())
                .fold(rhs.abs(), f64::max)
                .max(1e-30);
            let mut sign = 1.0;
            let mut rel = *rel;
            if *rhs / mag < 0.0 {
                sign = -1.0;
                rel = match rel {
                    Rel::Le => Rel::Ge,
                    Rel::Ge => Rel::Le,
                    Rel::Eq => Rel::Eq,
                };
            }
            let scale = sign / mag;
            let row: Vec<f64> = coeffs.iter().map(|v| v * scale).collect();
            norm_rows.push((row, rel, rhs * scale, scale));
        }
        let mut ncols_total = nstruct;
        let mut slack_cols = vec![usize::MAX; m];
        for (i, (_, rel, _, _)) in norm_rows.iter().enumerate() {
            if *rel != Rel::Eq {
                slack_cols[i] = ncols_total;
                ncols_total += 1;
            }
        }
        let art_base = ncols_total;
        let mut art_cols = vec![usize::MAX; m];
        for (i, (_, rel, _, _)) in norm_rows.iter().enumerate() {
            if *rel != Rel::Le {
                art_cols[i] = ncols_total;
                ncols_total += 1;
            }
        }
        let mut a = vec![vec![0.0; ncols_total]; m];
        let mut b = vec![0.0; m];
        let mut basis = vec![usize::MAX; m];
        let mut row_scale = vec![1.0; m];
        for (i, (row, rel, rhs, scale)) in norm_rows.iter().enumerate() {
            for j in 0..lp.ncols {
                let (pj, mj) = var_map[j];
                a[i][pj] = row[j];
                if let Some(mj) = mj {
                    a[i][mj] = -row[j];
                }
            }
            b[i] = *rhs;
            row_scale[i] = *scale;
            match rel {
                Rel::Le => {
                    a[i][slack_cols[i]] = 1.0;
                    basis[i] = slack_cols[i];
                }
                Rel::Ge => {
                    a[i][slack_cols[i]] = -1.0;
                    a[i][art_cols[i]] = 1.0;
                    basis[i] = art_cols[i];
                }
                Rel::Eq => {
                    a[i][art_cols[i]] = 1.0;
                    basis[i] = art_cols[i];
                }
            }
        }
        let mut in_basis = vec![false; ncols_total];
        for &j in &basis {
            in_basis[j] = true;
        }
        Tableau {
            m,
            ncols_total,
            art_base,
            var_map,
            obj: lp.objective.clone(),
            slack_cols,
            art_cols,
            a,
            b,
            basis,
            in_basis,
            row_scale,
        }
    }

    fn run(mut self) -> LpOutcome {
        let lp_cols = self.var_map.len();
        let mut cost1 = vec![0.0; self.ncols_total];
        for &c in &self.art_cols {
            if c != usize::MAX {
                cost1[c] = 1.0;
            }
        }
        let status1 = self.optimize(&cost1, true);
        let residual = self.current_cost(&cost1);
        let dual = self.duals(&cost1);
        let rhs_mag = 1.0 + self.b.iter().map(|v| v.abs()).sum::<f64>();
        if status1 == Status::IterationLimit || residual > EPS * rhs_mag {
            let status = if status1 == Status::IterationLimit {
                Status::IterationLimit
            } else {
                Status::Infeasible
            };
            return LpOutcome {
                status,
                residual,
                x: self.extract(lp_cols),
                objective: f64::NAN,
                dual,
            };
        }
        let mut cost2 = vec![0.0; self.ncols_total];
        for j in 0..lp_cols {
            let (pj, mj) = self.var_map[j];
            cost2[pj] = self.obj[j];
            if let Some(mj) = mj {
                cost2[mj] = -self.obj[j];
            }
        }
        let status2 = self.optimize(&cost2, false);
        let objective = self.current_cost(&cost2);
        LpOutcome {
            status: status2,
            residual,
            x: self.extract(lp_cols),
            objective,
            dual,
        }
    }

    fn current_cost(&self, cost: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..self.m {
            s += cost[self.basis[i]] * self.b[i];
        }
        s
    }

    fn extract(&self, lp_cols: usize) -> Vec<f64> {
        let mut xfull = vec![0.0; self.ncols_total];
        for i in 0..self.m {
            xfull[self.basis[i]] = self.b[i];
        }
        let mut x = vec![0.0; lp_cols];
        for j in 0..lp_cols {
            let (pj, mj) = self.var_map[j];
            x[j] = xfull[pj] - mj.map_or(0.0, |k| xfull[k]);
        }
        x
    }

    fn optimize(&mut self, cost: &[f64], phase1: bool) -> Status {
        let max_iters = 200 * (self.m + self.ncols_total) + 1000;
        let mut iters = 0usize;
        // Multipliers lambda = c_B per row, updated each scan.
        loop {
            let mut lam = vec![0.0; self.m];
            for i in 0..self.m {
                lam[i] = cost[self.basis[i]];
            }
            let mut entering = usize::MAX;
            for j in 0..self.ncols_total {
                if self.in_basis[j] {
                    continue;
                }
                if !phase1 && j >= self.art_base {
                    continue;
                }
                let mut rc = cost[j];
                for i in 0..self.m {
                    if lam[i] != 0.0 {
                        rc -= lam[i] * self.a[i][j];
                    }
                }
                if rc < -EPS {
                    entering = j;
                    break; // Bland: smallest index
                }
            }
            if entering == usize::MAX {
                return Status::Optimal;
            }
            let mut leave = usize::MAX;
            let mut best = f64::INFINITY;
            for i in 0..self.m {
                let aij = self.a[i][entering];
                if aij > EPS {
                    let ratio = self.b[i] / aij;
                    if ratio < best - 1e-12
                        || (ratio < best + 1e-12
                            && (leave == usize::MAX || self.basis[i] < self.basis[leave]))
                    {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if leave == usize::MAX {
                return Status::Unbounded;
            }
            self.pivot(leave, entering);
            iters += 1;
            if iters > max_iters {
                return Status::IterationLimit;
            }
        }
    }

    /// Simplex multipliers y with y_i read off the columns that formed the
    /// initial identity (artificial, else slack), unscaled back to the
    /// caller's row data.
    fn duals(&self, cost: &[f64]) -> Vec<f64> {
        let mut lam = vec![0.0; self.m];
        for i in 0..self.m {
            lam[i] = cost[self.basis[i]];
        }
        let mut y = vec![0.0; self.m];
        for r in 0..self.m {
            let (col, sgn) = if self.art_cols[r] != usize::MAX {
                (self.art_cols[r], 1.0)
            } else {
                (self.slack_cols[r], 1.0)
            };
            let mut v = 0.0;
            for i in 0..self.m {
                if lam[i] != 0.0 {
                    v += lam[i] * self.a[i][col];
                }
            }
            y[r] = v * sgn * self.row_scale[r];
        }
        y
    }

    fn pivot(&mut self, leave: usize, entering: usize) {
        let piv = self.a[leave][entering];
        let inv = 1.0 / piv;
        for v in self.a[leave].iter_mut() {
            *v *= inv;
        }
        self.b[leave] *= inv;
        for i in 0..self.m {
            if i == leave {
                continue;
            }
            let f = self.a[i][entering];
            if f != 0.0 {
                let (ri, rl) = if i < leave {
                    let (h, t) = self.a.split_at_mut(leave);
                    (&mut h[i], &t[0])
                } else {
                    let (h, t) = self.a.split_at_mut(i);
                    (&mut t[0], &h[leave])
                };
                for (hv, tv) in ri.iter_mut().zip(rl.iter()) {
                    *hv -= f * tv;
                }
                self.b[i] -= f * self.b[leave];
                if self.b[i] < 0.0 && self.b[i] > -1e-11 {
                    self.b[i] = 0.0;
                }
            }
        }
        self.in_basis[self.basis[leave]] = false;
        self.in_basis[entering] = true;
        self.basis[leave] = entering;
    }
}
