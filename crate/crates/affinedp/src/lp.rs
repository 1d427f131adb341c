//! Dense two-phase primal simplex for the small linear programs the
//! reformulations produce. Minimization only; general variable bounds
//! are reduced to the standard form `min c'y, Ay = b, y >= 0` by
//! shifting, negating or splitting at build time.
//!
//! Dantzig pricing with a Bland's-rule fallback after a run of
//! degenerate pivots keeps the kernel simple and deterministic:
//! identical input produces an identical pivot sequence.

use std::fmt::Write as _;
use thiserror::Error;

const PIVOT_EPS: f64 = 1e-9;
const COST_EPS: f64 = 1e-9;
const FEAS_EPS: f64 = 1e-7;
/// Degenerate-pivot run length that triggers Bland's rule.
const DEGENERATE_LIMIT: usize = 5000;

#[derive(Debug, Error)]
pub enum LpError {
    #[error("row {row} references variable {var} but the problem has {nvars}")]
    BadIndex { row: usize, var: usize, nvars: usize },
    #[error("non-finite coefficient in {place}")]
    NonFinite { place: String },
    #[error("iteration limit exceeded")]
    IterationLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub terms: Vec<(usize, f64)>,
    pub relation: Relation,
    pub rhs: f64,
}

/// A linear program `min c'x` subject to rows and variable bounds.
#[derive(Debug, Clone, Default)]
pub struct LpProblem {
    pub names: Vec<String>,
    pub objective: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    pub x: Vec<f64>,
    pub objective: f64,
}

impl LpProblem {
    pub fn new() -> Self {
        LpProblem::default()
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Adds a variable and returns its index.
    pub fn add_var(&mut self, name: impl Into<String>, lower: f64, upper: f64, cost: f64) -> usize {
        self.names.push(name.into());
        self.lower.push(lower);
        self.upper.push(upper);
        self.objective.push(cost);
        self.objective.len() - 1
    }

    pub fn add_row(&mut self, terms: Vec<(usize, f64)>, relation: Relation, rhs: f64) {
        self.rows.push(Row {
            terms,
            relation,
            rhs,
        });
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        for (i, row) in self.rows.iter().enumerate() {
            if !row.rhs.is_finite() {
                return Err(LpError::NonFinite {
                    place: format!("rhs of row {i}"),
                });
            }
            for &(v, c) in &row.terms {
                if v >= n {
                    return Err(LpError::BadIndex {
                        row: i,
                        var: v,
                        nvars: n,
                    });
                }
                if !c.is_finite() {
                    return Err(LpError::NonFinite {
                        place: format!("row {i}, variable {v}"),
                    });
                }
            }
        }
        for (i, &c) in self.objective.iter().enumerate() {
            if !c.is_finite() {
                return Err(LpError::NonFinite {
                    place: format!("objective coefficient {i}"),
                });
            }
        }
        Ok(())
    }

    /// Largest violation of rows and bounds at `x`, relative to the rhs scale.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for row in &self.rows {
            let lhs: f64 = row.terms.iter().map(|&(v, c)| c * x[v]).sum();
            let gap = match row.relation {
                Relation::Le => lhs - row.rhs,
                Relation::Ge => row.rhs - lhs,
                Relation::Eq => (lhs - row.rhs).abs(),
            };
            worst = worst.max(gap / (1.0 + row.rhs.abs()));
        }
        for (i, &xi) in x.iter().enumerate() {
            if self.lower[i].is_finite() {
                worst = worst.max((self.lower[i] - xi) / (1.0 + self.lower[i].abs()));
            }
            if self.upper[i].is_finite() {
                worst = worst.max((xi - self.upper[i]) / (1.0 + self.upper[i].abs()));
            }
        }
        worst
    }

    /// Writes the model in a human-readable LP text format.
    pub fn to_lp_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Minimize\n obj:");
        for (i, &c) in self.objective.iter().enumerate() {
            if c != 0.0 {
                let _ = write!(out, " {:+} {}", c, self.names[i]);
            }
        }
        out.push_str("\nSubject To\n");
        for (r, row) in self.rows.iter().enumerate() {
            let _ = write!(out, " r{}:", r);
            for &(v, c) in &row.terms {
                let _ = write!(out, " {:+} {}", c, self.names[v]);
            }
            let _ = writeln!(out, " {} {}", row.relation.symbol(), row.rhs);
        }
        out.push_str("Bounds\n");
        for i in 0..self.num_vars() {
            let lo = self.lower[i];
            let hi = self.upper[i];
            let _ = match (lo.is_finite(), hi.is_finite()) {
                (true, true) => writeln!(out, " {} <= {} <= {}", lo, self.names[i], hi),
                (true, false) => writeln!(out, " {} >= {}", self.names[i], lo),
                (false, true) => writeln!(out, " {} <= {}", self.names[i], hi),
                (false, false) => writeln!(out, " {} free", self.names[i]),
            };
        }
        out.push_str("End\n");
        out
    }

    pub fn solve(&self) -> Result<LpSolution, LpError> {
        self.validate()?;
        Simplex::build(self)?.run()
    }
}

/// How an original variable maps into standard-form columns.
#[derive(Debug, Clone, Copy)]
enum VarMap {
    /// `x = lo + y_col`
    Shift { col: usize, lo: f64 },
    /// `x = hi - y_col`
    Negated { col: usize, hi: f64 },
    /// `x = y_pos - y_neg`
    Split { pos: usize, neg: usize },
    /// `x = value`
    Fixed { value: f64 },
}

struct Simplex {
    /// Row-major tableau: `m` rows of `width = ncols + n_art + 1`.
    tab: Vec<f64>,
    width: usize,
    m: usize,
    /// Structural + slack columns; artificial columns follow.
    ncols: usize,
    n_art: usize,
    basis: Vec<usize>,
    /// Phase-2 costs over the standard-form columns.
    costs: Vec<f64>,
    obj_const: f64,
    maps: Vec<VarMap>,
    nvars: usize,
    infeasible_bounds: bool,
}

impl Simplex {
    fn build(p: &LpProblem) -> Result<Simplex, LpError> {
        let nvars = p.num_vars();
        let mut maps = Vec::with_capacity(nvars);
        let mut costs: Vec<f64> = Vec::new();
        let mut obj_const = 0.0;
        let mut extra_rows: Vec<Row> = Vec::new();
        let mut infeasible_bounds = false;
        for i in 0..nvars {
            let (lo, hi) = (p.lower[i], p.upper[i]);
            if lo > hi {
                infeasible_bounds = true;
            }
            let map = if lo == hi && lo.is_finite() {
                obj_const += p.objective[i] * lo;
                VarMap::Fixed { value: lo }
            } else if lo.is_finite() {
                let col = costs.len();
                costs.push(p.objective[i]);
                obj_const += p.objective[i] * lo;
                if hi.is_finite() {
                    extra_rows.push(Row {
                        terms: vec![(i, 1.0)],
                        relation: Relation::Le,
                        rhs: hi,
                    });
                }
                VarMap::Shift { col, lo }
            } else if hi.is_finite() {
                let col = costs.len();
                costs.push(-p.objective[i]);
                obj_const += p.objective[i] * hi;
                VarMap::Negated { col, hi }
            } else {
                let pos = costs.len();
                costs.push(p.objective[i]);
                let neg = costs.len();
                costs.push(-p.objective[i]);
                VarMap::Split { pos, neg }
            };
            maps.push(map);
        }

        // Substitute the maps into every row, then append a slack or
        // surplus column per inequality.
        struct StdRow {
            terms: Vec<(usize, f64)>,
            rel: Relation,
            rhs: f64,
        }
        let mut std_rows: Vec<StdRow> = Vec::new();
        for row in p.rows.iter().chain(extra_rows.iter()) {
            let mut rhs = row.rhs;
            let mut terms: Vec<(usize, f64)> = Vec::new();
            for &(v, c) in &row.terms {
                match maps[v] {
                    VarMap::Fixed { value } => rhs -= c * value,
                    VarMap::Shift { col, lo } => {
                        rhs -= c * lo;
                        terms.push((col, c));
                    }
                    VarMap::Negated { col, hi } => {
                        rhs -= c * hi;
                        terms.push((col, -c));
                    }
                    VarMap::Split { pos, neg } => {
                        terms.push((pos, c));
                        terms.push((neg, -c));
                    }
                }
            }
            std_rows.push(StdRow {
                terms,
                rel: row.relation,
                rhs,
            });
        }
        let n_struct = costs.len();
        let n_slack = std_rows.iter().filter(|r| r.rel != Relation::Eq).count();
        let ncols = n_struct + n_slack;
        let m = std_rows.len();
        let n_art = m;
        let width = ncols + n_art + 1;
        let mut tab = vec![0.0; m * width];
        let mut basis = vec![usize::MAX; m];
        let mut slack_at = n_struct;
        for (r, row) in std_rows.iter().enumerate() {
            let base = r * width;
            for &(c, v) in &row.terms {
                tab[base + c] += v;
            }
            let mut slack_col = None;
            match row.rel {
                Relation::Le => {
                    tab[base + slack_at] = 1.0;
                    slack_col = Some(slack_at);
                    slack_at += 1;
                }
                Relation::Ge => {
                    tab[base + slack_at] = -1.0;
                    slack_col = Some(slack_at);
                    slack_at += 1;
                }
                Relation::Eq => {}
            }
            tab[base + ncols + r] = 1.0; // artificial
            tab[base + width - 1] = row.rhs;
            if tab[base + width - 1] < 0.0 {
                for c in 0..width {
                    tab[base + c] = -tab[base + c];
                }
            }
            // Reuse the slack as the initial basic variable when its
            // column still reads +1 after the sign fix.
            basis[r] = match slack_col {
                Some(sc) if tab[base + sc] > 0.5 => sc,
                _ => ncols + r,
            };
        }
        let mut full_costs = costs;
        full_costs.resize(ncols, 0.0);
        Ok(Simplex {
            tab,
            width,
            m,
            ncols,
            n_art,
            basis,
            costs: full_costs,
            obj_const,
            maps,
            nvars,
            infeasible_bounds,
        })
    }

    fn run(&mut self) -> Result<LpSolution, LpError> {
        let nvars = self.nvars;
        if self.infeasible_bounds {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                x: vec![0.0; nvars],
                objective: f64::NAN,
            });
        }
        // Phase 1: minimize the sum of artificials.
        let mut phase1: Vec<f64> = vec![0.0; self.ncols + self.n_art];
        for a in 0..self.n_art {
            phase1[self.ncols + a] = 1.0;
        }
        let rhs_scale = (0..self.m)
            .map(|r| self.tab[r * self.width + self.width - 1].abs())
            .fold(1.0f64, f64::max);
        let p1 = self.optimize(&phase1, true)?;
        if p1 > FEAS_EPS * rhs_scale {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                x: vec![0.0; nvars],
                objective: f64::NAN,
            });
        }
        self.drive_out_artificials();

        // Phase 2 on the real costs; artificials may not re-enter.
        let mut phase2 = self.costs.clone();
        phase2.resize(self.ncols + self.n_art, 0.0);
        let obj = self.optimize(&phase2, false)?;
        if obj == f64::NEG_INFINITY {
            return Ok(LpSolution {
                status: LpStatus::Unbounded,
                x: vec![0.0; nvars],
                objective: f64::NEG_INFINITY,
            });
        }

        // Read the standard-form solution off the basis.
        let mut y = vec![0.0; self.ncols];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.ncols {
                y[b] = self.tab[r * self.width + self.width - 1];
            }
        }
        let mut x = vec![0.0; nvars];
        for (i, map) in self.maps.iter().enumerate() {
            x[i] = match *map {
                VarMap::Fixed { value } => value,
                VarMap::Shift { col, lo } => lo + y[col],
                VarMap::Negated { col, hi } => hi - y[col],
                VarMap::Split { pos, neg } => y[pos] - y[neg],
            };
        }
        Ok(LpSolution {
            status: LpStatus::Optimal,
            x,
            objective: obj + self.obj_const,
        })
    }

    /// Runs the simplex on the given cost vector. Returns the optimal
    /// cost of the standard-form tableau, or `-inf` when unbounded.
    fn optimize(&mut self, costs: &[f64], phase1: bool) -> Result<f64, LpError> {
        let width = self.width;
        let total_cols = self.ncols + self.n_art;
        // Reduced costs z_j = c_j - c_B' B^-1 A_j, maintained per pivot.
        let mut z: Vec<f64> = (0..total_cols)
            .map(|j| {
                let mut v = costs[j];
                for r in 0..self.m {
                    v -= costs[self.basis[r]] * self.tab[r * width + j];
                }
                v
            })
            .collect();
        let mut obj: f64 = (0..self.m)
            .map(|r| costs[self.basis[r]] * self.tab[r * width + width - 1])
            .sum();
        let mut degenerate_run = 0usize;
        let mut bland = false;
        for _iter in 0..200_000 {
            let cols_allowed = if phase1 { total_cols } else { self.ncols };
            let mut enter = usize::MAX;
            if bland {
                for (j, &zj) in z.iter().enumerate().take(cols_allowed) {
                    if zj < -COST_EPS {
                        enter = j;
                        break;
                    }
                }
            } else {
                let mut best = -COST_EPS;
                for (j, &zj) in z.iter().enumerate().take(cols_allowed) {
                    if zj < best {
                        best = zj;
                        enter = j;
                    }
                }
            }
            if enter == usize::MAX {
                return Ok(obj);
            }
            // Ratio test; ties resolved toward the lowest basis index.
            let mut leave = usize::MAX;
            let mut best_ratio = f64::INFINITY;
            for r in 0..self.m {
                let a = self.tab[r * width + enter];
                if a > PIVOT_EPS {
                    let ratio = self.tab[r * width + width - 1] / a;
                    let better = ratio < best_ratio - 1e-12
                        || (ratio < best_ratio + 1e-12
                            && (leave == usize::MAX || self.basis[r] < self.basis[leave]));
                    if better {
                        best_ratio = ratio.min(best_ratio);
                        leave = r;
                    }
                }
            }
            if leave == usize::MAX {
                return Ok(f64::NEG_INFINITY);
            }
            if best_ratio.abs() <= 1e-12 {
                degenerate_run += 1;
                if degenerate_run > DEGENERATE_LIMIT {
                    bland = true;
                }
            } else {
                degenerate_run = 0;
            }
            let zf = z[enter];
            self.pivot(leave, enter);
            // Update reduced costs and the running objective.
            if zf != 0.0 {
                let base = leave * width;
                for (c, zc) in z.iter_mut().enumerate().take(total_cols) {
                    *zc -= zf * self.tab[base + c];
                }
                obj += zf * self.tab[base + width - 1];
                z[enter] = 0.0;
            }
        }
        Err(LpError::IterationLimit)
    }

    fn pivot(&mut self, leave: usize, enter: usize) {
        let width = self.width;
        let piv = self.tab[leave * width + enter];
        let inv = 1.0 / piv;
        for c in 0..width {
            self.tab[leave * width + c] *= inv;
        }
        self.tab[leave * width + enter] = 1.0;
        for r in 0..self.m {
            if r == leave {
                continue;
            }
            let factor = self.tab[r * width + enter];
            if factor == 0.0 {
                continue;
            }
            let (head, tail) = self.tab.split_at_mut(leave.max(r) * width);
            let (src, dst) = if leave < r {
                (&head[leave * width..leave * width + width], &mut tail[..width])
            } else {
                (&tail[..width], &mut head[r * width..r * width + width])
            };
            for c in 0..width {
                dst[c] -= factor * src[c];
            }
            dst[enter] = 0.0;
        }
        self.basis[leave] = enter;
    }

    /// After phase 1, swap any basic artificial for a structural column
    /// when the row allows it; rows that admit none are redundant and
    /// keep their zero-valued artificial.
    fn drive_out_artificials(&mut self) {
        let width = self.width;
        for r in 0..self.m {
            if self.basis[r] < self.ncols {
                continue;
            }
            let mut enter = usize::MAX;
            for j in 0..self.ncols {
                if self.tab[r * width + j].abs() > PIVOT_EPS {
                    enter = j;
                    break;
                }
            }
            if enter != usize::MAX {
                self.pivot(r, enter);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn minimal_bounded_problem() {
        let mut p = LpProblem::new();
        let x = p.add_var("x", f64::NEG_INFINITY, f64::INFINITY, 1.0);
        p.add_row(vec![(x, 1.0)], Relation::Ge, 1.0);
        let s = p.solve().unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[x] - 1.0).abs() < 1e-9);
        assert!((s.objective - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_problem_detected() {
        let mut p = LpProblem::new();
        let x = p.add_var("x", f64::NEG_INFINITY, f64::INFINITY, 1.0);
        p.add_row(vec![(x, 1.0)], Relation::Ge, 1.0);
        p.add_row(vec![(x, 1.0)], Relation::Le, 0.0);
        assert_eq!(p.solve().unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_problem_detected() {
        let mut p = LpProblem::new();
        let x = p.add_var("x", f64::NEG_INFINITY, f64::INFINITY, -1.0);
        p.add_row(vec![(x, 1.0)], Relation::Ge, 0.0);
        assert_eq!(p.solve().unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn respects_variable_bounds() {
        let mut p = LpProblem::new();
        let x = p.add_var("x", -2.0, 3.0, -1.0); // maximize x
        let y = p.add_var("y", 0.5, 1.5, 1.0);
        p.add_row(vec![(x, 1.0), (y, -1.0)], Relation::Le, 10.0);
        let s = p.solve().unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[x] - 3.0).abs() < 1e-9);
        assert!((s.x[y] - 0.5).abs() < 1e-9);

        let mut p2 = LpProblem::new();
        let y2 = p2.add_var("y", f64::NEG_INFINITY, 1.5, 1.0);
        p2.add_row(vec![(y2, 1.0)], Relation::Le, 1.0);
        assert_eq!(p2.solve().unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn fixed_variables_substitute() {
        let mut p = LpProblem::new();
        let x = p.add_var("x", 2.0, 2.0, 3.0);
        let y = p.add_var("y", 0.0, f64::INFINITY, 1.0);
        p.add_row(vec![(x, 1.0), (y, 1.0)], Relation::Ge, 5.0);
        let s = p.solve().unwrap();
        assert!((s.x[x] - 2.0).abs() < 1e-12);
        assert!((s.x[y] - 3.0).abs() < 1e-9);
        assert!((s.objective - 9.0).abs() < 1e-9);
    }

    /// Enumerates all ways to make `n` constraints active (rows plus
    /// finite bounds), solves each square system by elimination and
    /// keeps the best feasible point.
    fn enumeration_oracle(p: &LpProblem) -> Option<f64> {
        let n = p.num_vars();
        assert!(n <= 3);
        let mut planes: Vec<(Vec<f64>, f64)> = Vec::new();
        for row in &p.rows {
            let mut c = vec![0.0; n];
            for &(v, k) in &row.terms {
                c[v] += k;
            }
            planes.push((c, row.rhs));
        }
        for i in 0..n {
            if p.lower[i].is_finite() {
                let mut c = vec![0.0; n];
                c[i] = 1.0;
                planes.push((c, p.lower[i]));
            }
            if p.upper[i].is_finite() {
                let mut c = vec![0.0; n];
                c[i] = 1.0;
                planes.push((c, p.upper[i]));
            }
        }
        fn solve_square(a: &mut [Vec<f64>], b: &mut [f64]) -> Option<Vec<f64>> {
            let n = b.len();
            for col in 0..n {
                let piv = (col..n)
                    .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
                if a[piv][col].abs() < 1e-9 {
                    return None;
                }
                a.swap(col, piv);
                b.swap(col, piv);
                for r in 0..n {
                    if r != col {
                        let f = a[r][col] / a[col][col];
                        for c in col..n {
                            a[r][c] -= f * a[col][c];
                        }
                        b[r] -= f * b[col];
                    }
                }
            }
            Some((0..n).map(|i| b[i] / a[i][i]).collect())
        }
        let mut best: Option<f64> = None;
        let mut combo: Vec<usize> = Vec::new();
        fn rec(
            p: &LpProblem,
            planes: &[(Vec<f64>, f64)],
            combo: &mut Vec<usize>,
            start: usize,
            best: &mut Option<f64>,
            solve: &dyn Fn(&mut [Vec<f64>], &mut [f64]) -> Option<Vec<f64>>,
        ) {
            let n = p.num_vars();
            if combo.len() == n {
                let mut a: Vec<Vec<f64>> = combo.iter().map(|&i| planes[i].0.clone()).collect();
                let mut b: Vec<f64> = combo.iter().map(|&i| planes[i].1).collect();
                if let Some(x) = solve(&mut a, &mut b) {
                    if p.max_violation(&x) <= 1e-7 {
                        let obj: f64 = (0..n).map(|i| p.objective[i] * x[i]).sum();
                        *best = Some(best.map_or(obj, |bst: f64| bst.min(obj)));
                    }
                }
                return;
            }
            for pos in start..planes.len() {
                combo.push(pos);
                rec(p, planes, combo, pos + 1, best, solve);
                combo.pop();
            }
        }
        rec(p, &planes, &mut combo, 0, &mut best, &solve_square);
        best
    }

    #[test]
    fn random_small_lps_match_enumeration_oracle() {
        let mut rng = StdRng::seed_from_u64(1234);
        let mut solved = 0;
        for _ in 0..300 {
            let n = rng.gen_range(1..=3);
            let mut p = LpProblem::new();
            for i in 0..n {
                // Finite bounds keep the enumeration oracle exhaustive.
                let lo = rng.gen_range(-10.0..0.0);
                let hi = rng.gen_range(0.0..10.0);
                p.add_var(format!("x{i}"), lo, hi, rng.gen_range(-5.0..5.0));
            }
            for _ in 0..rng.gen_range(1..=4) {
                let terms: Vec<(usize, f64)> =
                    (0..n).map(|v| (v, rng.gen_range(-5.0..5.0))).collect();
                let rel = match rng.gen_range(0..3) {
                    0 => Relation::Le,
                    1 => Relation::Ge,
                    _ => Relation::Eq,
                };
                p.add_row(terms, rel, rng.gen_range(-10.0..10.0));
            }
            let s = p.solve().unwrap();
            let oracle = enumeration_oracle(&p);
            match (s.status, oracle) {
                (LpStatus::Optimal, Some(best)) => {
                    solved += 1;
                    assert!(
                        (s.objective - best).abs() <= 1e-7 * (1.0 + best.abs()),
                        "simplex {} vs oracle {}",
                        s.objective,
                        best
                    );
                    assert!(p.max_violation(&s.x) <= 1e-7);
                    let recomputed: f64 = (0..n).map(|i| p.objective[i] * s.x[i]).sum();
                    assert!((recomputed - s.objective).abs() <= 1e-7 * (1.0 + recomputed.abs()));
                }
                (LpStatus::Infeasible, None) => {}
                (st, or) => panic!("status {st:?} but oracle {or:?}"),
            }
        }
        assert!(solved > 100, "want plenty of optimal instances, got {solved}");
    }

    #[test]
    fn deterministic_resolve() {
        let mut rng = StdRng::seed_from_u64(9);
        let mut p = LpProblem::new();
        for i in 0..6 {
            p.add_var(format!("x{i}"), 0.0, 10.0, rng.gen_range(-3.0..3.0));
        }
        for _ in 0..8 {
            let terms: Vec<(usize, f64)> = (0..6).map(|v| (v, rng.gen_range(-2.0..2.0))).collect();
            p.add_row(terms, Relation::Le, rng.gen_range(0.0..8.0));
        }
        let a = p.solve().unwrap();
        let b = p.solve().unwrap();
        assert_eq!(a.x, b.x);
        assert_eq!(a.objective, b.objective);
    }

    #[test]
    fn lp_text_export_contains_sections() {
        let mut p = LpProblem::new();
        let x = p.add_var("x", 0.0, 5.0, 1.0);
        p.add_row(vec![(x, 2.0)], Relation::Ge, 1.0);
        let text = p.to_lp_text();
        assert!(text.contains("Minimize"));
        assert!(text.contains("Subject To"));
        assert!(text.contains("Bounds"));
        assert!(text.contains("+2 x >= 1"));
    }
}
