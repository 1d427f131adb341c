//! Exact backward recursion for the box-constrained minimax control
//! problem, plus the change of variables that reduces general dynamics
//! `x' = alpha*x + beta*u + gamma*w` to the unit form `x' = x + u + w`.
//!
//! Stage costs are convex piecewise affine, so every value function is
//! computed exactly: `g_k` is the max of two shifted copies of
//! `h_k + J_{k+1}` (the inner max over an interval of a convex function
//! sits on the boundary), and `J_k` is a partial minimization over the
//! control box.

use crate::pwa::{PwaConvex, PwaError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DpError {
    #[error("instance has no stages")]
    EmptyHorizon,
    #[error("stage {stage}: {message}")]
    BadStage { stage: usize, message: String },
    #[error("stage {stage}: state-cost error: {source}")]
    Cost {
        stage: usize,
        #[source]
        source: PwaError,
    },
    #[error("instance must be normalized (alpha = beta = gamma = 1) first")]
    NotNormalized,
}

/// One stage of the problem datum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    /// Per-unit control cost `c_k >= 0`.
    pub cost: f64,
    /// Control box `[u_min, u_max]`; infinities allowed.
    pub u_min: f64,
    pub u_max: f64,
    /// Disturbance interval `[w_low, w_up]`.
    pub w_low: f64,
    pub w_up: f64,
    /// Convex coercive stage cost on the next state.
    pub state_cost: PwaConvex,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Optional bound on the cumulative raw control `sum_{i<=k} u_i`.
    /// Only the LP reformulations consume it.
    pub cum_bound: Option<f64>,
}

impl Stage {
    pub fn unit(
        cost: f64,
        u_min: f64,
        u_max: f64,
        w_low: f64,
        w_up: f64,
        state_cost: PwaConvex,
    ) -> Self {
        Stage {
            cost,
            u_min,
            u_max,
            w_low,
            w_up,
            state_cost,
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            cum_bound: None,
        }
    }
}

/// The full problem datum: horizon, initial state, per-stage data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub x_init: f64,
    pub stages: Vec<Stage>,
}

impl Instance {
    pub fn horizon(&self) -> usize {
        self.stages.len()
    }

    pub fn is_unit_dynamics(&self) -> bool {
        self.stages
            .iter()
            .all(|s| s.alpha == 1.0 && s.beta == 1.0 && s.gamma == 1.0)
    }

    pub fn validate(&self) -> Result<(), DpError> {
        if self.stages.is_empty() {
            return Err(DpError::EmptyHorizon);
        }
        if !self.x_init.is_finite() {
            return Err(DpError::BadStage {
                stage: 0,
                message: "initial state must be finite".into(),
            });
        }
        for (k, s) in self.stages.iter().enumerate() {
            let fail = |m: &str| DpError::BadStage {
                stage: k + 1,
                message: m.into(),
            };
            if !(s.cost >= 0.0) {
                return Err(fail("control cost must be nonnegative"));
            }
            if s.u_min > s.u_max {
                return Err(fail("control bounds inverted"));
            }
            if !(s.w_low <= s.w_up) || !s.w_low.is_finite() || !s.w_up.is_finite() {
                return Err(fail("disturbance interval must be finite and ordered"));
            }
            if !s.state_cost.is_coercive() {
                return Err(fail("state cost must be coercive (min slope < 0 < max slope)"));
            }
            if !(s.alpha > 0.0) {
                return Err(fail("alpha must be positive"));
            }
            if !(s.beta > 0.0) {
                return Err(fail("beta must be positive"));
            }
            if s.gamma == 0.0 || !s.gamma.is_finite() {
                return Err(fail("gamma must be nonzero"));
            }
        }
        Ok(())
    }
}

/// Everything needed to map normalized controls, states and disturbance
/// coordinates back to the raw problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformRecord {
    /// `A_k = prod_{i<k} alpha_i` for `k = 1..=T+1`; raw state is
    /// `x_k = A_k * x~_k`.
    pub state_scale: Vec<f64>,
    /// Raw control is `u_k = u~_k / control_scale_k`.
    pub control_scale: Vec<f64>,
    /// Normalized disturbance is `w~_k = dist_scale_k * w_k`.
    pub dist_scale: Vec<f64>,
    /// True when `dist_scale_k < 0`, i.e. raw and normalized
    /// disturbances run in opposite directions.
    pub flipped: Vec<bool>,
    /// `w~_k = unit_offset_k + unit_width_k * w'_k` with `w' in [0,1]`.
    pub unit_offset: Vec<f64>,
    pub unit_width: Vec<f64>,
}

impl TransformRecord {
    pub fn identity(instance: &Instance) -> Self {
        let t = instance.horizon();
        TransformRecord {
            state_scale: vec![1.0; t + 1],
            control_scale: vec![1.0; t],
            dist_scale: vec![1.0; t],
            flipped: vec![false; t],
            unit_offset: instance.stages.iter().map(|s| s.w_low).collect(),
            unit_width: instance.stages.iter().map(|s| s.w_up - s.w_low).collect(),
        }
    }

    /// Raw disturbance value for the unit coordinate `w' in [0,1]` of
    /// stage `k` (1-based).
    pub fn unit_to_raw_w(&self, k: usize, w01: f64) -> f64 {
        let tilde = self.unit_offset[k - 1] + self.unit_width[k - 1] * w01;
        tilde / self.dist_scale[k - 1]
    }

    /// Raw control for a normalized control value at stage `k` (1-based).
    pub fn raw_control(&self, k: usize, u_norm: f64) -> f64 {
        u_norm / self.control_scale[k - 1]
    }
}

/// Rewrites the instance in `x~_k = x_k / prod alpha_i` coordinates so
/// that `alpha = beta = gamma = 1`; disturbance intervals become the
/// affine images of the raw ones (ordered, flipping when the scaled
/// gamma is negative). The optimal value is unchanged and the record
/// suffices to map policies back.
pub fn normalize(instance: &Instance) -> Result<(Instance, TransformRecord), DpError> {
    instance.validate()?;
    if instance.is_unit_dynamics() {
        return Ok((instance.clone(), TransformRecord::identity(instance)));
    }
    let t = instance.horizon();
    let mut state_scale = Vec::with_capacity(t + 1);
    state_scale.push(1.0);
    for s in &instance.stages {
        state_scale.push(state_scale.last().unwrap() * s.alpha);
    }
    let mut stages = Vec::with_capacity(t);
    let mut control_scale = Vec::with_capacity(t);
    let mut dist_scale = Vec::with_capacity(t);
    let mut flipped = Vec::with_capacity(t);
    for (i, s) in instance.stages.iter().enumerate() {
        let a_next = state_scale[i + 1];
        let su = s.beta / a_next;
        let rho = s.gamma / a_next;
        let (w_low, w_up) = if rho >= 0.0 {
            (rho * s.w_low, rho * s.w_up)
        } else {
            (rho * s.w_up, rho * s.w_low)
        };
        stages.push(Stage {
            cost: s.cost / su,
            u_min: s.u_min * su,
            u_max: s.u_max * su,
            w_low,
            w_up,
            state_cost: s.state_cost.scale_input(a_next),
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            cum_bound: s.cum_bound,
        });
        control_scale.push(su);
        dist_scale.push(rho);
        flipped.push(rho < 0.0);
    }
    let normalized = Instance {
        x_init: instance.x_init,
        stages,
    };
    let record = TransformRecord {
        state_scale,
        control_scale,
        dist_scale,
        flipped,
        unit_offset: normalized.stages.iter().map(|s| s.w_low).collect(),
        unit_width: normalized
            .stages
            .iter()
            .map(|s| s.w_up - s.w_low)
            .collect(),
    };
    Ok((normalized, record))
}

/// Per-stage output of the recursion.
#[derive(Debug, Clone)]
pub struct DpStage {
    /// `g_k(y) = max over the disturbance interval of (h_k + J_{k+1})`.
    pub worst_next: PwaConvex,
    /// Minimizer band `[y_low, y_up]` of `c_k*y + g_k(y)`; an endpoint
    /// is infinite when that function is monotone.
    pub y_low: f64,
    pub y_up: f64,
}

/// The solved recursion: value functions `J_1 .. J_{T+1}`, per-stage
/// bands, and the optimal value at the initial state.
#[derive(Debug, Clone)]
pub struct DpSolution {
    pub values: Vec<PwaConvex>,
    pub stages: Vec<DpStage>,
    pub value_at_init: f64,
}

impl DpSolution {
    /// Saturation thresholds `(y_low - U, y_up - L)` of stage `k` (1-based).
    pub fn thresholds(&self, instance: &Instance, k: usize) -> (f64, f64) {
        let s = &instance.stages[k - 1];
        let d = &self.stages[k - 1];
        (d.y_low - s.u_max, d.y_up - s.u_min)
    }
}

/// Runs the backward recursion on a normalized instance.
pub fn solve_dp(instance: &Instance) -> Result<DpSolution, DpError> {
    instance.validate()?;
    if !instance.is_unit_dynamics() {
        return Err(DpError::NotNormalized);
    }
    let t = instance.horizon();
    let zero = PwaConvex::new(&[(0.0, 0.0)]).expect("constant zero");
    let mut values = vec![zero; t + 1];
    let mut stages: Vec<Option<DpStage>> = vec![None; t];
    for k in (0..t).rev() {
        let s = &instance.stages[k];
        let look_ahead = s.state_cost.add(&values[k + 1]);
        let g = look_ahead
            .shift(s.w_low)
            .max_of(&look_ahead.shift(s.w_up));
        let (j, y_low, y_up) = g
            .partial_min_box(s.cost, s.u_min, s.u_max)
            .map_err(|source| DpError::Cost {
                stage: k + 1,
                source,
            })?;
        values[k] = j;
        stages[k] = Some(DpStage {
            worst_next: g,
            y_low,
            y_up,
        });
    }
    let value_at_init = values[0].eval(instance.x_init);
    Ok(DpSolution {
        values,
        stages: stages.into_iter().map(Option::unwrap).collect(),
        value_at_init,
    })
}

/// The optimal feedback law at stage `k` (1-based): saturates at the
/// control bounds outside `[y_low - U, y_up - L]` and steers to the
/// low end of the minimizer band inside (the deterministic tie-break).
pub fn policy_eval(sol: &DpSolution, instance: &Instance, k: usize, x: f64) -> f64 {
    let s = &instance.stages[k - 1];
    let d = &sol.stages[k - 1];
    (d.y_low - x).clamp(s.u_min, s.u_max)
}
