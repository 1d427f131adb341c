//! Convex piecewise-affine functions of one real variable, stored as a
//! max of affine pieces. This representation is closed under every
//! operation the backward recursion needs (shift, sum, max, partial
//! minimization over a box), so the whole solve stays exact up to
//! floating-point roundoff.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Two pieces whose slopes differ by less than this are merged.
const SLOPE_TOL: f64 = 1e-9;
/// A piece that never rises above the others by more than this is dropped.
const DOMINANCE_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum PwaError {
    #[error("a piecewise-affine function needs at least one piece")]
    Empty,
    #[error("non-finite slope or intercept in piece {0}")]
    NonFinite(usize),
    #[error("unbounded minimizer set: function is not coercive")]
    UnboundedMinimizer,
    #[error("control bounds are inverted: {lo} > {hi}")]
    InvalidBounds { lo: f64, hi: f64 },
    #[error("partial minimization is unbounded below")]
    UnboundedObjective,
}

/// A convex function `x -> max_i (slope_i * x + intercept_i)`.
///
/// Invariant after construction: slopes strictly increase and every
/// piece is active on an interval of positive length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PwaConvex {
    pieces: Vec<(f64, f64)>,
}

impl PwaConvex {
    /// Builds the canonical representation of `max_i (s_i x + c_i)`.
    ///
    /// Dominated pieces are removed and equal-slope pieces are merged,
    /// keeping the value of the function unchanged at every point.
    pub fn new(pieces: &[(f64, f64)]) -> Result<Self, PwaError> {
        if pieces.is_empty() {
            return Err(PwaError::Empty);
        }
        for (i, &(s, c)) in pieces.iter().enumerate() {
            if !s.is_finite() || !c.is_finite() {
                return Err(PwaError::NonFinite(i));
            }
        }
        let mut sorted: Vec<(f64, f64)> = pieces.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());

        // Equal slopes: only the largest intercept can ever attain the max.
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
        for (s, c) in sorted {
            match merged.last_mut() {
                Some(&mut (ls, ref mut lc)) if (s - ls).abs() <= SLOPE_TOL => {
                    if c > *lc {
                        *lc = c;
                    }
                }
                _ => merged.push((s, c)),
            }
        }

        // Upper-envelope sweep: piece `b` between `a` and `c` survives only
        // if it rises above both on some interval.
        let mut env: Vec<(f64, f64)> = Vec::with_capacity(merged.len());
        for piece in merged {
            while env.len() >= 2 {
                let a = env[env.len() - 2];
                let b = env[env.len() - 1];
                if Self::is_dominated(a, b, piece) {
                    env.pop();
                } else {
                    break;
                }
            }
            env.push(piece);
        }
        Ok(PwaConvex { pieces: env })
    }

    /// `b` never exceeds `max(a, c)` by more than the dominance tolerance.
    /// All three are sorted by slope: `a.0 < b.0 < c.0`.
    fn is_dominated(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> bool {
        // Crossing of a and c happens at x* = (a.1 - c.1) / (c.0 - a.0);
        // b is redundant iff b(x*) <= max(a, c)(x*) + tol. Written
        // multiplicatively to avoid the division.
        let lhs = (b.1 - a.1) * (c.0 - a.0);
        let rhs = (c.1 - a.1) * (b.0 - a.0);
        let scale = (c.0 - a.0) * (1.0 + a.1.abs().max(b.1.abs()).max(c.1.abs()));
        lhs - rhs <= DOMINANCE_TOL * scale.max(1.0)
    }

    pub fn pieces(&self) -> &[(f64, f64)] {
        &self.pieces
    }

    pub fn num_pieces(&self) -> usize {
        self.pieces.len()
    }

    pub fn min_slope(&self) -> f64 {
        self.pieces[0].0
    }

    pub fn max_slope(&self) -> f64 {
        self.pieces[self.pieces.len() - 1].0
    }

    /// Coercive means `f(x) -> +inf` both ways: min slope < 0 < max slope.
    pub fn is_coercive(&self) -> bool {
        self.min_slope() < 0.0 && self.max_slope() > 0.0
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.pieces
            .iter()
            .map(|&(s, c)| s * x + c)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Returns `x -> f(x + d)`.
    pub fn shift(&self, d: f64) -> Self {
        PwaConvex {
            pieces: self.pieces.iter().map(|&(s, c)| (s, c + s * d)).collect(),
        }
    }

    /// Returns `x -> f(a * x)` for `a != 0`.
    pub fn scale_input(&self, a: f64) -> Self {
        let scaled: Vec<(f64, f64)> = self.pieces.iter().map(|&(s, c)| (s * a, c)).collect();
        // Negative `a` reverses the slope order; re-canonicalize.
        PwaConvex::new(&scaled).expect("scaling preserves validity")
    }

    /// Returns `x -> f(x) + s*x + c`.
    pub fn add_affine(&self, s: f64, c: f64) -> Self {
        PwaConvex {
            pieces: self
                .pieces
                .iter()
                .map(|&(ps, pc)| (ps + s, pc + c))
                .collect(),
        }
    }

    /// Pointwise maximum of two convex PWA functions.
    pub fn max_of(&self, other: &Self) -> Self {
        let mut all = self.pieces.clone();
        all.extend_from_slice(&other.pieces);
        PwaConvex::new(&all).expect("inputs are canonical")
    }

    /// Pointwise sum. Piece count of the result is at most `|f| + |g|`.
    pub fn add(&self, other: &Self) -> Self {
        let f = &self.pieces;
        let g = &other.pieces;
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            out.push((f[i].0 + g[j].0, f[i].1 + g[j].1));
            // Advance whichever function changes its active piece first.
            let bf = if i + 1 < f.len() {
                Some(Self::crossing(f[i], f[i + 1]))
            } else {
                None
            };
            let bg = if j + 1 < g.len() {
                Some(Self::crossing(g[j], g[j + 1]))
            } else {
                None
            };
            match (bf, bg) {
                (None, None) => break,
                (Some(_), None) => i += 1,
                (None, Some(_)) => j += 1,
                (Some(xf), Some(xg)) => {
                    if xf < xg {
                        i += 1;
                    } else if xg < xf {
                        j += 1;
                    } else {
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        PwaConvex::new(&out).expect("nonempty by construction")
    }

    /// Breakpoint between two consecutive canonical pieces.
    fn crossing(lo: (f64, f64), hi: (f64, f64)) -> f64 {
        (lo.1 - hi.1) / (hi.0 - lo.0)
    }

    /// Breakpoints of the canonical representation, in increasing order.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.pieces
            .windows(2)
            .map(|w| Self::crossing(w[0], w[1]))
            .collect()
    }

    /// The exact minimizer interval `[y_low, y_up]` of a coercive function.
    ///
    /// A zero-slope piece at the bottom yields a nondegenerate interval.
    pub fn argmin_interval(&self) -> Result<(f64, f64), PwaError> {
        if !self.is_coercive() {
            return Err(PwaError::UnboundedMinimizer);
        }
        let bps = self.breakpoints();
        // Last piece with negative slope and first with positive slope.
        let last_neg = self.pieces.iter().rposition(|&(s, _)| s < 0.0).unwrap();
        let first_pos = self.pieces.iter().position(|&(s, _)| s > 0.0).unwrap();
        let y_low = bps[last_neg];
        let y_up = bps[first_pos - 1];
        Ok((y_low, y_up))
    }

    pub fn min_value(&self) -> Result<f64, PwaError> {
        let (y_low, _) = self.argmin_interval()?;
        Ok(self.eval(y_low))
    }

    /// Partial minimization over a box:
    /// `J(x) = min_{u in [lo, hi]} c*u + f(x + u)`.
    ///
    /// Returns `J` together with the minimizer band `[y_low, y_up]` of
    /// `y -> c*y + f(y)`; the band degenerates to an infinite endpoint
    /// when that auxiliary function is monotone. `J` carries slope
    /// exactly `-c` on `[y_low - hi, y_up - lo]`, equals
    /// `c*hi + f(x + hi)` left of it and `c*lo + f(x + lo)` right of it.
    pub fn partial_min_box(
        &self,
        c: f64,
        lo: f64,
        hi: f64,
    ) -> Result<(Self, f64, f64), PwaError> {
        if lo > hi {
            return Err(PwaError::InvalidBounds { lo, hi });
        }
        // phi(y) = c*y + f(y); J(x) = -c*x + min over the window of phi.
        let phi = self.add_affine(c, 0.0);
        let bps = phi.breakpoints();

        let (y_low, y_up, min_val) = if phi.min_slope() > 0.0 {
            // phi strictly increasing: minimizer escapes to -inf.
            (f64::NEG_INFINITY, f64::NEG_INFINITY, None)
        } else if phi.max_slope() < 0.0 {
            // phi strictly decreasing: minimizer escapes to +inf.
            (f64::INFINITY, f64::INFINITY, None)
        } else {
            let y_low = match phi.pieces.iter().rposition(|&(s, _)| s < 0.0) {
                Some(i) => bps[i],
                None => f64::NEG_INFINITY,
            };
            let y_up = match phi.pieces.iter().position(|&(s, _)| s > 0.0) {
                Some(i) => bps[i - 1],
                None => f64::INFINITY,
            };
            let at = if y_low.is_finite() { y_low } else { y_up };
            let m = if at.is_finite() {
                phi.eval(at)
            } else {
                // phi is globally constant.
                phi.pieces[0].1
            };
            (y_low, y_up, Some(m))
        };

        let mut pieces: Vec<(f64, f64)> = Vec::with_capacity(phi.num_pieces() + 1);
        if hi.is_finite() {
            // Branch J(x) = c*hi + f(x + hi), active left of the band.
            pieces.extend(
                phi.pieces
                    .iter()
                    .filter(|&&(s, _)| s < 0.0)
                    .map(|&(s, ic)| (s - c, s * hi + ic)),
            );
        } else if phi.min_slope() < 0.0 && min_val.is_none() {
            return Err(PwaError::UnboundedObjective);
        }
        if let Some(m) = min_val {
            pieces.push((-c, m));
        }
        if lo.is_finite() {
            // Branch J(x) = c*lo + f(x + lo), active right of the band.
            pieces.extend(
                phi.pieces
                    .iter()
                    .filter(|&&(s, _)| s > 0.0)
                    .map(|&(s, ic)| (s - c, s * lo + ic)),
            );
        } else if phi.max_slope() > 0.0 && min_val.is_none() {
            return Err(PwaError::UnboundedObjective);
        }
        if pieces.is_empty() {
            // Happens when the window is unbounded toward phi's descent.
            return Err(PwaError::UnboundedObjective);
        }
        Ok((PwaConvex::new(&pieces)?, y_low, y_up))
    }
}
