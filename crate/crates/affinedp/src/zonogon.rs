//! Plane zonogon geometry: canonical generator form, right-side vertex
//! chains, zonogon hulls, and maximization of `theta1 + f(theta2)` with
//! `f` convex, which is attained on the right side.
//!
//! A zonogon here is always the image of a unit hypercube under an
//! affine map into the plane. Canonicalization orients every generator
//! upward (`b >= 0`), folds degenerate generators into the offset,
//! merges equal-ratio generators, and sorts by cotangent so the vertex
//! chain `v_0, v_0 + g_1, ...` walks the right side bottom to top.

use crate::pwa::PwaConvex;
use serde::{Deserialize, Serialize};

/// Generators with `|a|` and `|b|` both below this vanish entirely.
const DROP_TOL: f64 = 1e-12;
/// Ratio closeness (relative) under which two generators merge.
const MERGE_TOL: f64 = 1e-9;

/// An affine function `c_0 + sum_i c_i * w_i` of a disturbance prefix
/// `w in [0,1]^m`. The order `m` encodes non-anticipativity: a control
/// for stage `k` has order `k - 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineExpr {
    pub constant: f64,
    pub coeffs: Vec<f64>,
}

impl AffineExpr {
    pub fn constant(value: f64) -> Self {
        AffineExpr {
            constant: value,
            coeffs: Vec::new(),
        }
    }

    pub fn new(constant: f64, coeffs: Vec<f64>) -> Self {
        AffineExpr { constant, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, w: &[f64]) -> f64 {
        self.constant
            + self
                .coeffs
                .iter()
                .zip(w)
                .map(|(c, x)| c * x)
                .sum::<f64>()
    }

    /// Extends the order to `m`, padding with zero coefficients.
    pub fn padded(&self, m: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(m.max(coeffs.len()), 0.0);
        AffineExpr {
            constant: self.constant,
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.order().max(other.order());
        let mut out = self.padded(m);
        out.constant += other.constant;
        for (i, c) in other.coeffs.iter().enumerate() {
            out.coeffs[i] += c;
        }
        out
    }

    pub fn scale(&self, k: f64) -> Self {
        AffineExpr {
            constant: self.constant * k,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add_constant(&self, c: f64) -> Self {
        AffineExpr {
            constant: self.constant + c,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exact range over the unit box: negative coefficients sit at 0 for
    /// the max and at 1 for the min.
    pub fn range_unit_box(&self) -> (f64, f64) {
        let mut lo = self.constant;
        let mut hi = self.constant;
        for &c in &self.coeffs {
            if c > 0.0 {
                hi += c;
            } else {
                lo += c;
            }
        }
        (lo, hi)
    }
}

/// Where a canonical generator (or folded coordinate) came from.
///
/// `flipped` records the substitution `w' = 1 - w` used to orient the
/// generator upward; `weight` is the share of the merged generator's
/// `b`-mass carried by this coordinate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoordSource {
    pub coord: usize,
    pub flipped: bool,
    /// Oriented contribution to the generator.
    pub a: f64,
    pub b: f64,
}

/// A coordinate whose `b` component vanished; its `a` component was
/// folded into the offset at the worst-case corner for max objectives
/// (`w = 1` when the oriented `a` is positive, `w = 0` otherwise).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldedCoord {
    pub coord: usize,
    pub flipped: bool,
    pub a: f64,
    pub folded_at_one: bool,
}

/// A zonogon in canonical form.
#[derive(Debug, Clone, PartialEq)]
pub struct Zonogon {
    offset: (f64, f64),
    generators: Vec<(f64, f64)>,
    sources: Vec<Vec<CoordSource>>,
    folded: Vec<FoldedCoord>,
    order: usize,
}

impl Zonogon {
    /// Canonicalizes the image of `{(t1(w), t2(w)) : w in [0,1]^m}`.
    pub fn from_affine_pair(theta1: &AffineExpr, theta2: &AffineExpr) -> Self {
        let m = theta1.order().max(theta2.order());
        let t1 = theta1.padded(m);
        let t2 = theta2.padded(m);
        let mut offset = (t1.constant, t2.constant);
        let mut oriented: Vec<CoordSource> = Vec::with_capacity(m);
        let mut folded: Vec<FoldedCoord> = Vec::new();
        for i in 0..m {
            let (mut a, mut b) = (t1.coeffs[i], t2.coeffs[i]);
            let mut flipped = false;
            if b < 0.0 || (b == 0.0 && a < 0.0) {
                // w' = 1 - w keeps the image identical.
                offset.0 += a;
                offset.1 += b;
                a = -a;
                b = -b;
                flipped = true;
            }
            if b <= DROP_TOL {
                if a.abs() <= DROP_TOL {
                    continue;
                }
                // After orientation a > 0: fold at w' = 1.
                offset.0 += a;
                folded.push(FoldedCoord {
                    coord: i,
                    flipped,
                    a,
                    folded_at_one: true,
                });
                continue;
            }
            oriented.push(CoordSource {
                coord: i,
                flipped,
                a,
                b,
            });
        }
        // Sort by cotangent a/b, strictly decreasing along the right side.
        oriented.sort_by(|x, y| {
            let rx = x.a / x.b;
            let ry = y.a / y.b;
            ry.partial_cmp(&rx)
                .unwrap()
                .then(x.coord.cmp(&y.coord))
        });
        let mut generators: Vec<(f64, f64)> = Vec::new();
        let mut sources: Vec<Vec<CoordSource>> = Vec::new();
        for src in oriented {
            let ratio = src.a / src.b;
            let merge = match generators.last() {
                Some(&(ga, gb)) => {
                    let gr = ga / gb;
                    (gr - ratio).abs() <= MERGE_TOL * (1.0 + gr.abs().max(ratio.abs()))
                }
                None => false,
            };
            if merge {
                let last = generators.len() - 1;
                generators[last].0 += src.a;
                generators[last].1 += src.b;
                sources[last].push(src);
            } else {
                generators.push((src.a, src.b));
                sources.push(vec![src]);
            }
        }
        Zonogon {
            offset,
            generators,
            sources,
            folded,
            order: m,
        }
    }

    pub fn offset(&self) -> (f64, f64) {
        self.offset
    }

    pub fn generators(&self) -> &[(f64, f64)] {
        &self.generators
    }

    pub fn sources(&self) -> &[Vec<CoordSource>] {
        &self.sources
    }

    pub fn folded(&self) -> &[FoldedCoord] {
        &self.folded
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Geometric center; vertices come in centrally symmetric pairs.
    pub fn center(&self) -> (f64, f64) {
        let mut c = self.offset;
        for &(a, b) in &self.generators {
            c.0 += 0.5 * a;
            c.1 += 0.5 * b;
        }
        c
    }

    /// Vertices `v_0 .. v_p` of the right side, bottom to top. `v_0` is
    /// the highest-`theta1` point among the lowest-`theta2` ones.
    pub fn right_side(&self) -> Vec<(f64, f64)> {
        let mut verts = Vec::with_capacity(self.generators.len() + 1);
        let mut v = self.offset;
        verts.push(v);
        for &(a, b) in &self.generators {
            v = (v.0 + a, v.1 + b);
            verts.push(v);
        }
        verts
    }

    /// The hypercube vertex (in original `[0,1]^order` coordinates)
    /// projecting onto right-side vertex `i`: canonical generators
    /// `1..=i` switched on, the rest off, flips and folds un-applied.
    pub fn preimage_vertex(&self, i: usize) -> Vec<f64> {
        let mut w = vec![0.0; self.order];
        for fold in &self.folded {
            let on = fold.folded_at_one;
            w[fold.coord] = if on != fold.flipped { 1.0 } else { 0.0 };
        }
        for (gi, members) in self.sources.iter().enumerate() {
            let on = gi < i;
            for m in members {
                w[m.coord] = if on != m.flipped { 1.0 } else { 0.0 };
            }
        }
        w
    }

    /// Maximizes `theta1 + f(theta2)` over the zonogon. Returns the
    /// value, the right-side vertex index attaining it (lowest index on
    /// ties), and the vertex itself.
    pub fn max_affine_plus_convex(&self, f: &PwaConvex) -> (f64, usize, (f64, f64)) {
        let verts = self.right_side();
        let mut best = f64::NEG_INFINITY;
        let mut arg = 0usize;
        for (i, &(t1, t2)) in verts.iter().enumerate() {
            let val = t1 + f.eval(t2);
            if val > best {
                best = val;
                arg = i;
            }
        }
        (best, arg, verts[arg])
    }
}

/// Cotangent of the oriented segment `[m, n]` against the `theta1` axis:
/// `(t1_n - t1_m) / (t2_n - t2_m)`. Horizontal segments return a signed
/// infinity matching the sign of the `theta1` step.
pub fn cotan(m: (f64, f64), n: (f64, f64)) -> f64 {
    let dy = n.1 - m.1;
    let dx = n.0 - m.0;
    if dy == 0.0 {
        if dx >= 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        dx / dy
    }
}

/// Indices of the points forming the right side of the convex hull of
/// `points`, ordered by increasing `theta2`. Starts at the
/// highest-`theta1` point among those of minimal `theta2` and ends at
/// the highest-`theta1` point among those of maximal `theta2`; interior
/// collinear points are dropped.
pub fn right_side_indices(points: &[(f64, f64)]) -> Vec<usize> {
    if points.is_empty() {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        let (pi, pj) = (points[i], points[j]);
        pi.1
            .partial_cmp(&pj.1)
            .unwrap()
            .then(pj.0.partial_cmp(&pi.0).unwrap())
            .then(i.cmp(&j))
    });
    let mut chain: Vec<usize> = Vec::new();
    for &i in &order {
        let p = points[i];
        if let Some(&last) = chain.last() {
            // Same height: the first kept point already has the larger theta1.
            if points[last].1 == p.1 {
                continue;
            }
        }
        while chain.len() >= 2 {
            let o = points[chain[chain.len() - 2]];
            let a = points[chain[chain.len() - 1]];
            // Working in (x, y) = (theta2, theta1); the chain must turn
            // clockwise (right) at every kept vertex.
            let cross = (a.1 - o.1) * (p.0 - o.0) - (p.1 - o.1) * (a.0 - o.0);
            let scale = [o.0.abs(), o.1.abs(), a.0.abs(), a.1.abs(), p.0.abs(), p.1.abs()]
                .into_iter()
                .fold(1.0f64, f64::max);
            if cross >= -1e-12 * scale * scale {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(i);
    }
    chain
}

/// The zonogon whose right side equals the right side of the convex
/// hull of `points`.
pub fn zonogon_hull(points: &[(f64, f64)]) -> Zonogon {
    let idx = right_side_indices(points);
    let verts: Vec<(f64, f64)> = idx.iter().map(|&i| points[i]).collect();
    let offset = verts[0];
    let mut generators = Vec::with_capacity(verts.len().saturating_sub(1));
    let mut sources = Vec::with_capacity(generators.capacity());
    for (i, w) in verts.windows(2).enumerate() {
        let g = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        generators.push(g);
        sources.push(vec![CoordSource {
            coord: i,
            flipped: false,
            a: g.0,
            b: g.1,
        }]);
    }
    let order = generators.len();
    Zonogon {
        offset,
        generators,
        sources,
        folded: Vec::new(),
        order,
    }
}
