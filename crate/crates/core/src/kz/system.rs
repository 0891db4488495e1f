//! The KZ system `∂W/∂z^i = h Σ_{j≠i} R^{ij}/(z^i − z^j) W` and its RK4
//! holonomy.

use nalgebra::DMatrix;
use num::Zero;

use super::path::{Center, LoopKind, LoopSpec, C64};
use crate::error::{Error, Result};
use crate::scalar;
use crate::tensor::TensorOp2;

pub const DEFAULT_MAX_DIM: usize = 4096;

/// `LONGEQ_MAX_DIM` if set to a positive integer, else the default.
pub fn max_dim_from_env() -> usize {
    std::env::var("LONGEQ_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_DIM)
}

#[derive(Clone, Debug)]
pub struct KzSystem {
    points: usize,
    n: usize,
    h: C64,
    r: DMatrix<C64>,
    symmetric: bool,
    /// `lifted[i][j]` is `R` acting on slots `(i, j)`; empty on the diagonal.
    lifted: Vec<Vec<DMatrix<C64>>>,
}

fn lift_float(r: &TensorOp2, first: usize, second: usize, slots: usize) -> DMatrix<C64> {
    let n = r.dim();
    let total = n.pow(slots as u32);
    let weight = |s: usize| n.pow((slots - 1 - s) as u32);
    let (wa, wb) = (weight(first), weight(second));
    let mut out = DMatrix::zeros(total, total);
    for col in 0..total {
        let v = (col / wa) % n;
        let u = (col / wb) % n;
        let rest = col - v * wa - u * wb;
        for i in 0..n {
            for j in 0..n {
                let x = r.x(u, v, j, i);
                if !x.is_zero() {
                    out[(rest + i * wa + j * wb, col)] = C64::new(scalar::to_f64(x), 0.0);
                }
            }
        }
    }
    out
}

impl KzSystem {
    pub fn new(r: &TensorOp2, points: usize, h: C64) -> Result<Self> {
        Self::with_cap(r, points, h, max_dim_from_env())
    }

    pub fn with_cap(r: &TensorOp2, points: usize, h: C64, cap: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::InvalidLoop("need at least two points".into()));
        }
        let n = r.dim();
        let dim = u32::try_from(points).ok().and_then(|p| n.checked_pow(p)).unwrap_or(usize::MAX);
        if dim > cap {
            return Err(Error::DimensionCap { dim, cap });
        }
        let lifted = (0..points)
            .map(|i| {
                (0..points)
                    .map(|j| if i == j { DMatrix::zeros(0, 0) } else { lift_float(r, i, j, points) })
                    .collect()
            })
            .collect();
        let m = r.matrix();
        let rf = DMatrix::from_fn(n * n, n * n, |a, b| C64::new(scalar::to_f64(&m[(a, b)]), 0.0));
        Ok(KzSystem { points, n, h, r: rf, symmetric: r.is_symmetric(), lifted })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn fiber_dim(&self) -> usize {
        self.n
    }

    pub fn total_dim(&self) -> usize {
        self.n.pow(self.points as u32)
    }

    pub fn h(&self) -> C64 {
        self.h
    }

    pub fn r_float(&self) -> &DMatrix<C64> {
        &self.r
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// `R^{ij}` (0-based, `i ≠ j`).
    pub fn lifted(&self, i: usize, j: usize) -> &DMatrix<C64> {
        assert!(i != j && i < self.points && j < self.points);
        &self.lifted[i][j]
    }

    /// `A = h Σ_i Σ_{j≠i} ż^i/(z^i − z^j) R^{ij}`.
    fn generator(&self, z: &[C64], dz: &[C64]) -> DMatrix<C64> {
        let d = self.total_dim();
        let mut a = DMatrix::zeros(d, d);
        for i in 0..self.points {
            if dz[i].is_zero() {
                continue;
            }
            for j in (0..self.points).filter(|&j| j != i) {
                let coeff = self.h * dz[i] / (z[i] - z[j]);
                a += &self.lifted[i][j] * coeff;
            }
        }
        a
    }
}

/// RK4 over each segment of the loop, `W(0) = Id`.
pub fn integrate_holonomy(sys: &KzSystem, lp: &LoopSpec) -> Result<DMatrix<C64>> {
    if lp.points() != sys.points() {
        return Err(Error::DimensionMismatch(format!(
            "loop has {} points but the system has {}",
            lp.points(),
            sys.points()
        )));
    }
    let d = sys.total_dim();
    let mut w = DMatrix::<C64>::identity(d, d);
    let guard = lp.guard();
    let steps = lp.steps_per_segment();
    let dt = 1.0 / steps as f64;
    let zero_h = sys.h.is_zero();
    for seg in lp.segments() {
        let rhs = |s: f64, w: &DMatrix<C64>| -> Result<DMatrix<C64>> {
            let (z, dz) = seg.eval(s);
            lp.check_distance(&z, guard)?;
            Ok(sys.generator(&z, &dz) * w)
        };
        for k in 0..steps {
            let t = k as f64 * dt;
            if zero_h {
                lp.check_distance(&seg.eval(t).0, guard)?;
                continue;
            }
            let k1 = rhs(t, &w)?;
            let k2 = rhs(t + dt / 2.0, &(&w + &k1 * C64::new(dt / 2.0, 0.0)))?;
            let k3 = rhs(t + dt / 2.0, &(&w + &k2 * C64::new(dt / 2.0, 0.0)))?;
            let k4 = rhs(t + dt, &(&w + &k3 * C64::new(dt, 0.0)))?;
            w += (k1 + k2 * C64::new(2.0, 0.0) + k3 * C64::new(2.0, 0.0) + k4) * C64::new(dt / 6.0, 0.0);
        }
    }
    Ok(w)
}

/// `exp(2πi h t Σ_k R^{ik})` over the points `k` enclosed by a circle loop
/// of `z^i` with `t` turns. Equals the holonomy when the lifted operators
/// commute pairwise.
pub fn circle_oracle(sys: &KzSystem, lp: &LoopSpec) -> Result<DMatrix<C64>> {
    let LoopKind::Circle { moving, center, radius, turns } = lp.kind() else {
        return Err(Error::InvalidLoop("the exponential comparison needs a circle loop".into()));
    };
    let c = match center {
        Center::Index(j) => lp.base()[*j],
        Center::Point(p) => *p,
    };
    let d = sys.total_dim();
    let mut sum = DMatrix::<C64>::zeros(d, d);
    for k in (0..sys.points()).filter(|k| k != moving) {
        if (lp.base()[k] - c).norm() < *radius {
            sum += sys.lifted(*moving, k);
        }
    }
    let factor = C64::new(0.0, 2.0 * std::f64::consts::PI * f64::from(*turns)) * sys.h();
    Ok((sum * factor).exp())
}

/// Largest entrywise modulus of `a − b`.
pub fn max_abs_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Order {
    /// Every run agreed exactly.
    Exact,
    Estimated(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Convergence {
    pub steps: [usize; 3],
    /// `|W_s − W_4s|` and `|W_2s − W_4s|`.
    pub errors: [f64; 2],
    pub order: Order,
}

/// Runs `s`, `2s` and `4s` steps. For an order-`p` method the error ratio
/// against the finest run is `2^p + 1`.
pub fn convergence_order(sys: &KzSystem, lp: &LoopSpec) -> Result<Convergence> {
    let s = lp.steps();
    let steps = [s, 2 * s, 4 * s];
    let runs = steps
        .iter()
        .map(|&k| integrate_holonomy(sys, &lp.with_steps(k)))
        .collect::<Result<Vec<_>>>()?;
    let e1 = max_abs_diff(&runs[0], &runs[2]);
    let e2 = max_abs_diff(&runs[1], &runs[2]);
    let order = if e1 == 0.0 && e2 == 0.0 {
        Order::Exact
    } else if e2 == 0.0 {
        Order::Estimated(f64::INFINITY)
    } else {
        let ratio = e1 / e2;
        Order::Estimated(if ratio > 1.0 + f64::EPSILON { (ratio - 1.0).log2() } else { ratio.log2() })
    };
    Ok(Convergence { steps, errors: [e1, e2], order })
}
