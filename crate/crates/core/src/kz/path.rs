//! Closed loops in configuration space.

use std::f64::consts::PI;

use nalgebra::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

#[derive(Clone, Debug, PartialEq)]
pub enum Center {
    /// Another coordinate of the configuration (0-based).
    Index(usize),
    Point(C64),
}

#[derive(Clone, Debug, PartialEq)]
pub enum LoopKind {
    /// `z^moving` runs `turns` times around the center. It starts at the
    /// radial projection of its base value onto the circle.
    Circle { moving: usize, center: Center, radius: f64, turns: i32 },
    /// Straight segments base → waypoints → base; each waypoint is a full
    /// configuration.
    Polygon { waypoints: Vec<Vec<C64>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LoopSpec {
    base: Vec<C64>,
    kind: LoopKind,
    steps: usize,
}

#[derive(Clone, Debug)]
pub(crate) enum Segment {
    Arc { start: Vec<C64>, moving: usize, center: C64, radius: f64, theta0: f64, dtheta: f64 },
    Line { from: Vec<C64>, to: Vec<C64> },
}

impl Segment {
    /// Position and velocity at `s ∈ [0, 1]`.
    pub(crate) fn eval(&self, s: f64) -> (Vec<C64>, Vec<C64>) {
        match self {
            Segment::Arc { start, moving, center, radius, theta0, dtheta } => {
                let mut z = start.clone();
                let mut dz = vec![C64::new(0.0, 0.0); z.len()];
                let e = C64::from_polar(1.0, theta0 + s * dtheta);
                if s != 1.0 {
                    z[*moving] = center + e * *radius;
                }
                dz[*moving] = C64::new(0.0, *dtheta) * e * *radius;
                (z, dz)
            }
            Segment::Line { from, to } => {
                let z = if s == 1.0 { to.clone() } else { from.iter().zip(to).map(|(a, b)| a + (b - a) * s).collect() };
                let dz = from.iter().zip(to).map(|(a, b)| b - a).collect();
                (z, dz)
            }
        }
    }
}

fn min_distance(z: &[C64]) -> f64 {
    let mut best = f64::INFINITY;
    for a in 0..z.len() {
        for b in a + 1..z.len() {
            best = best.min((z[a] - z[b]).norm());
        }
    }
    best
}

fn diameter(z: &[C64]) -> f64 {
    let mut best: f64 = 0.0;
    for a in 0..z.len() {
        for b in a + 1..z.len() {
            best = best.max((z[a] - z[b]).norm());
        }
    }
    best
}

impl LoopSpec {
    pub fn new(base: Vec<C64>, kind: LoopKind, steps: usize) -> Result<Self> {
        let n = base.len();
        if n < 2 {
            return Err(Error::InvalidLoop("need at least two points".into()));
        }
        if base.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidLoop("base coordinates must be finite".into()));
        }
        if min_distance(&base) == 0.0 {
            return Err(Error::InvalidLoop("base coordinates must be distinct".into()));
        }
        if steps == 0 {
            return Err(Error::InvalidLoop("step count must be positive".into()));
        }
        match &kind {
            LoopKind::Circle { moving, center, radius, turns } => {
                if *moving >= n {
                    return Err(Error::InvalidLoop(format!("moving index {} out of range", moving + 1)));
                }
                if let Center::Index(j) = center {
                    if *j >= n || j == moving {
                        return Err(Error::InvalidLoop("center must be another point of the configuration".into()));
                    }
                }
                if !(radius.is_finite() && *radius > 0.0) {
                    return Err(Error::InvalidLoop("radius must be positive".into()));
                }
                if *turns == 0 {
                    return Err(Error::InvalidLoop("turns must be nonzero".into()));
                }
            }
            LoopKind::Polygon { waypoints } => {
                if waypoints.is_empty() {
                    return Err(Error::InvalidLoop("polygon needs at least one waypoint".into()));
                }
                if waypoints.iter().any(|w| w.len() != n) {
                    return Err(Error::InvalidLoop(format!("every waypoint needs {n} coordinates")));
                }
            }
        }
        Ok(LoopSpec { base, kind, steps })
    }

    pub fn circle(base: Vec<C64>, moving: usize, center: usize, radius: f64, steps: usize) -> Result<Self> {
        Self::new(base, LoopKind::Circle { moving, center: Center::Index(center), radius, turns: 1 }, steps)
    }

    pub fn base(&self) -> &[C64] {
        &self.base
    }

    pub fn kind(&self) -> &LoopKind {
        &self.kind
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn points(&self) -> usize {
        self.base.len()
    }

    pub fn with_steps(&self, steps: usize) -> Self {
        LoopSpec { steps, ..self.clone() }
    }

    /// The same loop traversed backwards.
    pub fn reversed(&self) -> Self {
        let kind = match &self.kind {
            LoopKind::Circle { moving, center, radius, turns } => {
                LoopKind::Circle { moving: *moving, center: center.clone(), radius: *radius, turns: -turns }
            }
            LoopKind::Polygon { waypoints } => {
                LoopKind::Polygon { waypoints: waypoints.iter().rev().cloned().collect() }
            }
        };
        LoopSpec { kind, ..self.clone() }
    }

    /// The configuration the loop starts and ends at.
    pub fn start(&self) -> Vec<C64> {
        match self.segments().first() {
            Some(seg) => seg.eval(0.0).0,
            None => self.base.clone(),
        }
    }

    /// `1e-6` times the diameter of the start configuration.
    pub fn guard(&self) -> f64 {
        1e-6 * diameter(&self.start())
    }

    /// Segments with their step counts.
    pub(crate) fn segments(&self) -> Vec<Segment> {
        match &self.kind {
            LoopKind::Circle { moving, center, radius, turns } => {
                let c = match center {
                    Center::Index(j) => self.base[*j],
                    Center::Point(p) => *p,
                };
                let offset = self.base[*moving] - c;
                let theta0 = if offset.norm() == 0.0 { 0.0 } else { offset.arg() };
                let mut start = self.base.clone();
                start[*moving] = c + C64::from_polar(*radius, theta0);
                vec![Segment::Arc {
                    start,
                    moving: *moving,
                    center: c,
                    radius: *radius,
                    theta0,
                    dtheta: 2.0 * PI * f64::from(*turns),
                }]
            }
            LoopKind::Polygon { waypoints } => {
                let mut corners = vec![self.base.clone()];
                corners.extend(waypoints.iter().cloned());
                corners.push(self.base.clone());
                corners.windows(2).map(|w| Segment::Line { from: w[0].clone(), to: w[1].clone() }).collect()
            }
        }
    }

    pub(crate) fn steps_per_segment(&self) -> usize {
        let k = self.segments().len();
        self.steps.div_ceil(k).max(1)
    }

    /// Fails with `PathTooClose` if `z` brings two points within the guard.
    pub(crate) fn check_distance(&self, z: &[C64], guard: f64) -> Result<()> {
        let d = min_distance(z);
        if d <= guard {
            return Err(Error::PathTooClose { distance: d, guard });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn circle_starts_on_the_radial_projection() {
        let l = LoopSpec::circle(vec![c(3.0, 0.0), c(0.0, 0.0), c(10.0, 0.0)], 0, 1, 1.5, 100).unwrap();
        let start = l.start();
        assert_eq!(start[0], c(1.5, 0.0));
        let seg = &l.segments()[0];
        assert_eq!(seg.eval(1.0).0, start);
        let (mid, _) = seg.eval(0.5);
        assert!((mid[0] - c(-1.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn invalid_loops_are_rejected() {
        let base = vec![c(0.0, 0.0), c(1.0, 0.0)];
        assert!(LoopSpec::circle(base.clone(), 0, 0, 1.0, 10).is_err());
        assert!(LoopSpec::circle(base.clone(), 0, 1, -1.0, 10).is_err());
        assert!(LoopSpec::circle(base.clone(), 0, 1, 1.0, 0).is_err());
        assert!(LoopSpec::circle(vec![c(0.0, 0.0), c(0.0, 0.0)], 0, 1, 1.0, 10).is_err());
        let poly = LoopKind::Polygon { waypoints: vec![vec![c(0.0, 0.0)]] };
        assert!(LoopSpec::new(base, poly, 10).is_err());
    }

    #[test]
    fn polygon_closes() {
        let base = vec![c(0.0, 0.0), c(5.0, 0.0)];
        let w = vec![vec![c(1.0, 0.0), c(5.0, 0.0)], vec![c(1.0, 1.0), c(5.0, 0.0)]];
        let l = LoopSpec::new(base.clone(), LoopKind::Polygon { waypoints: w }, 30).unwrap();
        let segs = l.segments();
        assert_eq!(segs.len(), 3);
        assert_eq!(segs[2].eval(1.0).0, base);
        assert_eq!(l.steps_per_segment(), 10);
    }
}
