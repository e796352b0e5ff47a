//! Continuous piecewise-linear functions on `t >= 0` with exact rational breakpoints.

use num_traits::{Signed, Zero};

use crate::field::Rational;

/// Values at increasing breakpoints starting at `t = 0`, then a ray of slope
/// `tail` after the last breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pwl {
    points: Vec<(Rational, Rational)>,
    tail: Rational,
}

impl Pwl {
    pub fn constant(v: Rational) -> Self {
        Pwl {
            points: vec![(Rational::zero(), v)],
            tail: Rational::zero(),
        }
    }

    /// Breakpoints `(t, value)`, first at `t = 0`.
    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn tail_slope(&self) -> &Rational {
        &self.tail
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let idx = self.points.partition_point(|(x, _)| x <= t);
        let (x0, y0) = &self.points[idx.saturating_sub(1)];
        match self.points.get(idx) {
            Some((x1, y1)) => y0 + (y1 - y0) * (t - x0) / (x1 - x0),
            None => y0 + &self.tail * (t - x0),
        }
    }

    /// Slopes of every segment, tail included.
    pub fn slopes(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .points
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
            .collect();
        out.push(self.tail.clone());
        out
    }

    /// `f(t) + slope·t`
    pub fn tilt(&self, slope: &Rational) -> Self {
        Pwl {
            points: self
                .points
                .iter()
                .map(|(t, v)| (t.clone(), v + slope * t))
                .collect(),
            tail: &self.tail + slope,
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn min(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    /// Pointwise `f - g`.
    pub fn minus(&self, other: &Self) -> Self {
        let ts = self.merged_breaks(other);
        let points = ts
            .into_iter()
            .map(|t| {
                let v = self.eval(&t) - other.eval(&t);
                (t, v)
            })
            .collect();
        Pwl {
            points,
            tail: &self.tail - &other.tail,
        }
        .simplified()
    }

    fn merged_breaks(&self, other: &Self) -> Vec<Rational> {
        let mut ts: Vec<Rational> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|(t, _)| t.clone())
            .collect();
        ts.sort();
        ts.dedup();
        ts
    }

    fn combine(&self, other: &Self, take_max: bool) -> Self {
        let d = self.minus(other);
        let mut ts = self.merged_breaks(other);
        // crossings of f - g strictly inside segments or on the tail
        for w in d.points.windows(2) {
            let ((t0, v0), (t1, v1)) = (&w[0], &w[1]);
            if v0.signum() * v1.signum() < Rational::zero() {
                ts.push(t0 + (t1 - t0) * v0 / (v0 - v1));
            }
        }
        let (tl, vl) = d.points.last().unwrap();
        if !d.tail.is_zero() && (vl.is_positive() && d.tail.is_negative() || vl.is_negative() && d.tail.is_positive()) {
            ts.push(tl - vl / &d.tail);
        }
        ts.sort();
        ts.dedup();
        let pick = |a: Rational, b: Rational| if (a >= b) == take_max { a } else { b };
        let points: Vec<(Rational, Rational)> = ts
            .into_iter()
            .map(|t| {
                let v = pick(self.eval(&t), other.eval(&t));
                (t, v)
            })
            .collect();
        // beyond the last point no more crossings: the larger one keeps the lead
        let last_t = &points.last().unwrap().0;
        let (fa, ga) = (self.eval(last_t), other.eval(last_t));
        let tail = if fa != ga {
            if (fa > ga) == take_max { self.tail.clone() } else { other.tail.clone() }
        } else if (self.tail >= other.tail) == take_max {
            self.tail.clone()
        } else {
            other.tail.clone()
        };
        Pwl { points, tail }.simplified()
    }

    /// Keeps the function up to `t0` and holds it constant afterwards.
    pub fn freeze_at(&self, t0: &Rational) -> Self {
        let v0 = self.eval(t0);
        let mut points: Vec<(Rational, Rational)> = self
            .points
            .iter()
            .filter(|(t, _)| t < t0)
            .cloned()
            .collect();
        points.push((t0.clone(), v0));
        Pwl {
            points,
            tail: Rational::zero(),
        }
        .simplified()
    }

    /// Smallest `t >= 0` with `f(t) <= 0`, if any.
    pub fn first_nonpositive(&self) -> Option<Rational> {
        let (t0, v0) = &self.points[0];
        if !v0.is_positive() {
            return Some(t0.clone());
        }
        for w in self.points.windows(2) {
            let ((t0, v0), (t1, v1)) = (&w[0], &w[1]);
            if !v1.is_positive() {
                return Some(t0 + (t1 - t0) * v0 / (v0 - v1));
            }
        }
        let (tl, vl) = self.points.last().unwrap();
        self.tail
            .is_negative()
            .then(|| tl - vl / &self.tail)
    }

    /// Drops breakpoints where the slope does not change.
    fn simplified(mut self) -> Self {
        if self.points.len() < 2 {
            return self;
        }
        let slopes = self.slopes();
        let mut keep = vec![true; self.points.len()];
        for i in 1..self.points.len() {
            if slopes[i - 1] == slopes[i] {
                keep[i] = false;
            }
        }
        let mut it = keep.iter();
        self.points.retain(|_| *it.next().unwrap());
        self
    }
}
