use num_traits::{Signed, Zero};

use crate::rational::{format_rational, Rational};
use crate::{Error, Result};

/// Continuous piecewise-affine function on `[0, ∞)`.
///
/// Given by its graph vertices `(x_i, y_i)` with `x_0 = 0` and strictly
/// increasing `x_i`, interpolated linearly, and continued after the last
/// vertex by a ray of slope `final_slope`. Vertices interior to a straight
/// run are dropped, so equal functions have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseAffineFunction {
    points: Vec<(Rational, Rational)>,
    final_slope: Rational,
}

impl PiecewiseAffineFunction {
    pub fn new(points: Vec<(Rational, Rational)>, final_slope: Rational) -> Result<Self> {
        match points.first() {
            None => return Err(Error::InvalidFunction("no vertices".into())),
            Some((x0, _)) if !x0.is_zero() => {
                return Err(Error::InvalidFunction(format!(
                    "first vertex at {} instead of 0",
                    format_rational(x0)
                )))
            }
            _ => {}
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidFunction("vertex abscissae must increase strictly".into()));
        }
        Ok(Self::canonical(points, final_slope))
    }

    fn canonical(points: Vec<(Rational, Rational)>, final_slope: Rational) -> Self {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            while out.len() >= 2 {
                let n = out.len();
                if slope(&out[n - 2], &out[n - 1]) == slope(&out[n - 1], &p) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        while out.len() >= 2 && slope(&out[out.len() - 2], &out[out.len() - 1]) == final_slope {
            out.pop();
        }
        PiecewiseAffineFunction {
            points: out,
            final_slope,
        }
    }

    /// Constant-then-linear `t ↦ slope·t`.
    pub fn linear(slope: Rational) -> Self {
        PiecewiseAffineFunction {
            points: vec![(Rational::zero(), Rational::zero())],
            final_slope: slope,
        }
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn final_slope(&self) -> &Rational {
        &self.final_slope
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter().map(|(x, _)| x)
    }

    /// Value at `x >= 0`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x.is_negative() {
            return Err(Error::Domain(format!("{} is negative", format_rational(x))));
        }
        Ok(self.value(x))
    }

    pub(crate) fn value(&self, x: &Rational) -> Rational {
        let idx = self.points.partition_point(|(px, _)| px <= x);
        let i = idx.saturating_sub(1);
        let (x0, y0) = &self.points[i];
        let slope = self.slope_after(i);
        y0 + slope * (x - x0)
    }

    /// Slope of the segment starting at vertex `i`.
    pub fn slope_after(&self, i: usize) -> Rational {
        if i + 1 < self.points.len() {
            slope(&self.points[i], &self.points[i + 1])
        } else {
            self.final_slope.clone()
        }
    }

    /// Slopes of all segments, ending with the final ray.
    pub fn slopes(&self) -> Vec<Rational> {
        (0..self.points.len()).map(|i| self.slope_after(i)).collect()
    }

    /// Right derivative at `x >= 0`.
    pub fn right_slope(&self, x: &Rational) -> Rational {
        let idx = self.points.partition_point(|(px, _)| px <= x);
        self.slope_after(idx.saturating_sub(1))
    }

    pub fn is_concave(&self) -> bool {
        self.slopes().windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.slopes().iter().all(|s| !s.is_negative())
    }
}

pub(crate) fn slope(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn collinear_vertices_are_merged() {
        let f = PiecewiseAffineFunction::new(
            vec![(int(0), int(0)), (int(1), int(1)), (int(2), int(2)), (int(3), int(2))],
            int(0),
        )
        .unwrap();
        assert_eq!(f.points(), &[(int(0), int(0)), (int(2), int(2))]);
        assert_eq!(f.value(&rat(7, 2)), int(2));
        assert_eq!(f.value(&rat(1, 2)), rat(1, 2));
    }

    #[test]
    fn evaluation_and_shape() {
        let f = PiecewiseAffineFunction::new(vec![(int(0), int(0)), (rat(1, 2), int(1))], int(0)).unwrap();
        assert_eq!(f.eval(&rat(1, 4)).unwrap(), rat(1, 2));
        assert_eq!(f.eval(&int(9)).unwrap(), int(1));
        assert!(f.is_concave() && f.is_nondecreasing());
        assert!(f.eval(&int(-1)).is_err());
        assert!(PiecewiseAffineFunction::new(vec![(int(1), int(0))], int(0)).is_err());
    }
}
