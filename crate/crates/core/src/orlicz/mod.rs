//! Orlicz functions `G(x) = ∫₀ˣ p` with piecewise-affine densities.
//!
//! `G` is evaluated exactly (piecewise quadratic with rational
//! coefficients). The modular `∫ G(|f|)` is exact for step functions. The
//! Luxemburg norm `inf{c > 0 : ∫ G(|f|/c) ≤ 1}` and the fundamental function
//! are irrational in general and are returned as [`NormEnclosure`]s.

mod density;
mod norm;

pub use density::{Density, DensitySegment};
pub use norm::{fundamental_function, luxemburg_norm, NormEnclosure, DEFAULT_EPS_LOG2};

use num_traits::{Signed, Zero};

use crate::piecewise::{Integrand, StepFunction};
use crate::rational::{format_rational, int, powi, Extended, Rational};
use crate::{Error, Result};

/// Convex `G(x) = ∫₀ˣ p(t) dt`, `G = +∞` past the density limit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrliczFunction {
    density: Density,
    /// `G` at every segment start.
    cumulative: Vec<Rational>,
}

/// Which N-function conditions hold for `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NFunctionFlags {
    /// `p(0) = 0`, equivalently `G(λ)/λ → 0` as `λ → 0`.
    pub vanishing_slope_at_zero: bool,
    /// `p > 0` immediately to the right of 0, so `G(λ) > 0` for `λ > 0`.
    pub positive_off_zero: bool,
    /// `G` is finite everywhere and `p → ∞`, so `G(λ)/λ → ∞`.
    pub unbounded_slope: bool,
}

impl NFunctionFlags {
    pub fn is_n_function(&self) -> bool {
        self.vanishing_slope_at_zero && self.positive_off_zero && self.unbounded_slope
    }
}

impl OrliczFunction {
    pub fn new(density: Density) -> Result<Self> {
        if density.is_zero() {
            return Err(Error::InvalidFunction("G vanishes identically".into()));
        }
        let segs = density.segments();
        let mut cumulative = Vec::with_capacity(segs.len());
        let mut acc = Rational::zero();
        for (i, seg) in segs.iter().enumerate() {
            if i > 0 {
                let prev = &segs[i - 1];
                acc += quadratic_integral(&prev.value, &prev.slope, &(&seg.start - &prev.start));
            }
            cumulative.push(acc.clone());
        }
        Ok(OrliczFunction { density, cumulative })
    }

    /// `G(x) = x^2`.
    pub fn square() -> Self {
        OrliczFunction::new(Density::linear(int(2))).expect("valid density")
    }

    pub fn density(&self) -> &Density {
        &self.density
    }

    /// `G(x)` for `x >= 0`.
    pub fn evaluate(&self, x: &Rational) -> Result<Extended> {
        if x.is_negative() {
            return Err(Error::Domain(format!("G evaluated at {}", format_rational(x))));
        }
        Ok(self.value(x))
    }

    pub(crate) fn value(&self, x: &Rational) -> Extended {
        if let Some(limit) = self.density.limit() {
            if x > limit {
                return Extended::Infinity;
            }
        }
        let i = self.density.segment_index_of(x);
        let seg = &self.density.segments()[i];
        Extended::Finite(&self.cumulative[i] + quadratic_integral(&seg.value, &seg.slope, &(x - &seg.start)))
    }

    pub fn flags(&self) -> NFunctionFlags {
        let first = &self.density.segments()[0];
        let last = self.density.segments().last().expect("nonempty");
        NFunctionFlags {
            vanishing_slope_at_zero: first.value.is_zero(),
            positive_off_zero: first.value.is_positive() || first.slope.is_positive(),
            unbounded_slope: self.density.limit().is_none() && last.slope.is_positive(),
        }
    }

    /// `G*` as an Orlicz function, when it is not identically zero.
    pub fn conjugate(&self) -> Result<OrliczFunction> {
        OrliczFunction::new(self.density.generalized_inverse()?)
    }

    /// `(v, σ)` with `G(x) = v·x + σ·x²/2` on `[0, bound]`, when the first
    /// density segment covers that range.
    pub(crate) fn initial_quadratic(&self, bound: &Rational) -> Option<(Rational, Rational)> {
        let segs = self.density.segments();
        let covered = segs.get(1).is_none_or(|next| &next.start >= bound)
            && self.density.limit().is_none_or(|l| l >= bound);
        covered.then(|| (segs[0].value.clone(), segs[0].slope.clone()))
    }
}

fn quadratic_integral(value: &Rational, slope: &Rational, d: &Rational) -> Rational {
    value * d + slope * d * d / int(2)
}

/// `𝐆(f) = ∫ G(|f(t)|) dt`.
///
/// Exact for step functions. A power tail `c·s^(-k)` is accepted only when
/// `G` is a single quadratic on the range of the tail, where the
/// composition integrates to rationals; otherwise the call is rejected.
pub fn modular<'a>(g: &OrliczFunction, f: impl Into<Integrand<'a>>) -> Result<Extended> {
    match f.into() {
        Integrand::Step(f) => Ok(step_modular(g, f)),
        Integrand::Decreasing(f) => {
            let mut total = step_modular(g, f.head());
            if let Some(tail) = f.tail() {
                let (v, sigma) = g.initial_quadratic(&tail.max_value()).ok_or_else(|| {
                    Error::Unsupported("G is not a single quadratic on the range of the power tail".into())
                })?;
                let k = tail.exponent() as i64;
                let (c, t0) = (tail.coeff(), tail.start());
                let linear = &v * c * powi(t0, 1 - k) / int(k - 1);
                let square = &sigma * c * c * powi(t0, 1 - 2 * k) / int(2 * (2 * k - 1));
                total = total.add(&Extended::Finite(linear + square));
            }
            Ok(total)
        }
    }
}

fn step_modular(g: &OrliczFunction, f: &StepFunction) -> Extended {
    f.pieces().iter().fold(Extended::Finite(Rational::zero()), |acc, p| {
        acc.add(&g.value(&p.value.abs()).scale(&p.len()))
    })
}

pub fn is_n_function(g: &OrliczFunction) -> NFunctionFlags {
    g.flags()
}

/// `G*(t) = sup_{s ≥ 0} (s·t − G(s))`, via the generalized inverse of the
/// density. When `p` is eventually constant at `V`, `G*` carries the limit
/// `V` and is `+∞` beyond it.
pub fn young_conjugate(g: &OrliczFunction) -> Result<OrliczFunction> {
    g.conjugate()
}

/// `s·t ≤ G(s) + G*(t)`.
pub fn young_inequality_check(g: &OrliczFunction, s: &Rational, t: &Rational) -> Result<bool> {
    if s.is_negative() || t.is_negative() {
        return Err(Error::Domain("Young's inequality is checked on s, t >= 0".into()));
    }
    let conj = g.conjugate()?;
    let rhs = g.value(s).add(&conj.value(t));
    Ok(Extended::Finite(s * t) <= rhs)
}
