//! Exact piecewise function classes.
//!
//! * [`StepFunction`]: finitely many constant pieces on half-open intervals.
//! * [`DecreasingTailFunction`]: a nonincreasing step head followed by an
//!   optional power tail `c·s^(-k)`, `k >= 2`.
//! * [`PiecewiseAffineFunction`]: continuous, piecewise affine on `[0, ∞)`.
//! * [`PartialIntegral`]: `t ↦ ∫₀ᵗ f` of a nonincreasing function, with
//!   exact rational antiderivatives on power pieces.

pub(crate) mod affine;
mod integral;
mod step;
mod tail;

pub use affine::PiecewiseAffineFunction;
pub use integral::{dominates_everywhere, first_violation, IntegralTail, PartialIntegral, PowerTerm};
pub use step::{Domain, Piece, StepFunction};
pub use tail::{DecreasingTailFunction, PowerTail};

use crate::rational::{Extended, Rational};
use crate::Result;

/// Borrowed view over the two integrable input classes.
#[derive(Debug, Clone, Copy)]
pub enum Integrand<'a> {
    Step(&'a StepFunction),
    Decreasing(&'a DecreasingTailFunction),
}

impl<'a> From<&'a StepFunction> for Integrand<'a> {
    fn from(f: &'a StepFunction) -> Self {
        Integrand::Step(f)
    }
}

impl<'a> From<&'a DecreasingTailFunction> for Integrand<'a> {
    fn from(f: &'a DecreasingTailFunction) -> Self {
        Integrand::Decreasing(f)
    }
}

impl Integrand<'_> {
    /// `∫₀ᵗ |f(s)| ds`.
    pub fn integrate(&self, t: &Extended) -> Result<Rational> {
        match self {
            Integrand::Step(f) => f.integrate(t),
            Integrand::Decreasing(f) => f.integrate(t),
        }
    }
}
