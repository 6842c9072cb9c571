use num_traits::{Signed, Zero};

use super::step::{Domain, Piece, StepFunction};
use crate::rational::{format_rational, int, powi, Extended, Rational};
use crate::{Error, Result};

/// `coeff · s^(-exponent)` for `s >= start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerTail {
    start: Rational,
    coeff: Rational,
    exponent: u32,
}

impl PowerTail {
    pub fn new(start: Rational, coeff: Rational, exponent: u32) -> Result<Self> {
        if !start.is_positive() {
            return Err(Error::InvalidFunction("power tail must start at a positive point".into()));
        }
        if !coeff.is_positive() {
            return Err(Error::InvalidFunction("power tail coefficient must be positive".into()));
        }
        if exponent < 2 {
            return Err(Error::InvalidFunction(format!(
                "power tail exponent {exponent} is not integrable at infinity (need k >= 2)"
            )));
        }
        Ok(PowerTail {
            start,
            coeff,
            exponent,
        })
    }

    pub fn start(&self) -> &Rational {
        &self.start
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn value_at(&self, s: &Rational) -> Rational {
        &self.coeff * powi(s, -(self.exponent as i64))
    }

    /// Value at `start`, the largest value of the tail.
    pub fn max_value(&self) -> Rational {
        self.value_at(&self.start)
    }

    /// `∫_a^∞ c·s^(-k) ds = c·a^(1-k)/(k-1)` for `a >= start`.
    pub fn integral_from(&self, a: &Rational) -> Rational {
        let k = self.exponent as i64;
        &self.coeff * powi(a, 1 - k) / int(k - 1)
    }

    pub fn scale(&self, by: &Rational) -> Self {
        PowerTail {
            start: self.start.clone(),
            coeff: &self.coeff * by,
            exponent: self.exponent,
        }
    }
}

/// Nonincreasing function on `(0, ∞)`: constant pieces contiguous from 0,
/// optionally followed by a power tail joined without an upward jump.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecreasingTailFunction {
    head: StepFunction,
    tail: Option<PowerTail>,
}

impl DecreasingTailFunction {
    pub fn new(head: StepFunction, tail: Option<PowerTail>) -> Result<Self> {
        let head = head.with_domain(Domain::HalfLine)?;
        if !head.is_nonincreasing() {
            return Err(Error::InvalidFunction(
                "head must be nonnegative and nonincreasing, contiguous from 0".into(),
            ));
        }
        if let Some(tail) = &tail {
            let last = head.pieces().last().ok_or_else(|| {
                Error::InvalidFunction("a power tail needs a head covering [0, start)".into())
            })?;
            if &last.end != tail.start() {
                return Err(Error::InvalidFunction(format!(
                    "head ends at {} but the tail starts at {}",
                    format_rational(&last.end),
                    format_rational(tail.start())
                )));
            }
            if last.value < tail.max_value() {
                return Err(Error::InvalidFunction(
                    "the tail jumps above the last head value".into(),
                ));
            }
        }
        Ok(DecreasingTailFunction { head, tail })
    }

    /// A nonincreasing step function without tail.
    pub fn from_step(f: &StepFunction) -> Result<Self> {
        DecreasingTailFunction::new(f.clone(), None)
    }

    pub fn head(&self) -> &StepFunction {
        &self.head
    }

    pub fn tail(&self) -> Option<&PowerTail> {
        self.tail.as_ref()
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        match &self.tail {
            Some(tail) if s >= tail.start() => tail.value_at(s),
            _ => self.head.eval(s),
        }
    }

    /// Value at `0`, the supremum of the function.
    pub fn sup_value(&self) -> Rational {
        self.head.max_abs()
    }

    pub fn is_zero(&self) -> bool {
        self.head.is_zero()
    }

    pub fn scale(&self, by: &Rational) -> Result<Self> {
        if by.is_negative() {
            return Err(Error::Domain("negative scale of a decreasing function".into()));
        }
        if by.is_zero() {
            return Ok(DecreasingTailFunction::default());
        }
        Ok(DecreasingTailFunction {
            head: self.head.scale(by),
            tail: self.tail.as_ref().map(|t| t.scale(by)),
        })
    }

    /// `∫₀^∞ f`.
    pub fn total_integral(&self) -> Rational {
        let mut total = self.head.total_integral();
        if let Some(tail) = &self.tail {
            total += tail.integral_from(tail.start());
        }
        total
    }

    /// `∫₀ᵗ f(s) ds`.
    pub fn integrate(&self, t: &Extended) -> Result<Rational> {
        let t = match t {
            Extended::Infinity => return Ok(self.total_integral()),
            Extended::Finite(t) if t.is_negative() => {
                return Err(Error::Domain(format!("t = {} is negative", format_rational(t))))
            }
            Extended::Finite(t) => t,
        };
        let mut total = self.head.integrate_between(&Rational::zero(), t);
        if let Some(tail) = &self.tail {
            if t > tail.start() {
                total += tail.integral_from(tail.start()) - tail.integral_from(t);
            }
        }
        Ok(total)
    }

    /// `f · χ_[0, end)`; the cut must not fall inside the power tail.
    pub fn truncate(&self, end: &Rational) -> Result<Self> {
        if let Some(tail) = &self.tail {
            if end > tail.start() {
                return Err(Error::Unsupported("truncation inside a power tail".into()));
            }
        }
        DecreasingTailFunction::new(self.head.restrict(&Rational::zero(), end), None)
    }

    /// Pieces of the head plus the tail start, if any.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut points = self.head.breakpoints();
        if let Some(tail) = &self.tail {
            points.push(tail.start().clone());
        }
        points.dedup();
        points
    }

    /// Convenience constructor: `χ_[0, a) + c·s^(-k)` style majorants with
    /// a single head level.
    pub fn plateau_with_tail(height: Rational, width: Rational, coeff: Rational, k: u32) -> Result<Self> {
        let head = StepFunction::new(
            Domain::HalfLine,
            vec![Piece::new(Rational::zero(), width.clone(), height)],
        )?;
        DecreasingTailFunction::new(head, Some(PowerTail::new(width, coeff, k)?))
    }
}

impl Default for DecreasingTailFunction {
    fn default() -> Self {
        DecreasingTailFunction {
            head: StepFunction::zero(Domain::HalfLine),
            tail: None,
        }
    }
}
