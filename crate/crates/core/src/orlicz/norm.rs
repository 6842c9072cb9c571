use num_traits::{One, Signed, Zero};

use super::{modular, OrliczFunction};
use crate::piecewise::{DecreasingTailFunction, Domain, Integrand, StepFunction};
use crate::rational::{int, pow2, Extended, Rational};
use crate::{Error, Result};

/// Default enclosure width is `2^DEFAULT_EPS_LOG2`.
pub const DEFAULT_EPS_LOG2: i64 = -40;

/// Scales beyond `2^CEILING_LOG2` are treated as divergence.
const CEILING_LOG2: i64 = 256;

/// Certified bracket `lower ≤ value ≤ upper` with `upper − lower ≤ width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormEnclosure {
    pub lower: Rational,
    pub upper: Rational,
    pub width: Rational,
}

impl NormEnclosure {
    pub fn exact(value: Rational) -> Self {
        NormEnclosure {
            lower: value.clone(),
            upper: value,
            width: Rational::zero(),
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    pub fn overlaps(&self, other: &NormEnclosure) -> bool {
        self.lower <= other.upper && other.lower <= self.upper
    }

    pub fn scale(&self, by: &Rational) -> NormEnclosure {
        NormEnclosure {
            lower: &self.lower * by,
            upper: &self.upper * by,
            width: &self.width * by,
        }
    }
}

/// Enclosure of `‖f‖ = inf{c > 0 : ∫ G(|f|/c) ≤ 1}` by bisection on `c`.
///
/// `c ↦ ∫ G(|f|/c)` is nonincreasing and exactly computable, and the set
/// where it is at most 1 is a closed ray `[c*, ∞)`. The loop keeps
/// `modular(lower) > 1` (or `lower = 0`) and `modular(upper) ≤ 1`.
pub fn luxemburg_norm<'a>(g: &OrliczFunction, f: impl Into<Integrand<'a>>, eps: &Rational) -> Result<NormEnclosure> {
    if !eps.is_positive() {
        return Err(Error::Domain("enclosure width must be positive".into()));
    }
    let f = f.into();
    let is_zero = match f {
        Integrand::Step(s) => s.is_zero(),
        Integrand::Decreasing(d) => d.is_zero(),
    };
    if is_zero {
        return Ok(NormEnclosure::exact(Rational::zero()));
    }
    let one = Extended::Finite(Rational::one());
    let fits = |c: &Rational| -> Result<bool> { Ok(scaled_modular(g, f, c)? <= one) };

    let ceiling = pow2(CEILING_LOG2);
    let mut upper = Rational::one();
    while !fits(&upper)? {
        upper *= int(2);
        if upper > ceiling {
            return Err(Error::Divergence(format!("modular exceeds 1 up to scale 2^{CEILING_LOG2}")));
        }
    }
    let mut lower = &upper / int(2);
    let mut halvings = 0;
    while fits(&lower)? {
        upper = lower.clone();
        lower /= int(2);
        halvings += 1;
        if halvings > 2 * CEILING_LOG2 {
            lower = Rational::zero();
            break;
        }
    }
    while &upper - &lower > *eps {
        let mid = (&lower + &upper) / int(2);
        if fits(&mid)? {
            upper = mid;
        } else {
            lower = mid;
        }
    }
    Ok(NormEnclosure {
        lower,
        upper,
        width: eps.clone(),
    })
}

fn scaled_modular(g: &OrliczFunction, f: Integrand<'_>, c: &Rational) -> Result<Extended> {
    let by = c.recip();
    match f {
        Integrand::Step(s) => modular(g, &s.scale(&by)),
        Integrand::Decreasing(d) => {
            let scaled: DecreasingTailFunction = d.scale(&by)?;
            modular(g, &scaled)
        }
    }
}

/// `φ(t) = ‖χ_(0,t)‖ = 1 / G⁻¹(1/t)`, as an enclosure.
pub fn fundamental_function(g: &OrliczFunction, t: &Rational, eps: &Rational) -> Result<NormEnclosure> {
    if !t.is_positive() {
        return Err(Error::Domain("fundamental function needs t > 0".into()));
    }
    if !g.flags().unbounded_slope {
        return Err(Error::Precondition("G must have an unbounded density".into()));
    }
    let indicator = StepFunction::indicator(Domain::HalfLine, Rational::zero(), t.clone())?;
    luxemburg_norm(g, &indicator, eps)
}
