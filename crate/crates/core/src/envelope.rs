//! Least concave majorants, their derivatives, and Marcinkiewicz norms.
//!
//! The majorant of a piecewise-affine `h` is the upper hull of its vertices
//! together with the direction of its final ray. Points are exact, and
//! collinear vertices are merged, so hulls compare by equality.

use num_traits::{Signed, Zero};

use crate::orlicz::{fundamental_function, NormEnclosure, OrliczFunction};
use crate::piecewise::affine::slope;
use crate::piecewise::{Domain, Piece, PiecewiseAffineFunction, StepFunction};
use crate::rational::{format_rational, max, Rational};
use crate::rearrangement::rearranged_partial_integral;
use crate::{Error, Result};

/// A concave nondecreasing `ψ` with `ψ(0) = 0`, and the vertices it was
/// built to dominate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcaveMajorant {
    psi: PiecewiseAffineFunction,
    source: Vec<(Rational, Rational)>,
}

impl ConcaveMajorant {
    /// Wraps an already concave, nondecreasing `ψ` with `ψ(0) = 0`.
    pub fn new(psi: PiecewiseAffineFunction) -> Result<Self> {
        if !psi.points()[0].1.is_zero() {
            return Err(Error::Precondition("ψ(0) must be 0".into()));
        }
        if !psi.is_concave() || !psi.is_nondecreasing() {
            return Err(Error::Precondition("ψ must be concave and nondecreasing".into()));
        }
        let source = psi.points().to_vec();
        Ok(ConcaveMajorant { psi, source })
    }

    pub fn psi(&self) -> &PiecewiseAffineFunction {
        &self.psi
    }

    pub fn source(&self) -> &[(Rational, Rational)] {
        &self.source
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        self.psi.eval(t)
    }

    pub fn derivative(&self, domain: Domain) -> Result<StepFunction> {
        derivative_step(self, domain)
    }
}

/// Least concave majorant of a nonnegative `h` with `h(0) = 0`.
pub fn least_concave_majorant(h: &PiecewiseAffineFunction) -> Result<ConcaveMajorant> {
    least_concave_majorant_of_max(std::slice::from_ref(h))
}

/// Least concave majorant of `max_i h_i`.
///
/// The hull of a maximum is the hull of the union of the graphs, so the
/// crossings of the `h_i` never need to be computed.
pub fn least_concave_majorant_of_max(hs: &[PiecewiseAffineFunction]) -> Result<ConcaveMajorant> {
    let final_slope = hs
        .iter()
        .map(|h| h.final_slope().clone())
        .max()
        .ok_or_else(|| Error::Precondition("no functions to majorize".into()))?;
    let mut points: Vec<(Rational, Rational)> = hs.iter().flat_map(|h| h.points().iter().cloned()).collect();
    points.sort();
    least_concave_majorant_of_points(points, final_slope)
}

/// Least concave function through or above `points` whose slope beyond the
/// last point is `final_slope`.
///
/// `points` must contain `(0, 0)` and have nonnegative ordinates; the
/// final slope must be nonnegative.
pub fn least_concave_majorant_of_points(
    mut points: Vec<(Rational, Rational)>,
    final_slope: Rational,
) -> Result<ConcaveMajorant> {
    points.sort();
    points.dedup();
    let origin = points.first().filter(|(x, _)| x.is_zero());
    match origin {
        Some((_, y)) if y.is_zero() => {}
        Some((_, y)) => {
            return Err(Error::Precondition(format!(
                "h(0) = {} but a majorant must start at 0",
                format_rational(y)
            )))
        }
        None => return Err(Error::Precondition("h must be given at 0".into())),
    }
    if points.iter().any(|(x, y)| x.is_negative() || y.is_negative()) || final_slope.is_negative() {
        return Err(Error::Precondition("h must be nonnegative".into()));
    }

    // Several ordinates at one abscissa: keep the largest.
    let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for (x, y) in points {
        match merged.last_mut() {
            Some(last) if last.0 == x => last.1 = max(&last.1, &y),
            _ => merged.push((x, y)),
        }
    }

    let mut hull: Vec<(Rational, Rational)> = Vec::with_capacity(merged.len());
    for p in merged.iter().cloned() {
        while hull.len() >= 2 {
            let n = hull.len();
            if slope(&hull[n - 2], &hull[n - 1]) <= slope(&hull[n - 1], &p) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    while hull.len() >= 2 && slope(&hull[hull.len() - 2], &hull[hull.len() - 1]) <= final_slope {
        hull.pop();
    }
    let psi = PiecewiseAffineFunction::new(hull, final_slope)?;
    Ok(ConcaveMajorant { psi, source: merged })
}

/// The right derivative `ψ′` as a nonincreasing step function.
///
/// On the unit interval the result is cut at 1. On the half-line `ψ` must
/// be eventually constant, since `ψ′` has to have bounded support.
pub fn derivative_step(psi: &ConcaveMajorant, domain: Domain) -> Result<StepFunction> {
    let f = &psi.psi;
    let points = f.points();
    let mut pieces = Vec::with_capacity(points.len());
    for (i, w) in points.windows(2).enumerate() {
        pieces.push(Piece::new(w[0].0.clone(), w[1].0.clone(), f.slope_after(i)));
    }
    let last = &points[points.len() - 1].0;
    let tail = f.final_slope();
    match domain {
        Domain::UnitInterval => {
            let one = Rational::from_integer(1.into());
            if last < &one {
                pieces.push(Piece::new(last.clone(), one.clone(), tail.clone()));
            }
            let pieces = pieces
                .into_iter()
                .filter(|p| p.start < one)
                .map(|p| {
                    let end = if p.end > one { one.clone() } else { p.end };
                    Piece::new(p.start, end, p.value)
                })
                .collect();
            StepFunction::new(domain, pieces)
        }
        Domain::HalfLine if tail.is_zero() => StepFunction::new(domain, pieces),
        Domain::HalfLine => Err(Error::Unsupported(
            "ψ is not eventually constant, so ψ′ has unbounded support".into(),
        )),
    }
}

/// `‖f‖ = sup_t (1/ψ(t)) ∫₀ᵗ μ(s, f) ds`.
///
/// Both numerator and denominator are affine between merged breakpoints,
/// so the ratio is monotone there and the supremum is attained at a
/// breakpoint or in the limit `t → 0+`, where it is the ratio of slopes.
pub fn marcinkiewicz_norm(psi: &ConcaveMajorant, f: &StepFunction) -> Result<Rational> {
    let p = &psi.psi;
    let initial = p.slope_after(0);
    if !initial.is_positive() {
        return Err(Error::Precondition("ψ vanishes near 0".into()));
    }
    let big_f = rearranged_partial_integral(f);
    let big_f = big_f.as_affine().expect("step functions have affine partial integrals");
    let cap = match f.domain() {
        Domain::UnitInterval => Some(Rational::from_integer(1.into())),
        Domain::HalfLine => None,
    };
    let mut best = big_f.slope_after(0) / initial;
    let candidates = p.breakpoints().chain(big_f.breakpoints()).chain(cap.iter());
    for t in candidates {
        if !t.is_positive() || cap.as_ref().is_some_and(|c| t > c) {
            continue;
        }
        let ratio = big_f.value(t) / p.value(t);
        if ratio > best {
            best = ratio;
        }
    }
    Ok(best)
}

/// Concave upper bound for the fundamental function of `L_G` on `grid`.
///
/// Each `φ(t_i)` is enclosed, and the hull is taken over the upper ends,
/// so `ψ(t_i) ≥ φ(t_i)` is certified. The hull is held constant past the
/// last grid point. The enclosures are returned alongside.
pub fn fundamental_majorant(
    g: &OrliczFunction,
    grid: &[Rational],
    eps: &Rational,
) -> Result<(ConcaveMajorant, Vec<NormEnclosure>)> {
    let enclosures = grid
        .iter()
        .map(|t| fundamental_function(g, t, eps))
        .collect::<Result<Vec<_>>>()?;
    let mut points = vec![(Rational::zero(), Rational::zero())];
    points.extend(grid.iter().cloned().zip(enclosures.iter().map(|e| e.upper.clone())));
    Ok((least_concave_majorant_of_points(points, Rational::zero())?, enclosures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, pow2, rat};

    fn pa(points: &[(Rational, Rational)], s: Rational) -> PiecewiseAffineFunction {
        PiecewiseAffineFunction::new(points.to_vec(), s).unwrap()
    }

    fn min_2t_1() -> PiecewiseAffineFunction {
        pa(&[(int(0), int(0)), (rat(1, 2), int(1))], int(0))
    }

    #[test]
    fn concave_input_is_fixed() {
        assert_eq!(least_concave_majorant(&min_2t_1()).unwrap().psi(), &min_2t_1());
    }

    #[test]
    fn hull_of_maximum() {
        let t = PiecewiseAffineFunction::linear(int(1));
        let on_unit = pa(&[(int(0), int(0)), (int(1), int(1))], int(0));
        let psi = least_concave_majorant_of_max(&[min_2t_1(), on_unit]).unwrap();
        assert_eq!(psi.psi(), &min_2t_1());
        let psi = least_concave_majorant_of_max(&[min_2t_1(), t.clone()]).unwrap();
        assert_eq!(psi.psi().final_slope(), &int(1));
    }

    #[test]
    fn hull_takes_the_chord() {
        let h = pa(&[(int(0), int(0)), (int(1), int(0)), (int(2), int(2))], int(0));
        let psi = least_concave_majorant(&h).unwrap();
        assert_eq!(psi.psi(), &pa(&[(int(0), int(0)), (int(2), int(2))], int(0)));
        assert_eq!(
            derivative_step(&psi, Domain::HalfLine).unwrap(),
            StepFunction::indicator(Domain::HalfLine, int(0), int(2)).unwrap()
        );
    }

    #[test]
    fn rejects_nonzero_origin() {
        let h = pa(&[(int(0), int(1)), (int(1), int(2))], int(0));
        assert!(matches!(least_concave_majorant(&h), Err(Error::Precondition(_))));
    }

    #[test]
    fn derivatives() {
        let psi = least_concave_majorant(&min_2t_1()).unwrap();
        let d = derivative_step(&psi, Domain::UnitInterval).unwrap();
        assert_eq!(d, StepFunction::constant(Domain::UnitInterval, int(0), rat(1, 2), int(2)).unwrap());
        let psi = least_concave_majorant(&pa(&[(int(0), int(0)), (int(1), int(1))], int(0))).unwrap();
        assert_eq!(
            derivative_step(&psi, Domain::HalfLine).unwrap(),
            StepFunction::indicator(Domain::HalfLine, int(0), int(1)).unwrap()
        );
        let linear = ConcaveMajorant::new(PiecewiseAffineFunction::linear(int(1))).unwrap();
        assert!(derivative_step(&linear, Domain::HalfLine).is_err());
        assert_eq!(
            derivative_step(&linear, Domain::UnitInterval).unwrap(),
            StepFunction::indicator(Domain::UnitInterval, int(0), int(1)).unwrap()
        );
    }

    #[test]
    fn marcinkiewicz_norms() {
        let t = ConcaveMajorant::new(PiecewiseAffineFunction::linear(int(1))).unwrap();
        let chi = StepFunction::indicator(Domain::HalfLine, int(0), int(1)).unwrap();
        assert_eq!(marcinkiewicz_norm(&t, &chi).unwrap(), int(1));
        assert_eq!(marcinkiewicz_norm(&t, &chi.scale(&int(2))).unwrap(), int(2));
        let psi = ConcaveMajorant::new(min_2t_1()).unwrap();
        assert_eq!(marcinkiewicz_norm(&psi, &chi).unwrap(), int(1));
        let flat = ConcaveMajorant::new(PiecewiseAffineFunction::linear(int(0))).unwrap();
        assert!(marcinkiewicz_norm(&flat, &chi).is_err());
    }

    #[test]
    fn fundamental_majorant_covers_enclosures() {
        let grid: Vec<Rational> = (1..=8).map(|i| rat(i, 4)).collect();
        let eps = pow2(-30);
        let (psi, enc) = fundamental_majorant(&OrliczFunction::square(), &grid, &eps).unwrap();
        for (t, e) in grid.iter().zip(&enc) {
            let v = psi.eval(t).unwrap();
            assert!(v >= e.upper);
            assert!(v <= int(2) * &e.lower + int(4) * &eps);
        }
    }
}
