//! Single majorants for whole families, and the Orlicz certificate built
//! from them.

use num_traits::{One, Signed, Zero};

use super::family::FunctionFamily;
use super::nfunction::{construct_n_function, NFunctionConstruction};
use super::reports::tail_decay_check;
use crate::envelope::{derivative_step, least_concave_majorant_of_max, ConcaveMajorant};
use crate::orlicz::{modular, OrliczFunction};
use crate::piecewise::{
    dominates_everywhere, DecreasingTailFunction, Domain, Integrand, PartialIntegral, Piece, PowerTail, PowerTerm,
    StepFunction,
};
use crate::rational::{format_rational, int, min, pow2, powi, Extended, Rational};
use crate::rearrangement::{decreasing_rearrangement, rearranged_partial_integral, submajorization_witness};
use crate::{Error, Result};

/// Positive value used where `ψ′` vanishes, as `2^DEFAULT_FLOOR_LOG2`.
pub const DEFAULT_FLOOR_LOG2: i64 = -20;

/// Cutoffs beyond `2^DEFAULT_TAIL_CEILING_LOG2` are not searched.
pub const DEFAULT_TAIL_CEILING_LOG2: i64 = 64;

/// A positive nonincreasing `g` on `(0, 1)` with `|f| ≺≺ g` for every
/// member `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChongMajorant {
    pub g: StepFunction,
    /// Least concave majorant of `t ↦ max_f ∫₀ᵗ μ(f)`.
    pub psi: ConcaveMajorant,
    /// `(start, value)` of the floor added on `[start, 1)`, if any.
    pub floor: Option<(Rational, Rational)>,
}

pub fn chong_majorant(family: &FunctionFamily) -> Result<ChongMajorant> {
    chong_majorant_with_floor(family, &pow2(DEFAULT_FLOOR_LOG2))
}

/// `g = ψ′` where `ψ` is the least concave majorant of the pointwise
/// maximum of the members' rearranged partial integrals.
///
/// Where `ψ′` vanishes it is replaced by `min(floor, last positive value)`,
/// which keeps `g` positive and nonincreasing. Every member is checked
/// against `g` before returning.
pub fn chong_majorant_with_floor(family: &FunctionFamily, floor: &Rational) -> Result<ChongMajorant> {
    if family.domain() != Domain::UnitInterval {
        return Err(Error::Precondition("this majorant is built on the unit interval".into()));
    }
    if !floor.is_positive() {
        return Err(Error::Domain("the floor must be positive".into()));
    }
    let psi = family_envelope(family)?;
    let derivative = derivative_step(&psi, Domain::UnitInterval)?;
    let end = derivative.support_end();
    let one = Rational::one();
    let (g, floor) = if end < one {
        let level = derivative
            .pieces()
            .last()
            .map_or_else(|| floor.clone(), |p| min(floor, &p.value));
        let mut pieces = derivative.pieces().to_vec();
        pieces.push(Piece::new(end.clone(), one, level.clone()));
        (StepFunction::new(Domain::UnitInterval, pieces)?, Some((end, level)))
    } else {
        (derivative, None)
    };
    verify_members(family, &DecreasingTailFunction::from_step(&g)?)?;
    Ok(ChongMajorant { g, psi, floor })
}

fn family_envelope(family: &FunctionFamily) -> Result<ConcaveMajorant> {
    let partials: Vec<_> = family
        .members()
        .iter()
        .map(|f| {
            rearranged_partial_integral(f)
                .as_affine()
                .expect("step functions have affine partial integrals")
                .clone()
        })
        .collect();
    least_concave_majorant_of_max(&partials)
}

fn verify_members(family: &FunctionFamily, g: &DecreasingTailFunction) -> Result<()> {
    for (i, f) in family.members().iter().enumerate() {
        if let Some(t) = submajorization_witness(g, f)? {
            return Err(Error::VerificationFailed(format!("member {i} escapes the majorant at t = {t}")));
        }
    }
    Ok(())
}

/// A positive integrable nonincreasing `g` on `(0, ∞)` with `|f| ≺≺ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteChongMajorant {
    pub g: DecreasingTailFunction,
    pub psi: ConcaveMajorant,
    /// The cutoff `N` with `sup_f ∫_N^∞ |f| < ε`.
    pub cutoff: Rational,
}

pub fn chong_majorant_infinite(family: &FunctionFamily, eps: &Rational, k: u32) -> Result<InfiniteChongMajorant> {
    chong_majorant_infinite_with_ceiling(family, eps, k, &pow2(DEFAULT_TAIL_CEILING_LOG2))
}

/// `g = ψ′ + ε` on `[0, N)` and `c·s^(-k)` beyond, with `c = N^k·g(N−)` so
/// that `g` does not jump up at `N`.
///
/// `N` is the first of `2, 4, 8, ...` with `sup_f ∫_N^∞ |f| < ε`. Beyond
/// `N` every member has less than `ε` of mass left, and `ε·N` of slack has
/// been added on `[0, N)`, which covers it.
pub fn chong_majorant_infinite_with_ceiling(
    family: &FunctionFamily,
    eps: &Rational,
    k: u32,
    ceiling: &Rational,
) -> Result<InfiniteChongMajorant> {
    if family.domain() != Domain::HalfLine {
        return Err(Error::Precondition("this majorant is built on the half-line".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Domain("ε must be positive".into()));
    }
    if k < 2 {
        return Err(Error::Domain("the tail exponent must be at least 2".into()));
    }
    let mut cutoff = int(2);
    while tail_decay_check(family, &cutoff)? >= *eps {
        cutoff *= int(2);
        if &cutoff > ceiling {
            return Err(Error::ConditionViolated(format!(
                "the family keeps at least {} of mass beyond every cutoff up to {}",
                format_rational(eps),
                format_rational(ceiling)
            )));
        }
    }

    let psi = family_envelope(family)?;
    let derivative = derivative_step(&psi, Domain::HalfLine)?.restrict(&Rational::zero(), &cutoff);
    let mut marks: Vec<Rational> = vec![Rational::zero()];
    marks.extend(derivative.breakpoints().into_iter().filter(|x| x < &cutoff));
    marks.push(cutoff.clone());
    marks.sort();
    marks.dedup();
    let pieces: Vec<Piece> = marks
        .windows(2)
        .map(|w| Piece::new(w[0].clone(), w[1].clone(), derivative.eval(&w[0]) + eps))
        .collect();
    let last = pieces.last().expect("cutoff is positive").value.clone();
    let head = StepFunction::new(Domain::HalfLine, pieces)?;
    let coeff = powi(&cutoff, k as i64) * last;
    let g = DecreasingTailFunction::new(head, Some(PowerTail::new(cutoff.clone(), coeff, k)?))?;
    verify_members(family, &g)?;
    Ok(InfiniteChongMajorant { g, psi, cutoff })
}

/// One N-function whose modular is bounded on the whole family.
#[derive(Debug, Clone)]
pub struct DvpCertificate {
    pub g: OrliczFunction,
    /// Upper bound on every member's modular.
    pub bound: Rational,
    pub majorant: ChongMajorant,
    /// `∫ G(μ(g))`, which sits between the member modulars and the bound.
    pub majorant_modular: Rational,
    pub member_modulars: Vec<Rational>,
    pub construction: NFunctionConstruction,
}

/// Majorize the family by `g`, build `G` for `g`, and transfer the bound to
/// every member: `∫ G(μ(f)) ≤ ∫ G(μ(g))` holds for convex nondecreasing `G`
/// whenever `f ≺≺ g`. Each inequality in the chain is checked exactly.
pub fn dvp_certificate(family: &FunctionFamily) -> Result<DvpCertificate> {
    let majorant = chong_majorant(family)?;
    let construction = construct_n_function(&majorant.g)?;
    let g = construction.g.clone();
    let bound = construction.bound.clone();
    let majorant_modular = finite_modular(&g, &majorant.g)?;
    if majorant_modular > bound {
        return Err(Error::VerificationFailed("the majorant's modular exceeds the bound".into()));
    }
    let mut member_modulars = Vec::with_capacity(family.len());
    for (i, f) in family.members().iter().enumerate() {
        let value = finite_modular(&g, f)?;
        if value > majorant_modular {
            return Err(Error::VerificationFailed(format!("member {i} has a larger modular than the majorant")));
        }
        member_modulars.push(value);
    }
    if !g.flags().is_n_function() {
        return Err(Error::VerificationFailed("the constructed G is not an N-function".into()));
    }
    Ok(DvpCertificate {
        g,
        bound,
        majorant,
        majorant_modular,
        member_modulars,
        construction,
    })
}

fn finite_modular(g: &OrliczFunction, f: &StepFunction) -> Result<Rational> {
    match modular(g, f)? {
        Extended::Finite(v) => Ok(v),
        Extended::Infinity => Err(Error::VerificationFailed("infinite modular".into())),
    }
}

/// `∫₀ᵗ φ(f) ≤ ∫₀ᵗ φ(g)` for all `t`, given nonincreasing `f ≺≺ g`.
///
/// Both sides are concave in `t`, piecewise affine (or power antiderivatives
/// on a tail of `g`), so the comparison is decided exactly.
pub fn convex_transfer_check<'a>(
    phi: &OrliczFunction,
    f: &StepFunction,
    g: impl Into<Integrand<'a>>,
) -> Result<bool> {
    let g = match g.into() {
        Integrand::Step(s) => DecreasingTailFunction::from_step(s)
            .map_err(|_| Error::Precondition("g must be nonnegative and nonincreasing".into()))?,
        Integrand::Decreasing(d) => d.clone(),
    };
    if !f.is_zero() && !f.is_nonincreasing() {
        return Err(Error::Precondition("f must be nonnegative and nonincreasing".into()));
    }
    if submajorization_witness(&g, f)?.is_some() {
        return Err(Error::Precondition("f is not submajorized by g".into()));
    }
    let lower = PartialIntegral::from_parts(&compose(phi, f)?, None)?;
    let tail = match g.tail() {
        None => None,
        Some(tail) => {
            let (v, sigma) = phi.initial_quadratic(&tail.max_value()).ok_or_else(|| {
                Error::Unsupported("φ is not a single quadratic on the range of the power tail".into())
            })?;
            let c = tail.coeff();
            let k = tail.exponent();
            let terms = vec![
                PowerTerm {
                    coeff: &v * c,
                    exponent: k,
                },
                PowerTerm {
                    coeff: &sigma * c * c / int(2),
                    exponent: 2 * k,
                },
            ];
            Some((tail.start().clone(), terms))
        }
    };
    let upper = PartialIntegral::from_parts(&compose(phi, g.head())?, tail)?;
    dominates_everywhere(&lower, &upper)
}

fn compose(phi: &OrliczFunction, f: &StepFunction) -> Result<StepFunction> {
    let pieces = f
        .pieces()
        .iter()
        .map(|p| match phi.evaluate(&p.value.abs())? {
            Extended::Finite(v) => Ok(Piece::new(p.start.clone(), p.end.clone(), v)),
            Extended::Infinity => Err(Error::Unsupported("φ is infinite on the range of the function".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    StepFunction::new(Domain::HalfLine, pieces)
}

/// `μ(f)` as a step function on the half-line.
pub(crate) fn rearranged(f: &StepFunction) -> StepFunction {
    decreasing_rearrangement(f)
        .mu
        .with_domain(Domain::HalfLine)
        .expect("the half-line contains every domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orlicz::Density;
    use crate::rational::rat;
    use crate::rearrangement::submajorizes;

    fn unit(pieces: &[(Rational, Rational, Rational)]) -> StepFunction {
        StepFunction::new(
            Domain::UnitInterval,
            pieces.iter().cloned().map(|(a, b, v)| Piece::new(a, b, v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_member_family() {
        let k = FunctionFamily::new(vec![
            unit(&[(int(0), rat(1, 2), int(2))]),
            StepFunction::indicator(Domain::UnitInterval, int(0), int(1)).unwrap(),
        ])
        .unwrap();
        let c = chong_majorant(&k).unwrap();
        let floor = pow2(DEFAULT_FLOOR_LOG2);
        assert_eq!(c.g, unit(&[(int(0), rat(1, 2), int(2)), (rat(1, 2), int(1), floor.clone())]));
        assert_eq!(c.floor, Some((rat(1, 2), floor)));
    }

    #[test]
    fn singleton_is_its_own_majorant() {
        let chi = StepFunction::indicator(Domain::UnitInterval, int(0), int(1)).unwrap();
        let c = chong_majorant(&FunctionFamily::new(vec![chi.clone()]).unwrap()).unwrap();
        assert_eq!(c.g, chi);
        assert_eq!(c.floor, None);
    }

    #[test]
    fn rearrangement_does_not_change_the_majorant() {
        let f = unit(&[(int(0), rat(1, 3), int(1)), (rat(1, 2), rat(3, 4), int(5)), (rat(3, 4), int(1), int(-2))]);
        let mu = decreasing_rearrangement(&f).mu;
        let a = chong_majorant(&FunctionFamily::new(vec![f.clone()]).unwrap()).unwrap();
        let b = chong_majorant(&FunctionFamily::new(vec![f, mu]).unwrap()).unwrap();
        assert_eq!(a.g, b.g);
    }

    #[test]
    fn majorant_on_the_half_line() {
        let chi = StepFunction::indicator(Domain::HalfLine, int(0), int(1)).unwrap();
        let m = chong_majorant_infinite(&FunctionFamily::new(vec![chi.clone()]).unwrap(), &int(1), 2).unwrap();
        assert_eq!(m.cutoff, int(2));
        assert!(submajorizes(&m.g, &chi).unwrap());
        let shifted: Vec<_> = (0..=10)
            .map(|n| StepFunction::indicator(Domain::HalfLine, int(n), int(n + 1)).unwrap())
            .collect();
        let family = FunctionFamily::new(shifted).unwrap();
        let m = chong_majorant_infinite(&family, &rat(1, 4), 3).unwrap();
        assert_eq!(m.cutoff, int(16));
    }

    #[test]
    fn escaping_mass_violates_the_tail_condition() {
        let far = StepFunction::indicator(Domain::HalfLine, pow2(70), pow2(70) + int(1)).unwrap();
        let family = FunctionFamily::new(vec![far]).unwrap();
        assert!(matches!(chong_majorant_infinite(&family, &int(1), 2), Err(Error::ConditionViolated(_))));
        assert!(chong_majorant_infinite_with_ceiling(&family, &int(1), 2, &pow2(80)).is_ok());
    }

    #[test]
    fn certificate_for_an_indicator() {
        let chi = StepFunction::indicator(Domain::UnitInterval, int(0), int(1)).unwrap();
        let cert = dvp_certificate(&FunctionFamily::new(vec![chi]).unwrap()).unwrap();
        assert_eq!(cert.member_modulars, vec![rat(1, 2)]);
        assert!(cert.bound >= rat(1, 2));
    }

    #[test]
    fn transfer_inequality() {
        let square = OrliczFunction::square();
        let f = StepFunction::indicator(Domain::HalfLine, int(0), int(2)).unwrap();
        let g = StepFunction::constant(Domain::HalfLine, int(0), int(1), int(2)).unwrap();
        assert!(convex_transfer_check(&square, &f, &g).unwrap());
        assert!(matches!(convex_transfer_check(&square, &g, &f), Err(Error::Precondition(_))));
        let identity = OrliczFunction::new(Density::new(
            vec![crate::orlicz::DensitySegment::new(int(0), int(1), int(0))],
            None,
        )
        .unwrap())
        .unwrap();
        assert!(convex_transfer_check(&identity, &f, &g).unwrap());
        let tail = DecreasingTailFunction::plateau_with_tail(int(1), int(1), int(1), 2).unwrap();
        assert!(convex_transfer_check(&square, &f.restrict(&int(0), &int(1)), &tail).unwrap());
        assert_eq!(rearranged(&f), f);
    }
}
