use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::affine::PiecewiseAffineFunction;
use super::step::StepFunction;
use super::tail::DecreasingTailFunction;
use crate::rational::{int, max, powi, Extended, Rational};
use crate::{Error, Result};

/// Density term `coeff · s^(-exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerTerm {
    pub coeff: Rational,
    pub exponent: u32,
}

/// Antiderivative of a sum of power terms on `[start, ∞)`:
/// `F(t) = base + Σ c·(start^(1-k) − t^(1-k))/(k−1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralTail {
    start: Rational,
    base: Rational,
    terms: Vec<PowerTerm>,
}

impl IntegralTail {
    pub fn start(&self) -> &Rational {
        &self.start
    }

    pub fn terms(&self) -> &[PowerTerm] {
        &self.terms
    }

    fn value(&self, t: &Rational) -> Rational {
        let mut v = self.base.clone();
        for term in &self.terms {
            let k = term.exponent as i64;
            v += &term.coeff * (powi(&self.start, 1 - k) - powi(t, 1 - k)) / int(k - 1);
        }
        v
    }

    fn density_at(&self, t: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|term| &term.coeff * powi(t, -(term.exponent as i64)))
            .sum()
    }

    /// `(P, {k ↦ Q_k})` with `F(t) = P − Σ Q_k·t^(1-k)`.
    fn normal_form(&self) -> (Rational, BTreeMap<u32, Rational>) {
        let mut p = self.base.clone();
        let mut q: BTreeMap<u32, Rational> = BTreeMap::new();
        for term in &self.terms {
            let k = term.exponent as i64;
            let qk = &term.coeff / int(k - 1);
            p += &qk * powi(&self.start, 1 - k);
            *q.entry(term.exponent).or_insert_with(Rational::zero) += qk;
        }
        (p, q)
    }

    fn limit(&self) -> Rational {
        self.normal_form().0
    }
}

/// `F(t) = ∫₀ᵗ f` for a nonnegative, nonincreasing `f`.
///
/// Affine on the step part; on `[start, ∞)` of a tail, an exact rational
/// antiderivative of power terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialIntegral {
    head: PiecewiseAffineFunction,
    tail: Option<IntegralTail>,
}

impl From<PiecewiseAffineFunction> for PartialIntegral {
    fn from(head: PiecewiseAffineFunction) -> Self {
        PartialIntegral { head, tail: None }
    }
}

impl PartialIntegral {
    /// Partial integral of a nonincreasing step function.
    pub fn of_step(f: &StepFunction) -> Result<Self> {
        if !f.is_nonincreasing() {
            return Err(Error::Precondition("partial integral requires a nonincreasing input".into()));
        }
        Self::from_parts(f, None)
    }

    pub fn of_decreasing(f: &DecreasingTailFunction) -> Self {
        let tail = f.tail().map(|t| {
            (
                t.start().clone(),
                vec![PowerTerm {
                    coeff: t.coeff().clone(),
                    exponent: t.exponent(),
                }],
            )
        });
        Self::from_parts(f.head(), tail).expect("decreasing functions have valid partial integrals")
    }

    /// `head` must be nonnegative; when a tail is given it covers
    /// `[start, ∞)` and `head` must vanish there.
    pub(crate) fn from_parts(head: &StepFunction, tail: Option<(Rational, Vec<PowerTerm>)>) -> Result<Self> {
        let mut points = vec![(Rational::zero(), Rational::zero())];
        let mut acc = Rational::zero();
        let mut cursor = Rational::zero();
        for p in head.pieces() {
            if p.value.is_negative() {
                return Err(Error::Precondition("partial integral of a negative function".into()));
            }
            if p.start > cursor {
                points.push((p.start.clone(), acc.clone()));
            }
            acc += &p.value * p.len();
            points.push((p.end.clone(), acc.clone()));
            cursor = p.end.clone();
        }
        let tail = match tail {
            None => None,
            Some((start, terms)) => {
                if start < cursor || !start.is_positive() {
                    return Err(Error::InvalidFunction("tail overlaps the head".into()));
                }
                if terms.iter().any(|t| t.coeff.is_negative() || t.exponent < 2) {
                    return Err(Error::InvalidFunction("tail terms must be c·s^(-k), c >= 0, k >= 2".into()));
                }
                let terms: Vec<PowerTerm> = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
                (!terms.is_empty()).then_some(IntegralTail {
                    start,
                    base: acc.clone(),
                    terms,
                })
            }
        };
        Ok(PartialIntegral {
            head: PiecewiseAffineFunction::new(points, Rational::zero())?,
            tail,
        })
    }

    pub fn head(&self) -> &PiecewiseAffineFunction {
        &self.head
    }

    pub fn tail(&self) -> Option<&IntegralTail> {
        self.tail.as_ref()
    }

    /// The affine representation when there is no power tail.
    pub fn as_affine(&self) -> Option<&PiecewiseAffineFunction> {
        self.tail.is_none().then_some(&self.head)
    }

    fn tail_active(&self, t: &Rational) -> bool {
        matches!(&self.tail, Some(tail) if t >= &tail.start)
    }

    pub(crate) fn value(&self, t: &Rational) -> Rational {
        match &self.tail {
            Some(tail) if t >= &tail.start => tail.value(t),
            _ => self.head.value(t),
        }
    }

    /// `F(t)`, with `F(∞)` the limit.
    pub fn eval(&self, t: &Extended) -> Result<Extended> {
        match t {
            Extended::Finite(x) if x.is_negative() => Err(Error::Domain("negative argument".into())),
            Extended::Finite(x) => Ok(Extended::Finite(self.value(x))),
            Extended::Infinity => Ok(self.limit()),
        }
    }

    pub fn limit(&self) -> Extended {
        match &self.tail {
            Some(tail) => Extended::Finite(tail.limit()),
            None if self.head.final_slope().is_positive() => Extended::Infinity,
            None => Extended::Finite(self.head.points().last().expect("nonempty").1.clone()),
        }
    }

    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut points: Vec<Rational> = self.head.breakpoints().cloned().collect();
        if let Some(tail) = &self.tail {
            points.retain(|x| x < &tail.start);
            points.push(tail.start.clone());
        }
        points
    }

    /// Concave and nondecreasing, checked on the representation.
    pub fn is_concave_nondecreasing(&self) -> bool {
        let head_ok = match &self.tail {
            None => self.head.is_concave(),
            Some(tail) => {
                let slopes: Vec<Rational> = self
                    .head
                    .points()
                    .iter()
                    .enumerate()
                    .filter(|(_, (x, _))| x < &tail.start)
                    .map(|(i, _)| self.head.slope_after(i))
                    .collect();
                let junction = tail.density_at(&tail.start);
                slopes.windows(2).all(|w| w[0] >= w[1]) && slopes.last().is_none_or(|s| *s >= junction)
            }
        };
        head_ok && self.head.is_nondecreasing()
    }
}

/// `F <= H` everywhere on `[0, ∞)`.
///
/// On each piece of the merged partition `F − H` is either convex (affine
/// minus concave), monotone (two power antiderivatives with like-signed
/// coefficient differences), or a power antiderivative minus an affine
/// function whose only interior critical point is rational. In every case
/// the supremum over the piece is found among finitely many exact
/// candidates, so the test is complete.
pub fn dominates_everywhere(lower: &PartialIntegral, upper: &PartialIntegral) -> Result<bool> {
    Ok(first_violation(lower, upper)?.is_none())
}

/// A point `t` with `lower(t) > upper(t)`, if any. `Extended::Infinity`
/// is returned only if a violation exists but lies beyond every point the
/// witness search tried.
pub fn first_violation(lower: &PartialIntegral, upper: &PartialIntegral) -> Result<Option<Extended>> {
    let mut points = lower.breakpoints();
    points.extend(upper.breakpoints());
    points.push(Rational::zero());
    points.sort();
    points.dedup();

    for x in &points {
        if lower.value(x) > upper.value(x) {
            return Ok(Some(Extended::Finite(x.clone())));
        }
    }
    for (i, a) in points.iter().enumerate() {
        if let Some(t) = piece_violation(lower, upper, a, points.get(i + 1))? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn exceeds(f: &PartialIntegral, h: &PartialIntegral, t: &Rational) -> bool {
    f.value(t) > h.value(t)
}

fn doubling_witness(f: &PartialIntegral, h: &PartialIntegral, from: &Rational) -> Extended {
    let mut t = max(from, &Rational::one()) * int(2);
    for _ in 0..4096 {
        if exceeds(f, h, &t) {
            return Extended::Finite(t);
        }
        t *= int(2);
    }
    Extended::Infinity
}

fn piece_violation(
    f: &PartialIntegral,
    h: &PartialIntegral,
    a: &Rational,
    b: Option<&Rational>,
) -> Result<Option<Extended>> {
    match (f.tail_active(a), h.tail_active(a)) {
        (false, h_power) => {
            // F affine: F − H is convex on the piece, so bounded pieces are
            // settled by their endpoints.
            if b.is_some() {
                return Ok(None);
            }
            let fs = f.head.right_slope(a);
            let gap = h.value(a) - f.value(a);
            if h_power {
                if fs.is_positive() {
                    let h_limit = h.tail.as_ref().expect("active tail").limit();
                    let t = a + (h_limit - f.value(a)) / &fs + Rational::one();
                    return Ok(Some(Extended::Finite(max(&t, a))));
                }
                Ok(None)
            } else {
                let hs = h.head.right_slope(a);
                if fs > hs {
                    let t = a + gap / (&fs - &hs) + Rational::one();
                    return Ok(Some(Extended::Finite(t)));
                }
                Ok(None)
            }
        }
        (true, true) => {
            let (pf, qf) = f.tail.as_ref().expect("active tail").normal_form();
            let (ph, qh) = h.tail.as_ref().expect("active tail").normal_form();
            let mut diffs = qh.clone();
            for (k, q) in &qf {
                *diffs.entry(*k).or_insert_with(Rational::zero) -= q;
            }
            // F − H = (P_f − P_h) + Σ d_k·t^(1-k)
            if diffs.values().all(|d| !d.is_negative()) {
                Ok(None)
            } else if diffs.values().all(|d| !d.is_positive()) {
                if b.is_none() && pf > ph {
                    return Ok(Some(doubling_witness(f, h, a)));
                }
                Ok(None)
            } else {
                Err(Error::Unsupported(
                    "comparison of power antiderivatives with mixed coefficient signs".into(),
                ))
            }
        }
        (true, false) => {
            let (p, q) = f.tail.as_ref().expect("active tail").normal_form();
            if q.len() != 1 {
                return Err(Error::Unsupported(
                    "comparison of a multi-term power antiderivative against an affine piece".into(),
                ));
            }
            let k = *q.keys().next().expect("one term") as i64;
            let m = h.head.right_slope(a);
            let alpha = h.value(a) - &m * a;
            // t^(k-1)·(F − H)(t) = (P−α)t^(k-1) − m t^k − Q has its only
            // positive critical point at t* = (k−1)(P−α)/(k m).
            if !m.is_zero() {
                let t_star = int(k - 1) * (&p - &alpha) / (int(k) * &m);
                let inside = &t_star > a && b.is_none_or(|b| &t_star < b);
                if inside && exceeds(f, h, &t_star) {
                    return Ok(Some(Extended::Finite(t_star)));
                }
            }
            if b.is_none() && (m.is_negative() || (m.is_zero() && p > alpha)) {
                return Ok(Some(doubling_witness(f, h, a)));
            }
            Ok(None)
        }
    }
}
