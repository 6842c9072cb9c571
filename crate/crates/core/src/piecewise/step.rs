use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{format_rational, max, min, Extended, Rational};
use crate::{Error, Result};

/// Underlying measure space: Lebesgue measure on `(0, 1)` or `(0, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    UnitInterval,
    HalfLine,
}

impl Domain {
    /// Right end of the domain closure.
    pub fn upper(&self) -> Extended {
        match self {
            Domain::UnitInterval => Extended::Finite(Rational::from_integer(1.into())),
            Domain::HalfLine => Extended::Infinity,
        }
    }

    pub fn contains_point(&self, t: &Extended) -> bool {
        match t {
            Extended::Finite(x) => !x.is_negative() && *t <= self.upper(),
            Extended::Infinity => *self == Domain::HalfLine,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::UnitInterval => "(0,1)",
            Domain::HalfLine => "(0,inf)",
        })
    }
}

/// Value `value` on `[start, end)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    pub start: Rational,
    pub end: Rational,
    pub value: Rational,
}

impl Piece {
    pub fn new(start: Rational, end: Rational, value: Rational) -> Self {
        Piece { start, end, value }
    }

    pub fn len(&self) -> Rational {
        &self.end - &self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }
}

/// Finitely many constant pieces on disjoint half-open intervals, zero
/// elsewhere.
///
/// The stored form is canonical: pieces sorted, zero-valued pieces dropped
/// and touching pieces with equal values merged. Two step functions are
/// equal as functions iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepFunction {
    domain: Domain,
    pieces: Vec<Piece>,
}

impl StepFunction {
    pub fn new(domain: Domain, mut pieces: Vec<Piece>) -> Result<Self> {
        for p in &pieces {
            if p.start.is_negative() {
                return Err(Error::InvalidFunction(format!(
                    "piece starts at negative point {}",
                    format_rational(&p.start)
                )));
            }
            if p.end <= p.start {
                return Err(Error::InvalidFunction(format!(
                    "empty piece [{}, {})",
                    format_rational(&p.start),
                    format_rational(&p.end)
                )));
            }
            if !domain.contains_point(&Extended::Finite(p.end.clone())) {
                return Err(Error::InvalidFunction(format!(
                    "piece [{}, {}) leaves the domain {domain}",
                    format_rational(&p.start),
                    format_rational(&p.end)
                )));
            }
        }
        pieces.sort_by(|a, b| a.start.cmp(&b.start));
        for w in pieces.windows(2) {
            if w[0].end > w[1].start {
                return Err(Error::InvalidFunction(format!(
                    "pieces overlap at {}",
                    format_rational(&w[1].start)
                )));
            }
        }
        Ok(StepFunction {
            domain,
            pieces: canonicalize(pieces),
        })
    }

    pub fn zero(domain: Domain) -> Self {
        StepFunction {
            domain,
            pieces: Vec::new(),
        }
    }

    /// `value · χ_[start, end)`.
    pub fn constant(domain: Domain, start: Rational, end: Rational, value: Rational) -> Result<Self> {
        StepFunction::new(domain, vec![Piece::new(start, end, value)])
    }

    pub fn indicator(domain: Domain, start: Rational, end: Rational) -> Result<Self> {
        StepFunction::constant(domain, start, end, Rational::from_integer(1.into()))
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Same function regarded on another domain.
    pub fn with_domain(&self, domain: Domain) -> Result<Self> {
        StepFunction::new(domain, self.pieces.clone())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.pieces
            .iter()
            .find(|p| &p.start <= x && x < &p.end)
            .map(|p| p.value.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn abs(&self) -> Self {
        self.map_values(|v| v.abs())
    }

    pub fn scale(&self, by: &Rational) -> Self {
        self.map_values(|v| v * by)
    }

    /// Pointwise `phi(f(x))` for a `phi` with `phi(0) = 0`.
    pub fn map_values(&self, phi: impl Fn(&Rational) -> Rational) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece::new(p.start.clone(), p.end.clone(), phi(&p.value)))
            .collect();
        StepFunction {
            domain: self.domain,
            pieces: canonicalize(pieces),
        }
    }

    /// Restriction to `[a, b)`.
    pub fn restrict(&self, a: &Rational, b: &Rational) -> Self {
        let pieces = self
            .pieces
            .iter()
            .filter_map(|p| {
                let piece = Piece::new(max(&p.start, a), min(&p.end, b), p.value.clone());
                (!piece.is_empty()).then_some(piece)
            })
            .collect();
        StepFunction {
            domain: self.domain,
            pieces: canonicalize(pieces),
        }
    }

    /// Measure of the support.
    pub fn support_measure(&self) -> Rational {
        self.pieces.iter().map(Piece::len).sum()
    }

    /// Right end of the last piece (0 for the zero function).
    pub fn support_end(&self) -> Rational {
        self.pieces.last().map(|p| p.end.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn max_abs(&self) -> Rational {
        self.pieces
            .iter()
            .map(|p| p.value.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// `∫ |f|` over the whole domain.
    pub fn total_integral(&self) -> Rational {
        self.pieces.iter().map(|p| p.value.abs() * p.len()).sum()
    }

    /// `∫_a^b |f|` for `0 <= a <= b`.
    pub fn integrate_between(&self, a: &Rational, b: &Rational) -> Rational {
        self.pieces
            .iter()
            .map(|p| {
                let lo = max(&p.start, a);
                let hi = min(&p.end, b);
                if hi > lo {
                    p.value.abs() * (hi - lo)
                } else {
                    Rational::zero()
                }
            })
            .sum()
    }

    /// `∫₀ᵗ |f(s)| ds`; `t` must lie in the closure of the domain.
    pub fn integrate(&self, t: &Extended) -> Result<Rational> {
        if !self.domain.contains_point(t) {
            return Err(Error::Domain(format!("t = {t} outside the closure of {}", self.domain)));
        }
        Ok(match t {
            Extended::Finite(t) => self.integrate_between(&Rational::zero(), t),
            Extended::Infinity => self.total_integral(),
        })
    }

    /// True when `f` is nonincreasing on `(0, ∞)`: pieces contiguous from 0
    /// with positive, strictly decreasing canonical values.
    pub fn is_nonincreasing(&self) -> bool {
        match self.pieces.first() {
            None => true,
            Some(first) if !first.start.is_zero() => false,
            Some(_) => {
                self.pieces.iter().all(|p| p.value.is_positive())
                    && self
                        .pieces
                        .windows(2)
                        .all(|w| w[0].end == w[1].start && w[0].value > w[1].value)
            }
        }
    }

    /// Piece endpoints, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut points: Vec<Rational> = self
            .pieces
            .iter()
            .flat_map(|p| [p.start.clone(), p.end.clone()])
            .collect();
        points.dedup();
        points
    }
}

fn canonicalize(pieces: Vec<Piece>) -> Vec<Piece> {
    let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces.into_iter().filter(|p| !p.value.is_zero() && !p.is_empty()) {
        match out.last_mut() {
            Some(last) if last.end == p.start && last.value == p.value => last.end = p.end,
            _ => out.push(p),
        }
    }
    out
}
