//! Decreasing rearrangements and the Hardy–Littlewood–Pólya relations.
//!
//! `μ(t, f) = inf{s ≥ 0 : m(|f| > s) ≤ t}`. For a step function this is the
//! step function obtained by sorting the distinct values of `|f|` in
//! decreasing order and laying out their level-set measures from 0. Ties
//! need no breaking: the result only depends on the multiset of values.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::piecewise::{
    first_violation, DecreasingTailFunction, PartialIntegral, Piece, StepFunction,
};
use crate::rational::{format_rational, Extended, Rational};
use crate::{Error, Result};

/// `μ(f)` together with `∫|f|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RearrangementResult {
    pub mu: StepFunction,
    pub source_total: Rational,
}

/// `m({|f| > s})`.
pub fn distribution_function(f: &StepFunction, s: &Rational) -> Result<Rational> {
    if s.is_negative() {
        return Err(Error::Domain(format!("level {} is negative", format_rational(s))));
    }
    Ok(f.pieces()
        .iter()
        .filter(|p| &p.value.abs() > s)
        .map(Piece::len)
        .sum())
}

pub fn decreasing_rearrangement(f: &StepFunction) -> RearrangementResult {
    let mut levels: BTreeMap<Rational, Rational> = BTreeMap::new();
    for p in f.pieces() {
        *levels.entry(p.value.abs()).or_insert_with(Rational::zero) += p.len();
    }
    let mut cursor = Rational::zero();
    let mut pieces = Vec::with_capacity(levels.len());
    for (value, len) in levels.into_iter().rev() {
        let end = &cursor + &len;
        pieces.push(Piece::new(cursor, end.clone(), value));
        cursor = end;
    }
    let mu = StepFunction::new(f.domain(), pieces).expect("rearrangement stays inside the domain");
    RearrangementResult {
        source_total: f.total_integral(),
        mu,
    }
}

/// Functions that have an exact nonincreasing representative `μ(f)`.
pub trait Rearrange {
    fn decreasing(&self) -> DecreasingTailFunction;

    /// True when the function is strictly positive wherever it is defined
    /// to be nonzero (the orbit generator condition).
    fn has_positive_values(&self) -> bool;
}

impl Rearrange for StepFunction {
    fn decreasing(&self) -> DecreasingTailFunction {
        DecreasingTailFunction::from_step(&decreasing_rearrangement(self).mu)
            .expect("rearrangements are nonincreasing")
    }

    fn has_positive_values(&self) -> bool {
        !self.is_zero() && self.pieces().iter().all(|p| p.value.is_positive())
    }
}

impl Rearrange for DecreasingTailFunction {
    fn decreasing(&self) -> DecreasingTailFunction {
        self.clone()
    }

    fn has_positive_values(&self) -> bool {
        !self.is_zero()
    }
}

impl Rearrange for RearrangementResult {
    fn decreasing(&self) -> DecreasingTailFunction {
        DecreasingTailFunction::from_step(&self.mu).expect("rearrangements are nonincreasing")
    }

    fn has_positive_values(&self) -> bool {
        self.mu.has_positive_values()
    }
}

/// `t ↦ ∫₀ᵗ μ(s, f) ds`.
pub fn rearranged_partial_integral<F: Rearrange + ?Sized>(f: &F) -> PartialIntegral {
    PartialIntegral::of_decreasing(&f.decreasing())
}

/// A point `t` where `∫₀ᵗ μ(f) > ∫₀ᵗ μ(g)`, or `None` when `f ≺≺ g`.
pub fn submajorization_witness<G, F>(g: &G, f: &F) -> Result<Option<Extended>>
where
    G: Rearrange + ?Sized,
    F: Rearrange + ?Sized,
{
    first_violation(&rearranged_partial_integral(f), &rearranged_partial_integral(g))
}

/// `f ≺≺ g`.
pub fn submajorizes<G, F>(g: &G, f: &F) -> Result<bool>
where
    G: Rearrange + ?Sized,
    F: Rearrange + ?Sized,
{
    Ok(submajorization_witness(g, f)?.is_none())
}

/// `f ≺ g`: submajorization plus equal total integrals.
pub fn majorizes<G, F>(g: &G, f: &F) -> Result<bool>
where
    G: Rearrange + ?Sized,
    F: Rearrange + ?Sized,
{
    let total_g = g.decreasing().total_integral();
    let total_f = f.decreasing().total_integral();
    Ok(total_f == total_g && submajorizes(g, f)?)
}

/// `f ∈ C_g = {f : |f| ≺≺ g}` for a positive integrable `g`.
pub fn orbit_contains<G, F>(g: &G, f: &F) -> Result<bool>
where
    G: Rearrange + ?Sized,
    F: Rearrange + ?Sized,
{
    if !g.has_positive_values() {
        return Err(Error::Precondition("orbit generator must be positive".into()));
    }
    submajorizes(g, f)
}
