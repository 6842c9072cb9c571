//! An N-function that makes a given integrable function's modular finite.
//!
//! With dyadic level sets `I_n = {2^n ≤ |f| < 2^(n+1)}`, the sequence
//! `x_{n+1} = 2^n·m(I_n)` (n ≥ 0) is summable, so the scaler yields
//! nondecreasing `α_n → ∞` with `Σ 2^n α_{n+1} m(I_n) < ∞`. The density
//!
//! ```text
//! p(t) = t on [0, 1),   p(t) = α_n on [2^(n−1), 2^n),   then a ray of slope 1
//! ```
//!
//! gives `G(x) ≤ x·p(x) ≤ 2^(n+1)·α_{n+1}` on `I_n`, hence the bound.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::scaler::{summable_scaler, SummableSequence};
use crate::orlicz::{Density, DensitySegment, OrliczFunction};
use crate::piecewise::{DecreasingTailFunction, Integrand, PowerTail, StepFunction};
use crate::rational::{floor_log2, int, max, pow2, root_enclosure, Rational};
use crate::Result;

/// Width used for the roots that bound level measures under a power tail.
const ROOT_WIDTH_LOG2: i64 = -40;

/// `I_n = {2^n ≤ |f| < 2^(n+1)}` and its measure (an upper bound when the
/// level cuts through a power tail).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSet {
    pub level: i64,
    pub measure: Rational,
    pub exact: bool,
}

#[derive(Debug, Clone)]
pub struct NFunctionConstruction {
    pub g: OrliczFunction,
    /// `Σ_n 2^(n+1)·α_{n+1}·m(I_n)`, with weight 1 on the levels below 0.
    pub bound: Rational,
    pub levels: Vec<LevelSet>,
    /// `α_1, ..., α_{top+1}`.
    pub alphas: Vec<Rational>,
}

pub fn construct_n_function<'a>(f: impl Into<Integrand<'a>>) -> Result<NFunctionConstruction> {
    let (levels, low_tail_mass) = match f.into() {
        Integrand::Step(f) => (step_levels(f), Rational::zero()),
        Integrand::Decreasing(f) => decreasing_levels(f),
    };
    build(levels, low_tail_mass)
}

fn step_levels(f: &StepFunction) -> BTreeMap<i64, (Rational, bool)> {
    let mut levels: BTreeMap<i64, (Rational, bool)> = BTreeMap::new();
    for p in f.pieces() {
        let entry = levels
            .entry(floor_log2(&p.value.abs()))
            .or_insert_with(|| (Rational::zero(), true));
        entry.0 += p.len();
    }
    levels
}

/// Levels of the head exactly; levels `n ≥ 0` of the tail through root
/// enclosures. The tail's mass below 1 is returned separately, since
/// `Σ_{n<0} 2^(n+1) m(I_n) ≤ 2 ∫_{|f|<1} |f|`.
fn decreasing_levels(f: &DecreasingTailFunction) -> (BTreeMap<i64, (Rational, bool)>, Rational) {
    let mut levels = step_levels(f.head());
    let Some(tail) = f.tail() else {
        return (levels, Rational::zero());
    };
    let top = tail.max_value();
    if top >= Rational::one() {
        for n in 0..=floor_log2(&top) {
            let measure = tail_level_upper_bound(tail, n);
            let entry = levels.entry(n).or_insert_with(|| (Rational::zero(), true));
            entry.0 += measure;
            entry.1 = false;
        }
    }
    (levels, int(2) * tail.integral_from(tail.start()))
}

/// Upper bound on `m{s ≥ start : 2^n ≤ c·s^(-k) < 2^(n+1)}`.
fn tail_level_upper_bound(tail: &PowerTail, n: i64) -> Rational {
    let k = tail.exponent();
    let width = pow2(ROOT_WIDTH_LOG2);
    // c·s^(-k) ≥ y  ⟺  s ≤ (c/y)^(1/k)
    let (_, outer) = root_enclosure(&(tail.coeff() / pow2(n)), k, &width);
    let (inner, _) = root_enclosure(&(tail.coeff() / pow2(n + 1)), k, &width);
    let inner = max(&inner, tail.start());
    max(&(outer - inner), &Rational::zero())
}

fn build(levels: BTreeMap<i64, (Rational, bool)>, low_tail_mass: Rational) -> Result<NFunctionConstruction> {
    let top = levels.keys().next_back().copied().filter(|&n| n >= 0);
    let alphas: Vec<Rational> = match top {
        None => Vec::new(),
        Some(top) => {
            let x: Vec<Rational> = (0..=top)
                .map(|n| pow2(n) * levels.get(&n).map_or_else(Rational::zero, |(m, _)| m.clone()))
                .collect();
            let scaler = summable_scaler(&SummableSequence::finite(x));
            scaler
                .multipliers(top as usize + 1)
                .into_iter()
                .map(|y| max(&y, &Rational::one()))
                .collect()
        }
    };

    let mut segments = vec![DensitySegment::new(Rational::zero(), Rational::zero(), Rational::one())];
    for (i, alpha) in alphas.iter().enumerate() {
        segments.push(DensitySegment::new(pow2(i as i64), alpha.clone(), Rational::zero()));
    }
    if let Some(last) = alphas.last() {
        segments.push(DensitySegment::new(pow2(alphas.len() as i64), last.clone(), Rational::one()));
    }
    let g = OrliczFunction::new(Density::new(segments, None)?)?;

    let mut bound = low_tail_mass;
    for (&n, (measure, _)) in &levels {
        let weight = if n < 0 {
            Rational::one()
        } else {
            alphas[n as usize].clone()
        };
        bound += pow2(n + 1) * weight * measure;
    }
    let levels = levels
        .into_iter()
        .map(|(level, (measure, exact))| LevelSet { level, measure, exact })
        .collect();
    debug_assert!(!bound.is_negative());
    Ok(NFunctionConstruction { g, bound, levels, alphas })
}
