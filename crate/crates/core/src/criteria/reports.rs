//! Tables that make uniform integrability and tail decay visible.

use num_traits::{Signed, Zero};

use super::family::FunctionFamily;
use super::majorant::rearranged;
use crate::envelope::{marcinkiewicz_norm, ConcaveMajorant};
use crate::orlicz::{luxemburg_norm, NormEnclosure, OrliczFunction};
use crate::piecewise::StepFunction;
use crate::rational::{format_rational, max, Rational};
use crate::rearrangement::distribution_function;
use crate::{Error, Result};

/// One cutoff of the uniform-integrability table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UiRow {
    pub cutoff: Rational,
    /// `sup_f ∫_{|f| > c} |f|`.
    pub mass_above: Rational,
    /// `δ = sup_f m{|f| > c}`.
    pub delta: Rational,
    /// `sup_f sup_{m(E) ≤ δ} ∫_E |f| = sup_f ∫₀^δ μ(f)`.
    pub small_set_mass: Rational,
}

/// The mass above each cutoff, in both the cutoff and the small-set form.
///
/// For each member, `∫_{|f|>c} |f|` is computed from the pieces directly
/// and again as `∫₀^{m(|f|>c)} μ(f)`; a disagreement is reported as a
/// verification failure.
pub fn uniform_integrability_report(family: &FunctionFamily, cutoffs: &[Rational]) -> Result<Vec<UiRow>> {
    if cutoffs.iter().any(|c| !c.is_positive()) {
        return Err(Error::Domain("cutoffs must be positive".into()));
    }
    if cutoffs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("cutoffs must increase".into()));
    }
    let rearranged: Vec<StepFunction> = family.members().iter().map(rearranged).collect();
    cutoffs
        .iter()
        .map(|c| {
            let mut mass_above = Rational::zero();
            let mut delta = Rational::zero();
            for (f, mu) in family.members().iter().zip(&rearranged) {
                let direct: Rational = f
                    .pieces()
                    .iter()
                    .filter(|p| &p.value.abs() > c)
                    .map(|p| p.value.abs() * p.len())
                    .sum();
                let measure = distribution_function(f, c)?;
                let via_rearrangement = mu.integrate_between(&Rational::zero(), &measure);
                if direct != via_rearrangement {
                    return Err(Error::VerificationFailed(format!(
                        "cutoff {}: {} above the level but {} on the initial segment",
                        format_rational(c),
                        format_rational(&direct),
                        format_rational(&via_rearrangement)
                    )));
                }
                mass_above = max(&mass_above, &direct);
                delta = max(&delta, &measure);
            }
            let small_set_mass = rearranged
                .iter()
                .map(|mu| mu.integrate_between(&Rational::zero(), &delta))
                .max()
                .expect("nonempty family");
            Ok(UiRow {
                cutoff: c.clone(),
                mass_above,
                delta,
                small_set_mass,
            })
        })
        .collect()
}

/// `sup_f ∫_N^∞ |f|`.
pub fn tail_decay_check(family: &FunctionFamily, n: &Rational) -> Result<Rational> {
    if !n.is_positive() {
        return Err(Error::Domain("the cutoff must be positive".into()));
    }
    Ok(family
        .members()
        .iter()
        .map(|f| f.integrate_between(n, &f.support_end().max(n.clone())))
        .max()
        .expect("nonempty family"))
}

/// Norm in which restrictions `f·χ_E` are measured.
#[derive(Debug, Clone)]
pub enum NormKind {
    L1,
    Luxemburg { g: OrliczFunction, eps: Rational },
    Marcinkiewicz(ConcaveMajorant),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquiRow {
    pub delta: Rational,
    /// Enclosure of `sup_f sup_{m(E) < δ} ‖f·χ_E‖`; exact norms have zero
    /// width.
    pub value: NormEnclosure,
}

/// Worst restriction norms over sets of measure below each `δ`.
///
/// All three norms are monotone under submajorization, and every
/// restriction `f·χ_E` with `m(E) ≤ δ` is submajorized by `μ(f)·χ_[0,δ)`,
/// which is itself the rearrangement of `f` restricted to a top superlevel
/// set. So the supremum is attained there. For L₁ the strict bound
/// `m(E) < δ` does not change the supremum.
pub fn equi_abs_continuity_report(
    family: &FunctionFamily,
    norm: &NormKind,
    deltas: &[Rational],
) -> Result<Vec<EquiRow>> {
    if deltas.iter().any(|d| !d.is_positive()) {
        return Err(Error::Domain("deltas must be positive".into()));
    }
    if deltas.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Domain("deltas must decrease".into()));
    }
    let rearranged: Vec<StepFunction> = family.members().iter().map(rearranged).collect();
    deltas
        .iter()
        .map(|delta| {
            let mut lower = Rational::zero();
            let mut upper = Rational::zero();
            let mut width = Rational::zero();
            for mu in &rearranged {
                let top = mu.restrict(&Rational::zero(), delta);
                let e = restricted_norm(norm, &top)?;
                lower = max(&lower, &e.lower);
                upper = max(&upper, &e.upper);
                width = max(&width, &e.width);
            }
            Ok(EquiRow {
                delta: delta.clone(),
                value: NormEnclosure { lower, upper, width },
            })
        })
        .collect()
}

fn restricted_norm(norm: &NormKind, top: &StepFunction) -> Result<NormEnclosure> {
    Ok(match norm {
        NormKind::L1 => NormEnclosure::exact(top.total_integral()),
        NormKind::Luxemburg { g, eps } => luxemburg_norm(g, top, eps)?,
        NormKind::Marcinkiewicz(psi) => NormEnclosure::exact(marcinkiewicz_norm(psi, top)?),
    })
}
