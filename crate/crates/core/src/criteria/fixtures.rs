//! Two half-line families that separate the usual compactness criteria.
//!
//! Spreading plateaus `(1/n)·χ_[n, 2n)` are bounded in L₁ and uniformly
//! integrable, yet their mass escapes to infinity. Translated indicators
//! `χ_[n, n+1)` all sit in the orbit of `χ_[0,1) + s^(-k)` and have
//! `∫ G(f_n) = 1` for `G(x) = x²`.

use super::family::FunctionFamily;
use crate::orlicz::OrliczFunction;
use crate::piecewise::{DecreasingTailFunction, Domain, StepFunction};
use crate::rational::{int, rat};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Fixtures {
    pub spreading_plateaus: FunctionFamily,
    pub translated_indicators: FunctionFamily,
    /// `χ_[0,1) + s^(-k)·χ_[1,∞)`.
    pub majorant: DecreasingTailFunction,
    /// `G(x) = x²`.
    pub square: OrliczFunction,
}

/// Both families for `n = 1..=n_max`, with tail exponent `k ≥ 2`.
pub fn standard_fixtures(n_max: u32, k: u32) -> Result<Fixtures> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let n_max = i64::from(n_max);
    let plateaus = (1..=n_max)
        .map(|n| StepFunction::constant(Domain::HalfLine, int(n), int(2 * n), rat(1, n)))
        .collect::<Result<Vec<_>>>()?;
    let indicators = (1..=n_max)
        .map(|n| StepFunction::indicator(Domain::HalfLine, int(n), int(n + 1)))
        .collect::<Result<Vec<_>>>()?;
    let one = int(1);
    Ok(Fixtures {
        spreading_plateaus: FunctionFamily::new(plateaus)?.with_generator("(1/n)·χ_[n,2n)"),
        translated_indicators: FunctionFamily::new(indicators)?.with_generator("χ_[n,n+1)"),
        majorant: DecreasingTailFunction::plateau_with_tail(one.clone(), one.clone(), one, k)?,
        square: OrliczFunction::square(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::uniform_integrability_report;
    use crate::orlicz::modular;
    use crate::rational::Extended;
    use crate::rearrangement::submajorizes;

    #[test]
    fn translated_indicators_share_one_majorant() {
        let fx = standard_fixtures(100, 2).unwrap();
        for f in fx.translated_indicators.members() {
            assert!(submajorizes(&fx.majorant, f).unwrap());
            assert_eq!(modular(&fx.square, f).unwrap(), Extended::Finite(int(1)));
        }
    }

    #[test]
    fn spreading_plateaus_are_uniformly_integrable() {
        let fx = standard_fixtures(100, 2).unwrap();
        assert!(fx.spreading_plateaus.members().iter().all(|f| f.total_integral() == int(1)));
        let rows = uniform_integrability_report(&fx.spreading_plateaus, &[int(1)]).unwrap();
        assert_eq!(rows[0].mass_above, int(0));
        assert!(standard_fixtures(0, 2).is_err());
        assert!(standard_fixtures(3, 1).is_err());
    }
}
