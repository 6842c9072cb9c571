// Mass above cutoffs and restriction norms on small sets.

use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let spikes = FunctionFamily::new(
        (1..=20)
            .map(|n| StepFunction::constant(Domain::UnitInterval, int(0), rat(1, n), int(n)))
            .collect::<Result<Vec<_>>>()?,
    )?;
    for row in uniform_integrability_report(&spikes, &[int(5), int(10), int(20)])? {
        println!(
            "c = {}: mass above {}, delta {}, small-set mass {}",
            row.cutoff, row.mass_above, row.delta, row.small_set_mass
        );
    }
    let deltas = [rat(1, 2), rat(1, 20), rat(1, 100)];
    for row in equi_abs_continuity_report(&spikes, &NormKind::L1, &deltas)? {
        println!("L1, delta {}: {}", row.delta, row.value.upper);
    }
    let norm = NormKind::Luxemburg {
        g: OrliczFunction::square(),
        eps: pow2(-20),
    };
    for row in equi_abs_continuity_report(&spikes, &norm, &deltas)? {
        println!("x^2 norm, delta {}: [{}, {}]", row.delta, row.value.lower, row.value.upper);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
