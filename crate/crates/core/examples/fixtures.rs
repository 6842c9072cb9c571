// Translated indicators and spreading plateaus on the half-line.

use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let fx = standard_fixtures(50, 2)?;
    let all_in_orbit = fx
        .translated_indicators
        .members()
        .iter()
        .map(|f| orbit_contains(&fx.majorant, f))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    println!("every chi_[n,n+1) lies in the orbit of 1_[0,1) + s^-2: {all_in_orbit}");
    let sup = fx
        .translated_indicators
        .members()
        .iter()
        .map(|f| modular(&fx.square, f))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .expect("nonempty");
    println!("sup of x^2 modulars: {sup}");

    let rows = uniform_integrability_report(&fx.spreading_plateaus, &[rat(1, 100), int(1)])?;
    for row in rows {
        println!("plateaus, mass above {}: {}", row.cutoff, row.mass_above);
    }
    println!("plateaus, mass beyond 25: {}", tail_decay_check(&fx.spreading_plateaus, &int(25))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
