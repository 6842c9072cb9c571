// Orlicz functions from densities: modular, Luxemburg norm, conjugate.

use rearr::prelude::*;
use rearr::orlicz::DensitySegment;

pub fn run_example() -> Result<()> {
    let square = OrliczFunction::square();
    let f = StepFunction::indicator(Domain::HalfLine, int(0), int(4))?;
    println!("G(3) = {}", square.evaluate(&int(3))?);
    println!("modular of 1_[0,4) = {}", modular(&square, &f)?);

    let eps = pow2(-40);
    let norm = luxemburg_norm(&square, &f, &eps)?;
    println!("norm of 1_[0,4) in [{}, {}]", norm.lower, norm.upper);
    let phi = fundamental_function(&square, &rat(1, 4), &eps)?;
    println!("phi(1/4) in [{}, {}]", phi.lower, phi.upper);

    // p(t) = t on [0,1), then 1: G is quadratic near 0 and linear afterwards.
    let kinked = OrliczFunction::new(Density::new(
        vec![
            DensitySegment::new(int(0), int(0), int(1)),
            DensitySegment::new(int(1), int(1), int(0)),
        ],
        None,
    )?)?;
    println!("G(2) = {}", kinked.evaluate(&int(2))?);
    let conj = young_conjugate(&kinked)?;
    println!(
        "G*(1/2) = {}, G*(2) = {}",
        conj.evaluate(&rat(1, 2))?,
        conj.evaluate(&int(2))?
    );
    println!("Young at (1, 2): {}", young_inequality_check(&square, &int(1), &int(2))?);
    println!("x^2 is an N-function: {}", square.flags().is_n_function());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
