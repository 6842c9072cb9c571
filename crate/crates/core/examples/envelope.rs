// Least concave majorants, their derivatives and Marcinkiewicz norms.

use rearr::envelope::{fundamental_majorant, least_concave_majorant_of_max};
use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let h = PiecewiseAffineFunction::new(vec![(int(0), int(0)), (int(1), int(0)), (int(2), int(2))], int(0))?;
    let psi = least_concave_majorant(&h)?;
    let vertices: Vec<String> = psi.psi().points().iter().map(|(x, y)| format!("({x}, {y})")).collect();
    println!("hull vertices: {}", vertices.join(" "));
    for p in derivative_step(&psi, Domain::HalfLine)?.pieces() {
        println!("psi' = {} on [{}, {})", p.value, p.start, p.end);
    }

    let steep = PiecewiseAffineFunction::new(vec![(int(0), int(0)), (rat(1, 2), int(1))], int(0))?;
    let diagonal = PiecewiseAffineFunction::new(vec![(int(0), int(0)), (int(1), int(1))], int(0))?;
    let psi = least_concave_majorant_of_max(&[steep, diagonal])?;
    let f = StepFunction::indicator(Domain::UnitInterval, int(0), int(1))?;
    println!("Marcinkiewicz norm of 1_[0,1) for min(2t,1): {}", marcinkiewicz_norm(&psi, &f)?);

    let grid: Vec<Rational> = (1..=8).map(|i| rat(i, 8)).collect();
    let (upper, enclosures) = fundamental_majorant(&OrliczFunction::square(), &grid, &pow2(-30))?;
    for (t, e) in grid.iter().zip(&enclosures).step_by(3) {
        println!("t = {t}: phi in [{}, {}], concave bound {}", e.lower, e.upper, upper.eval(t)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
