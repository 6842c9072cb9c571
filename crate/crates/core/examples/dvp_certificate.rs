// A single N-function bounding the modular of every member of a family.

use rearr::criteria::dvp_certificate;
use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let family = FunctionFamily::new(vec![
        StepFunction::indicator(Domain::UnitInterval, int(0), int(1))?,
        StepFunction::constant(Domain::UnitInterval, rat(1, 2), rat(5, 8), int(6))?,
        StepFunction::new(
            Domain::UnitInterval,
            vec![Piece::new(int(0), rat(1, 3), int(-2)), Piece::new(rat(2, 3), int(1), rat(7, 2))],
        )?,
    ])?;
    let cert = dvp_certificate(&family)?;
    for (i, m) in cert.member_modulars.iter().enumerate() {
        println!("member {i}: modular {m}");
    }
    println!("majorant modular {}", cert.majorant_modular);
    println!("bound {}", cert.bound);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
