// One positive majorant for a whole family, on (0,1) and on (0,∞).

use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let family = FunctionFamily::new(vec![
        StepFunction::constant(Domain::UnitInterval, int(0), rat(1, 2), int(2))?,
        StepFunction::indicator(Domain::UnitInterval, int(0), int(1))?,
        StepFunction::constant(Domain::UnitInterval, rat(1, 4), rat(1, 2), int(3))?,
    ])?;
    let m = chong_majorant(&family)?;
    println!("g on (0,1):");
    for p in m.g.pieces() {
        println!("  [{}, {}) -> {}", p.start, p.end, p.value);
    }
    for f in family.members() {
        assert!(submajorizes(&DecreasingTailFunction::from_step(&m.g)?, f)?);
    }

    let shifted = (0..6)
        .map(|n| StepFunction::indicator(Domain::HalfLine, int(n), int(n + 1)))
        .collect::<Result<Vec<_>>>()?;
    let m = chong_majorant_infinite(&FunctionFamily::new(shifted)?, &rat(1, 2), 2)?;
    let tail = m.g.tail().expect("half-line majorants carry a tail");
    println!(
        "g on (0,inf): {} head pieces, then {} * s^-{} from {}",
        m.g.head().pieces().len(),
        tail.coeff(),
        tail.exponent(),
        tail.start()
    );
    println!("total mass of g = {}", m.g.total_integral());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
