// An N-function whose modular is finite on a given function.

use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let f = StepFunction::new(
        Domain::HalfLine,
        vec![
            Piece::new(int(0), int(1), int(1)),
            Piece::new(int(1), rat(3, 2), int(2)),
            Piece::new(rat(3, 2), rat(7, 4), int(4)),
        ],
    )?;
    let c = construct_n_function(&f)?;
    for level in &c.levels {
        println!("m(2^{} <= |f| < 2^{}) = {}", level.level, level.level + 1, level.measure);
    }
    println!("alphas: {:?}", c.alphas.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("density:");
    for s in c.g.density().segments() {
        println!("  from {}: {} + {}*(t - {})", s.start, s.value, s.slope, s.start);
    }
    println!("modular = {} <= bound = {}", modular(&c.g, &f)?, c.bound);
    println!("N-function: {}", c.g.flags().is_n_function());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
