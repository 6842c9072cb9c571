// Decreasing rearrangement and the submajorization order.

use rearr::prelude::*;
use rearr::rearrangement::submajorization_witness;

pub fn run_example() -> Result<()> {
    // 1 on [0,2), -3 on [2,3)
    let f = StepFunction::new(
        Domain::HalfLine,
        vec![Piece::new(int(0), int(2), int(1)), Piece::new(int(2), int(3), int(-3))],
    )?;
    let r = decreasing_rearrangement(&f);
    println!("mu(f) pieces:");
    for p in r.mu.pieces() {
        println!("  [{}, {}) -> {}", p.start, p.end, p.value);
    }
    println!("integral of |f| = {}", r.source_total);
    println!("m(|f| > 1) = {}", distribution_function(&f, &int(1))?);

    let g = DecreasingTailFunction::plateau_with_tail(int(3), int(1), int(3), 2)?;
    println!("f << g: {}", submajorizes(&g, &f)?);
    let h = StepFunction::indicator(Domain::HalfLine, int(0), int(4))?;
    match submajorization_witness(&h, &f)? {
        None => println!("f << 1_[0,4)"),
        Some(t) => println!("f is not << 1_[0,4): fails at t = {t}"),
    }
    // Same total mass 5, partial integrals 3, 5, 5 against 3, 4, 5.
    let k = StepFunction::new(
        Domain::HalfLine,
        vec![Piece::new(int(0), int(1), int(3)), Piece::new(int(1), int(2), int(2))],
    )?;
    println!("f < k: {}", majorizes(&k, &f)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
