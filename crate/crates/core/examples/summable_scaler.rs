// Multipliers y_n -> ∞ that keep Σ|x_n| y_n finite.

use rearr::criteria::ScalerResult;
use rearr::prelude::*;

pub fn run_example() -> Result<()> {
    let x = SummableSequence::geometric(int(1), rat(1, 4))?;
    let s = summable_scaler(&x);
    println!("thresholds: {:?}", s.thresholds().take(8).collect::<Vec<_>>());
    println!("y_1..y_8: {:?}", s.multipliers(8).iter().map(ToString::to_string).collect::<Vec<_>>());
    let partial = s.weighted_partial_sum(50);
    let bound = s.certified_series_bound(50);
    println!("sum up to 50 = {:.15}", to_f64(&partial));
    println!("certified bound = {:.15} (exact series 13/36 = {:.15})", to_f64(&bound), 13.0 / 36.0);
    println!("tail weight beyond level 50: {}", ScalerResult::weighted_tail_bound(50));

    let spike = summable_scaler(&SummableSequence::finite(vec![int(1), int(1), int(1)]));
    println!("(1, 1, 1): first threshold {}", spike.threshold(1));
    Ok(())
}

fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
