//! Random inputs and brute-force oracles shared by the integration tests.
//!
//! The oracles avoid the library's own algorithms: rearrangements are
//! computed by sorting cell values on a uniform grid, partial integrals by
//! summing sorted cells, and conjugates by maximizing over candidate points.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rearr::orlicz::{Density, DensitySegment, OrliczFunction};
use rearr::piecewise::{Domain, Piece, StepFunction};
use rearr::rational::{int, rat, Rational};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den))
}

/// A step function on cells `[i/q, (i+1)/q)` with at most `max_pieces`
/// pieces, together with its grid resolution `q`.
pub fn random_grid_step(rng: &mut ChaCha8Rng, domain: Domain, max_pieces: usize) -> (StepFunction, i64) {
    let q: i64 = [1, 2, 3, 4, 6, 8][rng.gen_range(0..6)];
    let span = match domain {
        Domain::UnitInterval => q,
        Domain::HalfLine => q * rng.gen_range(1..=6),
    };
    let pieces_wanted = rng.gen_range(0..=max_pieces);
    let mut cuts: Vec<i64> = (0..2 * pieces_wanted).map(|_| rng.gen_range(0..=span)).collect();
    cuts.sort();
    cuts.dedup();
    let mut pieces = Vec::new();
    for w in cuts.chunks(2) {
        if let [a, b] = w {
            let v = rat(rng.gen_range(-12..=12), rng.gen_range(1..=4));
            pieces.push(Piece::new(rat(*a, q), rat(*b, q), v));
        }
    }
    (StepFunction::new(domain, pieces).expect("valid random step function"), q)
}

pub fn random_step(rng: &mut ChaCha8Rng, domain: Domain, max_pieces: usize) -> StepFunction {
    random_grid_step(rng, domain, max_pieces).0
}

/// `|f|` on the cells of width `1/q` covering `[0, span)`.
pub fn cell_values(f: &StepFunction, q: i64, span: &Rational) -> Vec<Rational> {
    let cells = (span * int(q)).to_integer();
    let cells: i64 = cells.try_into().expect("small grids");
    (0..cells).map(|i| f.eval(&rat(i, q)).abs()).collect()
}

/// Brute-force `μ(f)` on a grid: sort cell values in decreasing order.
pub fn grid_rearrangement(f: &StepFunction, q: i64) -> StepFunction {
    let span = f.support_end();
    let mut cells = cell_values(f, q, &span);
    cells.sort_by(|a, b| b.cmp(a));
    let pieces = cells
        .into_iter()
        .enumerate()
        .map(|(i, v)| Piece::new(rat(i as i64, q), rat(i as i64 + 1, q), v))
        .collect();
    StepFunction::new(f.domain(), pieces).expect("valid rearrangement")
}

/// `∫₀ᵗ μ(f)` by sorting the piece values and walking their lengths.
pub fn sorted_partial_integral(f: &StepFunction, t: &Rational) -> Rational {
    let mut pieces: Vec<(Rational, Rational)> = f.pieces().iter().map(|p| (p.value.abs(), p.len())).collect();
    pieces.sort_by(|a, b| b.0.cmp(&a.0));
    let mut left = t.clone();
    let mut acc = Rational::zero();
    for (v, len) in pieces {
        if !left.is_positive() {
            break;
        }
        let take = if len < left { len } else { left.clone() };
        acc += &v * &take;
        left -= take;
    }
    acc
}

/// All piece endpoints of the rearrangement of `f`.
pub fn rearranged_breakpoints(f: &StepFunction) -> Vec<Rational> {
    let mut lens: Vec<(Rational, Rational)> = f.pieces().iter().map(|p| (p.value.abs(), p.len())).collect();
    lens.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out = vec![Rational::zero()];
    let mut acc = Rational::zero();
    for (_, len) in lens {
        acc += len;
        out.push(acc.clone());
    }
    out
}

/// A density with random jumps, flats and slopes. The last segment either
/// grows, stays flat, or is cut off by a limit.
pub fn random_density(rng: &mut ChaCha8Rng) -> Density {
    let n = rng.gen_range(1..=4);
    let mut segments = Vec::new();
    let mut start = Rational::zero();
    let mut value = if rng.gen_bool(0.7) { Rational::zero() } else { random_rational(rng, 1, 4, 3) };
    for i in 0..n {
        let slope = if rng.gen_bool(0.3) { Rational::zero() } else { random_rational(rng, 1, 6, 3) };
        segments.push(DensitySegment::new(start.clone(), value.clone(), slope.clone()));
        let len = random_rational(rng, 1, 4, 2);
        value = &value + &slope * &len;
        if i + 1 < n && rng.gen_bool(0.4) {
            value += random_rational(rng, 1, 3, 2);
        }
        start += len;
    }
    let limit = match rng.gen_range(0..3) {
        0 => Some(&start + random_rational(rng, 1, 3, 2)),
        _ => None,
    };
    if limit.is_none() && segments.iter().all(|s| s.value.is_zero() && s.slope.is_zero()) {
        segments.last_mut().expect("nonempty").slope = int(1);
    }
    Density::new(segments, limit).expect("valid random density")
}

/// A density that grows without bound, so `G` is an N-function candidate.
pub fn random_unbounded_density(rng: &mut ChaCha8Rng) -> Density {
    loop {
        let d = random_density(rng);
        let last = d.segments().last().expect("nonempty");
        if d.limit().is_none() && last.slope.is_positive() {
            return d;
        }
    }
}

/// `G*(t) = sup_s (s·t − G(s))` by maximizing over every vertex of `G`
/// and every interior stationary point `p(s) = t`.
pub fn conjugate_oracle(g: &OrliczFunction, t: &Rational) -> Option<Rational> {
    let d = g.density();
    let segs = d.segments();
    let mut candidates: Vec<Rational> = segs.iter().map(|s| s.start.clone()).collect();
    for (i, s) in segs.iter().enumerate() {
        let end = segs.get(i + 1).map(|n| n.start.clone()).or_else(|| d.limit().cloned());
        if s.slope.is_positive() {
            let x = &s.start + (t - &s.value) / &s.slope;
            if x > s.start && end.as_ref().is_none_or(|e| &x < e) {
                candidates.push(x);
            }
        } else if &s.value < t && end.is_none() {
            return None;
        }
    }
    if let Some(l) = d.limit() {
        candidates.push(l.clone());
    }
    candidates
        .iter()
        .map(|s| s * t - g.evaluate(s).unwrap().finite().cloned().expect("finite on candidates"))
        .max()
}
