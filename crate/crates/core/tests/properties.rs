mod common;

use common::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rearr::criteria::{ScalerResult, SequenceTail};
use rearr::document::{parse_document, to_json, Document};
use rearr::envelope::least_concave_majorant_of_points;
use rearr::piecewise::first_violation;
use rearr::prelude::*;
use rearr::rearrangement::rearranged_partial_integral;

fn unit_or_half(flag: bool) -> Domain {
    if flag {
        Domain::UnitInterval
    } else {
        Domain::HalfLine
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rearrangement_is_equimeasurable(seed in any::<u64>(), unit in any::<bool>()) {
        let f = random_step(&mut rng(seed), unit_or_half(unit), 8);
        let mu = decreasing_rearrangement(&f).mu;
        prop_assert!(mu.is_zero() || mu.is_nonincreasing());
        prop_assert_eq!(mu.total_integral(), f.total_integral());
        let mut levels: Vec<Rational> = f.pieces().iter().map(|p| p.value.abs()).collect();
        levels.push(Rational::zero());
        for s in &levels {
            prop_assert_eq!(distribution_function(&mu, s).unwrap(), distribution_function(&f, s).unwrap());
        }
        prop_assert_eq!(decreasing_rearrangement(&mu).mu, mu.clone());
        prop_assert!(majorizes(&f, &mu).unwrap() && majorizes(&mu, &f).unwrap());
    }

    #[test]
    fn rearrangement_commutes_with_scaling(seed in any::<u64>(), num in 1i64..20, den in 1i64..7) {
        let f = random_step(&mut rng(seed), Domain::HalfLine, 8);
        let lambda = rat(num, den);
        prop_assert_eq!(
            decreasing_rearrangement(&f.scale(&lambda)).mu,
            decreasing_rearrangement(&f).mu.scale(&lambda)
        );
    }

    #[test]
    fn dominance_agrees_with_breakpoint_oracle(a in any::<u64>(), b in any::<u64>()) {
        let f = random_step(&mut rng(a), Domain::HalfLine, 6);
        let g = random_step(&mut rng(b), Domain::HalfLine, 6);
        let mut points = rearranged_breakpoints(&f);
        points.extend(rearranged_breakpoints(&g));
        let oracle = points
            .iter()
            .all(|t| sorted_partial_integral(&f, t) <= sorted_partial_integral(&g, t));
        prop_assert_eq!(submajorizes(&g, &f).unwrap(), oracle);
        if let Some(Extended::Finite(t)) = first_violation(&rearranged_partial_integral(&f), &rearranged_partial_integral(&g)).unwrap() {
            prop_assert!(sorted_partial_integral(&f, &t) > sorted_partial_integral(&g, &t));
        }
    }

    #[test]
    fn modular_is_midpoint_convex(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = OrliczFunction::new(random_density(&mut r)).unwrap();
        let f = random_step(&mut r, Domain::HalfLine, 6);
        let h = f.map_values(|v| v * rat(3, 2) - int(1));
        let mid = StepFunction::new(
            Domain::HalfLine,
            f.pieces().iter().map(|p| Piece::new(p.start.clone(), p.end.clone(), (&p.value + (&p.value * rat(3, 2) - int(1))) / int(2))).collect(),
        ).unwrap();
        let lhs = modular(&g, &mid).unwrap().scale(&int(2));
        let rhs = modular(&g, &f).unwrap().add(&modular(&g, &h).unwrap());
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn norm_enclosures_are_homogeneous(seed in any::<u64>(), num in 1i64..9, den in 1i64..5) {
        let mut r = rng(seed);
        let g = OrliczFunction::new(random_unbounded_density(&mut r)).unwrap();
        let f = random_step(&mut r, Domain::HalfLine, 5);
        let lambda = rat(num, den);
        let eps = pow2(-24);
        let scaled = luxemburg_norm(&g, &f.scale(&lambda), &eps).unwrap();
        let base = luxemburg_norm(&g, &f, &(&eps / &lambda)).unwrap().scale(&lambda);
        prop_assert!(scaled.overlaps(&base));
        prop_assert!(&scaled.upper - &scaled.lower <= eps);
    }

    #[test]
    fn conjugate_matches_direct_supremum(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = OrliczFunction::new(random_density(&mut r)).unwrap();
        let conj = young_conjugate(&g).unwrap();
        for _ in 0..6 {
            let t = random_rational(&mut r, 0, 30, 4);
            let got = conj.evaluate(&t).unwrap();
            match conjugate_oracle(&g, &t) {
                Some(v) => prop_assert_eq!(got, Extended::Finite(v)),
                None => prop_assert_eq!(got, Extended::Infinity),
            }
        }
    }

    #[test]
    fn young_equality_on_the_density_graph(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = OrliczFunction::new(random_unbounded_density(&mut r)).unwrap();
        let conj = young_conjugate(&g).unwrap();
        for seg in g.density().segments() {
            let s = seg.start.clone();
            let t = seg.value.clone();
            let rhs = g.evaluate(&s).unwrap().add(&conj.evaluate(&t).unwrap());
            prop_assert_eq!(rhs, Extended::Finite(&s * &t));
        }
    }

    #[test]
    fn fundamental_function_is_quasiconcave(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = OrliczFunction::new(random_unbounded_density(&mut r)).unwrap();
        let eps = pow2(-30);
        let grid: Vec<Rational> = (1..=8).map(|i| rat(i, 3)).collect();
        let phis: Vec<NormEnclosure> = grid.iter().map(|t| fundamental_function(&g, t, &eps).unwrap()).collect();
        for i in 0..grid.len() - 1 {
            // nondecreasing: φ(t_i) ≤ φ(t_{i+1})
            prop_assert!(phis[i].lower <= phis[i + 1].upper);
            // φ(t)/t nonincreasing
            prop_assert!(&phis[i + 1].lower / &grid[i + 1] <= &phis[i].upper / &grid[i]);
        }
    }

    #[test]
    fn derivative_integrates_back(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut points = vec![(Rational::zero(), Rational::zero())];
        for i in 1..=rng_len(&mut r) {
            points.push((int(i), random_rational(&mut r, 0, 10, 3)));
        }
        let psi = least_concave_majorant_of_points(points.clone(), Rational::zero()).unwrap();
        let d = derivative_step(&psi, Domain::HalfLine).unwrap();
        for (x, y) in psi.psi().points() {
            prop_assert_eq!(d.integrate(&Extended::Finite(x.clone())).unwrap(), y.clone());
        }
        for (x, y) in &points {
            prop_assert!(&psi.eval(x).unwrap() >= y);
        }
    }

    #[test]
    fn marcinkiewicz_norm_respects_submajorization(a in any::<u64>(), b in any::<u64>()) {
        let mut r = rng(a);
        let f = random_step(&mut r, Domain::HalfLine, 5);
        let g = random_step(&mut rng(b), Domain::HalfLine, 5);
        let slopes = [random_rational(&mut r, 1, 6, 2), random_rational(&mut r, 0, 3, 2)];
        let (hi, lo) = if slopes[0] >= slopes[1] { (&slopes[0], &slopes[1]) } else { (&slopes[1], &slopes[0]) };
        let psi = ConcaveMajorant::new(
            PiecewiseAffineFunction::new(vec![(int(0), int(0)), (int(1), hi.clone())], lo.clone()).unwrap(),
        )
        .unwrap();
        if submajorizes(&g, &f).unwrap() {
            prop_assert!(marcinkiewicz_norm(&psi, &f).unwrap() <= marcinkiewicz_norm(&psi, &g).unwrap());
        }
    }

    #[test]
    fn scaler_invariants(seed in any::<u64>(), geometric in any::<bool>()) {
        let mut r = rng(seed);
        let head: Vec<Rational> = (0..rng_len(&mut r)).map(|_| random_rational(&mut r, -5, 5, 4)).collect();
        let tail = if geometric {
            SequenceTail::Geometric { scale: random_rational(&mut r, 1, 5, 2), ratio: rat(rand::Rng::gen_range(&mut r, 1..=2), 3) }
        } else {
            SequenceTail::Zero
        };
        let x = SummableSequence::new(head, tail).unwrap();
        let s = summable_scaler(&x);
        let ys = s.multipliers(60);
        prop_assert!(ys.windows(2).all(|w| w[0] <= w[1]));
        for l in 1..=5 {
            prop_assert!(s.tail_inequality_holds(l, 60));
        }
        let mut previous = Rational::zero();
        for n in [5, 10, 20, 40] {
            let partial = s.weighted_partial_sum(n);
            prop_assert!(partial >= previous);
            prop_assert!(partial <= s.certified_series_bound(6));
            previous = partial;
        }
        prop_assert!(ScalerResult::weighted_tail_bound(6) > Rational::zero());
    }

    #[test]
    fn transfer_holds_under_submajorization(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = OrliczFunction::new(random_unbounded_density(&mut r)).unwrap();
        let f = decreasing_rearrangement(&random_step(&mut r, Domain::HalfLine, 6)).mu;
        let g = decreasing_rearrangement(&random_step(&mut r, Domain::HalfLine, 6)).mu;
        if submajorizes(&g, &f).unwrap() {
            prop_assert!(convex_transfer_check(&phi, &f, &g).unwrap());
        }
        let top = f.scale(&int(2));
        prop_assert!(convex_transfer_check(&phi, &f, &top).unwrap());
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), unit in any::<bool>()) {
        let mut r = rng(seed);
        let docs: Vec<Document> = vec![
            random_step(&mut r, unit_or_half(unit), 8).into(),
            random_density(&mut r).into(),
        ];
        for doc in docs {
            let text = to_json(&doc);
            let back = parse_document(&text).unwrap();
            prop_assert_eq!(to_json(&back), text);
            prop_assert_eq!(back, doc);
        }
    }

    #[test]
    fn majorant_ignores_rearrangement(seed in any::<u64>()) {
        let mut r = rng(seed);
        let members: Vec<StepFunction> = (0..3).map(|_| random_step(&mut r, Domain::UnitInterval, 5)).collect();
        let rearranged: Vec<StepFunction> = members.iter().map(|f| decreasing_rearrangement(f).mu).collect();
        let a = chong_majorant(&FunctionFamily::new(members).unwrap()).unwrap();
        let b = chong_majorant(&FunctionFamily::new(rearranged).unwrap()).unwrap();
        prop_assert_eq!(&a.g, &b.g);
        prop_assert!(a.g.pieces().iter().all(|p| p.value.is_positive()));
    }
}

fn rng_len(r: &mut rand_chacha::ChaCha8Rng) -> i64 {
    use rand::Rng;
    r.gen_range(1..=6)
}
