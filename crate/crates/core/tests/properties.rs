mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewcode::codes::{codeword_weight, free_distance, DistanceOptions};
use skewcode::construct::construct_code;
use skewcode::construct::rook::{rook_solve, RookInstance, RookStrategy};
use skewcode::field::GaloisField;
use skewcode::matring::{semi_reduce, xi, xi_inv, ElementaryUnit, MMatrix};
use skewcode::skew::{idempotent_poly, RingContext, SkewPoly};
use skewcode::verify::{random_poly, random_skew};

fn field(q: u64) -> GaloisField {
    GaloisField::with_order(q).unwrap()
}

fn ring(q: u64, n: usize) -> RingContext {
    RingContext::new(&field(q), n).unwrap()
}

fn rings() -> impl Strategy<Value = (u64, usize)> {
    prop::sample::select(vec![(4u64, 3usize), (5, 2), (5, 4), (7, 3), (7, 6), (8, 7), (9, 4)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(q in prop::sample::select(vec![2u64, 3, 4, 5, 8, 9, 16, 25, 27]), seed: u64) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || rng.gen_range(0..f.order());
        let (a, b, c) = (pick(), pick(), pick());
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        prop_assert_eq!(f.pow(f.primitive(), q - 1), 1);
    }

    #[test]
    fn skew_ring_laws((q, n) in rings(), seed: u64) {
        let ctx = ring(q, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (random_skew(&ctx, 6, &mut rng), random_skew(&ctx, 6, &mut rng), random_skew(&ctx, 6, &mut rng));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, common::skew_mul(&f, &g));
    }

    #[test]
    fn components_decompose((q, n) in rings(), seed: u64) {
        let ctx = ring(q, n);
        let g = random_skew(&ctx, 7, &mut ChaCha8Rng::seed_from_u64(seed));
        let sum = g.components().iter().fold(SkewPoly::zero(&ctx), |acc, c| &acc + c);
        prop_assert_eq!(&sum, &g);
        for a in 1..=n {
            let e = SkewPoly::idempotent(&ctx, a).unwrap();
            let c = g.component(a).unwrap();
            prop_assert_eq!(&(&e * &g), &c);
            prop_assert_eq!(&(&e * &c), &c);
        }
    }

    #[test]
    fn xi_laws((q, n) in rings(), seed: u64) {
        let ctx = ring(q, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (random_skew(&ctx, 9, &mut rng), random_skew(&ctx, 9, &mut rng));
        let (xf, xg) = (xi(&f).unwrap(), xi(&g).unwrap());
        prop_assert_eq!(xf.matrix(), &common::xi_by_blocks(&f));
        prop_assert_eq!(xi(&(&f * &g)).unwrap(), &xf * &xg);
        prop_assert_eq!(xi_inv(&xf).unwrap(), f);
    }

    #[test]
    fn p_map_round_trip((q, n) in rings(), seed: u64) {
        let ctx = ring(q, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v: Vec<_> = (0..n).map(|_| random_poly(ctx.field(), 5, &mut rng)).collect();
        let g = SkewPoly::p_map(&ctx, &v).unwrap();
        let back = g.p_inverse().unwrap();
        prop_assert_eq!(back.len(), n);
        for (a, b) in v.iter().zip(&back) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn semi_reduce_invariants((q, n) in rings(), seed: u64) {
        let ctx = ring(q, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = xi(&random_skew(&ctx, 3 * n, &mut rng)).unwrap();
        let r = semi_reduce(&m);
        prop_assert!(r.unit.is_unit());
        prop_assert_eq!(&r.unit * &m, r.reduced.clone());
        prop_assert!(common::semi_reduced_by_degrees(r.reduced.matrix()));
        let from_factors = r.factors.iter().try_fold(m.clone(), |acc, u| u.apply(&acc)).unwrap();
        prop_assert_eq!(from_factors, r.reduced);
    }

    #[test]
    fn units_are_upper_triangular_at_zero((q, n) in rings(), seed: u64) {
        let ctx = ring(q, n);
        let f = ctx.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut u = MMatrix::identity(&ctx);
        for _ in 0..6 {
            let (a, b) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
            let alpha = rng.gen_range(1..f.order());
            let e = match rng.gen_range(0..3) {
                0 => ElementaryUnit::Scale { a, alpha },
                _ if a == b => continue,
                1 if a < b => ElementaryUnit::Upper { a, b, exp: rng.gen_range(0..3), alpha },
                _ if a < b => continue,
                _ => ElementaryUnit::Lower { a, b, exp: rng.gen_range(1..3), alpha },
            };
            let inv = e.inverse(&f).matrix(&ctx).unwrap();
            prop_assert_eq!(&e.matrix(&ctx).unwrap() * &inv, MMatrix::identity(&ctx));
            u = e.apply(&u).unwrap();
        }
        prop_assert!(u.is_unit());
        let at0 = u.matrix().at_zero();
        for (a, row) in at0.iter().enumerate() {
            prop_assert_ne!(row[a], 0);
            prop_assert!(row[..a].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn idempotents_interpolate((q, n) in rings()) {
        let ctx = ring(q, n);
        for a in 1..=n {
            prop_assert_eq!(idempotent_poly(&ctx, a).unwrap(), common::lagrange_idempotent(&ctx, a));
        }
    }

    #[test]
    fn rook_solutions_are_valid(n in 2usize..=9, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..n);
        let values: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let sol = rook_solve(&RookInstance::new(n, values.clone()).unwrap(), RookStrategy::Auto).unwrap();
        prop_assert!(common::rook_valid(n, &values, &sol.pairs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn distance_bounds_codeword_weights(seed: u64) {
        let ctx = ring(5, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=3);
        let nus: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=2)).collect();
        let code = construct_code(&ctx, &nus).unwrap();
        let d = free_distance(&code, DistanceOptions::default()).unwrap();
        for _ in 0..8 {
            let u: Vec<_> = (0..code.k()).map(|_| random_poly(ctx.field(), 3, &mut rng)).collect();
            if u.iter().all(|p| p.is_zero()) {
                continue;
            }
            let v = code.encode(&u).unwrap();
            prop_assert!(codeword_weight(&v) >= d);
        }
    }
}
