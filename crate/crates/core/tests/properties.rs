mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use proptest::sample::subsequence;

use toricgb::gb::{
    buchberger, reduce_basis, BlockOrder, BuchbergerOptions, Monomial, PairStrategy, TermOrder,
};
use toricgb::lattice::{Configuration, LatticeVector};
use toricgb::semigroup::{full_face_bound, Semigroup};
use toricgb::toric::{build_elimination_system, run_pipeline, toric_groebner, vanishes, PipelineOptions};
use toricgb::verifier::{canonical_points, facet_incidence, permutations};

fn configuration(alpha_max: u64, d_max: usize, c_max: usize) -> impl Strategy<Value = Configuration> {
    (2..=alpha_max, 2..=d_max)
        .prop_flat_map(move |(alpha, d)| {
            let pool = common::non_corner_points(alpha, d);
            let hi = pool.len().min(c_max);
            (Just(alpha), Just(d), subsequence(pool, 1..=hi).prop_shuffle())
        })
        .prop_map(|(alpha, d, pts)| Configuration::from_points(alpha, d, pts).unwrap())
}

fn exponents(n: usize, max: u16) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0..=max, n)
}

fn orders() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::Grevlex),
        Just(TermOrder::Lex),
        Just(TermOrder::Elimination {
            split: 2,
            rest: BlockOrder::Grevlex
        }),
        Just(TermOrder::Elimination {
            split: 2,
            rest: BlockOrder::Lex
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lcm_gcd_laws(a in exponents(5, 6), b in exponents(5, 6)) {
        let (u, v) = (Monomial::from_exponents(a), Monomial::from_exponents(b));
        let l = u.lcm(&v);
        let g = u.gcd(&v);
        prop_assert!(u.divides(&l) && v.divides(&l));
        prop_assert!(g.divides(&u) && g.divides(&v));
        prop_assert_eq!(l.checked_mul(&g).unwrap(), u.checked_mul(&v).unwrap());
        prop_assert_eq!(u.is_coprime(&v), g.is_one());
    }

    #[test]
    fn term_orders_are_monomial_orders(
        order in orders(),
        a in exponents(5, 4),
        b in exponents(5, 4),
        c in exponents(5, 4),
    ) {
        let (u, v, w) = (Monomial::from_exponents(a), Monomial::from_exponents(b), Monomial::from_exponents(c));
        let uv = order.cmp(&u, &v);
        prop_assert_eq!(uv, order.cmp(&v, &u).reverse());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
        // multiplicative
        prop_assert_eq!(order.cmp(&u.checked_mul(&w).unwrap(), &v.checked_mul(&w).unwrap()), uv);
        // 1 is the least monomial
        prop_assert_ne!(order.cmp(&Monomial::one(5), &u), Ordering::Greater);
        // transitive
        if uv == Ordering::Less && order.cmp(&v, &w) == Ordering::Less {
            prop_assert_eq!(order.cmp(&u, &w), Ordering::Less);
        }
    }

    #[test]
    fn canonical_form_is_orbit_invariant(cfg in configuration(4, 4, 12), seed in 0usize..24) {
        let perms = permutations(cfg.dim());
        let p = &perms[seed % perms.len()];
        let moved: Vec<LatticeVector> = cfg.a_points().iter().map(|x| x.permuted(p)).collect();
        prop_assert_eq!(canonical_points(cfg.a_points(), &perms), canonical_points(&moved, &perms));
        prop_assert_eq!(facet_incidence(cfg.a_points(), &perms), facet_incidence(&moved, &perms));
    }

    #[test]
    fn invariants_survive_coordinate_permutation(cfg in configuration(4, 3, 8), seed in 0usize..6) {
        let perms = permutations(cfg.dim());
        let p = &perms[seed % perms.len()];
        let moved = Configuration::from_points(
            cfg.alpha(),
            cfg.dim(),
            cfg.a_points().iter().map(|x| x.permuted(p)).collect(),
        ).unwrap();
        prop_assert_eq!(cfg.degree().unwrap(), moved.degree().unwrap());
        prop_assert_eq!(
            Semigroup::new(&cfg).reduction_number().unwrap(),
            Semigroup::new(&moved).reduction_number().unwrap()
        );
    }

    #[test]
    fn reduction_number_bounds(cfg in configuration(4, 4, 12)) {
        let r = Semigroup::new(&cfg).reduction_number().unwrap() as i64;
        let deg = cfg.degree().unwrap() as i64;
        prop_assert!(r >= 1);
        prop_assert!(r <= deg - cfg.codimension() as i64, "r = {} deg = {} for {}", r, deg, cfg);
        if let Some(b) = full_face_bound(&cfg).unwrap() {
            prop_assert!(r as u64 <= b);
        }
    }

    #[test]
    fn degree_bounds_hold(cfg in configuration(4, 4, 12)) {
        let g = toric_groebner(&cfg, BlockOrder::Grevlex).unwrap();
        let r = Semigroup::new(&cfg).reduction_number().unwrap() as u64;
        let c = cfg.codimension() as u64;
        let m = u64::from(g.max_degree());
        prop_assert!(m <= (r + 1).max(2 * r - 1));
        prop_assert!(m <= c.max(cfg.alpha()).max(c * (cfg.alpha() - 1) - 1));
        prop_assert!(m <= c * cfg.degree().unwrap());
        for b in g.elements() {
            prop_assert!(vanishes(&cfg, b).unwrap());
        }
    }

    #[test]
    fn elimination_generators_are_homogeneous(cfg in configuration(5, 4, 12)) {
        let sys = build_elimination_system(&cfg, BlockOrder::Grevlex).unwrap();
        prop_assert_eq!(sys.generators.len(), cfg.codimension() + cfg.dim());
        for g in &sys.generators {
            prop_assert!(g.is_weight_homogeneous(&sys.weights));
            prop_assert!(g.lead().touches_prefix(cfg.dim()));
            prop_assert!(!g.tail().touches_prefix(cfg.dim()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reduced_basis_is_independent_of_strategy_and_input_order(cfg in configuration(4, 3, 8), seed in any::<u64>()) {
        let sys = build_elimination_system(&cfg, BlockOrder::Grevlex).unwrap();
        let normal = buchberger(&sys.generators, &sys.order, &BuchbergerOptions::default()).unwrap();
        let fifo = buchberger(
            &sys.generators,
            &sys.order,
            &BuchbergerOptions { strategy: PairStrategy::Fifo, ..Default::default() },
        ).unwrap();
        let mut shuffled = sys.generators.clone();
        let mut r = common::rng(seed);
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut r);
        let permuted = buchberger(&shuffled, &sys.order, &BuchbergerOptions::default()).unwrap();
        let a = reduce_basis(&normal).unwrap();
        prop_assert_eq!(&a, &reduce_basis(&fifo).unwrap());
        prop_assert_eq!(&a, &reduce_basis(&permuted).unwrap());
    }

    #[test]
    fn truncation_is_sound(cfg in configuration(4, 4, 10)) {
        let r = Semigroup::new(&cfg).reduction_number().unwrap() as u64;
        let base = PipelineOptions { keep_elimination_basis: true, ..Default::default() };
        let full = run_pipeline(&cfg, &base).unwrap();
        let cut = run_pipeline(
            &cfg,
            &PipelineOptions { truncation: Some(toricgb::toric::truncation_cap(&cfg, r)), ..base },
        ).unwrap();
        prop_assert_eq!(full.basis, cut.basis);
        prop_assert_eq!(full.elimination_basis, cut.elimination_basis);
    }
}
