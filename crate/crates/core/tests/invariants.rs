use grid_lefschetz::ideals::{macaulay_dual_check, GradedQuotient, PowersIdealSpec};
use grid_lefschetz::inverse::InverseSystem;
use grid_lefschetz::lefschetz::{artinian_dual, mult_map_analysis, wlp_test, Restriction};
use grid_lefschetz::predict::{coker_formula_geproci, square_grid_wlp_verdict};
use grid_lefschetz::{GridConfig, GridParams, Locus, PrimeField, RandomSeed, RationalField};
use proptest::prelude::*;

fn grid(a: usize, b: usize, seed: u64) -> GridConfig<PrimeField> {
    GridConfig::new(PrimeField::default(), a, b, GridParams::Random(RandomSeed(seed))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_are_consistent(a in 2usize..5, extra in 0usize..3, d in 1usize..6, seed in 0u64..10_000) {
        let g = grid(a, a + extra, seed);
        let r = wlp_test(&g, d, 2, RandomSeed(seed)).unwrap();
        prop_assert!(r.degrees.iter().all(|m| m.identities_hold()));
        prop_assert!(r.surjectivity_persists());
        prop_assert!(r.injectivity_is_initial());
        prop_assert_eq!(r.verdict, r.failing.is_empty());
        // consecutive reports share the middle dimension
        for w in r.degrees.windows(2) {
            prop_assert_eq!(w[0].dim_to, w[1].dim_from);
        }
        // the ideal starts in degree d
        for m in r.degrees.iter().filter(|m| m.t < d) {
            prop_assert!(m.maximal_rank && m.injective());
        }
    }

    #[test]
    fn square_grids_follow_the_rule(a in 3usize..5, d in 1usize..8, seed in 0u64..10_000) {
        prop_assume!(d <= 3 * (a - 1));
        let r = wlp_test(&grid(a, a, seed), d, 3, RandomSeed(seed)).unwrap();
        prop_assert_eq!(r.verdict, square_grid_wlp_verdict(a as i64, d as i64));
    }

    #[test]
    fn cokernels_follow_the_formula(a in 2usize..4, extra in 0usize..3, d in 2usize..6, t in 0usize..3, seed in 0u64..10_000) {
        let b = a + extra;
        let Some(predicted) = coker_formula_geproci(a as i64, b as i64, d as i64, t as i64) else { return Ok(()) };
        let r = wlp_test(&grid(a, b, seed), d, 3, RandomSeed(seed)).unwrap();
        let measured = r.degree(d + t).map_or(0, |m| m.coker_dim as i64);
        prop_assert_eq!(measured, predicted);
    }

    #[test]
    fn three_routes_to_one_cokernel(a in 2usize..4, d in 1usize..5, t in 1usize..8, seed in 0u64..10_000, locus in 0usize..3) {
        let g = grid(a, a + 1, seed);
        let locus = [Locus::Generic, Locus::Lambda(0), Locus::Plane(0, 1)][locus];
        let l = g.sample_form(locus, &mut RandomSeed(seed).stream("l", 0)).unwrap();
        let (spec, system) = artinian_dual(&g, d).unwrap();
        prop_assume!(t <= system.top());
        let direct = mult_map_analysis(&g, d, &l, t).unwrap();
        let restricted = Restriction::new(&g, d, &l).unwrap().report(&system, t).unwrap();
        let quotient = GradedQuotient::compute(&spec, spec.degree_cap()).unwrap();
        let form = grid_lefschetz::ideals::GradedIdeal::ring(&spec).linear_form(&l).unwrap();
        prop_assert_eq!(direct, restricted);
        prop_assert_eq!(quotient.mult_rank(&form, t).unwrap(), direct.rank);
    }

    #[test]
    fn duality_with_fat_points(a in 2usize..4, extra in 0usize..2, d in 1usize..5, k in 0usize..3, seed in 0u64..10_000) {
        let c = macaulay_dual_check(&grid(a, a + extra, seed), d, d + k).unwrap();
        prop_assert!(c.equal, "{} != {}", c.lhs, c.rhs);
    }

    #[test]
    fn seeds_do_not_change_hilbert_functions(a in 2usize..4, extra in 0usize..2, d in 1usize..5, s1 in 0u64..10_000, s2 in 0u64..10_000) {
        let h = |s: u64| artinian_dual(&grid(a, a + extra, s), d).unwrap().1.hilbert_table();
        prop_assert_eq!(h(s1), h(s2));
    }
}

#[test]
fn rational_and_prime_systems_agree() {
    for (a, b, d) in [(2, 2, 2), (2, 3, 3), (3, 3, 3), (3, 4, 2)] {
        let p = GridConfig::new(PrimeField::default(), a, b, GridParams::Random(RandomSeed(9))).unwrap();
        let q = GridConfig::new(RationalField, a, b, GridParams::Random(RandomSeed(9))).unwrap();
        let hp = InverseSystem::of_powers(&PowersIdealSpec::new(p.clone(), d).unwrap()).unwrap().hilbert_table();
        let hq = InverseSystem::of_powers(&PowersIdealSpec::new(q.clone(), d).unwrap()).unwrap().hilbert_table();
        assert_eq!(hp, hq, "{a}x{b} d={d}");
        let rp = wlp_test(&p, d, 3, RandomSeed(9)).unwrap();
        let rq = wlp_test(&q, d, 3, RandomSeed(9)).unwrap();
        assert_eq!(rp.degrees, rq.degrees, "{a}x{b} d={d}");
    }
}
