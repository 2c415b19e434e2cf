//! Randomized invariants. Each property draws a seed and builds its inputs
//! with a ChaCha generator, so cases are reproducible from the fixed
//! proptest seed below.

mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sympair::boothby_wang::extension_constants;
use sympair::coordforms::{self, evaluate, pd, pullback, pwedge, PolyForm};
use sympair::exterior::{self, volume_form};
use sympair::lie::Catalog;
use sympair::pairs::{check_symplectic_pair, couple_type_on, pair_to_pm, CoupleType};
use sympair::poly::{PolyMap, Polynomial};
use sympair::sampling::{random_algebra4, random_closed_two_form, random_congruence, random_form};
use sympair::search::{self, PairSearch};
use sympair::{ExteriorForm, LieAlgebra, Scalar};

fn config() -> Config {
    Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(0x5eed_2024),
        failure_persistence: None,
        ..Config::default()
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    if rng.gen_bool(0.25) {
        let pool: Vec<LieAlgebra> = Catalog::standard()
            .entries()
            .filter(|e| e.algebra.dim() == 4)
            .map(|e| e.algebra.clone())
            .collect();
        return pool[rng.gen_range(0..pool.len())].clone();
    }
    let unimodular = rng.gen_bool(0.6);
    random_algebra4(rng, unimodular)
}

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into())
}

fn polynomial(rng: &mut ChaCha8Rng, nvars: usize) -> Polynomial {
    let terms: Vec<_> = (0..rng.gen_range(0..4))
        .map(|_| {
            let exp = (0..nvars).map(|_| if rng.gen_bool(0.3) { rng.gen_range(1..3) } else { 0 }).collect();
            (exp, rational(rng))
        })
        .collect();
    Polynomial::from_terms(terms)
}

fn poly_form(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> PolyForm {
    let mut terms = Vec::new();
    for b in sympair::Blade::all(n, degree) {
        if rng.gen_bool(0.5) {
            terms.push((b.indices(), polynomial(rng, n)));
        }
    }
    PolyForm::from_terms(n, degree, terms).expect("valid blades")
}

fn poly_map(rng: &mut ChaCha8Rng, n: usize) -> PolyMap {
    PolyMap::new(n, (0..n).map(|_| polynomial(rng, n)).collect()).expect("variables in range")
}

fn point(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n).map(|_| rational(rng)).collect()
}

fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    if rng.gen_bool(0.5) {
        Scalar::from_rational(rational(rng))
    } else {
        let d = [2u64, 3, 5, 6, 7][rng.gen_range(0..5)];
        Scalar::quadratic(rational(rng), rational(rng), d).expect("squarefree radicand")
    }
}

fn sign(p: usize, q: usize) -> Scalar {
    Scalar::int(if (p * q).is_multiple_of(2) { 1 } else { -1 })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn wedge_graded_commutative_and_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=8);
        let (p, q, s) = (r.gen_range(0..=3), r.gen_range(0..=3), r.gen_range(0..=2));
        let (a, b, c) = (random_form(&mut r, n, p, 0.3), random_form(&mut r, n, q, 0.3), random_form(&mut r, n, s, 0.3));
        let ab = a.wedge(&b).unwrap();
        prop_assert_eq!(&ab, &b.wedge(&a).unwrap().scale(&sign(p, q)));
        prop_assert_eq!(ab.wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn contraction_is_an_antiderivation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=6);
        let (p, q) = (r.gen_range(1..=3), r.gen_range(1..=2));
        let (a, b) = (random_form(&mut r, n, p, 0.4), random_form(&mut r, n, q, 0.4));
        let v: Vec<Scalar> = (0..n).map(|_| Scalar::int(r.gen_range(-2..=2))).collect();
        let lhs = exterior::contract(&v, &a.wedge(&b).unwrap()).unwrap();
        let first = exterior::contract(&v, &a).unwrap().wedge(&b).unwrap();
        let second = a.wedge(&exterior::contract(&v, &b).unwrap()).unwrap();
        let rhs = if p % 2 == 0 { first.add(&second) } else { first.sub(&second) }.unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_is_dimension_minus_kernel(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=8);
        let w = random_form(&mut r, n, 2, 0.3);
        let rank = exterior::rank_two_form(&w).unwrap();
        prop_assert_eq!(rank, n - exterior::kernel(&w).unwrap().dim());
        prop_assert_eq!(rank, exterior::rank_by_powers(&w));
        prop_assert_eq!(rank % 2, 0);
    }

    #[test]
    fn square_zero_iff_decomposable_in_dim_four(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = if r.gen_bool(0.5) {
            random_form(&mut r, 4, 2, 0.5)
        } else {
            random_form(&mut r, 4, 1, 0.7).wedge(&random_form(&mut r, 4, 1, 0.7)).unwrap()
        };
        let rank = exterior::rank_two_form(&w).unwrap();
        prop_assert_eq!(w.wedge(&w).unwrap().is_zero(), rank <= 2);
        prop_assert_eq!(common::wedge_top(&w, &w).is_zero(), rank <= 2);
    }

    #[test]
    fn scalar_print_parse_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = scalar(&mut r);
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
    }

    #[test]
    fn d_squared_vanishes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut g = algebra(&mut r);
        if r.gen_bool(0.3) {
            let w = random_closed_two_form(&mut r, &g);
            g = LieAlgebra::new(extension_constants(&g, &[&w]).unwrap(), None).unwrap();
        }
        let p = r.gen_range(0..g.dim() - 1);
        let f = random_form(&mut r, g.dim(), p, 0.5);
        prop_assert!(g.ce_d(&g.ce_d(&f).unwrap()).unwrap().is_zero());
        prop_assert!(g.constants().d_squared_vanishes());
    }

    #[test]
    fn differential_matches_direct_evaluation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let w = random_form(&mut r, 4, 2, 0.5);
        let dw = g.ce_d(&w).unwrap();
        let direct = common::d_two_form(&g, &w);
        let lib: Vec<Scalar> = sympair::Blade::all(4, 3).iter().map(|b| dw.coefficient_of(*b)).collect();
        prop_assert_eq!(lib, direct);
    }

    #[test]
    fn extension_jacobi_iff_closed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let w = if r.gen_bool(0.5) { random_closed_two_form(&mut r, &g) } else { random_form(&mut r, 4, 2, 0.5) };
        let ext = extension_constants(&g, &[&w]).unwrap();
        prop_assert_eq!(ext.jacobi_check().is_ok(), g.is_closed(&w).unwrap());
        prop_assert_eq!(common::closed(&g, &w), g.is_closed(&w).unwrap());
    }

    #[test]
    fn signature_is_a_congruence_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let gram = search::wedge_gram(&g).unwrap();
        let moved = random_congruence(&mut r, &gram.gram);
        prop_assert_eq!(search::signature(&moved).unwrap(), gram.signature());
        let k = Scalar::int([-3, -1, 2, 5][r.gen_range(0..4)]);
        let scaled = search::wedge_gram_with_volume(&g, &volume_form(4).scale(&k)).unwrap().signature();
        let expect = if k.is_positive() { gram.signature() } else {
            let s = gram.signature();
            search::SignatureResult { p: s.m, m: s.p, z: s.z }
        };
        prop_assert_eq!(scaled, expect);
    }

    #[test]
    fn oracle_never_contradicts_decision(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let found = search::brute_force_oracle(&g, r.gen(), 200).unwrap();
        prop_assert!(!found || search::has_invariant_symplectic_pair(&g).unwrap());
        if !search::has_invariant_symplectic(&g).unwrap() {
            prop_assert!(!search::has_invariant_symplectic_pair(&g).unwrap());
        }
    }

    #[test]
    fn witnesses_are_sound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        match search::construct_pair_witness(&g).unwrap() {
            PairSearch::Witness(w) => {
                prop_assert!(check_symplectic_pair(&g, &w.omega1, &w.omega2).unwrap().verdict);
                prop_assert!(common::closed(&g, &w.omega1) && common::closed(&g, &w.omega2));
                prop_assert!(!common::wedge_top(&w.omega1, &w.omega2).is_zero());
            }
            PairSearch::Absent(c) => prop_assert!(!c.signature.is_indefinite()),
        }
    }

    #[test]
    fn pair_iff_plus_minus_couple(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let (w1, w2) = match search::construct_pair_witness(&g).unwrap() {
            PairSearch::Witness(w) if r.gen_bool(0.6) => {
                let s = Scalar::int(r.gen_range(1..4));
                let t = Scalar::int(-r.gen_range(1..4));
                (w.omega1.scale(&s), w.omega2.scale(&t))
            }
            _ => (random_closed_two_form(&mut r, &g), random_closed_two_form(&mut r, &g)),
        };
        let rep = check_symplectic_pair(&g, &w1, &w2).unwrap();
        prop_assert_eq!(rep.verdict, check_symplectic_pair(&g, &w2, &w1).unwrap().verdict);
        let (plus, minus) = pair_to_pm(&w1, &w2).unwrap();
        let couple = couple_type_on(&g, &plus, &minus).unwrap_or(CoupleType::Neither);
        prop_assert_eq!(rep.verdict, couple == CoupleType::SymplecticPair);
    }

    #[test]
    fn gram_survives_a_zero_dimensional_summand(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let h = g.direct_sum(&LieAlgebra::abelian(0).unwrap()).unwrap();
        prop_assert_eq!(h.constants(), g.constants());
        let (a, b) = (search::wedge_gram(&g).unwrap(), search::wedge_gram(&h).unwrap());
        prop_assert_eq!(a.gram, b.gram);
    }

    #[test]
    fn polynomial_d_squared_vanishes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let p = r.gen_range(0..n - 1);
        let phi = poly_form(&mut r, n, p);
        prop_assert!(pd(&pd(&phi).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn pullback_is_natural(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let (p, q) = (r.gen_range(0..=2), r.gen_range(0..=1));
        let (a, b) = (poly_form(&mut r, n, p), poly_form(&mut r, n, q));
        let (f, h) = (poly_map(&mut r, n), poly_map(&mut r, n));
        let fa = pullback(&f, &a).unwrap();
        prop_assert_eq!(pullback(&f, &pd(&a).unwrap()).unwrap(), pd(&fa).unwrap());
        prop_assert_eq!(
            pullback(&f, &pwedge(&a, &b).unwrap()).unwrap(),
            pwedge(&fa, &pullback(&f, &b).unwrap()).unwrap()
        );
        prop_assert_eq!(pullback(&h.compose(&f).unwrap(), &a).unwrap(), pullback(&f, &pullback(&h, &a).unwrap()).unwrap());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let (p, q) = (r.gen_range(0..=2), r.gen_range(0..=2));
        let (a, b, c) = (poly_form(&mut r, n, p), poly_form(&mut r, n, q), poly_form(&mut r, n, p));
        let x = point(&mut r, n);
        let ev = |f: &PolyForm| evaluate(f, &x).unwrap();
        prop_assert_eq!(ev(&pwedge(&a, &b).unwrap()), ev(&a).wedge(&ev(&b)).unwrap());
        prop_assert_eq!(ev(&a.add(&c).unwrap()), ev(&a).add(&ev(&c)).unwrap());
    }

    #[test]
    fn constant_forms_embed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=5);
        let w = random_form(&mut r, n, 2, 0.5);
        let phi = coordforms::from_exterior(&w).unwrap();
        prop_assert!(pd(&phi).unwrap().is_zero());
        prop_assert_eq!(evaluate(&phi, &point(&mut r, n)).unwrap(), w);
    }

    #[test]
    fn pair_verdict_is_scale_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = algebra(&mut r);
        let (w1, w2): (ExteriorForm, ExteriorForm) = match search::construct_pair_witness(&g).unwrap() {
            PairSearch::Witness(w) if r.gen_bool(0.7) => (w.omega1, w.omega2),
            _ => (random_closed_two_form(&mut r, &g), random_closed_two_form(&mut r, &g)),
        };
        let (s, t) = (scalar(&mut r), scalar(&mut r));
        prop_assume!(!s.is_zero() && !t.is_zero());
        prop_assert_eq!(
            check_symplectic_pair(&g, &w1, &w2).unwrap().verdict,
            check_symplectic_pair(&g, &w1.scale(&s), &w2.scale(&t)).unwrap().verdict
        );
    }
}
