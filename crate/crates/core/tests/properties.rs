use catalan_hankel::polyfam::{fibonacci_poly, lucas_bivariate_eval};
use catalan_hankel::series::{motzkin_power, TruncatedSeries};
use catalan_hankel::verify::{self, check_lemma13, symbolic_c};
use catalan_hankel::{hankel_det, AdmissibleTable, Poly, Ring, WeightSpec};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..=9).prop_map(|v| Poly::from_i64s(&v))
}

proptest! {
    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.sub(&p), Poly::zero());
    }

    #[test]
    fn exact_division_round_trips(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!(p.mul(&q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn normalized_form_has_nonzero_lead(raw in prop::collection::vec(-2i64..=2, 0..8)) {
        let p = Poly::from_i64s(&raw);
        prop_assert!(p.coeffs().last().is_none_or(|c| *c != int(0)));
        prop_assert_eq!(p.degree().is_none(), p.is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), t in -6i64..=6) {
        let t = int(t);
        prop_assert_eq!(p.mul(&q).eval(&t), p.eval(&t) * q.eval(&t));
        prop_assert_eq!(p.add(&q).eval(&t), p.eval(&t) + q.eval(&t));
    }

    #[test]
    fn shift_composes(values in prop::collection::vec(-5i64..=5, 0..10), tail in -3i64..=3, j in 0usize..5, k in 0usize..12) {
        let w = WeightSpec::explicit(values.iter().map(|&v| int(v)).collect(), int(tail));
        let mut shifted = w.clone();
        for _ in 0..j {
            shifted = shifted.shift();
        }
        prop_assert_eq!(shifted.weight_at(k), w.weight_at(k + j));
        prop_assert_eq!(w.shifted_by(j).weight_at(k), w.weight_at(k + j));
    }

    #[test]
    fn reciprocal_round_trips(tail in prop::collection::vec(-6i64..=6, 0..12), neg in any::<bool>()) {
        let mut coeffs = vec![int(if neg { -1 } else { 1 })];
        coeffs.extend(tail.iter().map(|&v| int(v)));
        let order = coeffs.len();
        let a = TruncatedSeries::new(coeffs, order);
        prop_assert_eq!(a.mul(&a.reciprocal().unwrap()), TruncatedSeries::one(order));
    }

    #[test]
    fn lemma_holds_on_random_unit_series(tail in prop::collection::vec(-4i64..=4, 14)) {
        let mut coeffs = vec![int(1)];
        coeffs.extend(tail.iter().map(|&v| int(v)));
        let u = TruncatedSeries::new(coeffs, 15);
        let r = check_lemma13(&u, 4, 3).unwrap();
        prop_assert!(r.is_verified(), "{:?}", r.failures);
    }

    #[test]
    fn theorem1_on_random_weights(values in prop::collection::vec(-3i64..=3, 8)) {
        let w = WeightSpec::explicit(values.iter().map(|&v| int(v)).collect(), int(0));
        let r = verify::check_theorem1(&w, 3, 4).unwrap();
        prop_assert!(r.is_verified(), "{:?}", r.failures);
    }
}

#[test]
fn bivariate_lucas_power_sums_on_integer_grid() {
    for n in 0..=10 {
        for x in -5i64..=5 {
            for y in -5i64..=5 {
                let lhs = lucas_bivariate_eval(n, &int(x + y), &int(-x * y));
                assert_eq!(lhs, int(x).pow(n as u32) + int(y).pow(n as u32), "n={n} x={x} y={y}");
            }
        }
    }
}

#[test]
fn coefficient_bridge_between_series_and_triangle() {
    fn bridge<R: Ring>(c: &R) {
        let t = AdmissibleTable::build(&WeightSpec::constant(c.clone()), 11);
        for k in 0..=4 {
            let lifted = motzkin_power(c, k, 12).shift_up(k);
            for n in 0..12 {
                assert_eq!(lifted.coeff(n), t.column(k, n).unwrap(), "c={c} k={k} n={n}");
            }
        }
    }
    for c in 0..=2 {
        bridge(&int(c));
    }
    bridge(&symbolic_c());
}

#[test]
fn fibonacci_determinant_bridge() {
    let w = WeightSpec::constant(symbolic_c());
    for n in 0..=8 {
        assert_eq!(hankel_det(&w, 1, 0, n).unwrap(), fibonacci_poly(n + 1), "n={n}");
    }
    for n in 0..=6 {
        let sum = (0..=n).fold(Poly::zero(), |acc, j| {
            let f = fibonacci_poly(j + 1);
            acc.add(&f.mul(&f))
        });
        assert_eq!(hankel_det(&w, 2, 0, n).unwrap(), sum, "n={n}");
    }
}

#[test]
fn theorem1_and_theorem2_agree_on_constant_weights() {
    for c in -2..=3 {
        let t1 = verify::check_theorem1(&WeightSpec::constant(int(c)), 3, 5).unwrap();
        let t2 = verify::check_theorem2(&int(c), 3, 0, 5).unwrap();
        assert_eq!(t1.status, t2.status);
        assert_eq!(t1.instances_tested, t2.instances_tested);
        assert_eq!(
            t1.clause("4").unwrap().instances_tested,
            t2.clause("5").unwrap().instances_tested
        );
        assert_eq!(
            t1.clause("4.zero").unwrap().instances_tested,
            t2.clause("5.zero").unwrap().instances_tested
        );
    }
}

#[test]
fn lemma_route_reproduces_theorem2_symbolically() {
    let r = verify::theorem2_via_lemma(&symbolic_c(), 2, 2, 3).unwrap();
    assert!(r.is_verified(), "{:?}", r.failures);
}

#[test]
fn reports_are_deterministic() {
    let a = verify::check_theorem1_random(11, 5, 2, 4).unwrap();
    let b = verify::check_theorem1_random(11, 5, 2, 4).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.params["rng_seed"], "11");
    let c = verify::check_conjectures9_10(&int(2), 2, 2, 3).unwrap();
    let d = verify::check_conjectures9_10(&int(2), 2, 2, 3).unwrap();
    assert_eq!(serde_json::to_string(&c).unwrap(), serde_json::to_string(&d).unwrap());
}

#[test]
fn block_family_with_m1_agrees_with_fibonacci_lucas_identity() {
    let r = verify::check_conjectures9_10(&symbolic_c(), 1, 3, 3).unwrap();
    let ten = r.clause("10").unwrap();
    assert!(ten.failures.is_empty());
    let id8 = verify::check_identities7_8(&symbolic_c(), 3, 15).unwrap();
    assert!(id8.clause("8.main").unwrap().failures.is_empty());
}
