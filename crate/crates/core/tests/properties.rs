//! Property tests against independent small-integer oracles, plus text and
//! JSON round-trips.

use std::num::NonZeroU64;

use lccone::barrel::{b_union_oracle, in_barrel, min_scale, scale_barrel_membership, BarrelSpec};
use lccone::dual::{eval_dual, in_polar_analytic, DualFunctional};
use lccone::indexed::{in_symmetric, lambda_inverse, lambda_iso, le_v, max_of_symmetric, p_add, symmetric_nbhd};
use lccone::{ExtScalar, PElem, Scalar};
use proptest::prelude::*;

/// `(n, d, j)` with the plain-integer meaning `n/d` at index `j`; `j = 0`
/// stands for `0_0` and `j = 9` for `inf_inf`.
type Raw = (u64, u64, u64);

fn raw() -> impl Strategy<Value = Raw> {
    (1u64..60, 1u64..12, 0u64..10)
}

fn elem((n, d, j): Raw) -> PElem {
    match j {
        0 => PElem::Zero,
        9 => PElem::Inf,
        _ => PElem::m(n, d, j),
    }
}

fn radius() -> impl Strategy<Value = (u64, u64)> {
    (1u64..20, 1u64..12)
}

/// `a <= b + v` straight from the definition, by cross-multiplication.
fn le_v_oracle(x: Raw, y: Raw, (vn, vd): (u64, u64)) -> bool {
    let (an, ad, i) = x;
    let (bn, bd, j) = y;
    if i == 0 || j == 9 {
        return true;
    }
    if i == 9 || j == 0 || i != j {
        return false;
    }
    let (an, ad, bn, bd, vn, vd, j) = (
        an as u128, ad as u128, bn as u128, bd as u128, vn as u128, vd as u128, j as u128,
    );
    an * bd * vd <= bn * ad * vd + j * vn * ad * bd
}

fn scalar((n, d): (u64, u64)) -> Scalar {
    Scalar::ratio(n, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn scalar_text_round_trip(n in 0u64..100_000, d in 1u64..10_000) {
        let x = Scalar::ratio(n, d);
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
    }

    #[test]
    fn scalar_order_matches_cross_multiplication(a in (0u64..1000, 1u64..100), b in (0u64..1000, 1u64..100)) {
        let expected = (a.0 as u128 * b.1 as u128).cmp(&(b.0 as u128 * a.1 as u128));
        prop_assert_eq!(scalar(a).cmp(&scalar(b)), expected);
    }

    #[test]
    fn pelem_text_round_trip(x in raw()) {
        let e = elem(x);
        prop_assert_eq!(e.to_string().parse::<PElem>().unwrap(), e.clone());
        let json = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<PElem>(&json).unwrap(), e);
    }

    #[test]
    fn le_v_matches_oracle(x in raw(), y in raw(), v in radius()) {
        prop_assert_eq!(le_v(&elem(x), &elem(y), &scalar(v)), le_v_oracle(x, y, v));
    }

    #[test]
    fn addition_is_commutative_and_associative(x in raw(), y in raw(), z in raw()) {
        let (x, y, z) = (elem(x), elem(y), elem(z));
        prop_assert_eq!(p_add(&x, &y), p_add(&y, &x));
        prop_assert_eq!(p_add(&p_add(&x, &y), &z), p_add(&x, &p_add(&y, &z)));
    }

    #[test]
    fn symmetric_neighborhood_closed_form(b in raw(), a in raw(), v in radius()) {
        let (a, b, v) = (elem(a), elem(b), scalar(v));
        prop_assert_eq!(symmetric_nbhd(&b, &v).contains(&a), in_symmetric(&a, &b, &v));
        if in_symmetric(&a, &b, &v) {
            prop_assert_eq!(a.index(), b.index());
            prop_assert!(a.precedes(&max_of_symmetric(&b, &v)));
        }
    }

    #[test]
    fn lambda_round_trips_on_its_subcone(x in raw(), j in 1u64..9) {
        let j = NonZeroU64::new(j).unwrap();
        let e = elem(x);
        match lambda_iso(j, &e) {
            Ok(s) => prop_assert_eq!(lambda_inverse(j, &s), e),
            Err(_) => prop_assert!(!e.in_subcone(j)),
        }
    }

    #[test]
    fn b_union_closed_form_matches_oracle(a in raw(), b in raw(), w in radius()) {
        let (a, b, w) = (elem(a), elem(b), scalar(w));
        let spec = BarrelSpec::bunion(w.clone()).unwrap();
        prop_assert_eq!(in_barrel(&spec, &a, &b), b_union_oracle(&a, &b, &w, 8));
    }

    #[test]
    fn min_scale_is_the_threshold(a in raw(), b in raw(), j in 1u64..9, w in radius(), l in radius()) {
        let (a, b, lambda) = (elem(a), elem(b), scalar(l));
        for spec in [
            BarrelSpec::bunion(scalar(w)).unwrap(),
            BarrelSpec::bsub(j, scalar(w)).unwrap(),
            BarrelSpec::vtilde(scalar(w)).unwrap(),
        ] {
            let inside = scale_barrel_membership(&spec, &lambda, &a, &b);
            match min_scale(&spec, &a, &b) {
                Some(m) => prop_assert_eq!(inside, lambda >= m),
                // Membership does not depend on lambda at all.
                None => {
                    for other in [Scalar::ratio(1, 97), Scalar::from_int(97)] {
                        prop_assert_eq!(inside, scale_barrel_membership(&spec, &other, &a, &b));
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_functional_is_additive_and_homogeneous(x in raw(), y in raw(), r in radius(), l in radius(), k in 1u64..9) {
        let mu = DualFunctional::scaled(scalar(l), NonZeroU64::new(k).unwrap());
        let (x, y, r) = (elem(x), elem(y), scalar(r));
        prop_assert_eq!(eval_dual(&mu, &p_add(&x, &y)), &eval_dual(&mu, &x) + &eval_dual(&mu, &y));
        prop_assert_eq!(eval_dual(&mu, &x.scale(&r)), eval_dual(&mu, &x).scale(&r));
    }

    #[test]
    fn functional_text_round_trip(l in (0u64..50, 1u64..10), k in 1u64..9, tag in 0u8..4) {
        let k = NonZeroU64::new(k).unwrap();
        let mu = match tag {
            0 => DualFunctional::Zero,
            1 => DualFunctional::InfBar,
            2 => DualFunctional::ZeroBar { index: k },
            _ => DualFunctional::scaled(scalar(l), k),
        };
        prop_assert_eq!(mu.to_string().parse::<DualFunctional>().unwrap(), mu);
    }
}

/// Exhaustive polar search over a finite grid of `Q_k`: `mu` is in the polar
/// of `v` iff no grid pair with `a <= b + v` has `mu(a) > mu(b) + 1`.
fn polar_by_search(mu: &DualFunctional, v: &Scalar, k: u64) -> bool {
    let mut grid = vec![PElem::Zero, PElem::Inf];
    for n in 1..=48u64 {
        for d in [1, 3, 8] {
            grid.push(PElem::m(n, d, k));
        }
    }
    grid.push(PElem::member(Scalar::one() + Scalar::from_int(k) * v, k).unwrap());
    let one = ExtScalar::one();
    grid.iter().all(|a| {
        grid.iter()
            .all(|b| !le_v(a, b, v) || eval_dual(mu, a) <= &eval_dual(mu, b) + &one)
    })
}

#[test]
fn polar_rule_matches_exhaustive_search() {
    let radii = [
        Scalar::ratio(1, 8),
        Scalar::ratio(1, 3),
        Scalar::one(),
        Scalar::from_int(2),
    ];
    let lambdas = [
        Scalar::ratio(1, 16),
        Scalar::ratio(1, 4),
        Scalar::ratio(1, 2),
        Scalar::one(),
        Scalar::from_int(3),
    ];
    for k in 1..=4u64 {
        let index = NonZeroU64::new(k).unwrap();
        for v in &radii {
            let mut family = vec![
                DualFunctional::Zero,
                DualFunctional::InfBar,
                DualFunctional::ZeroBar { index },
            ];
            family.extend(lambdas.iter().map(|l| DualFunctional::scaled(l.clone(), index)));
            for mu in &family {
                assert_eq!(in_polar_analytic(mu, v), polar_by_search(mu, v, k), "{mu} at v = {v}");
            }
        }
    }
}

#[test]
fn extended_scalar_conventions() {
    let inf = ExtScalar::Inf;
    assert_eq!(inf.scale(&Scalar::zero()), ExtScalar::zero());
    assert_eq!(&inf + &ExtScalar::one(), ExtScalar::Inf);
    assert!(ExtScalar::Finite(Scalar::from_int(1_000_000)) < inf);
    assert!(inf.le_within(&ExtScalar::Inf, &Scalar::one()));
    assert!(!inf.le_within(&ExtScalar::one(), &Scalar::from_int(1_000)));
}
