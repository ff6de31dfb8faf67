//! Frozen witness values, worked out by hand from the definitions.

use std::num::NonZeroU64;

use lccone::barrel::{b2_witness, b2_witness_subcone, refute_upper_barreled, SeparationCase};
use lccone::dual::{polar_cover_witness, polar_violation_witness, DualFunctional};
use lccone::indexed::{lambda_inverse_discontinuity_witness, lambda_iso, max_of_symmetric};
use lccone::{Error, ExtScalar, PElem, SampleConfig, Scalar};

fn nz(j: u64) -> NonZeroU64 {
    NonZeroU64::new(j).unwrap()
}

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn p(text: &str) -> PElem {
    text.parse().unwrap()
}

#[test]
fn refutation_values() {
    // (u, w) -> (j, a): j = floor(w/u) + 1, a = 1 + (w + j u)/2.
    let table = [
        ("1", "1", 2, "5/2"),
        ("1/3", "1", 4, "13/6"),
        ("1/1000", "1", 1001, "4001/2000"),
        ("7", "2", 1, "11/2"),
        ("2/5", "3/2", 4, "51/20"),
    ];
    for (u, w, j, a) in table {
        let r = refute_upper_barreled(&s(u), &s(w)).unwrap();
        assert_eq!(
            (r.j, r.a.clone(), r.b.clone()),
            (j, s(a), Scalar::one()),
            "u = {u}, w = {w}"
        );
        assert!(r.in_vtilde && r.outside_b);
    }
    assert!(matches!(
        refute_upper_barreled(&Scalar::zero(), &Scalar::one()),
        Err(Error::Domain(_))
    ));
}

#[test]
fn separation_values() {
    let cfg = SampleConfig::with_seed(3).with_samples(200);
    let w = Scalar::one();
    let cases = [
        ("3@2", "0_0", SeparationCase::CaseI, DualFunctional::InfBar),
        (
            "5@2",
            "1@2",
            SeparationCase::CaseII,
            DualFunctional::scaled(Scalar::one(), nz(2)),
        ),
        (
            "inf_inf",
            "5@3",
            SeparationCase::CaseIII,
            DualFunctional::scaled(Scalar::one(), nz(3)),
        ),
        (
            "1@1",
            "1@2",
            SeparationCase::CaseIII,
            DualFunctional::scaled(Scalar::one(), nz(2)),
        ),
    ];
    for (a, b, case, mu) in cases {
        let r = b2_witness(&w, &p(a), &p(b), &cfg).unwrap();
        assert_eq!((r.case, r.mu.clone()), (case, mu), "({a}, {b})");
        assert!(r.strict_verified && r.members_verified);
    }
    assert!(matches!(
        b2_witness(&w, &p("2@2"), &p("2@2"), &cfg),
        Err(Error::Member(_))
    ));

    let r = b2_witness_subcone(nz(4), &s("2"), &p("4@4"), &p("1@4"), &cfg).unwrap();
    assert_eq!(r.case, SeparationCase::SubconeCaseI);
    let r = b2_witness_subcone(nz(4), &s("2"), &p("4@4"), &p("0_0"), &cfg).unwrap();
    assert_eq!((r.case, r.mu), (SeparationCase::SubconeCaseII, DualFunctional::InfBar));
    assert!(matches!(
        b2_witness_subcone(nz(4), &s("2"), &p("inf_inf"), &p("1@4"), &cfg),
        Err(Error::UncoveredCase(_))
    ));
}

#[test]
fn polar_values() {
    let mu = DualFunctional::scaled(s("1/2"), nz(3));
    assert_eq!(polar_cover_witness(&mu), s("2/3"));
    assert_eq!(polar_violation_witness(&mu, &s("2/3")), None);
    let (a, b) = polar_violation_witness(&mu, &s("1")).unwrap();
    assert_eq!((a, b), (p("4@3"), p("1@3")));
}

#[test]
fn neighborhood_and_lambda_values() {
    assert_eq!(max_of_symmetric(&p("5@3"), &s("1/2")), p("13/2@3"));
    assert_eq!(lambda_iso(nz(3), &p("6@3")).unwrap(), ExtScalar::Finite(s("2")));
    let w = lambda_inverse_discontinuity_witness(nz(2), &s("1"), &s("1/4")).unwrap();
    assert_eq!(w.preimage_s, p("1/2@2"));
    assert_eq!(w.preimage_t, PElem::Zero);
}
