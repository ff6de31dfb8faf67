//! The indexed cone `P`, its subcones `Q_j`, and the comparison map
//! `Q_j -> [0, +inf]`.
//!
//! Elements are `0_0`, `inf_inf`, or a member `a_i` with `a > 0` and
//! `i >= 1`. The index classes 0 and infinity are carried by the two
//! structural variants and never by an integer.

use std::fmt;
use std::num::NonZeroU64;
use std::ops::Add;
use std::str::FromStr;

use crate::report::{LawReport, Violation};
use crate::sample::{SampleConfig, Sampler};
use crate::scalar::{ExtScalar, Scalar};
use crate::Error;

/// A member `a_i`: a positive value tagged with a positive index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Member {
    value: Scalar,
    index: NonZeroU64,
}

impl Member {
    pub fn value(&self) -> &Scalar {
        &self.value
    }

    pub fn index(&self) -> NonZeroU64 {
        self.index
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PElem {
    /// `0_0`, the neutral element.
    Zero,
    Member(Member),
    /// `inf_inf`, the absorbing element.
    Inf,
}

/// Index class of an element: `0` for `0_0`, `j` for members, infinity for `inf_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexClass {
    Zero,
    Finite(NonZeroU64),
    Infinite,
}

impl PElem {
    /// `value_index`; fails unless `value > 0` and `index >= 1`.
    pub fn member(value: Scalar, index: u64) -> Result<Self, Error> {
        let index = NonZeroU64::new(index).ok_or_else(|| Error::Domain("member index must be at least 1".into()))?;
        Self::member_nz(value, index)
    }

    pub fn member_nz(value: Scalar, index: NonZeroU64) -> Result<Self, Error> {
        if !value.is_positive() {
            return Err(Error::Domain(format!("member value must be positive, got {value}")));
        }
        Ok(PElem::Member(Member { value, index }))
    }

    /// Literal constructor for tests and examples. Panics on invalid input.
    pub fn m(numer: u64, denom: u64, index: u64) -> Self {
        Self::member(Scalar::ratio(numer, denom), index).expect("valid member literal")
    }

    pub fn class(&self) -> IndexClass {
        match self {
            PElem::Zero => IndexClass::Zero,
            PElem::Member(m) => IndexClass::Finite(m.index),
            PElem::Inf => IndexClass::Infinite,
        }
    }

    pub fn as_member(&self) -> Option<&Member> {
        match self {
            PElem::Member(m) => Some(m),
            _ => None,
        }
    }

    /// Finite index of a member, `None` for `0_0` and `inf_inf`.
    pub fn index(&self) -> Option<NonZeroU64> {
        self.as_member().map(Member::index)
    }

    /// `r * x`; `0 * x = 0_0` for every `x`, including `inf_inf`.
    pub fn scale(&self, r: &Scalar) -> PElem {
        if r.is_zero() {
            return PElem::Zero;
        }
        match self {
            PElem::Member(m) => PElem::Member(Member {
                value: r * &m.value,
                index: m.index,
            }),
            other => other.clone(),
        }
    }

    /// The cone preorder: same index class and, for members, `a <= b`.
    pub fn precedes(&self, other: &PElem) -> bool {
        match (self, other) {
            (PElem::Zero, PElem::Zero) | (PElem::Inf, PElem::Inf) => true,
            (PElem::Member(a), PElem::Member(b)) => a.index == b.index && a.value <= b.value,
            _ => false,
        }
    }

    /// Membership in `Q_j`.
    pub fn in_subcone(&self, j: NonZeroU64) -> bool {
        match self {
            PElem::Zero | PElem::Inf => true,
            PElem::Member(m) => m.index == j,
        }
    }
}

/// `x + y`: equal indices add values, `0_0` is neutral, distinct finite
/// indices give `inf_inf`, and `inf_inf` absorbs.
pub fn p_add(x: &PElem, y: &PElem) -> PElem {
    match (x, y) {
        (PElem::Zero, other) | (other, PElem::Zero) => other.clone(),
        (PElem::Inf, _) | (_, PElem::Inf) => PElem::Inf,
        (PElem::Member(a), PElem::Member(b)) if a.index == b.index => PElem::Member(Member {
            value: &a.value + &b.value,
            index: a.index,
        }),
        (PElem::Member(_), PElem::Member(_)) => PElem::Inf,
    }
}

impl Add<&PElem> for &PElem {
    type Output = PElem;
    fn add(self, rhs: &PElem) -> PElem {
        p_add(self, rhs)
    }
}

/// The neighborhood relation `x <= y + v`: holds iff `x = 0_0`, or
/// `y = inf_inf`, or `x = a_j`, `y = b_j` with `a <= b + j*v`.
pub fn le_v(x: &PElem, y: &PElem, v: &Scalar) -> bool {
    debug_assert!(v.is_positive(), "neighborhood radius must be positive");
    match (x, y) {
        (PElem::Zero, _) | (_, PElem::Inf) => true,
        (PElem::Member(a), PElem::Member(b)) => {
            a.index == b.index && a.value <= &b.value + &(index_scalar(a.index) * v)
        }
        _ => false,
    }
}

/// Symmetric neighborhood membership: `le_v(a, b, v) && le_v(b, a, v)`.
pub fn in_symmetric(a: &PElem, b: &PElem, v: &Scalar) -> bool {
    le_v(a, b, v) && le_v(b, a, v)
}

pub(crate) fn index_scalar(j: NonZeroU64) -> Scalar {
    Scalar::from_int(j.get())
}

/// Closed form of the symmetric neighborhood `v(b)v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymNbhd {
    /// `{0_0}`
    Zero,
    /// `{inf_inf}`
    Inf,
    /// `{a_j : lower <= a <= upper, a > 0}`. `lower` is `None` when
    /// `b - j*v <= 0`, leaving the interval open at zero.
    Interval {
        index: NonZeroU64,
        lower: Option<Scalar>,
        upper: Scalar,
    },
}

impl SymNbhd {
    pub fn contains(&self, a: &PElem) -> bool {
        match (self, a) {
            (SymNbhd::Zero, PElem::Zero) | (SymNbhd::Inf, PElem::Inf) => true,
            (SymNbhd::Interval { index, lower, upper }, PElem::Member(m)) => {
                m.index == *index && lower.as_ref().is_none_or(|lo| m.value >= *lo) && m.value <= *upper
            }
            _ => false,
        }
    }
}

pub fn symmetric_nbhd(b: &PElem, v: &Scalar) -> SymNbhd {
    match b {
        PElem::Zero => SymNbhd::Zero,
        PElem::Inf => SymNbhd::Inf,
        PElem::Member(m) => {
            let radius = index_scalar(m.index) * v;
            let lower = m.value.checked_sub(&radius).filter(Scalar::is_positive);
            SymNbhd::Interval {
                index: m.index,
                lower,
                upper: &m.value + &radius,
            }
        }
    }
}

/// The greatest element of `v(b)v` under the preorder: `(b + j*v)_j` for a
/// member `b_j`, and `b` itself for `0_0` and `inf_inf`.
pub fn max_of_symmetric(b: &PElem, v: &Scalar) -> PElem {
    match b {
        PElem::Member(m) => PElem::Member(Member {
            value: &m.value + &(index_scalar(m.index) * v),
            index: m.index,
        }),
        other => other.clone(),
    }
}

/// `x <= y + v` in `[0, +inf]`.
pub fn rbar_le_v(x: &ExtScalar, y: &ExtScalar, v: &Scalar) -> bool {
    debug_assert!(v.is_positive());
    x.le_within(y, v)
}

/// The linear bijection `Q_j -> [0, +inf]`, `a_j |-> a/j`.
pub fn lambda_iso(j: NonZeroU64, x: &PElem) -> Result<ExtScalar, Error> {
    match x {
        PElem::Zero => Ok(ExtScalar::zero()),
        PElem::Inf => Ok(ExtScalar::Inf),
        PElem::Member(m) if m.index == j => Ok(ExtScalar::Finite(&m.value / &index_scalar(j))),
        PElem::Member(_) => Err(Error::Domain(format!("{x} is not in Q_{j}"))),
    }
}

/// Inverse of [`lambda_iso`].
pub fn lambda_inverse(j: NonZeroU64, s: &ExtScalar) -> PElem {
    match s {
        ExtScalar::Inf => PElem::Inf,
        ExtScalar::Finite(x) if x.is_zero() => PElem::Zero,
        ExtScalar::Finite(x) => PElem::Member(Member {
            value: x * &index_scalar(j),
            index: j,
        }),
    }
}

/// A verified pair showing that the inverse of `Q_j -> [0, +inf]` is not
/// uniformly continuous: `s <= t + eps` in `[0, +inf]` but the preimages
/// violate the radius-`v` relation of `Q_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseDiscontinuity {
    pub s: ExtScalar,
    pub t: ExtScalar,
    pub preimage_s: PElem,
    pub preimage_t: PElem,
}

pub fn lambda_inverse_discontinuity_witness(
    j: NonZeroU64,
    v: &Scalar,
    eps: &Scalar,
) -> Result<InverseDiscontinuity, Error> {
    if !v.is_positive() || !eps.is_positive() {
        return Err(Error::Domain("v and eps must be positive".into()));
    }
    let s = ExtScalar::Finite(eps.clone());
    let t = ExtScalar::zero();
    let preimage_s = lambda_inverse(j, &s);
    let preimage_t = lambda_inverse(j, &t);
    if !rbar_le_v(&s, &t, eps) {
        return Err(Error::Verification(format!("{s} <= {t} + {eps} fails")));
    }
    if le_v(&preimage_s, &preimage_t, v) {
        return Err(Error::Verification(format!(
            "{preimage_s} <= {preimage_t} + {v} unexpectedly holds"
        )));
    }
    Ok(InverseDiscontinuity {
        s,
        t,
        preimage_s,
        preimage_t,
    })
}

/// Candidate elements for `v(b)v`: mostly drawn from the closed-form
/// interval (edges included), the rest arbitrary, so index preservation is
/// tested rather than assumed. Callers filter with [`in_symmetric`].
pub fn sample_symmetric_candidate(b: &PElem, v: &Scalar, s: &mut Sampler) -> PElem {
    match b {
        PElem::Member(m) if s.below(4) != 0 => {
            let radius = index_scalar(m.index()) * v;
            let hi = m.value() + &radius;
            let lo = m.value().checked_sub(&radius).unwrap_or_else(Scalar::zero);
            let value = match s.below(4) {
                0 => hi.clone(),
                1 if lo.is_positive() => lo.clone(),
                _ => &lo + &(s.unit_fraction() * &(&hi - &lo)),
            };
            PElem::member_nz(value, m.index()).expect("positive")
        }
        _ if s.chance(1, 2) => b.clone(),
        _ => s.pelem(),
    }
}

/// Symmetric neighborhoods preserve the index class of their centre, and
/// the closed form of `v(b)v` agrees with the two-sided relation. Each of
/// the `cfg.sample_count` centres is probed with `probes` candidates.
pub fn check_index_preservation(cfg: &SampleConfig, probes: u64) -> LawReport {
    let law = "index-preservation";
    let mut s = Sampler::new(cfg, law);
    let mut report = LawReport::new(law);
    let mut members = 0u64;
    for _ in 0..cfg.sample_count {
        let b = s.pelem();
        let v = s.pos_scalar();
        let closed = symmetric_nbhd(&b, &v);
        report.tick();
        for _ in 0..probes {
            let a = sample_symmetric_candidate(&b, &v, &mut s);
            let inside = in_symmetric(&a, &b, &v);
            report.expect(inside == closed.contains(&a), || {
                Violation::new(
                    [a.to_string(), b.to_string(), v.to_string()],
                    "closed form agrees with v(b)v",
                    format!("relation {inside}"),
                )
            });
            if inside {
                members += 1;
                report.expect(a.class() == b.class(), || {
                    Violation::new(
                        [a.to_string(), b.to_string(), v.to_string()],
                        "a shares the index of b",
                        format!("{:?} vs {:?}", a.class(), b.class()),
                    )
                });
            }
        }
    }
    report.with_note(format!("{members} neighborhood members probed"))
}

/// `max_of_symmetric(b, v)` lies in `v(b)v` and dominates every sampled member.
pub fn check_max_of_symmetric(cfg: &SampleConfig) -> LawReport {
    let law = "greatest-element-of-v(b)v";
    let mut s = Sampler::new(cfg, law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.sample_count {
        let b = s.pelem();
        let v = s.pos_scalar();
        let c = max_of_symmetric(&b, &v);
        let a = sample_symmetric_candidate(&b, &v, &mut s);
        report.tick();
        report.expect(in_symmetric(&c, &b, &v), || {
            Violation::new([c.to_string(), b.to_string(), v.to_string()], "c in v(b)v", "false")
        });
        if in_symmetric(&a, &b, &v) {
            report.expect(a.precedes(&c), || {
                Violation::new([a.to_string(), c.to_string()], "a <= c", "false")
            });
        }
    }
    report
}

/// `Q_j -> [0, +inf]` is linear and uniformly continuous with modulus
/// `v = eps`: `x <= y + eps` in `Q_j` implies `L(x) <= L(y) + eps`.
pub fn check_lambda_continuity(j: NonZeroU64, cfg: &SampleConfig) -> LawReport {
    let law = format!("lambda-map[Q_{j}]");
    let mut s = Sampler::new(cfg, &law);
    let mut report = LawReport::new(law);
    let iso = |x: &PElem| lambda_iso(j, x).expect("element of Q_j");
    for _ in 0..cfg.sample_count {
        let y = s.subcone_elem(j);
        let eps = s.pos_scalar();
        let x = match &y {
            PElem::Member(m) if s.below(3) != 0 => {
                let radius = index_scalar(j) * &eps;
                let value = if s.chance(1, 2) {
                    &m.value + &radius
                } else {
                    &m.value + &(s.unit_fraction() * &radius)
                };
                PElem::member_nz(value, j).expect("positive")
            }
            _ => s.subcone_elem(j),
        };
        let r = s.nonneg_scalar();
        report.tick();
        if le_v(&x, &y, &eps) {
            let (lx, ly) = (iso(&x), iso(&y));
            report.expect(rbar_le_v(&lx, &ly, &eps), || {
                Violation::new(
                    [x.to_string(), y.to_string(), eps.to_string()],
                    "L(x) <= L(y) + eps",
                    format!("{lx} > {ly} + {eps}"),
                )
            });
        }
        let (sum, parts) = (iso(&p_add(&x, &y)), &iso(&x) + &iso(&y));
        report.expect(sum == parts, || {
            Violation::new([&x, &y], "L(x+y) = L(x) + L(y)", format!("{sum} != {parts}"))
        });
        let (lhs, rhs) = (iso(&x.scale(&r)), iso(&x).scale(&r));
        report.expect(lhs == rhs, || {
            Violation::new(
                [x.to_string(), r.to_string()],
                "L(rx) = r L(x)",
                format!("{lhs} != {rhs}"),
            )
        });
        if x.precedes(&y) {
            report.expect(iso(&x) <= iso(&y), || Violation::new([&x, &y], "L monotone", "false"));
        }
    }
    report
}

/// Runs [`lambda_inverse_discontinuity_witness`] over every combination of
/// `j <= max_j`, `v` in `radii` and `eps` in `epsilons`.
pub fn check_lambda_inverse_grid(max_j: u64, radii: &[Scalar], epsilons: &[Scalar]) -> LawReport {
    let mut report = LawReport::new("lambda-inverse-discontinuity");
    for j in 1..=max_j {
        let j = NonZeroU64::new(j).expect("j >= 1");
        for v in radii {
            for eps in epsilons {
                report.tick();
                if let Err(e) = lambda_inverse_discontinuity_witness(j, v, eps) {
                    report.record(Violation::new(
                        [j.to_string(), v.to_string(), eps.to_string()],
                        "verified witness",
                        e.to_string(),
                    ));
                }
            }
        }
    }
    report
}

/// `P` is the union of the `Q_j`: every element lies in some `Q_j`, and a
/// member `a_i` lies in `Q_j` exactly when `j = i`.
pub fn check_subcone_cover(cfg: &SampleConfig) -> LawReport {
    let law = "subcone-cover";
    let mut s = Sampler::new(cfg, law);
    let mut report = LawReport::new(law);
    let max_j = s.max_index();
    for _ in 0..cfg.sample_count {
        let x = s.pelem();
        report.tick();
        let hits: Vec<u64> = (1..=max_j)
            .filter(|&j| x.in_subcone(NonZeroU64::new(j).expect("j >= 1")))
            .collect();
        let ok = match &x {
            PElem::Member(m) => hits == [m.index.get()],
            _ => hits.len() as u64 == max_j,
        };
        report.expect(ok, || {
            Violation::new([&x], "membership in exactly the right Q_j", format!("{hits:?}"))
        });
    }
    report
}

impl fmt::Display for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PElem::Zero => f.write_str("0_0"),
            PElem::Inf => f.write_str("inf_inf"),
            PElem::Member(m) => write!(f, "{}@{}", m.value, m.index),
        }
    }
}

impl FromStr for PElem {
    type Err = Error;

    /// Parses `0_0`, `inf_inf`, or `a@i` with `a` a positive rational.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "0_0" => Ok(PElem::Zero),
            "inf_inf" => Ok(PElem::Inf),
            t => {
                let (value, index) = t
                    .split_once('@')
                    .ok_or_else(|| Error::Parse(format!("expected 0_0, inf_inf or a@i, got {t:?}")))?;
                let index: u64 = index
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index in {t:?}")))?;
                PElem::member(value.parse()?, index)
            }
        }
    }
}

impl serde::Serialize for PElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for PElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = <String as serde::Deserialize>::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nz(j: u64) -> NonZeroU64 {
        NonZeroU64::new(j).unwrap()
    }

    fn q(n: u64, d: u64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn addition_table() {
        assert_eq!(p_add(&PElem::m(2, 1, 3), &PElem::m(5, 1, 3)), PElem::m(7, 1, 3));
        assert_eq!(p_add(&PElem::m(2, 1, 3), &PElem::m(5, 1, 4)), PElem::Inf);
        assert_eq!(p_add(&PElem::Zero, &PElem::m(5, 1, 4)), PElem::m(5, 1, 4));
        assert_eq!(p_add(&PElem::Inf, &PElem::Zero), PElem::Inf);
        assert_eq!(p_add(&PElem::m(1, 1, 1), &PElem::Inf), PElem::Inf);
    }

    #[test]
    fn scalar_multiplication() {
        assert_eq!(PElem::Inf.scale(&Scalar::zero()), PElem::Zero);
        assert_eq!(PElem::m(3, 1, 5).scale(&q(2, 1)), PElem::m(6, 1, 5));
        assert_eq!(PElem::m(3, 1, 5).scale(&Scalar::one()), PElem::m(3, 1, 5));
        assert_eq!(PElem::Inf.scale(&q(1, 9)), PElem::Inf);
        assert_eq!(PElem::Zero.scale(&q(4, 1)), PElem::Zero);
    }

    #[test]
    fn preorder() {
        assert!(PElem::m(2, 1, 3).precedes(&PElem::m(5, 1, 3)));
        assert!(!PElem::m(2, 1, 3).precedes(&PElem::m(5, 1, 4)));
        assert!(!PElem::Zero.precedes(&PElem::m(1, 1, 1)));
        assert!(!PElem::m(1, 1, 1).precedes(&PElem::Inf));
        assert!(PElem::Inf.precedes(&PElem::Inf));
    }

    #[test]
    fn neighborhood_relation() {
        assert!(le_v(&PElem::m(5, 1, 2), &PElem::m(2, 1, 2), &q(2, 1)));
        assert!(!le_v(&PElem::m(5, 1, 2), &PElem::m(2, 1, 2), &q(3, 4)));
        for y in [PElem::Zero, PElem::Inf, PElem::m(1, 7, 9)] {
            assert!(le_v(&PElem::Zero, &y, &q(1, 100)));
            assert!(le_v(&y, &PElem::Inf, &q(1, 100)));
        }
        assert!(!le_v(&PElem::m(1, 1, 2), &PElem::m(1, 1, 3), &q(100, 1)));
        assert!(!le_v(&PElem::Inf, &PElem::m(1, 1, 3), &q(100, 1)));
        assert!(!le_v(&PElem::m(1, 1000, 3), &PElem::Zero, &q(100, 1)));
    }

    #[test]
    fn symmetric_neighborhoods() {
        assert_eq!(symmetric_nbhd(&PElem::Zero, &q(3, 1)), SymNbhd::Zero);
        assert_eq!(symmetric_nbhd(&PElem::Inf, &q(3, 1)), SymNbhd::Inf);
        assert_eq!(
            symmetric_nbhd(&PElem::m(5, 1, 2), &Scalar::one()),
            SymNbhd::Interval {
                index: nz(2),
                lower: Some(q(3, 1)),
                upper: q(7, 1)
            }
        );
        let clipped = symmetric_nbhd(&PElem::m(1, 1, 3), &Scalar::one());
        assert_eq!(
            clipped,
            SymNbhd::Interval {
                index: nz(3),
                lower: None,
                upper: q(4, 1)
            }
        );
        assert!(clipped.contains(&PElem::m(1, 1000, 3)));
        assert!(!clipped.contains(&PElem::Zero));
        // b - jv = 0 exactly: still open at zero.
        assert_eq!(
            symmetric_nbhd(&PElem::m(3, 1, 3), &Scalar::one()),
            SymNbhd::Interval {
                index: nz(3),
                lower: None,
                upper: q(6, 1)
            }
        );
    }

    #[test]
    fn symmetric_membership() {
        assert!(in_symmetric(&PElem::m(3, 1, 2), &PElem::m(5, 1, 2), &Scalar::one()));
        assert!(!in_symmetric(&PElem::Zero, &PElem::m(1, 1, 1), &q(9, 1)));
        for x in [PElem::Zero, PElem::Inf, PElem::m(7, 3, 4)] {
            assert!(in_symmetric(&x, &x, &q(1, 5)));
        }
    }

    #[test]
    fn subcones() {
        assert!(PElem::m(4, 1, 2).in_subcone(nz(2)));
        assert!(!PElem::m(4, 1, 2).in_subcone(nz(3)));
        assert!(PElem::Inf.in_subcone(nz(7)));
        assert!(PElem::Zero.in_subcone(nz(7)));
    }

    #[test]
    fn max_of_symmetric_neighborhood() {
        assert_eq!(max_of_symmetric(&PElem::m(5, 1, 2), &Scalar::one()), PElem::m(7, 1, 2));
        assert_eq!(max_of_symmetric(&PElem::Zero, &q(2, 1)), PElem::Zero);
        let c = max_of_symmetric(&PElem::m(1, 1, 3), &q(2, 1));
        assert_eq!(c, PElem::m(7, 1, 3));
        assert!(PElem::m(4, 1, 3).precedes(&c));
        assert!(in_symmetric(&c, &PElem::m(1, 1, 3), &q(2, 1)));
    }

    #[test]
    fn half_line_relation() {
        let f = |n| ExtScalar::Finite(Scalar::from_int(n));
        assert!(rbar_le_v(&f(3), &f(2), &Scalar::one()));
        assert!(!rbar_le_v(&ExtScalar::Inf, &f(5), &q(100, 1)));
        assert!(rbar_le_v(&ExtScalar::Inf, &ExtScalar::Inf, &q(1, 3)));
    }

    #[test]
    fn lambda_map() {
        assert_eq!(lambda_iso(nz(2), &PElem::m(4, 1, 2)), Ok(ExtScalar::Finite(q(2, 1))));
        assert_eq!(lambda_iso(nz(5), &PElem::Zero), Ok(ExtScalar::zero()));
        assert_eq!(lambda_iso(nz(5), &PElem::Inf), Ok(ExtScalar::Inf));
        assert!(matches!(lambda_iso(nz(3), &PElem::m(1, 1, 2)), Err(Error::Domain(_))));
        let x = PElem::m(9, 4, 6);
        assert_eq!(lambda_inverse(nz(6), &lambda_iso(nz(6), &x).unwrap()), x);
    }

    #[test]
    fn inverse_discontinuity() {
        let w = lambda_inverse_discontinuity_witness(nz(1), &Scalar::one(), &q(1, 2)).unwrap();
        assert_eq!(
            (w.s.clone(), w.t.clone()),
            (ExtScalar::Finite(q(1, 2)), ExtScalar::zero())
        );
        assert_eq!(w.preimage_s, PElem::m(1, 2, 1));
        let w = lambda_inverse_discontinuity_witness(nz(3), &q(10, 1), &Scalar::one()).unwrap();
        assert_eq!(w.preimage_s, PElem::m(3, 1, 3));
        let w = lambda_inverse_discontinuity_witness(nz(2), &q(1, 7), &q(1, 100)).unwrap();
        assert_eq!(w.s, ExtScalar::Finite(q(1, 100)));
        assert!(lambda_inverse_discontinuity_witness(nz(2), &Scalar::zero(), &q(1, 100)).is_err());
    }

    #[test]
    fn text_form() {
        for t in ["0_0", "inf_inf", "5/2@3", "7@1"] {
            assert_eq!(t.parse::<PElem>().unwrap().to_string(), t);
        }
        assert_eq!("10/4@3".parse::<PElem>().unwrap().to_string(), "5/2@3");
        assert!("0@3".parse::<PElem>().is_err());
        assert!("1@0".parse::<PElem>().is_err());
        assert!("1".parse::<PElem>().is_err());
    }
}
