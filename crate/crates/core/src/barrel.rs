//! Barrels in `P x P` and witnesses for barrel conditions.
//!
//! Three families are modelled:
//!
//! * `u~ = {(a, b) : a <= b + u}`;
//! * `B_j = {(a, b) : a, b in Q_j, a <= b + w/j}`;
//! * `B = union of B_j over j >= 1`.
//!
//! For members of a common index `i`, `a_i <= b_i + w/i` reads `a <= b + w`,
//! so `B` has the closed form: `a = 0_0`, or `b = inf_inf`, or `a` and `b`
//! share an index and `a <= b + w`. [`b_union_oracle`] recomputes the union
//! by brute force.
//!
//! `B` is a barrel (absorbing near every point with `v = w/j`, `lambda = 1`,
//! and separated from every outside pair by a dual functional), `P` is
//! barreled because each symmetric neighborhood has a greatest element, and
//! yet no `u~` fits inside `B`: for `j` with `j u > w`, any `a_j, b_j` with
//! `w < a - b < j u` lie in `u~` but not in `B`.

use std::fmt;
use std::num::NonZeroU64;
use std::str::FromStr;

use serde::Serialize;

use crate::dual::{eval_dual, DualFunctional};
use crate::indexed::{
    in_symmetric, index_scalar, le_v, max_of_symmetric, p_add, sample_symmetric_candidate, symmetric_nbhd, PElem,
};
use crate::report::{LawReport, Violation};
use crate::sample::{SampleConfig, Sampler};
use crate::scalar::{ExtScalar, Scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BarrelSpec {
    /// `u~`
    VTilde { u: Scalar },
    /// `B_j`
    BSub { j: NonZeroU64, w: Scalar },
    /// `B`
    BUnion { w: Scalar },
}

fn positive(x: &Scalar, what: &str) -> Result<(), Error> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be positive, got {x}")))
    }
}

impl BarrelSpec {
    pub fn vtilde(u: Scalar) -> Result<Self, Error> {
        positive(&u, "u")?;
        Ok(BarrelSpec::VTilde { u })
    }

    pub fn bsub(j: u64, w: Scalar) -> Result<Self, Error> {
        positive(&w, "w")?;
        let j = NonZeroU64::new(j).ok_or_else(|| Error::Domain("j must be at least 1".into()))?;
        Ok(BarrelSpec::BSub { j, w })
    }

    pub fn bunion(w: Scalar) -> Result<Self, Error> {
        positive(&w, "w")?;
        Ok(BarrelSpec::BUnion { w })
    }

    /// Largest admissible `a - b` for a same-index pair `(a_i, b_i)`, or
    /// `None` when no index-`i` member pair belongs to the set.
    fn slack(&self, i: NonZeroU64) -> Option<Scalar> {
        match self {
            BarrelSpec::VTilde { u } => Some(index_scalar(i) * u),
            BarrelSpec::BSub { j, w } => (i == *j).then(|| w.clone()),
            BarrelSpec::BUnion { w } => Some(w.clone()),
        }
    }

    /// The subcone the set lives in, if restricted to one.
    fn subcone(&self) -> Option<NonZeroU64> {
        match self {
            BarrelSpec::BSub { j, .. } => Some(*j),
            _ => None,
        }
    }

    fn allows(&self, x: &PElem) -> bool {
        self.subcone().is_none_or(|j| x.in_subcone(j))
    }
}

pub fn in_barrel(spec: &BarrelSpec, a: &PElem, b: &PElem) -> bool {
    match spec {
        BarrelSpec::VTilde { u } => le_v(a, b, u),
        BarrelSpec::BSub { j, w } => a.in_subcone(*j) && b.in_subcone(*j) && le_v(a, b, &(w / &index_scalar(*j))),
        BarrelSpec::BUnion { w } => match (a, b) {
            (PElem::Zero, _) | (_, PElem::Inf) => true,
            (PElem::Member(x), PElem::Member(y)) => x.index() == y.index() && x.value() <= &(y.value() + w),
            _ => false,
        },
    }
}

/// Brute-force union membership: some `B_j` with `j <= j_max` contains the pair.
///
/// Exact whenever `j_max` covers every finite index in the pair, since
/// membership in `B_j` forces those indices to equal `j`.
pub fn b_union_oracle(a: &PElem, b: &PElem, w: &Scalar, j_max: u64) -> bool {
    (1..=j_max.max(1)).any(|j| {
        let spec = BarrelSpec::BSub {
            j: NonZeroU64::new(j).expect("j >= 1"),
            w: w.clone(),
        };
        in_barrel(&spec, a, b)
    })
}

/// Membership of `(a, b)` in `lambda * spec`, i.e. of `(a/lambda, b/lambda)` in `spec`.
///
/// Panics unless `lambda > 0`.
pub fn scale_barrel_membership(spec: &BarrelSpec, lambda: &Scalar, a: &PElem, b: &PElem) -> bool {
    let inv = lambda.recip().expect("lambda must be positive");
    in_barrel(spec, &a.scale(&inv), &b.scale(&inv))
}

/// Smallest `lambda` with `(a, b)` in `lambda * spec` for a same-index
/// member pair with `a > b`; `None` when every `lambda` works or none does.
pub fn min_scale(spec: &BarrelSpec, a: &PElem, b: &PElem) -> Option<Scalar> {
    let (x, y) = (a.as_member()?, b.as_member()?);
    if x.index() != y.index() {
        return None;
    }
    let gap = x.value().checked_sub(y.value()).filter(Scalar::is_positive)?;
    let slack = spec.slack(x.index())?;
    gap.checked_div(&slack)
}

/// Draws a pair inside `spec`, leaning toward the boundary `a = b + slack`.
/// With `focus`, same-index pairs use that index half of the time.
pub fn sample_barrel_member(spec: &BarrelSpec, s: &mut Sampler, focus: Option<NonZeroU64>) -> (PElem, PElem) {
    let elem = |s: &mut Sampler| match spec.subcone() {
        Some(j) => s.subcone_elem(j),
        None => s.pelem(),
    };
    loop {
        let (a, b) = match s.below(8) {
            0 => (PElem::Zero, elem(s)),
            1 => (elem(s), PElem::Inf),
            2 => (elem(s), elem(s)),
            _ => {
                let i = spec
                    .subcone()
                    .or_else(|| focus.filter(|_| s.chance(1, 2)))
                    .unwrap_or_else(|| s.index());
                let Some(slack) = spec.slack(i) else { continue };
                let y = s.pos_scalar();
                let x = match s.below(3) {
                    0 => &y + &slack,
                    1 => &y + &(s.unit_fraction() * &slack),
                    _ => &y * &s.unit_fraction(),
                };
                (
                    PElem::member_nz(x, i).expect("positive"),
                    PElem::member_nz(y, i).expect("positive"),
                )
            }
        };
        if in_barrel(spec, &a, &b) {
            return (a, b);
        }
    }
}

/// Result of a local-absorption check: radius `v`, scale `lambda`, and the
/// sampled verification that `(a, b)` lies in `lambda * spec` for every
/// sampled `a` in `v(b)v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorptionWitness {
    pub v: Scalar,
    pub lambda: Scalar,
    pub report: LawReport,
}

/// Local absorbency at `b` for `B_j` or `B`, with `v = w/j` for a member
/// `b_j` and `v = w` for `0_0`, `inf_inf`, and `lambda = 1`.
///
/// Sampled members of `v(b)v` must also share `b`'s index class.
pub fn b1_witness(spec: &BarrelSpec, b: &PElem, cfg: &SampleConfig) -> Result<AbsorptionWitness, Error> {
    let w = match spec {
        BarrelSpec::VTilde { .. } => {
            return Err(Error::Domain("absorption witnesses are defined for B_j and B".into()))
        }
        BarrelSpec::BSub { w, .. } | BarrelSpec::BUnion { w } => w,
    };
    if !spec.allows(b) {
        return Err(Error::Domain(format!("{b} is outside the subcone of {spec}")));
    }
    let v = match b.index() {
        Some(j) => w / &index_scalar(j),
        None => w.clone(),
    };
    let lambda = Scalar::one();
    let report = verify_absorption(spec, b, &v, &lambda, None, &format!("b1[{spec}]@{b}"), cfg);
    Ok(AbsorptionWitness { v, lambda, report })
}

/// Samples members `a` of `v(b)v` and checks `(a, b)` in `lambda * spec`,
/// index preservation, and (when `dominating` is given) `a <= c`.
fn verify_absorption(
    spec: &BarrelSpec,
    b: &PElem,
    v: &Scalar,
    lambda: &Scalar,
    dominating: Option<&PElem>,
    law: &str,
    cfg: &SampleConfig,
) -> LawReport {
    let mut s = Sampler::new(cfg, law);
    let mut report = LawReport::new(law);
    let closed = symmetric_nbhd(b, v);
    let mut attempts = 0u64;
    while report.samples < cfg.sample_count && attempts < cfg.sample_count.saturating_mul(16) {
        attempts += 1;
        let a = sample_symmetric_candidate(b, v, &mut s);
        if !in_symmetric(&a, b, v) {
            continue;
        }
        report.tick();
        report.expect(a.class() == b.class(), || {
            Violation::new(
                [&a, b],
                "members of v(b)v share the index of b",
                format!("{:?}", a.class()),
            )
        });
        report.expect(closed.contains(&a), || {
            Violation::new([&a, b], "closed form of v(b)v contains a", "false")
        });
        report.expect(scale_barrel_membership(spec, lambda, &a, b), || {
            Violation::new(
                [a.to_string(), b.to_string(), lambda.to_string()],
                format!("(a, b) in {lambda} * {spec}"),
                "false",
            )
        });
        if let Some(c) = dominating {
            report.expect(a.precedes(c), || Violation::new([&a, c], "a <= c", "false"));
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SeparationCase {
    /// Target `0_0`: separated by `infbar`.
    CaseI,
    /// Same finite index: separated by `(1/w)_i`.
    CaseII,
    /// Different indices, finite target index `j`: separated by `(1/w)_j`.
    CaseIII,
    /// Inside `Q_j`, same index: `(1/w)_j`.
    SubconeCaseI,
    /// Inside `Q_j`, target `0_0`: `infbar`.
    SubconeCaseII,
}

/// A functional separating an outside pair from a barrel, with both sides
/// of the separation verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub mu: DualFunctional,
    pub case: SeparationCase,
    pub strict_verified: bool,
    pub members_verified: bool,
    pub members_checked: u64,
}

fn verify_separation(
    spec: &BarrelSpec,
    mu: DualFunctional,
    case: SeparationCase,
    a: &PElem,
    b: &PElem,
    cfg: &SampleConfig,
) -> Result<SeparationWitness, Error> {
    let one = ExtScalar::one();
    let (ma, mb) = (eval_dual(&mu, a), eval_dual(&mu, b));
    if ma <= &mb + &one {
        return Err(Error::Verification(format!(
            "{mu} does not separate ({a}, {b}): {ma} <= {mb} + 1"
        )));
    }
    let mut s = Sampler::new(cfg, &format!("b2[{spec}]({a},{b})"));
    let focus = match &mu {
        DualFunctional::Scaled { index, .. } => Some(*index),
        _ => None,
    };
    for _ in 0..cfg.sample_count {
        let (c, d) = sample_barrel_member(spec, &mut s, focus);
        let (mc, md) = (eval_dual(&mu, &c), eval_dual(&mu, &d));
        if mc > &md + &one {
            return Err(Error::Verification(format!(
                "{mu} violates mu(c) <= mu(d) + 1 on member ({c}, {d}) of {spec}"
            )));
        }
    }
    Ok(SeparationWitness {
        mu,
        case,
        strict_verified: true,
        members_verified: true,
        members_checked: cfg.sample_count,
    })
}

/// Separating functional for a pair outside `B`.
///
/// Dispatch: target `0_0` gives `infbar`; a same-index member pair gives
/// `(1/w)_i`; any other source with a finite-index target `b_j` gives
/// `(1/w)_j`, which is `+inf` at the source.
pub fn b2_witness(w: &Scalar, a: &PElem, b: &PElem, cfg: &SampleConfig) -> Result<SeparationWitness, Error> {
    let spec = BarrelSpec::bunion(w.clone())?;
    if in_barrel(&spec, a, b) {
        return Err(Error::Member(format!("({a}, {b}) in {spec}")));
    }
    let inv_w = w.recip().expect("positive");
    let (mu, case) = match (a, b) {
        (_, PElem::Zero) => (DualFunctional::InfBar, SeparationCase::CaseI),
        (PElem::Member(x), PElem::Member(y)) if x.index() == y.index() => {
            (DualFunctional::scaled(inv_w, x.index()), SeparationCase::CaseII)
        }
        (_, PElem::Member(y)) => (DualFunctional::scaled(inv_w, y.index()), SeparationCase::CaseIII),
        _ => return Err(Error::UncoveredCase(format!("({a}, {b})"))),
    };
    verify_separation(&spec, mu, case, a, b, cfg)
}

/// Separating functional for a pair of `Q_j` outside `B_j`.
///
/// Covers a same-index pair with `c > d + w` and a target `0_0`. A pair
/// `(inf_inf, d_j)` fits neither case and is rejected as uncovered.
pub fn b2_witness_subcone(
    j: NonZeroU64,
    w: &Scalar,
    a: &PElem,
    b: &PElem,
    cfg: &SampleConfig,
) -> Result<SeparationWitness, Error> {
    let spec = BarrelSpec::bsub(j.get(), w.clone())?;
    if !a.in_subcone(j) || !b.in_subcone(j) {
        return Err(Error::Domain(format!("({a}, {b}) is not a pair of Q_{j}")));
    }
    if in_barrel(&spec, a, b) {
        return Err(Error::Member(format!("({a}, {b}) in {spec}")));
    }
    let (mu, case) = match (a, b) {
        (_, PElem::Zero) => (DualFunctional::InfBar, SeparationCase::SubconeCaseII),
        (PElem::Member(_), PElem::Member(_)) => (
            DualFunctional::scaled(w.recip().expect("positive"), j),
            SeparationCase::SubconeCaseI,
        ),
        _ => {
            return Err(Error::UncoveredCase(format!(
                "({a}, {b}) is outside {spec} but is neither a same-index pair nor has target 0_0"
            )))
        }
    };
    verify_separation(&spec, mu, case, a, b, cfg)
}

/// `(a, b) in lambda_a * spec`, `(c, b) in lambda_c * spec`, `a <= c`
/// implies `(a, b) in lambda_c * spec`, over sampled tuples.
///
/// Scales are drawn from a grid below and above 1 together with the exact
/// smallest scale admitting each pair.
pub fn lemma21_check(spec: &BarrelSpec, cfg: &SampleConfig) -> LawReport {
    let law = format!("lemma21[{spec}]");
    let mut s = Sampler::new(cfg, &law);
    let mut report = LawReport::new(law);
    let mut premises = 0u64;
    let elem = |s: &mut Sampler| match spec.subcone() {
        Some(j) => s.subcone_elem(j),
        None => s.pelem(),
    };
    for _ in 0..cfg.sample_count {
        let b = elem(&mut s);
        let c = match &b {
            PElem::Member(m) if s.below(4) != 0 => {
                let extra = if s.chance(1, 2) { s.pos_scalar() } else { Scalar::zero() };
                PElem::member_nz(m.value() + &extra, m.index()).expect("positive")
            }
            _ => elem(&mut s),
        };
        let a = match &c {
            PElem::Member(m) if s.chance(3, 4) => {
                PElem::member_nz(m.value() * &s.unit_fraction(), m.index()).expect("positive")
            }
            _ => c.clone(),
        };
        let grid = |s: &mut Sampler, x: &PElem| -> Scalar {
            match s.below(4) {
                0 => min_scale(spec, x, &b).unwrap_or_else(Scalar::one),
                1 => Scalar::ratio(1, 4),
                2 => Scalar::from_int(4),
                _ => s.pos_scalar(),
            }
        };
        let lambda_a = grid(&mut s, &a);
        let lambda_c = grid(&mut s, &c);
        report.tick();
        if scale_barrel_membership(spec, &lambda_a, &a, &b)
            && scale_barrel_membership(spec, &lambda_c, &c, &b)
            && a.precedes(&c)
        {
            premises += 1;
            report.expect(scale_barrel_membership(spec, &lambda_c, &a, &b), || {
                Violation::new(
                    [
                        a.to_string(),
                        b.to_string(),
                        c.to_string(),
                        lambda_a.to_string(),
                        lambda_c.to_string(),
                    ],
                    format!("(a, b) in lambda_c * {spec}"),
                    "false",
                )
            });
        }
    }
    report.with_note(format!("premise held in {premises} samples"))
}

/// Convexity: `t p + (1 - t) q` stays in the set for sampled members `p`, `q`.
pub fn check_convexity(spec: &BarrelSpec, cfg: &SampleConfig) -> LawReport {
    let law = format!("convexity[{spec}]");
    let mut s = Sampler::new(cfg, &law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.sample_count {
        let (a1, b1) = sample_barrel_member(spec, &mut s, None);
        let focus = a1.index().or(b1.index());
        let (a2, b2) = sample_barrel_member(spec, &mut s, focus);
        let t = s.unit_fraction();
        let rest = &Scalar::one() - &t;
        let a = p_add(&a1.scale(&t), &a2.scale(&rest));
        let b = p_add(&b1.scale(&t), &b2.scale(&rest));
        report.tick();
        report.expect(in_barrel(spec, &a, &b), || {
            Violation::new(
                [
                    a1.to_string(),
                    b1.to_string(),
                    a2.to_string(),
                    b2.to_string(),
                    t.to_string(),
                ],
                format!("t p + (1-t) q in {spec}"),
                format!("({a}, {b}) outside"),
            )
        });
    }
    report
}

/// Barreledness at `b` along the greatest-element route: take `v` from the
/// absorption witness, let `c` be the greatest element of `v(b)v`, find
/// `lambda_c` with `(c, b) in lambda_c * spec`, and verify that every
/// sampled `a` in `v(b)v` satisfies `a <= c` and `(a, b) in lambda_c * spec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarreledWitness {
    pub v: Scalar,
    pub lambda: Scalar,
    pub c: PElem,
    pub report: LawReport,
}

pub fn barreled_witness(spec: &BarrelSpec, b: &PElem, cfg: &SampleConfig) -> Result<BarreledWitness, Error> {
    let absorb = b1_witness(
        spec,
        b,
        &SampleConfig {
            sample_count: 1,
            ..cfg.clone()
        },
    )?;
    let v = absorb.v;
    let c = max_of_symmetric(b, &v);
    let lambda = match min_scale(spec, &c, b) {
        Some(m) if m > Scalar::one() => m,
        _ => Scalar::one(),
    };
    if !scale_barrel_membership(spec, &lambda, &c, b) {
        return Err(Error::Verification(format!("({c}, {b}) not in {lambda} * {spec}")));
    }
    let report = verify_absorption(spec, b, &v, &lambda, Some(&c), &format!("barreled[{spec}]@{b}"), cfg);
    Ok(BarreledWitness { v, lambda, c, report })
}

/// A pair in `u~` but outside `B`, showing `u~` is not contained in `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationWitness {
    pub u: Scalar,
    pub w: Scalar,
    pub j: u64,
    pub a: Scalar,
    pub b: Scalar,
    pub in_vtilde: bool,
    pub outside_b: bool,
}

impl RefutationWitness {
    pub fn pair(&self) -> (PElem, PElem) {
        (
            PElem::member(self.a.clone(), self.j).expect("verified"),
            PElem::member(self.b.clone(), self.j).expect("verified"),
        )
    }
}

/// For `u, w > 0`: `j = floor(w/u) + 1`, `b = 1`, `a = b + (w + j u)/2`, so
/// that `w < a - b < j u`. Both memberships are verified before returning.
pub fn refute_upper_barreled(u: &Scalar, w: &Scalar) -> Result<RefutationWitness, Error> {
    positive(u, "u")?;
    positive(w, "w")?;
    let j = (w / u).floor() + 1u32;
    let j: u64 = j
        .try_into()
        .map_err(|_| Error::Domain(format!("index floor(w/u) + 1 overflows for w = {w}, u = {u}")))?;
    let ju = Scalar::from_int(j) * u;
    let b = Scalar::one();
    let a = &b + &(&(w + &ju) / &Scalar::from_int(2));
    let gap = &a - &b;
    if !(*w < gap && gap < ju) {
        return Err(Error::Verification(format!("a - b = {gap} not inside ({w}, {ju})")));
    }
    let (pa, pb) = (PElem::member(a.clone(), j)?, PElem::member(b.clone(), j)?);
    let in_vtilde = in_barrel(&BarrelSpec::vtilde(u.clone())?, &pa, &pb);
    let outside_b = !in_barrel(&BarrelSpec::bunion(w.clone())?, &pa, &pb);
    if !(in_vtilde && outside_b) {
        return Err(Error::Verification(format!(
            "({pa}, {pb}): in u~ = {in_vtilde}, outside B = {outside_b}"
        )));
    }
    Ok(RefutationWitness {
        u: u.clone(),
        w: w.clone(),
        j,
        a,
        b,
        in_vtilde,
        outside_b,
    })
}

impl fmt::Display for BarrelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BarrelSpec::VTilde { u } => write!(f, "vtilde:{u}"),
            BarrelSpec::BSub { j, w } => write!(f, "bsub:{j}:{w}"),
            BarrelSpec::BUnion { w } => write!(f, "b:{w}"),
        }
    }
}

impl FromStr for BarrelSpec {
    type Err = Error;

    /// Parses `vtilde:u`, `bsub:j:w` or `b:w`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["vtilde", u] => BarrelSpec::vtilde(u.parse()?),
            ["bsub", j, w] => {
                let j = j
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad index in {s:?}")))?;
                BarrelSpec::bsub(j, w.parse()?)
            }
            ["b", w] => BarrelSpec::bunion(w.parse()?),
            _ => Err(Error::Parse(format!("expected vtilde:u, bsub:j:w or b:w, got {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn nz(j: u64) -> NonZeroU64 {
        NonZeroU64::new(j).unwrap()
    }

    fn b1() -> BarrelSpec {
        BarrelSpec::bunion(Scalar::one()).unwrap()
    }

    fn cfg(n: u64) -> SampleConfig {
        SampleConfig::with_seed(21).with_samples(n)
    }

    #[test]
    fn union_membership_examples() {
        assert!(in_barrel(&b1(), &PElem::m(3, 1, 2), &PElem::m(5, 1, 2)));
        assert!(in_barrel(&b1(), &PElem::Zero, &PElem::m(9, 1, 4)));
        assert!(in_barrel(&b1(), &PElem::m(9, 1, 4), &PElem::Inf));
        assert!(!in_barrel(&b1(), &PElem::m(3, 1, 2), &PElem::Zero));
        assert!(in_barrel(&b1(), &PElem::m(6, 1, 2), &PElem::m(5, 1, 2)));
        assert!(!in_barrel(&b1(), &PElem::m(7, 1, 2), &PElem::m(5, 1, 2)));
    }

    #[test]
    fn subcone_membership_uses_shrunken_radius() {
        let spec = BarrelSpec::bsub(2, Scalar::one()).unwrap();
        // a <= b + 2 * (1/2)
        assert!(in_barrel(&spec, &PElem::m(6, 1, 2), &PElem::m(5, 1, 2)));
        assert!(!in_barrel(&spec, &PElem::m(13, 2, 2), &PElem::m(5, 1, 2)));
        assert!(!in_barrel(&spec, &PElem::m(1, 1, 3), &PElem::Inf));
        assert!(in_barrel(&spec, &PElem::Zero, &PElem::Inf));
    }

    #[test]
    fn oracle_examples() {
        let w = Scalar::one();
        assert!(b_union_oracle(&PElem::Zero, &PElem::Zero, &w, 1));
        assert!(b_union_oracle(&PElem::m(3, 1, 2), &PElem::m(5, 1, 2), &w, 2));
        assert!(!b_union_oracle(&PElem::m(3, 1, 2), &PElem::m(5, 1, 3), &w, 5));
    }

    #[test]
    fn scaled_membership_examples() {
        let (a, b) = (PElem::m(6, 1, 1), PElem::m(2, 1, 1));
        assert!(!scale_barrel_membership(&b1(), &q(2, 1), &a, &b));
        assert!(scale_barrel_membership(&b1(), &q(4, 1), &a, &b));
        assert_eq!(min_scale(&b1(), &a, &b), Some(q(4, 1)));
        for spec in [b1(), BarrelSpec::vtilde(q(1, 3)).unwrap()] {
            assert_eq!(
                scale_barrel_membership(&spec, &Scalar::one(), &a, &b),
                in_barrel(&spec, &a, &b)
            );
        }
    }

    #[test]
    fn b1_examples() {
        let w = b1_witness(&b1(), &PElem::m(5, 1, 3), &cfg(300)).unwrap();
        assert_eq!((w.v.clone(), w.lambda.clone()), (q(1, 3), Scalar::one()));
        assert!(w.report.pass() && w.report.samples == 300, "{:?}", w.report);
        let w = b1_witness(&b1(), &PElem::Zero, &cfg(50)).unwrap();
        assert_eq!((w.v, w.lambda), (Scalar::one(), Scalar::one()));
        assert!(w.report.pass());
        let sub = BarrelSpec::bsub(2, Scalar::one()).unwrap();
        let w = b1_witness(&sub, &PElem::m(4, 1, 2), &cfg(200)).unwrap();
        assert_eq!(w.v, q(1, 2));
        assert!(w.report.pass());
        assert!(b1_witness(&sub, &PElem::m(4, 1, 3), &cfg(10)).is_err());
        assert!(b1_witness(&BarrelSpec::vtilde(q(1, 1)).unwrap(), &PElem::Zero, &cfg(10)).is_err());
    }

    #[test]
    fn b2_examples() {
        let w = Scalar::one();
        let r = b2_witness(&w, &PElem::m(3, 1, 2), &PElem::Zero, &cfg(500)).unwrap();
        assert_eq!((r.mu, r.case), (DualFunctional::InfBar, SeparationCase::CaseI));
        let r = b2_witness(&w, &PElem::m(3, 1, 2), &PElem::m(1, 1, 2), &cfg(500)).unwrap();
        assert_eq!(r.mu, DualFunctional::scaled(Scalar::one(), nz(2)));
        assert_eq!(r.case, SeparationCase::CaseII);
        let r = b2_witness(&w, &PElem::m(1, 1, 2), &PElem::m(5, 1, 3), &cfg(500)).unwrap();
        assert_eq!(r.mu, DualFunctional::scaled(Scalar::one(), nz(3)));
        assert_eq!(r.case, SeparationCase::CaseIII);
        let r = b2_witness(&w, &PElem::Inf, &PElem::m(5, 1, 3), &cfg(200)).unwrap();
        assert_eq!(r.case, SeparationCase::CaseIII);
        assert!(r.strict_verified && r.members_verified);
        assert!(matches!(
            b2_witness(&w, &PElem::Zero, &PElem::m(5, 1, 3), &cfg(10)),
            Err(Error::Member(_))
        ));
    }

    #[test]
    fn b2_subcone_examples() {
        let w = Scalar::one();
        let r = b2_witness_subcone(nz(2), &w, &PElem::m(5, 1, 2), &PElem::m(1, 1, 2), &cfg(300)).unwrap();
        assert_eq!(r.mu, DualFunctional::scaled(Scalar::one(), nz(2)));
        let r = b2_witness_subcone(nz(2), &w, &PElem::m(5, 1, 2), &PElem::Zero, &cfg(300)).unwrap();
        assert_eq!(r.mu, DualFunctional::InfBar);
        assert!(matches!(
            b2_witness_subcone(nz(2), &w, &PElem::Inf, &PElem::m(1, 1, 2), &cfg(10)),
            Err(Error::UncoveredCase(_))
        ));
        assert!(matches!(
            b2_witness_subcone(nz(2), &w, &PElem::m(1, 1, 3), &PElem::m(1, 1, 2), &cfg(10)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lemma21_holds_for_each_family() {
        for spec in [
            b1(),
            BarrelSpec::bsub(3, Scalar::one()).unwrap(),
            BarrelSpec::vtilde(q(2, 1)).unwrap(),
        ] {
            let r = lemma21_check(&spec, &cfg(2_000));
            assert!(r.pass(), "{r:?}");
        }
    }

    #[test]
    fn barreled_examples() {
        let r = barreled_witness(&b1(), &PElem::m(5, 1, 3), &cfg(300)).unwrap();
        assert_eq!((r.v.clone(), r.lambda.clone()), (q(1, 3), Scalar::one()));
        assert_eq!(r.c, PElem::m(6, 1, 3));
        assert!(r.report.pass());
        let r = barreled_witness(&b1(), &PElem::Inf, &cfg(50)).unwrap();
        assert_eq!((r.v, r.lambda), (Scalar::one(), Scalar::one()));
        let sub = BarrelSpec::bsub(2, Scalar::one()).unwrap();
        let r = barreled_witness(&sub, &PElem::m(1, 1, 2), &cfg(200)).unwrap();
        assert_eq!((r.v.clone(), r.lambda.clone()), (q(1, 2), Scalar::one()));
        assert_eq!(r.c, PElem::m(2, 1, 2));
    }

    #[test]
    fn refutation_examples() {
        let r = refute_upper_barreled(&q(1, 1), &q(1, 1)).unwrap();
        assert_eq!((r.j, r.a.clone(), r.b.clone()), (2, q(5, 2), q(1, 1)));
        let r = refute_upper_barreled(&q(1, 2), &q(1, 1)).unwrap();
        assert_eq!((r.j, r.a.clone()), (3, q(9, 4)));
        let r = refute_upper_barreled(&q(100, 1), &q(1, 1)).unwrap();
        assert_eq!((r.j, r.a.clone()), (1, q(103, 2)));
        assert!(r.in_vtilde && r.outside_b);
        assert!(refute_upper_barreled(&Scalar::zero(), &q(1, 1)).is_err());
    }

    #[test]
    fn convexity_of_each_family() {
        for spec in [
            b1(),
            BarrelSpec::bsub(4, q(1, 2)).unwrap(),
            BarrelSpec::vtilde(q(1, 3)).unwrap(),
        ] {
            assert!(check_convexity(&spec, &cfg(2_000)).pass());
        }
    }

    #[test]
    fn text_form() {
        for t in ["vtilde:1/2", "bsub:3:2", "b:1"] {
            assert_eq!(t.parse::<BarrelSpec>().unwrap().to_string(), t);
        }
        assert!("b:0".parse::<BarrelSpec>().is_err());
        assert!("bsub:0:1".parse::<BarrelSpec>().is_err());
        assert!("c:1".parse::<BarrelSpec>().is_err());
    }
}
