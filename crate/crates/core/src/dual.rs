//! The dual functionals of `P` and their polars.
//!
//! Every nonzero continuous linear functional on `P` is finite on at most one
//! subcone `Q_k` and `+inf` off it. The enumerated family is
//!
//! * `0`: identically zero;
//! * `lam_k` (`Scaled`): `lam * a` on `a_k`, `0` on `0_0`, `+inf` elsewhere;
//! * `zerobar_k`: `0` on `Q_k` minus `inf_inf`, `+inf` elsewhere;
//! * `infbar`: `0` on `0_0`, `+inf` elsewhere.
//!
//! `Scaled { lambda: 0, k }` coincides with `zerobar_k` pointwise and is
//! canonicalized to it.

use std::fmt;
use std::num::NonZeroU64;
use std::str::FromStr;

use crate::indexed::{index_scalar, le_v, PElem};
use crate::report::{LawReport, Violation};
use crate::sample::{SampleConfig, Sampler};
use crate::scalar::{ExtScalar, Scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DualFunctional {
    Zero,
    Scaled { lambda: Scalar, index: NonZeroU64 },
    ZeroBar { index: NonZeroU64 },
    InfBar,
}

impl DualFunctional {
    /// `lam_k`, canonicalized.
    pub fn scaled(lambda: Scalar, index: NonZeroU64) -> Self {
        DualFunctional::Scaled { lambda, index }.canonical()
    }

    pub fn canonical(self) -> Self {
        match self {
            DualFunctional::Scaled { lambda, index } if lambda.is_zero() => DualFunctional::ZeroBar { index },
            other => other,
        }
    }

    pub fn is_canonical(&self) -> bool {
        !matches!(self, DualFunctional::Scaled { lambda, .. } if lambda.is_zero())
    }

    pub fn eval(&self, x: &PElem) -> ExtScalar {
        eval_dual(self, x)
    }
}

pub fn eval_dual(mu: &DualFunctional, x: &PElem) -> ExtScalar {
    match (mu, x) {
        (DualFunctional::Zero, _) | (_, PElem::Zero) => ExtScalar::zero(),
        (DualFunctional::Scaled { lambda, index }, PElem::Member(m)) if m.index() == *index => {
            ExtScalar::Finite(lambda * m.value())
        }
        (DualFunctional::ZeroBar { index }, PElem::Member(m)) if m.index() == *index => ExtScalar::zero(),
        _ => ExtScalar::Inf,
    }
}

/// Additivity and positive homogeneity of an arbitrary map `P -> [0, +inf]`.
pub fn check_linearity<F>(name: &str, mu: F, cfg: &SampleConfig) -> LawReport
where
    F: Fn(&PElem) -> ExtScalar,
{
    let law = format!("linearity[{name}]");
    let mut s = Sampler::new(cfg, &law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.sample_count {
        let x = s.pelem();
        // Half of the partners share x's index so that finite sums occur.
        let y = match x.index() {
            Some(j) if s.chance(1, 2) => s.member_of(j),
            _ => s.pelem(),
        };
        let r = if s.chance(1, 8) { Scalar::zero() } else { s.pos_scalar() };
        report.tick();
        let sum = mu(&(&x + &y));
        let parts = &mu(&x) + &mu(&y);
        report.expect(sum == parts, || {
            Violation::new([&x, &y], "mu(x+y) = mu(x) + mu(y)", format!("{sum} != {parts}"))
        });
        let lhs = mu(&x.scale(&r));
        let rhs = mu(&x).scale(&r);
        report.expect(lhs == rhs, || {
            Violation::new(
                [x.to_string(), r.to_string()],
                "mu(r x) = r mu(x)",
                format!("{lhs} != {rhs}"),
            )
        });
    }
    report
}

pub fn is_linear_check(mu: &DualFunctional, cfg: &SampleConfig) -> LawReport {
    check_linearity(&mu.to_string(), |x| eval_dual(mu, x), cfg)
}

/// `mu(x) >= 0` on sampled `x`.
pub fn check_nonneg(mu: &DualFunctional, cfg: &SampleConfig) -> LawReport {
    let law = format!("nonnegativity[{mu}]");
    let mut s = Sampler::new(cfg, &law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.sample_count {
        let x = s.pelem();
        report.tick();
        let value = eval_dual(mu, &x);
        report.expect(value >= ExtScalar::zero(), || {
            Violation::new([&x], "mu(x) >= 0", value.to_string())
        });
    }
    report
}

/// Closed-form polar membership: every functional except `lam_k` lies in
/// every polar, and `lam_k` lies in the polar of `v` iff `lam * k * v <= 1`.
pub fn in_polar_analytic(mu: &DualFunctional, v: &Scalar) -> bool {
    match mu {
        DualFunctional::Scaled { lambda, index } => lambda * &index_scalar(*index) * v <= Scalar::one(),
        _ => true,
    }
}

/// A pair `(a, b)` with `a <= b + v` and `mu(a) > mu(b) + 1`, when one exists.
///
/// Only `lam_k` with `lam * k * v > 1` has one: `b = 1_k`, `a = (1 + k v)_k`.
pub fn polar_violation_witness(mu: &DualFunctional, v: &Scalar) -> Option<(PElem, PElem)> {
    if in_polar_analytic(mu, v) {
        return None;
    }
    let DualFunctional::Scaled { index, .. } = mu else {
        return None;
    };
    let b = PElem::member_nz(Scalar::one(), *index).ok()?;
    let a = PElem::member_nz(Scalar::one() + index_scalar(*index) * v, *index).ok()?;
    verify_polar_violation(mu, v, &a, &b).then_some((a, b))
}

/// True iff `(a, b)` witnesses `mu` outside the polar of `v`.
pub fn verify_polar_violation(mu: &DualFunctional, v: &Scalar, a: &PElem, b: &PElem) -> bool {
    le_v(a, b, v) && eval_dual(mu, a) > &eval_dual(mu, b) + &ExtScalar::one()
}

/// Sampled polar check: over pairs with `a <= b + v`, asserts
/// `mu(a) <= mu(b) + 1`. Pairs are drawn next to the edge of `b + v`.
pub fn in_polar_sampled(mu: &DualFunctional, v: &Scalar, cfg: &SampleConfig) -> LawReport {
    let law = format!("polar[{mu}]@{v}");
    let mut s = Sampler::new(cfg, &law);
    let mut report = LawReport::new(law);
    let one = ExtScalar::one();
    for _ in 0..cfg.sample_count {
        let (a, b) = sample_related_pair(&mut s, v, mu_index(mu));
        report.tick();
        if le_v(&a, &b, v) {
            let (ma, mb) = (eval_dual(mu, &a), eval_dual(mu, &b));
            report.expect(ma <= &mb + &one, || {
                Violation::new([&a, &b], "mu(a) <= mu(b) + 1", format!("{ma} > {mb} + 1"))
            });
        }
    }
    report
}

fn mu_index(mu: &DualFunctional) -> Option<NonZeroU64> {
    match mu {
        DualFunctional::Scaled { index, .. } | DualFunctional::ZeroBar { index } => Some(*index),
        _ => None,
    }
}

/// A pair biased toward `a <= b + v` holding with equality. When `focus`
/// is given, one pair in two lives in that index class.
pub(crate) fn sample_related_pair(s: &mut Sampler, v: &Scalar, focus: Option<NonZeroU64>) -> (PElem, PElem) {
    let b = match focus {
        Some(k) if s.chance(1, 2) => s.member_of(k),
        _ => s.pelem(),
    };
    let a = match &b {
        PElem::Member(m) if s.below(4) != 0 => {
            let radius = index_scalar(m.index()) * v;
            let value = match s.below(3) {
                0 => m.value() + &radius,
                1 => m.value() + &(s.unit_fraction() * &radius),
                _ => m.value() * &s.unit_fraction(),
            };
            PElem::member_nz(value, m.index()).expect("positive")
        }
        _ => s.pelem(),
    };
    (a, b)
}

/// Some `v > 0` whose polar contains `mu`, certifying `mu` is continuous.
pub fn polar_cover_witness(mu: &DualFunctional) -> Scalar {
    match mu {
        DualFunctional::Scaled { lambda, index } if lambda.is_positive() => {
            (lambda * &index_scalar(*index)).recip().expect("positive")
        }
        _ => Scalar::one(),
    }
}

/// The three-part polar statement for `Q`-indexed functionals, checked on
/// samples: the constant-type functionals lie in every polar, `(1/w)_k`
/// lies in the polar of `w/k`, and whenever `a <= b + v` with `b` off
/// `{0_0} + Q_k` the inequality holds because the right side is `+inf`.
pub fn check_polar_lemmas(cfg: &SampleConfig) -> Vec<LawReport> {
    let mut s = Sampler::new(cfg, "polar-lemmas");
    let mut constant = LawReport::new("polar-lemma/constant-functionals");
    let mut scaled = LawReport::new("polar-lemma/(1/w)_k in (w/k)-polar");
    let mut off_index = LawReport::new("polar-lemma/off-index-target");
    let one = ExtScalar::one();
    for _ in 0..cfg.sample_count {
        let v = s.pos_scalar();
        let k = s.index();
        let w = s.pos_scalar();

        constant.tick();
        for mu in [
            DualFunctional::Zero,
            DualFunctional::ZeroBar { index: k },
            DualFunctional::InfBar,
        ] {
            constant.expect(in_polar_analytic(&mu, &v), || {
                Violation::new([mu.to_string(), v.to_string()], "mu in polar(v)", "false")
            });
            let (a, b) = sample_related_pair(&mut s, &v, Some(k));
            if le_v(&a, &b, &v) {
                let (ma, mb) = (eval_dual(&mu, &a), eval_dual(&mu, &b));
                constant.expect(ma <= &mb + &one, || {
                    Violation::new(
                        [mu.to_string(), a.to_string(), b.to_string()],
                        "mu(a) <= mu(b)+1",
                        format!("{ma} > {mb} + 1"),
                    )
                });
            }
        }

        scaled.tick();
        let mu = DualFunctional::scaled(w.recip().expect("positive"), k);
        let radius = &w / &index_scalar(k);
        scaled.expect(in_polar_analytic(&mu, &radius), || {
            Violation::new([mu.to_string(), radius.to_string()], "(1/w)_k in polar(w/k)", "false")
        });
        let (a, b) = sample_related_pair(&mut s, &radius, Some(k));
        if le_v(&a, &b, &radius) {
            let (ma, mb) = (eval_dual(&mu, &a), eval_dual(&mu, &b));
            scaled.expect(ma <= &mb + &one, || {
                Violation::new(
                    [mu.to_string(), a.to_string(), b.to_string()],
                    "mu(a) <= mu(b)+1",
                    format!("{ma} > {mb} + 1"),
                )
            });
        }

        let (a, b) = sample_related_pair(&mut s, &v, None);
        let off = match &b {
            PElem::Zero => false,
            PElem::Inf => true,
            PElem::Member(m) => m.index() != k,
        };
        if off && le_v(&a, &b, &v) {
            off_index.tick();
            let (ma, mb) = (eval_dual(&mu, &a), eval_dual(&mu, &b));
            off_index.expect(mb.is_inf() && ma <= &mb + &one, || {
                Violation::new(
                    [mu.to_string(), a.to_string(), b.to_string()],
                    "mu(b) = inf",
                    format!("mu(a) = {ma}, mu(b) = {mb}"),
                )
            });
        }
    }
    vec![constant, scaled, off_index]
}

/// The first `n` functionals of a fixed enumeration: `0`, `infbar`,
/// `zerobar_j` for `j <= max_index`, then `lam_j` for distinct positive
/// `lam = p/q` cycling over `j`.
pub fn functional_grid(n: usize, max_index: u64) -> Vec<DualFunctional> {
    let max_index = max_index.max(1);
    let mut grid = vec![DualFunctional::Zero, DualFunctional::InfBar];
    grid.extend((1..=max_index).map(|j| DualFunctional::ZeroBar {
        index: NonZeroU64::new(j).expect("j >= 1"),
    }));
    let mut seen = std::collections::HashSet::new();
    let scaled = (1..=8u64)
        .flat_map(|q| (1..=64u64).map(move |p| Scalar::ratio(p, q)))
        .filter(|l| seen.insert(l.clone()))
        .flat_map(|l| {
            (1..=max_index).map(move |j| DualFunctional::scaled(l.clone(), NonZeroU64::new(j).expect("j >= 1")))
        });
    grid.extend(scaled.take(n.saturating_sub(grid.len())));
    grid.truncate(n);
    grid
}

impl fmt::Display for DualFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualFunctional::Zero => f.write_str("zero"),
            DualFunctional::InfBar => f.write_str("infbar"),
            DualFunctional::ZeroBar { index } => write!(f, "zerobar@{index}"),
            DualFunctional::Scaled { lambda, index } => write!(f, "lam:{lambda}@{index}"),
        }
    }
}

impl FromStr for DualFunctional {
    type Err = Error;

    /// Parses `zero`, `infbar`, `zerobar@j` or `lam:p/q@j`. `lam:0@j`
    /// canonicalizes to `zerobar@j`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let index = |t: &str| -> Result<NonZeroU64, Error> {
            t.trim()
                .parse::<u64>()
                .ok()
                .and_then(NonZeroU64::new)
                .ok_or_else(|| Error::Parse(format!("bad functional index in {s:?}")))
        };
        match s {
            "zero" => Ok(DualFunctional::Zero),
            "infbar" => Ok(DualFunctional::InfBar),
            _ => {
                if let Some(j) = s.strip_prefix("zerobar@") {
                    Ok(DualFunctional::ZeroBar { index: index(j)? })
                } else if let Some(rest) = s.strip_prefix("lam:") {
                    let (lambda, j) = rest
                        .split_once('@')
                        .ok_or_else(|| Error::Parse(format!("expected lam:p/q@j, got {s:?}")))?;
                    Ok(DualFunctional::scaled(lambda.parse()?, index(j)?))
                } else {
                    Err(Error::Parse(format!("unknown functional {s:?}")))
                }
            }
        }
    }
}
