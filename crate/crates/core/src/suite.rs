//! Named verification suites and their reports.
//!
//! Each suite bundles the checks behind one statement about `P`. Suites
//! whose name starts with `control-` run deliberately broken inputs and are
//! expected to fail.

use std::fmt::{self, Write as _};
use std::num::NonZeroU64;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::barrel::{
    b1_witness, b2_witness, b2_witness_subcone, b_union_oracle, barreled_witness, check_convexity, in_barrel,
    lemma21_check, refute_upper_barreled, BarrelSpec,
};
use crate::dual::{
    check_linearity, check_nonneg, check_polar_lemmas, functional_grid, in_polar_analytic, in_polar_sampled,
    is_linear_check, polar_cover_witness, polar_violation_witness, verify_polar_violation, DualFunctional,
};
use crate::indexed::{
    check_index_preservation, check_lambda_continuity, check_lambda_inverse_grid, check_max_of_symmetric,
    check_subcone_cover, PElem,
};
use crate::instances::{HalfLine, LeftProjection, NeverRelated, PCone, StrictOrder, SubCone};
use crate::laws::{
    check_bounded_below, check_cone_axioms, check_functional_continuity, check_order_compat, check_v_system,
};
use crate::report::{LawReport, Violation};
use crate::sample::{log_grid, SampleConfig, Sampler};
use crate::scalar::{ExtScalar, Scalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Axioms,
    Neighborhoods,
    Duals,
    Polars,
    Lemma21,
    BarrelB1B2,
    Barreled,
    RefuteUpper,
    All,
    ControlCommutativity,
    ControlReflexivity,
    ControlEmbedding,
    ControlLinearity,
    ControlPolar,
}

impl SuiteName {
    /// The suites `all` runs, in report order.
    pub const MAIN: [SuiteName; 8] = [
        SuiteName::Axioms,
        SuiteName::Neighborhoods,
        SuiteName::Duals,
        SuiteName::Polars,
        SuiteName::Lemma21,
        SuiteName::BarrelB1B2,
        SuiteName::Barreled,
        SuiteName::RefuteUpper,
    ];

    pub const CONTROLS: [SuiteName; 5] = [
        SuiteName::ControlCommutativity,
        SuiteName::ControlReflexivity,
        SuiteName::ControlEmbedding,
        SuiteName::ControlLinearity,
        SuiteName::ControlPolar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Axioms => "axioms",
            SuiteName::Neighborhoods => "neighborhoods",
            SuiteName::Duals => "duals",
            SuiteName::Polars => "polars",
            SuiteName::Lemma21 => "lemma21",
            SuiteName::BarrelB1B2 => "barrel-b1b2",
            SuiteName::Barreled => "barreled",
            SuiteName::RefuteUpper => "refute-upper",
            SuiteName::All => "all",
            SuiteName::ControlCommutativity => "control-commutativity",
            SuiteName::ControlReflexivity => "control-reflexivity",
            SuiteName::ControlEmbedding => "control-embedding",
            SuiteName::ControlLinearity => "control-linearity",
            SuiteName::ControlPolar => "control-polar",
        }
    }

    /// The statement the suite verifies.
    pub fn statement(self) -> &'static str {
        match self {
            SuiteName::Axioms => "P, Q_j and [0,+inf] are preordered cones",
            SuiteName::Neighborhoods => {
                "the index-scaled radii form a neighborhood system; symmetric neighborhoods keep the index; Q_j -> [0,+inf] is continuous with discontinuous inverse"
            }
            SuiteName::Duals => "the enumerated functionals are linear, nonnegative and continuous",
            SuiteName::Polars => "polar membership of the dual functionals",
            SuiteName::Lemma21 => "membership in lambda*B is inherited downward along the preorder",
            SuiteName::BarrelB1B2 => "B = union of B_j is a convex barrel and so is each B_j",
            SuiteName::Barreled => "P and Q_j are barreled",
            SuiteName::RefuteUpper => "no u~ is contained in B, so P is not upper-barreled",
            SuiteName::All => "every statement above",
            SuiteName::ControlCommutativity => "negative control: left-projection addition is not commutative",
            SuiteName::ControlReflexivity => "negative control: a strict order is not reflexive",
            SuiteName::ControlEmbedding => "negative control: an empty relation does not contain the preorder",
            SuiteName::ControlLinearity => "negative control: a value-blind map is not additive",
            SuiteName::ControlPolar => "negative control: lam_1 with lam = 2 is outside the polar of 1",
        }
    }

    pub fn is_control(self) -> bool {
        Self::CONTROLS.contains(&self)
    }

    pub fn all_names() -> impl Iterator<Item = SuiteName> {
        Self::MAIN.into_iter().chain([SuiteName::All]).chain(Self::CONTROLS)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SuiteName::all_names()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(rename = "paper_ref")]
    pub statement: String,
    pub pass: bool,
    /// Wall-clock time; left out unless timing is requested so that
    /// reports stay byte-identical across runs.
    pub duration_ms: Option<u64>,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    fn new(name: SuiteName, laws: Vec<LawReport>) -> Self {
        SuiteReport {
            suite: name.to_string(),
            statement: name.statement().to_string(),
            pass: laws.iter().all(LawReport::pass),
            duration_ms: None,
            laws,
        }
    }

    /// Whether the run met its expectation: pass for ordinary suites,
    /// failure for negative controls.
    pub fn as_expected(&self) -> bool {
        let control = self
            .suite
            .parse::<SuiteName>()
            .map(SuiteName::is_control)
            .unwrap_or(false);
        self.pass != control
    }
}

/// Fixed problem sizes for each suite, derived from the sample count so that
/// `--samples` scales everything while the default run matches the
/// desk-scale targets.
struct Sizes {
    laws: u64,
    centers: u64,
    per_center: u64,
    non_members: u64,
    members: u64,
    polar_pairs: u64,
    polar_functionals: u64,
    functionals: usize,
    per_functional: u64,
}

impl Sizes {
    fn from(cfg: &SampleConfig) -> Self {
        let n = cfg.sample_count;
        let clamp = |x: u64, hi: u64| x.clamp(1, hi);
        Sizes {
            laws: n,
            centers: clamp(n / 50, 200),
            per_center: clamp(n / 20, 500),
            non_members: clamp(n / 20, 500),
            members: clamp(n / 10, 1_000),
            polar_pairs: clamp(n / 10, 1_000),
            polar_functionals: clamp(n / 20, 500),
            functionals: clamp(n / 20, 500) as usize,
            per_functional: clamp(n / 50, 200),
        }
    }
}

fn with_count(cfg: &SampleConfig, n: u64) -> SampleConfig {
    SampleConfig {
        sample_count: n,
        ..cfg.clone()
    }
}

fn nz(j: u64) -> NonZeroU64 {
    NonZeroU64::new(j).expect("index >= 1")
}

pub fn run_suite(name: SuiteName, cfg: &SampleConfig) -> Result<SuiteReport, Error> {
    cfg.validate()?;
    let laws = match name {
        SuiteName::All => {
            let reports: Vec<_> = std::thread::scope(|scope| {
                let handles: Vec<_> = SuiteName::MAIN
                    .map(|sub| scope.spawn(move || run_suite(sub, cfg)))
                    .into_iter()
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("suite thread panicked"))
                    .collect()
            });
            let mut laws = Vec::new();
            for (sub, report) in SuiteName::MAIN.into_iter().zip(reports) {
                for mut law in report?.laws {
                    law.name = format!("{sub}/{}", law.name);
                    laws.push(law);
                }
            }
            laws
        }
        SuiteName::Axioms => axioms(cfg),
        SuiteName::Neighborhoods => neighborhoods(cfg),
        SuiteName::Duals => duals(cfg),
        SuiteName::Polars => polars(cfg),
        SuiteName::Lemma21 => lemma21(cfg)?,
        SuiteName::BarrelB1B2 => barrel_b1b2(cfg)?,
        SuiteName::Barreled => barreled(cfg)?,
        SuiteName::RefuteUpper => vec![refutation_grid(&cfg.w, 1_000)],
        SuiteName::ControlCommutativity => vec![check_cone_axioms(&LeftProjection(PCone), cfg)],
        SuiteName::ControlReflexivity => vec![check_order_compat(&StrictOrder(PCone), cfg)],
        SuiteName::ControlEmbedding => vec![check_v_system(&NeverRelated(PCone), cfg)],
        SuiteName::ControlLinearity => {
            let value_blind = |x: &PElem| match x {
                PElem::Zero => ExtScalar::zero(),
                PElem::Member(_) => ExtScalar::one(),
                PElem::Inf => ExtScalar::Inf,
            };
            vec![check_linearity("value-blind", value_blind, cfg)]
        }
        SuiteName::ControlPolar => {
            let mu = DualFunctional::scaled(Scalar::from_int(2), nz(1));
            vec![
                in_polar_sampled(&mu, &Scalar::one(), cfg),
                check_functional_continuity(|x| mu.eval(x), &PCone, &Scalar::one(), cfg),
            ]
        }
    };
    Ok(SuiteReport::new(name, laws))
}

fn axioms(cfg: &SampleConfig) -> Vec<LawReport> {
    let q = SubCone { j: nz(cfg.max_index) };
    vec![
        check_cone_axioms(&PCone, cfg),
        check_order_compat(&PCone, cfg),
        check_cone_axioms(&q, cfg),
        check_order_compat(&q, cfg),
        check_cone_axioms(&HalfLine, cfg),
        check_order_compat(&HalfLine, cfg),
    ]
}

/// Twenty radii spread over `[1/64, 64]`, used for the grid checks.
pub fn radius_grid() -> Vec<Scalar> {
    let mut grid: Vec<Scalar> = (0..=6).map(|k| Scalar::ratio(1, 1 << k)).collect();
    grid.extend((1..=6).map(|k| Scalar::from_int(1 << k)));
    grid.extend([(2, 3), (3, 2), (5, 7), (7, 5), (9, 10), (10, 9), (1, 100)].map(|(n, d)| Scalar::ratio(n, d)));
    grid
}

fn neighborhoods(cfg: &SampleConfig) -> Vec<LawReport> {
    let n = cfg.sample_count;
    let mut laws = vec![
        check_v_system(&PCone, cfg),
        check_bounded_below(&PCone, cfg),
        check_v_system(&HalfLine, cfg),
        check_bounded_below(&HalfLine, cfg),
        check_index_preservation(&with_count(cfg, (n / 10).max(1)), 10),
        check_max_of_symmetric(cfg),
        check_subcone_cover(cfg),
    ];
    let per_j = (n / 10).max(1);
    let mut lambda = LawReport::new("lambda-map");
    for j in 1..=cfg.max_index {
        lambda.absorb(check_lambda_continuity(nz(j), &with_count(cfg, per_j)));
    }
    laws.push(lambda);
    let grid = radius_grid();
    laws.push(check_lambda_inverse_grid(cfg.max_index, &grid, &grid));
    laws
}

fn duals(cfg: &SampleConfig) -> Vec<LawReport> {
    let sizes = Sizes::from(cfg);
    let per = with_count(cfg, sizes.per_functional);
    let mut linear = LawReport::new("linearity");
    let mut nonneg = LawReport::new("nonnegativity");
    let mut continuity = LawReport::new("continuity-via-polar-cover");
    for mu in functional_grid(sizes.functionals, cfg.max_index) {
        linear.absorb(is_linear_check(&mu, &per));
        nonneg.absorb(check_nonneg(&mu, &per));
        let v = polar_cover_witness(&mu);
        continuity.absorb(check_functional_continuity(|x| mu.eval(x), &PCone, &v, &per));
    }
    vec![linear, nonneg, continuity]
}

/// Polar agreement: the closed-form rule never contradicts sampling, and
/// each closed-form rejection comes with a verified violating pair.
pub fn polar_agreement(cfg: &SampleConfig, functionals: u64, pairs: u64) -> Vec<LawReport> {
    let mut s = Sampler::new(cfg, "polar-agreement");
    let mut agreement = LawReport::new("polar-agreement");
    let mut monotone = LawReport::new("polar-monotone-in-radius");
    let (mut inside, mut outside) = (0u64, 0u64);
    for i in 0..functionals {
        let mu = match s.below(8) {
            0 => DualFunctional::Zero,
            1 => DualFunctional::InfBar,
            2 => DualFunctional::ZeroBar { index: s.index() },
            _ => DualFunctional::scaled(s.pos_scalar(), s.index()),
        };
        let v = if s.chance(1, 4) {
            polar_cover_witness(&mu)
        } else {
            s.pos_scalar()
        };
        let analytic = in_polar_analytic(&mu, &v);
        let sampled = in_polar_sampled(
            &mu,
            &v,
            &SampleConfig {
                seed: cfg.seed.wrapping_add(i),
                ..with_count(cfg, pairs)
            },
        );
        agreement.tick();
        if analytic {
            inside += 1;
            agreement.expect(sampled.pass(), || {
                Violation::new(
                    [mu.to_string(), v.to_string()],
                    "sampled polar check passes",
                    format!("{:?}", sampled.violations.first()),
                )
            });
        } else {
            outside += 1;
            let witness = polar_violation_witness(&mu, &v);
            agreement.expect(
                witness
                    .as_ref()
                    .is_some_and(|(a, b)| verify_polar_violation(&mu, &v, a, b)),
                || Violation::new([mu.to_string(), v.to_string()], "verified violating pair", "none"),
            );
        }
        let u = &v * &s.unit_fraction();
        monotone.tick();
        if analytic {
            monotone.expect(in_polar_analytic(&mu, &u), || {
                Violation::new(
                    [mu.to_string(), v.to_string(), u.to_string()],
                    "mu in polar(v), u <= v implies mu in polar(u)",
                    "false",
                )
            });
        }
    }
    vec![
        agreement.with_note(format!("{inside} inside, {outside} outside")),
        monotone,
    ]
}

fn polars(cfg: &SampleConfig) -> Vec<LawReport> {
    let sizes = Sizes::from(cfg);
    let mut laws = polar_agreement(cfg, sizes.polar_functionals, sizes.polar_pairs);
    laws.extend(check_polar_lemmas(&with_count(cfg, sizes.laws / 10)));
    laws
}

fn lemma21(cfg: &SampleConfig) -> Result<Vec<LawReport>, Error> {
    Ok(vec![
        lemma21_check(&BarrelSpec::vtilde(cfg.w.clone())?, cfg),
        lemma21_check(&BarrelSpec::bsub(3.min(cfg.max_index), cfg.w.clone())?, cfg),
        lemma21_check(&BarrelSpec::bunion(cfg.w.clone())?, cfg),
    ])
}

/// `in_barrel(B(w), .)` against the brute-force union over `j <= max_index`.
pub fn union_oracle_agreement(cfg: &SampleConfig) -> LawReport {
    let law = "b-union-closed-form";
    let mut s = Sampler::new(cfg, law);
    let mut report = LawReport::new(law);
    let spec = BarrelSpec::BUnion { w: cfg.w.clone() };
    for _ in 0..cfg.sample_count {
        let b = s.pelem();
        let a = match &b {
            PElem::Member(m) if s.chance(1, 2) => {
                let value = match s.below(3) {
                    0 => m.value() + &cfg.w,
                    1 => m.value() + &(s.unit_fraction() * &cfg.w),
                    _ => m.value() + &cfg.w + Scalar::ratio(1, 64),
                };
                PElem::member_nz(value, m.index()).expect("positive")
            }
            _ => s.pelem(),
        };
        let (closed, oracle) = (in_barrel(&spec, &a, &b), b_union_oracle(&a, &b, &cfg.w, cfg.max_index));
        report.tick();
        report.expect(closed == oracle, || {
            Violation::new([&a, &b], format!("closed form = oracle ({oracle})"), closed.to_string())
        });
    }
    report
}

/// Outside pairs of `spec`, drawn near the boundary.
fn sample_non_member(spec: &BarrelSpec, s: &mut Sampler) -> (PElem, PElem) {
    loop {
        let (a, b) = match spec {
            BarrelSpec::BSub { j, w } => {
                let b = s.subcone_elem(*j);
                let a = match &b {
                    PElem::Member(m) if s.chance(3, 4) => {
                        PElem::member_nz(m.value() + w + s.pos_scalar(), *j).expect("positive")
                    }
                    _ => s.subcone_elem(*j),
                };
                (a, b)
            }
            _ => {
                let b = s.pelem();
                let a = match (&b, spec) {
                    (PElem::Member(m), BarrelSpec::BUnion { w }) if s.chance(1, 2) => {
                        PElem::member_nz(m.value() + w + s.pos_scalar(), m.index()).expect("positive")
                    }
                    _ => s.pelem(),
                };
                (a, b)
            }
        };
        if !in_barrel(spec, &a, &b) {
            return (a, b);
        }
    }
}

fn absorption_law(
    spec: &BarrelSpec,
    name: &str,
    sizes: &Sizes,
    cfg: &SampleConfig,
    centers: &mut Sampler,
) -> Result<LawReport, Error> {
    let mut law = LawReport::new(name);
    let per = with_count(cfg, sizes.per_center);
    for _ in 0..sizes.centers {
        let b = match spec {
            BarrelSpec::BSub { j, .. } => centers.subcone_elem(*j),
            _ => centers.pelem(),
        };
        let witness = b1_witness(spec, &b, &per)?;
        let expected_v = match b.index() {
            Some(j) => &cfg.w / &Scalar::from_int(j.get()),
            None => cfg.w.clone(),
        };
        law.expect(witness.v == expected_v && witness.lambda == Scalar::one(), || {
            Violation::new(
                [&b],
                format!("(v, lambda) = ({expected_v}, 1)"),
                format!("({}, {})", witness.v, witness.lambda),
            )
        });
        law.absorb(witness.report);
    }
    Ok(law)
}

fn separation_law(spec: &BarrelSpec, name: &str, sizes: &Sizes, cfg: &SampleConfig, s: &mut Sampler) -> LawReport {
    let mut law = LawReport::new(name);
    let members = with_count(cfg, sizes.members);
    let mut uncovered = 0u64;
    for _ in 0..sizes.non_members {
        let (a, b) = sample_non_member(spec, s);
        let result = match spec {
            BarrelSpec::BSub { j, w } => b2_witness_subcone(*j, w, &a, &b, &members),
            _ => b2_witness(&cfg.w, &a, &b, &members),
        };
        law.tick();
        match result {
            Ok(witness) => {
                let v = polar_cover_witness(&witness.mu);
                law.expect(
                    witness.strict_verified && witness.members_verified && in_polar_analytic(&witness.mu, &v),
                    || {
                        Violation::new(
                            [&a, &b],
                            "verified separation by a continuous functional",
                            witness.mu.to_string(),
                        )
                    },
                );
            }
            // (inf_inf, d_j) inside Q_j: neither listed case applies.
            Err(Error::UncoveredCase(_)) if matches!(spec, BarrelSpec::BSub { .. }) => uncovered += 1,
            Err(e) => law.record(Violation::new([&a, &b], "separation witness", e.to_string())),
        }
    }
    if uncovered > 0 {
        law.note = Some(format!(
            "{uncovered} pairs of the form (inf_inf, d_j) skipped as uncovered"
        ));
    }
    law
}

fn barrel_b1b2(cfg: &SampleConfig) -> Result<Vec<LawReport>, Error> {
    let sizes = Sizes::from(cfg);
    let union = BarrelSpec::bunion(cfg.w.clone())?;
    let sub = BarrelSpec::bsub(3.min(cfg.max_index), cfg.w.clone())?;
    let mut s = Sampler::new(cfg, "barrel-b1b2");
    Ok(vec![
        union_oracle_agreement(cfg),
        check_convexity(&union, cfg),
        check_convexity(&sub, cfg),
        absorption_law(&union, "B1[B]", &sizes, cfg, &mut s)?,
        absorption_law(&sub, "B1[B_j]", &sizes, cfg, &mut s)?,
        separation_law(&union, "B2[B]", &sizes, cfg, &mut s),
        separation_law(&sub, "B2[B_j]", &sizes, cfg, &mut s),
    ])
}

/// Barreledness witnesses at `centers` sampled points for `B` and for the
/// `B_j` matching each point's index.
pub fn barreled_law(cfg: &SampleConfig, centers: u64, per_center: u64) -> Result<Vec<LawReport>, Error> {
    let mut s = Sampler::new(cfg, "barreled");
    let per = with_count(cfg, per_center);
    let union = BarrelSpec::bunion(cfg.w.clone())?;
    let mut for_b = LawReport::new("barreled[B]");
    let mut for_bj = LawReport::new("barreled[B_j]");
    for _ in 0..centers {
        let b = s.pelem();
        let r = barreled_witness(&union, &b, &per)?;
        for_b.absorb(r.report);
        let j = b.index().unwrap_or_else(|| s.index());
        let r = barreled_witness(&BarrelSpec::bsub(j.get(), cfg.w.clone())?, &b, &per)?;
        for_bj.absorb(r.report);
    }
    Ok(vec![for_b, for_bj])
}

fn barreled(cfg: &SampleConfig) -> Result<Vec<LawReport>, Error> {
    let sizes = Sizes::from(cfg);
    barreled_law(cfg, (sizes.centers / 2).max(1), sizes.per_center)
}

/// Refutation witnesses for `count` radii `u` on a log grid over `(1e-3, 1e3)`.
pub fn refutation_grid(w: &Scalar, count: usize) -> LawReport {
    let mut report = LawReport::new("u~ not contained in B");
    for u in log_grid(count, -3, 3) {
        report.tick();
        match refute_upper_barreled(&u, w) {
            Ok(r) => {
                report.expect(r.in_vtilde && r.outside_b, || {
                    Violation::new([&u], "doubly verified witness", "unverified")
                });
            }
            Err(e) => report.record(Violation::new([u.to_string(), w.to_string()], "witness", e.to_string())),
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            let verdict = if report.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "suite {}: {verdict}", report.suite);
            let _ = writeln!(out, "  {}", report.statement);
            if let Some(ms) = report.duration_ms {
                let _ = writeln!(out, "  duration: {ms} ms");
            }
            let width = report.laws.iter().map(|l| l.name.len()).max().unwrap_or(0);
            for law in &report.laws {
                let status = if law.pass() { "ok  " } else { "FAIL" };
                let _ = write!(
                    out,
                    "  {status} {:width$}  samples={} violations={}",
                    law.name, law.samples, law.violation_count
                );
                if law.inconclusive > 0 {
                    let _ = write!(out, " inconclusive={}", law.inconclusive);
                }
                if let Some(note) = &law.note {
                    let _ = write!(out, "  ({note})");
                }
                out.push('\n');
                for v in &law.violations {
                    let _ = writeln!(
                        out,
                        "       [{}] expected {}, got {}",
                        v.inputs.join(", "),
                        v.expected,
                        v.got
                    );
                }
            }
            out
        }
    }
}
