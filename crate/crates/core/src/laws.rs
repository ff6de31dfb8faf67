//! Seeded law checking for preordered cones with an abstract neighborhood
//! system.
//!
//! A carrier plugs in through [`ConeInstance`]. Each check draws its own
//! sample stream from the config seed and the law name, so reports are
//! reproducible and independent of check order. Every draw has a one in four
//! chance of coming from the instance's boundary pool, which is where the
//! case analysis of a concrete cone tends to break.

use std::fmt::Display;

use crate::report::{LawReport, Violation};
use crate::sample::{SampleConfig, Sampler};
use crate::scalar::{ExtScalar, Scalar};

/// A preordered cone together with its neighborhood relation `x <= y + v`,
/// where the radii `v` range over the positive rationals.
pub trait ConeInstance {
    type Elem: Clone + PartialEq + Display;

    fn name(&self) -> &str;
    fn zero(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn scale(&self, r: &Scalar, x: &Self::Elem) -> Self::Elem;
    fn preorder(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
    /// `x <= y + v`. Only queried with `v > 0`.
    fn v_relation(&self, x: &Self::Elem, y: &Self::Elem, v: &Scalar) -> bool;

    fn sample(&self, s: &mut Sampler) -> Self::Elem;
    /// Elements injected into every sample pool.
    fn boundary(&self) -> Vec<Self::Elem>;

    /// An element likely to sit on or near the edge of `anchor + v`, so
    /// that relation premises are hit often. Defaults to a fresh sample.
    fn sample_near(&self, _anchor: &Self::Elem, _v: &Scalar, s: &mut Sampler) -> Self::Elem {
        self.sample(s)
    }
}

fn draw<I: ConeInstance>(inst: &I, pool: &[I::Elem], s: &mut Sampler) -> I::Elem {
    if !pool.is_empty() && s.chance(1, 4) {
        s.pick(pool).clone()
    } else {
        inst.sample(s)
    }
}

fn draw_near<I: ConeInstance>(inst: &I, pool: &[I::Elem], anchor: &I::Elem, v: &Scalar, s: &mut Sampler) -> I::Elem {
    if s.chance(1, 8) {
        draw(inst, pool, s)
    } else {
        inst.sample_near(anchor, v, s)
    }
}

/// Scalars for cone axioms, with 0 and 1 forced in regularly.
fn draw_scalar(s: &mut Sampler) -> Scalar {
    match s.below(8) {
        0 => Scalar::zero(),
        1 => Scalar::one(),
        _ => s.pos_scalar(),
    }
}

fn law_name<I: ConeInstance>(inst: &I, law: &str) -> String {
    format!("{}/{}", inst.name(), law)
}

fn eq_check<E: PartialEq + Display>(report: &mut LawReport, law: &str, inputs: &[String], lhs: E, rhs: E) {
    if lhs != rhs {
        report.record(Violation::new(
            inputs.iter(),
            format!("{law}: both sides equal"),
            format!("{lhs} != {rhs}"),
        ));
    }
}

/// Associativity, commutativity, the neutral element, both distributive
/// laws, `(rs)x = r(sx)`, `1x = x` and `0x = 0`.
pub fn check_cone_axioms<I: ConeInstance>(inst: &I, cfg: &SampleConfig) -> LawReport {
    let name = law_name(inst, "cone-axioms");
    let mut s = Sampler::new(cfg, &name);
    let mut report = LawReport::new(name);
    let pool = inst.boundary();
    let zero = inst.zero();
    for _ in 0..cfg.sample_count {
        let (x, y, z) = (
            draw(inst, &pool, &mut s),
            draw(inst, &pool, &mut s),
            draw(inst, &pool, &mut s),
        );
        let (r, t) = (draw_scalar(&mut s), draw_scalar(&mut s));
        let inputs = [
            x.to_string(),
            y.to_string(),
            z.to_string(),
            r.to_string(),
            t.to_string(),
        ];
        report.tick();

        let assoc_l = inst.add(&x, &inst.add(&y, &z));
        let assoc_r = inst.add(&inst.add(&x, &y), &z);
        eq_check(&mut report, "x+(y+z) = (x+y)+z", &inputs, assoc_l, assoc_r);
        eq_check(&mut report, "x+y = y+x", &inputs, inst.add(&x, &y), inst.add(&y, &x));
        eq_check(&mut report, "x+0 = x", &inputs, inst.add(&x, &zero), x.clone());
        eq_check(
            &mut report,
            "r(x+y) = rx+ry",
            &inputs,
            inst.scale(&r, &inst.add(&x, &y)),
            inst.add(&inst.scale(&r, &x), &inst.scale(&r, &y)),
        );
        eq_check(
            &mut report,
            "(r+s)x = rx+sx",
            &inputs,
            inst.scale(&(&r + &t), &x),
            inst.add(&inst.scale(&r, &x), &inst.scale(&t, &x)),
        );
        eq_check(
            &mut report,
            "(rs)x = r(sx)",
            &inputs,
            inst.scale(&(&r * &t), &x),
            inst.scale(&r, &inst.scale(&t, &x)),
        );
        eq_check(
            &mut report,
            "1x = x",
            &inputs,
            inst.scale(&Scalar::one(), &x),
            x.clone(),
        );
        eq_check(
            &mut report,
            "0x = 0",
            &inputs,
            inst.scale(&Scalar::zero(), &x),
            zero.clone(),
        );
    }
    report
}

/// Reflexivity and transitivity of the preorder, and its compatibility
/// with addition and scaling.
pub fn check_order_compat<I: ConeInstance>(inst: &I, cfg: &SampleConfig) -> LawReport {
    let name = law_name(inst, "order-compat");
    let mut s = Sampler::new(cfg, &name);
    let mut report = LawReport::new(name);
    let pool = inst.boundary();
    for _ in 0..cfg.sample_count {
        let x = draw(inst, &pool, &mut s);
        let v = s.pos_scalar();
        let y = draw_near(inst, &pool, &x, &v, &mut s);
        let z = draw_near(inst, &pool, &y, &v, &mut s);
        let r = draw_scalar(&mut s);
        report.tick();

        report.expect(inst.preorder(&x, &x), || Violation::new([&x], "x <= x", "false"));
        if inst.preorder(&x, &y) && inst.preorder(&y, &z) {
            report.expect(inst.preorder(&x, &z), || {
                Violation::new([&x, &y, &z], "x <= y, y <= z implies x <= z", "x <= z false")
            });
        }
        if inst.preorder(&x, &y) {
            let (xz, yz) = (inst.add(&x, &z), inst.add(&y, &z));
            report.expect(inst.preorder(&xz, &yz), || {
                Violation::new([&x, &y, &z], "x <= y implies x+z <= y+z", format!("{xz} <= {yz} false"))
            });
            let (rx, ry) = (inst.scale(&r, &x), inst.scale(&r, &y));
            report.expect(inst.preorder(&rx, &ry), || {
                Violation::new(
                    [x.to_string(), y.to_string(), r.to_string()],
                    "x <= y implies rx <= ry",
                    format!("{rx} <= {ry} false"),
                )
            });
        }
    }
    report
}

/// The neighborhood system axioms as relations: monotonicity in the radius,
/// composition `x <= y + v, y <= z + u => x <= z + (v + u)`, and
/// `x <= y => x <= y + v`. Directedness and closure of the radii under
/// addition and positive scaling are checked on the scalars directly.
pub fn check_v_system<I: ConeInstance>(inst: &I, cfg: &SampleConfig) -> LawReport {
    let name = law_name(inst, "v-system");
    let mut s = Sampler::new(cfg, &name);
    let mut report = LawReport::new(name);
    let pool = inst.boundary();
    for _ in 0..cfg.sample_count {
        let v = s.pos_scalar();
        let u = if s.chance(1, 2) {
            &v + &s.pos_scalar()
        } else {
            s.pos_scalar()
        };
        let z = draw(inst, &pool, &mut s);
        let y = draw_near(inst, &pool, &z, &u, &mut s);
        let x = draw_near(inst, &pool, &y, &v, &mut s);
        let inputs = || {
            [
                x.to_string(),
                y.to_string(),
                z.to_string(),
                v.to_string(),
                u.to_string(),
            ]
        };
        report.tick();

        // Radii: the minimum is a common lower bound, sums and positive
        // multiples stay positive.
        let lower = v.clone().min(u.clone());
        report.expect(lower.is_positive() && lower <= v && lower <= u, || {
            Violation::new(inputs(), "min(v,u) is a positive lower bound", lower.to_string())
        });
        let alpha = s.pos_scalar();
        report.expect((&v + &u).is_positive() && (&alpha * &v).is_positive(), || {
            Violation::new(inputs(), "v+u > 0 and alpha*v > 0", "nonpositive radius")
        });

        if v <= u && inst.v_relation(&x, &y, &v) {
            report.expect(inst.v_relation(&x, &y, &u), || {
                Violation::new(inputs(), "x <= y+v, v <= u implies x <= y+u", "false")
            });
        }
        if inst.v_relation(&x, &y, &v) && inst.v_relation(&y, &z, &u) {
            report.expect(inst.v_relation(&x, &z, &(&v + &u)), || {
                Violation::new(inputs(), "x <= y+v, y <= z+u implies x <= z+(v+u)", "false")
            });
        }
        if inst.preorder(&x, &y) {
            report.expect(inst.v_relation(&x, &y, &v), || {
                Violation::new(inputs(), "x <= y implies x <= y+v", "false")
            });
        }
    }
    report
}

/// For each sampled `(a, v)`, searches `rho = 1, 2, 4, ...` up to
/// `cfg.rho_cap` for `0 <= a + rho*v`. An exhausted search is counted as
/// inconclusive, never as a violation.
pub fn check_bounded_below<I: ConeInstance>(inst: &I, cfg: &SampleConfig) -> LawReport {
    let name = law_name(inst, "bounded-below");
    let mut s = Sampler::new(cfg, &name);
    let mut report = LawReport::new(name);
    let pool = inst.boundary();
    let zero = inst.zero();
    let mut max_rho: Option<u64> = None;
    for _ in 0..cfg.sample_count {
        let a = draw(inst, &pool, &mut s);
        let v = s.pos_scalar();
        report.tick();
        let mut rho = 1u64;
        let mut found = None;
        while rho <= cfg.rho_cap {
            if inst.v_relation(&zero, &a, &(Scalar::from_int(rho) * &v)) {
                found = Some(rho);
                break;
            }
            rho = match rho.checked_mul(2) {
                Some(r) => r,
                None => break,
            };
        }
        match found {
            Some(r) => max_rho = Some(max_rho.map_or(r, |m| m.max(r))),
            None => report.inconclusive += 1,
        }
    }
    let note = match max_rho {
        Some(r) => format!("largest rho needed: {r}"),
        None => "no rho found within cap".to_string(),
    };
    report.with_note(note)
}

/// `a <= b + v => mu(a) <= mu(b) + 1` over sampled pairs satisfying the premise.
pub fn check_functional_continuity<I, F>(mu: F, inst: &I, v: &Scalar, cfg: &SampleConfig) -> LawReport
where
    I: ConeInstance,
    F: Fn(&I::Elem) -> ExtScalar,
{
    let name = law_name(inst, &format!("continuity@{v}"));
    let mut s = Sampler::new(cfg, &name);
    let mut report = LawReport::new(name);
    let pool = inst.boundary();
    let one = ExtScalar::one();
    for _ in 0..cfg.sample_count {
        let b = draw(inst, &pool, &mut s);
        let a = draw_near(inst, &pool, &b, v, &mut s);
        report.tick();
        if inst.v_relation(&a, &b, v) {
            let (ma, mb) = (mu(&a), mu(&b));
            report.expect(ma <= &mb + &one, || {
                Violation::new([&a, &b], "mu(a) <= mu(b) + 1", format!("{ma} > {mb} + 1"))
            });
        }
    }
    report
}
