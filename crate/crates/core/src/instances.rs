//! Concrete [`ConeInstance`]s: `P`, `Q_j`, the half-line `[0, +inf]`, and
//! deliberately broken wrappers used as negative controls.

use std::num::NonZeroU64;

use crate::indexed::{self, index_scalar, PElem};
use crate::laws::ConeInstance;
use crate::sample::Sampler;
use crate::scalar::{ExtScalar, Scalar};

/// Candidate next to the edge of `b_j + v`: exactly on it, just inside or
/// outside, on the lower edge, or the centre itself.
fn near_member(b: &Scalar, j: NonZeroU64, v: &Scalar, s: &mut Sampler) -> PElem {
    let radius = index_scalar(j) * v;
    let value = match s.below(6) {
        0 => b + &radius,
        1 => b
            .checked_sub(&radius)
            .filter(Scalar::is_positive)
            .unwrap_or_else(|| b.clone()),
        2 => b + &(s.unit_fraction() * &radius),
        3 => b * &s.unit_fraction(),
        4 => b.clone(),
        _ => b + &radius + Scalar::ratio(1, 64),
    };
    PElem::member_nz(value, j).expect("positive")
}

/// The cone `P` with the index-scaled neighborhood relation.
#[derive(Clone, Copy, Debug, Default)]
pub struct PCone;

impl ConeInstance for PCone {
    type Elem = PElem;

    fn name(&self) -> &str {
        "P"
    }

    fn zero(&self) -> PElem {
        PElem::Zero
    }

    fn add(&self, x: &PElem, y: &PElem) -> PElem {
        indexed::p_add(x, y)
    }

    fn scale(&self, r: &Scalar, x: &PElem) -> PElem {
        x.scale(r)
    }

    fn preorder(&self, x: &PElem, y: &PElem) -> bool {
        x.precedes(y)
    }

    fn v_relation(&self, x: &PElem, y: &PElem, v: &Scalar) -> bool {
        indexed::le_v(x, y, v)
    }

    fn sample(&self, s: &mut Sampler) -> PElem {
        s.pelem()
    }

    fn boundary(&self) -> Vec<PElem> {
        vec![
            PElem::Zero,
            PElem::Inf,
            PElem::m(1, 1, 1),
            PElem::m(2, 1, 1),
            PElem::m(1, 1, 2),
            PElem::m(1, 2, 3),
            PElem::m(64, 1, 8),
        ]
    }

    fn sample_near(&self, anchor: &PElem, v: &Scalar, s: &mut Sampler) -> PElem {
        match anchor {
            PElem::Member(m) if s.below(8) != 0 => near_member(m.value(), m.index(), v, s),
            // Same value, neighbouring index.
            PElem::Member(m) if s.chance(1, 2) => {
                PElem::member(m.value().clone(), m.index().get() + 1).expect("positive")
            }
            _ if s.chance(1, 4) => anchor.clone(),
            _ => s.pelem(),
        }
    }
}

/// The subcone `Q_j = {b_j} + {0_0, inf_inf}` with the relation inherited from `P`.
#[derive(Clone, Copy, Debug)]
pub struct SubCone {
    pub j: NonZeroU64,
}

impl SubCone {
    pub fn new(j: u64) -> Option<Self> {
        NonZeroU64::new(j).map(|j| SubCone { j })
    }
}

impl ConeInstance for SubCone {
    type Elem = PElem;

    fn name(&self) -> &str {
        "Q_j"
    }

    fn zero(&self) -> PElem {
        PElem::Zero
    }

    fn add(&self, x: &PElem, y: &PElem) -> PElem {
        indexed::p_add(x, y)
    }

    fn scale(&self, r: &Scalar, x: &PElem) -> PElem {
        x.scale(r)
    }

    fn preorder(&self, x: &PElem, y: &PElem) -> bool {
        x.precedes(y)
    }

    fn v_relation(&self, x: &PElem, y: &PElem, v: &Scalar) -> bool {
        indexed::le_v(x, y, v)
    }

    fn sample(&self, s: &mut Sampler) -> PElem {
        s.subcone_elem(self.j)
    }

    fn boundary(&self) -> Vec<PElem> {
        vec![
            PElem::Zero,
            PElem::Inf,
            PElem::member_nz(Scalar::one(), self.j).expect("positive"),
        ]
    }

    fn sample_near(&self, anchor: &PElem, v: &Scalar, s: &mut Sampler) -> PElem {
        match anchor {
            PElem::Member(m) if s.below(8) != 0 => near_member(m.value(), m.index(), v, s),
            _ => s.subcone_elem(self.j),
        }
    }
}

/// `[0, +inf]` with radii `v > 0` acting as `x <= y + v`.
#[derive(Clone, Copy, Debug, Default)]
pub struct HalfLine;

impl ConeInstance for HalfLine {
    type Elem = ExtScalar;

    fn name(&self) -> &str {
        "Rbar+"
    }

    fn zero(&self) -> ExtScalar {
        ExtScalar::zero()
    }

    fn add(&self, x: &ExtScalar, y: &ExtScalar) -> ExtScalar {
        x + y
    }

    fn scale(&self, r: &Scalar, x: &ExtScalar) -> ExtScalar {
        x.scale(r)
    }

    fn preorder(&self, x: &ExtScalar, y: &ExtScalar) -> bool {
        x <= y
    }

    fn v_relation(&self, x: &ExtScalar, y: &ExtScalar, v: &Scalar) -> bool {
        x.le_within(y, v)
    }

    fn sample(&self, s: &mut Sampler) -> ExtScalar {
        s.ext_scalar()
    }

    fn boundary(&self) -> Vec<ExtScalar> {
        vec![ExtScalar::zero(), ExtScalar::Inf, ExtScalar::one()]
    }

    fn sample_near(&self, anchor: &ExtScalar, v: &Scalar, s: &mut Sampler) -> ExtScalar {
        match anchor {
            ExtScalar::Finite(y) => ExtScalar::Finite(match s.below(5) {
                0 => y + v,
                1 => y.checked_sub(v).unwrap_or_else(Scalar::zero),
                2 => y + &(s.unit_fraction() * v),
                3 => y.clone(),
                _ => y * &s.unit_fraction(),
            }),
            ExtScalar::Inf => s.ext_scalar(),
        }
    }
}

/// Negative control: addition replaced by the left projection `x + y = x`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeftProjection<I>(pub I);

/// Negative control: the preorder replaced by its strict part.
#[derive(Clone, Copy, Debug, Default)]
pub struct StrictOrder<I>(pub I);

/// Negative control: a neighborhood relation that never holds.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeverRelated<I>(pub I);

macro_rules! delegate_cone {
    ($wrapper:ident, $label:literal, { $($body:tt)* }) => {
        impl<I: ConeInstance> ConeInstance for $wrapper<I> {
            type Elem = I::Elem;

            fn name(&self) -> &str {
                $label
            }

            fn zero(&self) -> I::Elem {
                self.0.zero()
            }

            fn scale(&self, r: &Scalar, x: &I::Elem) -> I::Elem {
                self.0.scale(r, x)
            }

            fn sample(&self, s: &mut Sampler) -> I::Elem {
                self.0.sample(s)
            }

            fn boundary(&self) -> Vec<I::Elem> {
                self.0.boundary()
            }

            fn sample_near(&self, anchor: &I::Elem, v: &Scalar, s: &mut Sampler) -> I::Elem {
                self.0.sample_near(anchor, v, s)
            }

            $($body)*
        }
    };
}

delegate_cone!(LeftProjection, "control-left-projection", {
    fn add(&self, x: &I::Elem, _y: &I::Elem) -> I::Elem {
        x.clone()
    }
    fn preorder(&self, x: &I::Elem, y: &I::Elem) -> bool {
        self.0.preorder(x, y)
    }
    fn v_relation(&self, x: &I::Elem, y: &I::Elem, v: &Scalar) -> bool {
        self.0.v_relation(x, y, v)
    }
});

delegate_cone!(StrictOrder, "control-strict-order", {
    fn add(&self, x: &I::Elem, y: &I::Elem) -> I::Elem {
        self.0.add(x, y)
    }
    fn preorder(&self, x: &I::Elem, y: &I::Elem) -> bool {
        self.0.preorder(x, y) && x != y
    }
    fn v_relation(&self, x: &I::Elem, y: &I::Elem, v: &Scalar) -> bool {
        self.0.v_relation(x, y, v)
    }
});

delegate_cone!(NeverRelated, "control-never-related", {
    fn add(&self, x: &I::Elem, y: &I::Elem) -> I::Elem {
        self.0.add(x, y)
    }
    fn preorder(&self, x: &I::Elem, y: &I::Elem) -> bool {
        self.0.preorder(x, y)
    }
    fn v_relation(&self, _x: &I::Elem, _y: &I::Elem, _v: &Scalar) -> bool {
        false
    }
});

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::*;
    use crate::sample::SampleConfig;

    fn cfg(n: u64) -> SampleConfig {
        SampleConfig::with_seed(11).with_samples(n)
    }

    #[test]
    fn p_passes_every_law() {
        let c = cfg(2_000);
        for r in [
            check_cone_axioms(&PCone, &c),
            check_order_compat(&PCone, &c),
            check_v_system(&PCone, &c),
            check_bounded_below(&PCone, &c),
        ] {
            assert!(r.pass(), "{r:?}");
            assert_eq!(r.samples, 2_000);
        }
    }

    #[test]
    fn half_line_and_subcones_pass() {
        let c = cfg(1_000);
        for r in [
            check_cone_axioms(&HalfLine, &c),
            check_order_compat(&HalfLine, &c),
            check_v_system(&HalfLine, &c),
            check_bounded_below(&HalfLine, &c),
        ] {
            assert!(r.pass(), "{r:?}");
        }
        let q3 = SubCone::new(3).unwrap();
        assert!(check_cone_axioms(&q3, &c).pass());
        assert!(check_v_system(&q3, &c).pass());
    }

    #[test]
    fn bounded_below_needs_only_rho_one() {
        let r = check_bounded_below(&PCone, &cfg(500));
        assert_eq!(r.note.as_deref(), Some("largest rho needed: 1"));
        let r = check_bounded_below(&HalfLine, &cfg(500));
        assert_eq!(r.note.as_deref(), Some("largest rho needed: 1"));
    }

    #[test]
    fn exhausted_rho_search_is_inconclusive() {
        let c = SampleConfig { rho_cap: 0, ..cfg(100) };
        let r = check_bounded_below(&PCone, &c);
        assert!(r.pass());
        assert_eq!(r.inconclusive, 100);
    }

    #[test]
    fn controls_are_caught() {
        let c = cfg(500);
        let r = check_cone_axioms(&LeftProjection(HalfLine), &c);
        assert!(!r.pass());
        assert!(r.violations.iter().any(|v| v.expected.starts_with("x+y = y+x")));
        let r = check_order_compat(&StrictOrder(PCone), &c);
        assert!(r.violations.iter().any(|v| v.expected == "x <= x"));
        let r = check_v_system(&NeverRelated(PCone), &c);
        assert!(r.violations.iter().any(|v| v.expected == "x <= y implies x <= y+v"));
    }

    #[test]
    fn reports_are_deterministic() {
        let c = cfg(300);
        assert_eq!(check_v_system(&PCone, &c), check_v_system(&PCone, &c));
        assert_eq!(
            check_cone_axioms(&LeftProjection(PCone), &c),
            check_cone_axioms(&LeftProjection(PCone), &c)
        );
    }
}
