//! Browser bindings for the `lccone` demo page.
//!
//! The exported functions take their numbers as text (`p/q` or `p`) so that
//! nothing passes through floating point on the way in.

use wasm_bindgen::prelude::*;

pub mod ops {
    use lccone::barrel::{in_barrel, refute_upper_barreled, BarrelSpec};
    use lccone::dual::{in_polar_analytic, polar_cover_witness, polar_violation_witness, DualFunctional};
    use lccone::{Error, PElem, Scalar};
    use serde_json::json;

    pub const IN_VTILDE: u8 = 1;
    pub const IN_B: u8 = 2;
    pub const MAX_STEPS: u32 = 400;

    fn positive(text: &str, what: &str) -> Result<Scalar, Error> {
        let x: Scalar = text.parse()?;
        if x.is_positive() {
            Ok(x)
        } else {
            Err(Error::Domain(format!("{what} must be positive, got {x}")))
        }
    }

    /// Membership of `(a_j, b_j)` in `u~` and in `B(w)` over the grid
    /// `a, b in {max * k / steps : k = 1..=steps}`. Row-major with rows
    /// indexed by `b`; each cell is a bit set of [`IN_VTILDE`] and [`IN_B`].
    pub fn membership_map(u: &str, w: &str, j: u32, max: &str, steps: u32) -> Result<Vec<u8>, Error> {
        let vtilde = BarrelSpec::vtilde(positive(u, "u")?)?;
        let union = BarrelSpec::bunion(positive(w, "w")?)?;
        let max = positive(max, "max")?;
        if !(1..=MAX_STEPS).contains(&steps) {
            return Err(Error::Config(format!("steps must be in 1..={MAX_STEPS}")));
        }
        let axis: Vec<PElem> = (1..=u64::from(steps))
            .map(|k| PElem::member(&max * &Scalar::ratio(k, u64::from(steps)), u64::from(j)))
            .collect::<Result<_, _>>()?;
        let mut cells = Vec::with_capacity(axis.len() * axis.len());
        for b in &axis {
            for a in &axis {
                let mut code = 0;
                if in_barrel(&vtilde, a, b) {
                    code |= IN_VTILDE;
                }
                if in_barrel(&union, a, b) {
                    code |= IN_B;
                }
                cells.push(code);
            }
        }
        Ok(cells)
    }

    /// The refutation witness for `(u, w)` as JSON.
    pub fn refute(u: &str, w: &str) -> Result<String, Error> {
        let r = refute_upper_barreled(&u.parse()?, &w.parse()?)?;
        let (a, b) = r.pair();
        Ok(json!({
            "u": r.u, "w": r.w, "j": r.j,
            "a": a, "b": b,
            "in_vtilde": r.in_vtilde, "outside_b": r.outside_b,
        })
        .to_string())
    }

    /// Polar membership of a functional (`zero`, `infbar`, `zerobar@j`,
    /// `lam:p/q@j`) at radius `v`, with the largest radius that works and a
    /// violating pair when there is one.
    pub fn polar_check(mu: &str, v: &str) -> Result<String, Error> {
        let mu: DualFunctional = mu.parse()?;
        let v = positive(v, "v")?;
        let witness = polar_violation_witness(&mu, &v)
            .map(|(a, b)| json!({ "a": a, "b": b, "mu_a": mu.eval(&a).to_string(), "mu_b": mu.eval(&b).to_string() }));
        let cover = match mu {
            DualFunctional::Scaled { .. } => Some(polar_cover_witness(&mu)),
            _ => None,
        };
        Ok(json!({
            "mu": mu.to_string(),
            "v": v,
            "in_polar": in_polar_analytic(&mu, &v),
            "largest_radius": cover,
            "violation": witness,
        })
        .to_string())
    }
}

fn js_err(e: lccone::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = membershipMap)]
pub fn membership_map(u: &str, w: &str, j: u32, max: &str, steps: u32) -> Result<Vec<u8>, JsError> {
    ops::membership_map(u, w, j, max, steps).map_err(js_err)
}

#[wasm_bindgen]
pub fn refute(u: &str, w: &str) -> Result<String, JsError> {
    ops::refute(u, w).map_err(js_err)
}

#[wasm_bindgen(js_name = polarCheck)]
pub fn polar_check(mu: &str, v: &str) -> Result<String, JsError> {
    ops::polar_check(mu, v).map_err(js_err)
}
