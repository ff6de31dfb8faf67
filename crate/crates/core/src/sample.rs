//! Seeded sampling of scalars and cone elements.

use std::num::NonZeroU64;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::indexed::PElem;
use crate::scalar::{ExtScalar, Scalar};
use crate::Error;

/// Sampling parameters shared by every check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub sample_count: u64,
    pub max_index: u64,
    pub max_numerator: u64,
    pub max_denominator: u64,
    pub rho_cap: u64,
    pub w: Scalar,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            sample_count: 10_000,
            max_index: 8,
            max_numerator: 64,
            max_denominator: 64,
            rho_cap: 1 << 20,
            w: Scalar::one(),
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        SampleConfig {
            seed,
            ..Default::default()
        }
    }

    pub fn with_samples(mut self, n: u64) -> Self {
        self.sample_count = n;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.sample_count == 0 {
            return Err(Error::Config("sample_count must be positive".into()));
        }
        if self.max_index == 0 {
            return Err(Error::Config("max_index must be positive".into()));
        }
        if self.max_numerator == 0 || self.max_denominator == 0 {
            return Err(Error::Config("value bounds must be positive".into()));
        }
        if !self.w.is_positive() {
            return Err(Error::Config("w must be positive".into()));
        }
        Ok(())
    }
}

/// A deterministic generator tied to one named check.
///
/// Two samplers built from the same config and salt produce identical
/// streams, independent of what other checks have drawn.
pub struct Sampler {
    rng: ChaCha8Rng,
    max_index: u64,
    max_numerator: u64,
    max_denominator: u64,
}

impl Sampler {
    pub fn new(cfg: &SampleConfig, salt: &str) -> Self {
        // FNV-1a over the salt, mixed into the seed.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in salt.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(cfg.seed ^ h),
            max_index: cfg.max_index.max(1),
            max_numerator: cfg.max_numerator.max(1),
            max_denominator: cfg.max_denominator.max(1),
        }
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    /// A positive rational `p/q` with `p <= max_numerator`, `q <= max_denominator`,
    /// biased toward a few small landmarks.
    pub fn pos_scalar(&mut self) -> Scalar {
        if self.chance(1, 8) {
            let marks = [(1, 1), (1, 2), (2, 1), (3, 1), (1, 3)];
            let &(n, d) = self.pick(&marks);
            return Scalar::ratio(n, d);
        }
        let n = self.rng.gen_range(1..=self.max_numerator);
        let d = self.rng.gen_range(1..=self.max_denominator);
        Scalar::ratio(n, d)
    }

    /// Like [`Sampler::pos_scalar`] but hits zero one time in eight.
    pub fn nonneg_scalar(&mut self) -> Scalar {
        if self.chance(1, 8) {
            Scalar::zero()
        } else {
            self.pos_scalar()
        }
    }

    /// A rational strictly inside `(0, 1)`.
    pub fn unit_fraction(&mut self) -> Scalar {
        let d = self.rng.gen_range(2..=self.max_denominator.max(2));
        let n = self.rng.gen_range(1..d);
        Scalar::ratio(n, d)
    }

    pub fn index(&mut self) -> NonZeroU64 {
        NonZeroU64::new(self.rng.gen_range(1..=self.max_index)).expect("index >= 1")
    }

    pub fn ext_scalar(&mut self) -> ExtScalar {
        match self.below(10) {
            0 => ExtScalar::Inf,
            1 => ExtScalar::zero(),
            _ => ExtScalar::Finite(self.pos_scalar()),
        }
    }

    /// An element of `P`: `0_0` and `inf_inf` one time in ten each.
    pub fn pelem(&mut self) -> PElem {
        match self.below(10) {
            0 => PElem::Zero,
            1 => PElem::Inf,
            _ => {
                let j = self.index();
                self.member_of(j)
            }
        }
    }

    /// A member `a_j` with a sampled positive value.
    pub fn member_of(&mut self, j: NonZeroU64) -> PElem {
        PElem::member_nz(self.pos_scalar(), j).expect("positive value")
    }

    /// An element of `Q_j`.
    pub fn subcone_elem(&mut self, j: NonZeroU64) -> PElem {
        match self.below(10) {
            0 => PElem::Zero,
            1 => PElem::Inf,
            _ => self.member_of(j),
        }
    }
}

/// `count` positive rationals spread logarithmically over `(10^lo, 10^hi)`.
///
/// The k-th point is `10^e_k` rounded to nine decimals, with
/// `e_k = lo + (hi - lo) * (k + 1/2) / count`. The points themselves are
/// exact rationals; only their placement goes through `f64`.
pub fn log_grid(count: usize, lo: i32, hi: i32) -> Vec<Scalar> {
    assert!(hi > lo && count > 0);
    let span = f64::from(hi - lo);
    (0..count)
        .map(|k| {
            let exp = f64::from(lo) + span * (2 * k + 1) as f64 / (2 * count) as f64;
            let nanos = (10f64.powf(exp) * 1e9).round() as u64;
            Scalar::ratio(nanos.max(1), 1_000_000_000)
        })
        .collect()
}
