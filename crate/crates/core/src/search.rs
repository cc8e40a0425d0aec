//! Seeded pseudo-random search parameters shared by every randomized routine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Field, Scalar, Vector};

/// Seed and trial budget for randomized searches.
///
/// Every search derives its generator from `seed` and a fixed per-call salt, so
/// results depend only on the seed and the inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub max_trials: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            max_trials: 200,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(seed: u64) -> SearchConfig {
        SearchConfig {
            seed,
            ..SearchConfig::default()
        }
    }

    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

/// Coefficient height used for trial `t` out of `total`: grows from 1 to 5.
pub(crate) fn height_for_trial(t: usize, total: usize) -> i64 {
    1 + (5 * t / total.max(1)).min(4) as i64
}

pub(crate) fn random_scalar(field: Field, rng: &mut ChaCha8Rng, height: i64) -> Scalar {
    match field {
        Field::Rationals => field.from_i64(rng.gen_range(-height..=height)),
        Field::Prime(p) => {
            let h = (height as u64).min(p - 1).max(1);
            let v = rng.gen_range(0..=2 * h) as i64 - h as i64;
            field.from_i64(v)
        }
    }
}

pub(crate) fn random_vector(
    field: Field,
    len: usize,
    rng: &mut ChaCha8Rng,
    height: i64,
) -> Vector {
    (0..len).map(|_| random_scalar(field, rng, height)).collect()
}
