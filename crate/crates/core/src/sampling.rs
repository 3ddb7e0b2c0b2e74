//! Seeded random elements. Trial `t` under seed `s` always draws from the
//! same ChaCha stream, independent of how many trials ran before it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};

pub const DEFAULT_TRIALS: u64 = 200;
pub const DEFAULT_MAX_NUM: i64 = 10;

/// How many random probes to draw and from which stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub trials: u64,
    pub seed: u64,
    pub max_num: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { trials: DEFAULT_TRIALS, seed: 0, max_num: DEFAULT_MAX_NUM }
    }
}

impl Sampling {
    pub fn new(trials: u64, seed: u64) -> Self {
        Sampling { trials, seed, ..Default::default() }
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// An element with integer coordinates in `[-max_num, max_num]`.
pub fn random_element<R: Rng>(algebra: &Algebra, rng: &mut R, max_num: i64) -> Element {
    let m = max_num.max(1);
    let coords: Vec<i64> = (0..algebra.dim()).map(|_| rng.gen_range(-m..=m)).collect();
    algebra.element_from_ints(&coords)
}

/// The `(x, y)` pair used by trial `trial`.
pub fn random_pair(algebra: &Algebra, seed: u64, trial: u64, max_num: i64) -> (Element, Element) {
    let mut rng = trial_rng(seed, trial);
    let x = random_element(algebra, &mut rng, max_num);
    let y = random_element(algebra, &mut rng, max_num);
    (x, y)
}
