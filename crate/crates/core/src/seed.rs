//! Seed derivation for independent, reproducible trials.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finaliser.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` in a search seeded with `seed`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    mix64(seed ^ mix64(trial.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// The generator every trial draws from.
pub fn trial_rng(trial_seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_seeds_differ() {
        let a = trial_seed(1, 0);
        let b = trial_seed(1, 1);
        let c = trial_seed(2, 0);
        assert!(a != b && a != c && b != c);
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
    }
}
