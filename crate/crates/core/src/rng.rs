//! Seeded, splittable random streams.
//!
//! Every randomized routine draws from `stream(seed, index)` so results are
//! deterministic for a fixed seed no matter how work is scheduled across
//! threads: parallel loops assign one stream per index instead of sharing a
//! generator.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
