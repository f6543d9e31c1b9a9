//! Seeded randomness.
//!
//! Every random stream in the crate is a ChaCha20 stream (`rand_chacha`)
//! keyed through `SeedableRng::seed_from_u64`. Independent sub-streams (one
//! per specialization branch, one per Grover run) are obtained by selecting
//! a ChaCha stream id, so results do not depend on evaluation order.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// The generator used throughout the crate.
pub type MqRng = ChaCha20Rng;

/// Root generator for a user-supplied seed.
pub fn seeded(seed: u64) -> MqRng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Generator for sub-stream `stream` of `seed`.
///
/// Stream 0 coincides with [`seeded`]; callers that need both a root
/// stream and derived streams should start their ids at 1.
pub fn substream(seed: u64, stream: u64) -> MqRng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
