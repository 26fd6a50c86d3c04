//! Seeded, splittable random streams.
//!
//! Every Monte Carlo loop in this crate addresses its randomness as
//! `derive_stream(master_seed, replicate_index)`. The mapping is pure:
//! the same `(seed, index)` pair always yields the same stream, distinct
//! indices yield statistically independent streams, and no stream depends
//! on thread count or scheduling order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The concrete stream type handed to samplers and estimators.
pub type Stream = ChaCha8Rng;

/// Derive the pseudo-random stream for one replicate of a seeded loop.
///
/// ChaCha keyed by `seed` with `index` as the stream counter: a
/// counter-based construction, so deriving stream `r` costs O(1) and does
/// not consume state from any other stream.
pub fn derive_stream(seed: u64, index: u64) -> Stream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Mint an independent child seed for a nested seeded loop.
///
/// Nested loops (a power study calling the estimator, which runs its own
/// subsample loop) need fresh 64-bit master seeds of their own; taking the
/// first word of the derived stream keeps the whole tree a pure function
/// of the root seed.
pub fn child_seed(seed: u64, index: u64) -> u64 {
    use rand_chacha::rand_core::RngCore;
    derive_stream(seed, index).next_u64()
}
