//! Shared fixtures for the kernel benchmarks.

use cesaro_core::{random_polynomial, TaylorSeries};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic random polynomial used across benchmark runs.
pub fn sample_polynomial(degree: usize) -> TaylorSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC35A60);
    random_polynomial(&mut rng, degree)
}
