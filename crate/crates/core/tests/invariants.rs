//! Cross-module invariants that tie the finite sections to the direct
//! kernel recursions.

use cesaro_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The finite section reproduces the truncated eigenvector scaled by
/// 1/(m+1) away from the truncation shadow.
#[test]
fn section_reproduces_scaled_eigenvector() {
    let degree = 512;
    let buffer = 64;
    for &t in &[0.3, 0.9] {
        let section = finite_section(&OperatorKernel::CesaroT { t }, degree).unwrap();
        for m in [0usize, 3, 7] {
            let x = eigenvector(t, m, degree).unwrap();
            let image = section.apply(x.coeffs());
            let scale = 1.0 / (m as f64 + 1.0);
            for (k, y) in image.iter().enumerate().take(degree - buffer + 1) {
                let expected = x.coeff(k) * scale;
                assert!(
                    (y - expected).norm() <= 1e-12 * (1.0 + expected.norm()),
                    "t={t} m={m} k={k}"
                );
            }
        }
    }
}

/// Orbits of random functions under S_t stay inside {g : g(0) = 0}.
#[test]
fn random_orbits_stay_in_hyperplane() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for &t in &[0.0, 0.5, 0.9] {
        for _ in 0..10 {
            let f = random_polynomial(&mut rng, 48);
            assert!(orbit_containment_st(t, &f, 16).unwrap());
        }
    }
}

/// The compact tail shrinks as the retained block grows, and matches the
/// diagonal closed form at t = 0.
#[test]
fn compact_tail_doubling() {
    let mut last = f64::INFINITY;
    for n_small in [16usize, 32, 64, 128] {
        let v = compact_tail(0.5, n_small, 512).unwrap();
        assert!(v < last);
        last = v;
    }
    let v = compact_tail(0.0, 30, 512).unwrap();
    assert!((v - 1.0 / 32.0).abs() <= 1e-9);
}
