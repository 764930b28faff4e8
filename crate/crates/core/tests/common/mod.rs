#![allow(dead_code)]

use logstrain::Tensor3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn assert_close(label: &str, got: &Tensor3, want: &Tensor3, tol: f64) {
    let diff = (*got - *want).frobenius_norm();
    assert!(
        diff <= tol,
        "{label}: difference {diff:.3e} exceeds {tol:.3e}\ngot  {got}\nwant {want}"
    );
}

pub fn assert_scalar(label: &str, got: f64, want: f64, tol: f64) {
    let diff = (got - want).abs();
    assert!(diff <= tol, "{label}: {got} vs {want} (diff {diff:.3e})");
}

/// Matrix exponential by scaling-and-squaring on a plain Taylor sum.
/// Test-only oracle, deliberately independent of the spectral machinery.
pub fn matrix_exp_series(a: &Tensor3) -> Tensor3 {
    let norm = a.frobenius_norm();
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.scale(0.5f64.powi(squarings));

    let mut term = Tensor3::identity();
    let mut sum = Tensor3::identity();
    for n in 1..40 {
        term = (term * scaled).scale(1.0 / n as f64);
        sum = sum + term;
        if term.frobenius_norm() <= 1e-18 * sum.frobenius_norm().max(1.0) {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}
