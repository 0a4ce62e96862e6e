//! Seeded Monte Carlo estimator of E|⟨X, λ⟩|^d — the stochastic oracle every
//! deterministic pathway is validated against.

use crate::distributions::{draw, DistributionSpec};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Estimate of E|⟨X, λ⟩|^d with its standard error.
#[derive(Clone, Debug)]
pub struct McEstimate {
    /// Sample mean of |⟨X, λ⟩|^d.
    pub mean: f64,
    /// Sample standard deviation / √N.
    pub stderr: f64,
    pub n: usize,
    pub seed: u64,
}

/// Sample mean over N i.i.d. vectors X ∈ ℝ^len(λ). Sample j draws its
/// coordinates from the stream derived from (seed, j), so the estimate is a
/// deterministic function of (seed, N) no matter how work is scheduled.
pub fn estimate(
    spec: &DistributionSpec,
    lambda: &[f64],
    d: f64,
    n: usize,
    seed: u64,
) -> Result<McEstimate> {
    spec.validate()?;
    assert!(n >= 1_000, "Monte Carlo needs at least 10^3 samples");
    assert!(d >= 1.0);
    if !spec.moment_exists(d) {
        return Err(Error::MomentDoesNotExist(d));
    }
    let mut sum = 0.0;
    let mut sumsq = 0.0;
    for j in 0..n {
        let mut rng = SplitMix64::for_index(seed, j as u64);
        let mut dot = 0.0;
        for &lam in lambda {
            dot += lam * draw(spec, &mut rng);
        }
        let t = dot.abs().powf(d);
        sum += t;
        sumsq += t * t;
    }
    let nf = n as f64;
    let mean = sum / nf;
    let var = ((sumsq - nf * mean * mean) / (nf - 1.0)).max(0.0);
    Ok(McEstimate { mean, stderr: (var / nf).sqrt(), n, seed })
}
