//! The random vector norm ‖A‖_{X,d} = (E|⟨X, λ(A)⟩|^d)^{1/d} on Hermitian
//! matrices, by every available pathway:
//!
//! - `norm_partition_sum`: Σ_{π⊢d} y_π κ_π p_π(λ) from power traces
//! - `norm_bell`: complete Bell polynomial B_d(κ_1 tr A, …, κ_d tr A^d)
//! - `norm_mgf_coeff`: d!·[t^d] Π_i M(λ_i t) from the eigenvalues
//! - `norm_monte_carlo`: the stochastic oracle with delta-method error bars
//! - `norm_closed_form`: Normal, symmetric α-stable, Pareto, Gamma shortcuts
//!
//! No Γ(d+1) normalization divisor is applied anywhere; the CHS norm obtains
//! its h_d scaling through the Gamma(1, (d!)^{−1/d}) parameter choice instead.

use crate::distributions::{self, DistributionSpec};
use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, power_traces, HermitianMatrix};
use crate::montecarlo;
use crate::partitions::{enumerate_partitions, y_coeff};
use crate::symfun::{bell_complete, kummer_1f1, TruncatedSeries};
use serde::Serialize;
use statrs::function::gamma::ln_gamma;
use std::f64::consts::PI;

/// Which pathway produced a norm value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    PartitionSum,
    Bell,
    MgfCoeff,
    MonteCarlo,
    ClosedForm,
}

/// A computed norm value with its provenance and diagnostics.
#[derive(Clone, Debug, Serialize)]
pub struct NormResult {
    pub value: f64,
    pub d: f64,
    pub method: Method,
    /// Delta-method standard error of `value` (Monte Carlo only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
}

/// Tolerance below which a provably nonnegative d-th power may dip from
/// round-off before we call it a bug.
const NEG_INTERIOR_TOL: f64 = -1e-9;

/// Guarded d-th root of the interior quantity ‖A‖^d.
fn root_of_interior(interior: f64, d: f64, scale: f64) -> Result<f64> {
    let rel = interior / scale.max(1.0);
    if rel < NEG_INTERIOR_TOL {
        return Err(Error::NegativeInterior(interior));
    }
    Ok(interior.max(0.0).powf(1.0 / d))
}

fn check_even_degree(d: u32, max: u32) -> Result<()> {
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    if d < 2 || d > max {
        return Err(Error::OutOfRange { what: "d", value: d as f64, lo: 2.0, hi: max as f64 });
    }
    Ok(())
}

/// Natural scale of the interior quantity, used to make the NegativeInterior
/// guard relative: (E|X|²)^{d/2}·‖A‖_F^d.
fn interior_scale(spec: &DistributionSpec, a: &HermitianMatrix, d: u32) -> f64 {
    let m2 = distributions::moments(spec, 2)
        .map(|t| t.moments[2])
        .unwrap_or(1.0);
    (m2.sqrt() * a.matrix().frobenius_norm()).powi(d as i32)
}

/// ‖A‖^d as the partition sum Σ_{π⊢d} y_π κ_π p_π(λ), evaluated from power
/// traces — no eigendecomposition.
pub fn norm_partition_sum(
    a: &HermitianMatrix,
    spec: &DistributionSpec,
    d: u32,
) -> Result<NormResult> {
    check_even_degree(d, 32)?;
    let table = distributions::moments(spec, d as usize)?;
    let traces = power_traces(a, d as usize);
    let mut interior = 0.0;
    for pi in enumerate_partitions(d)? {
        let kappa_pi: f64 = pi.parts().iter().map(|&j| table.cumulants[j as usize]).product();
        let p_pi: f64 = pi.parts().iter().map(|&j| traces[j as usize - 1]).product();
        interior += y_coeff(&pi) as f64 * kappa_pi * p_pi;
    }
    let value = root_of_interior(interior, d as f64, interior_scale(spec, a, d))?;
    Ok(NormResult { value, d: d as f64, method: Method::PartitionSum, stderr: None })
}

/// ‖A‖^d = B_d(κ_1 tr A, κ_2 tr A², …, κ_d tr A^d).
pub fn norm_bell(a: &HermitianMatrix, spec: &DistributionSpec, d: u32) -> Result<NormResult> {
    check_even_degree(d, 32)?;
    let table = distributions::moments(spec, d as usize)?;
    let traces = power_traces(a, d as usize);
    let args: Vec<f64> = (1..=d as usize)
        .map(|j| table.cumulants[j] * traces[j - 1])
        .collect();
    let interior = bell_complete(d as usize, &args);
    let value = root_of_interior(interior, d as f64, interior_scale(spec, a, d))?;
    Ok(NormResult { value, d: d as f64, method: Method::Bell, stderr: None })
}

/// ‖A‖^d = d!·[t^d] Π_i M(λ_i t), via the eigendecomposition.
pub fn norm_mgf_coeff(
    a: &HermitianMatrix,
    spec: &DistributionSpec,
    d: u32,
) -> Result<NormResult> {
    check_even_degree(d, 32)?;
    let mgf = distributions::mgf_series(spec, d as usize)?;
    let spectrum = eig_hermitian(a)?;
    let mut prod = TruncatedSeries::one(d as usize);
    for &lam in &spectrum.eigenvalues {
        let factor = TruncatedSeries::new(
            (0..=d as usize).map(|k| mgf.coeff(k) * lam.powi(k as i32)).collect(),
        );
        prod = prod.mul(&factor);
    }
    let d_fact: f64 = (1..=d as u64).map(|k| k as f64).product();
    let interior = d_fact * prod.coeff(d as usize);
    let value = root_of_interior(interior, d as f64, interior_scale(spec, a, d))?;
    Ok(NormResult { value, d: d as f64, method: Method::MgfCoeff, stderr: None })
}

/// Monte Carlo pathway, valid for any real d ≥ 1 with E|X|^d < ∞. The stderr
/// of the norm itself comes from the delta method through the 1/d-th root.
pub fn norm_monte_carlo(
    a: &HermitianMatrix,
    spec: &DistributionSpec,
    d: f64,
    samples: usize,
    seed: u64,
) -> Result<NormResult> {
    let spectrum = eig_hermitian(a)?;
    let est = montecarlo::estimate(spec, &spectrum.eigenvalues, d, samples, seed)?;
    let value = est.mean.max(0.0).powf(1.0 / d);
    let stderr = if est.mean > 0.0 {
        est.stderr * value / (d * est.mean)
    } else {
        est.stderr
    };
    Ok(NormResult { value, d, method: Method::MonteCarlo, stderr: Some(stderr) })
}

/// Closed forms: Normal (any real d ≥ 1), symmetric α-stable (1 ≤ d < α),
/// Pareto (even d < α), Gamma/Exponential (even d). Returns `None` when the
/// family/degree combination has no closed form.
pub fn norm_closed_form(
    a: &HermitianMatrix,
    spec: &DistributionSpec,
    d: f64,
) -> Result<Option<NormResult>> {
    spec.validate()?;
    assert!(d >= 1.0);
    let done = |value: f64| {
        Ok(Some(NormResult { value, d, method: Method::ClosedForm, stderr: None }))
    };
    let is_even_int = d.fract() == 0.0 && (d as u64) % 2 == 0;
    match spec {
        DistributionSpec::Normal { mu, sigma2 } => {
            // √2σ‖A‖_F · (Γ((d+1)/2)/√π · ₁F₁(−d/2; ½; −μ²(trA)²/(2σ²‖A‖_F²)))^{1/d}
            let fro = a.matrix().frobenius_norm();
            if fro == 0.0 {
                return done(0.0);
            }
            let sigma = sigma2.sqrt();
            let tr = a.trace_re();
            let z = -mu * mu * tr * tr / (2.0 * sigma2 * fro * fro);
            let inner = ln_gamma((d + 1.0) / 2.0).exp() / PI.sqrt() * kummer_1f1(-d / 2.0, 0.5, z)?;
            done(2f64.sqrt() * sigma * fro * inner.powf(1.0 / d))
        }
        DistributionSpec::SymmetricAlphaStable { alpha, gamma } => {
            if d >= *alpha {
                return Err(Error::MomentDoesNotExist(d));
            }
            let spectrum = eig_hermitian(a)?;
            let s_alpha: f64 = spectrum
                .eigenvalues
                .iter()
                .map(|l| l.abs().powf(*alpha))
                .sum::<f64>()
                .powf(1.0 / alpha);
            let c = distributions::stable_abs_moment_std(*alpha, d);
            done(gamma * c.powf(1.0 / d) * s_alpha)
        }
        DistributionSpec::Pareto { alpha, xm } => {
            if !is_even_int {
                return Ok(None);
            }
            if d >= *alpha {
                return Err(Error::MomentDoesNotExist(d));
            }
            let du = d as u32;
            let spectrum = eig_hermitian(a)?;
            let lam = &spectrum.eigenvalues;
            // Multinomial sum over compositions (k_1, …, k_n) of d:
            // Σ C(d; k) Π_i α x_m^{k_i} λ_i^{k_i} / (α − k_i); the k_i = 0
            // factor is α/α = 1.
            fn walk(
                lam: &[f64],
                idx: usize,
                left: u32,
                coeff: f64,
                alpha: f64,
                xm: f64,
                acc: &mut f64,
            ) {
                if idx == lam.len() {
                    if left == 0 {
                        *acc += coeff;
                    }
                    return;
                }
                if idx == lam.len() - 1 {
                    // Last coordinate takes everything that is left.
                    let k = left;
                    let f = if k == 0 {
                        1.0
                    } else {
                        alpha * (xm * lam[idx]).powi(k as i32) / (alpha - k as f64)
                    };
                    *acc += coeff * f;
                    return;
                }
                let mut mult = 1.0; // running C(left choose k) style factor
                let mut f;
                for k in 0..=left {
                    f = if k == 0 {
                        1.0
                    } else {
                        alpha * (xm * lam[idx]).powi(k as i32) / (alpha - k as f64)
                    };
                    walk(lam, idx + 1, left - k, coeff * mult * f, alpha, xm, acc);
                    // binomial factor for distributing the remaining degree:
                    // multinomial(d; k_1..k_n) built incrementally as
                    // Π C(remaining, k_i).
                    mult *= (left - k) as f64 / (k + 1) as f64;
                }
            }
            let mut interior = 0.0;
            walk(lam, 0, du, 1.0, *alpha, *xm, &mut interior);
            let value = root_of_interior(interior, d, interior_scale(spec, a, du))?;
            done(value)
        }
        DistributionSpec::Gamma { alpha, beta } => {
            if !is_even_int || d > 32.0 {
                return Ok(None);
            }
            let du = d as usize;
            // ‖A‖^d = d!·[t^d] Π_i (1 − βλ_i t)^{−α}.
            let spectrum = eig_hermitian(a)?;
            let mut prod = TruncatedSeries::one(du);
            for &lam in &spectrum.eigenvalues {
                let mut f = TruncatedSeries::one(du);
                f.set_coeff(1, -beta * lam);
                prod = prod.mul(&f.powf(-alpha)?);
            }
            let d_fact: f64 = (1..=du as u64).map(|k| k as f64).product();
            let interior = d_fact * prod.coeff(du);
            let value = root_of_interior(interior, d, interior_scale(spec, a, du as u32))?;
            done(value)
        }
        DistributionSpec::Exponential => {
            norm_closed_form(a, &DistributionSpec::Gamma { alpha: 1.0, beta: 1.0 }, d)
        }
        _ => Ok(None),
    }
}

/// Dispatch: closed form when supported, else Bell for even integer d, else
/// Monte Carlo with the given budget.
pub fn norm_auto(
    a: &HermitianMatrix,
    spec: &DistributionSpec,
    d: f64,
    samples: usize,
    seed: u64,
) -> Result<NormResult> {
    if let Some(r) = norm_closed_form(a, spec, d)? {
        return Ok(r);
    }
    if d.fract() == 0.0 && (d as u64) % 2 == 0 {
        return norm_bell(a, spec, d as u32);
    }
    norm_monte_carlo(a, spec, d, samples, seed)
}
