//! Complexified norm ⦀Z⦀_{X,d} on all of M_n, two ways:
//!
//! - trace polynomial: ⦀Z⦀^d = Σ_{π⊢d} y_π κ_π T_π(Z), where T_π averages the
//!   C(d, d/2) placements of d/2 adjoints among the d letters of Π_j tr(·);
//! - quadrature of the defining integral
//!   ⦀Z⦀^d = (2π·C(d,d/2))^{−1} ∮ ‖e^{it}Z + e^{−it}Z*‖_{X,d}^d dt
//!   by the trapezoid rule (spectrally accurate for periodic integrands).
//!
//! Both restrict to ‖·‖_{X,d} on Hermitian matrices.

use crate::distributions::{self, DistributionSpec};
use crate::error::{Error, Result};
use crate::hnorm::{self, Method, NormResult};
use crate::linalg::{trace_word, ComplexMatrix, HermitianMatrix, Letter, Word};
use crate::partitions::{enumerate_partitions, star_placements, y_coeff, Partition};
use crate::rng::SplitMix64;
use num_complex::Complex64;
use statrs::function::gamma::ln_gamma;
use std::collections::HashMap;
use std::f64::consts::PI;

/// T_π(Z) with its (diagnostic) imaginary part.
#[derive(Clone, Debug)]
pub struct TraceMonomialValue {
    pub pi: Partition,
    pub value: Complex64,
}

/// Central binomial C(d, d/2) continued to real d via Γ(d+1)/Γ(d/2+1)².
pub fn central_binomial(d: f64) -> f64 {
    (ln_gamma(d + 1.0) - 2.0 * ln_gamma(d / 2.0 + 1.0)).exp()
}

/// Default quadrature node count: the integrand is a trigonometric polynomial
/// of degree ≤ d·n in the deterministic case; 4d+16 nodes are exact with room.
pub fn default_nodes(d: f64) -> usize {
    (4.0 * d).ceil() as usize + 16
}

/// T_π(Z): arithmetic mean over all star placements of Π_j tr(w_j(Z)).
/// Word traces are memoized since placements share most words.
pub fn t_pi(z: &ComplexMatrix, pi: &Partition) -> Result<TraceMonomialValue> {
    let placements = star_placements(pi)?;
    let mut cache: HashMap<Vec<Letter>, Complex64> = HashMap::new();
    let mut sum = Complex64::new(0.0, 0.0);
    for tuple in &placements {
        let mut prod = Complex64::new(1.0, 0.0);
        for w in tuple {
            let t = *cache
                .entry(w.letters.clone())
                .or_insert_with(|| trace_word(z, &Word::new(w.letters.clone())));
            prod *= t;
        }
        sum += prod;
    }
    Ok(TraceMonomialValue { pi: pi.clone(), value: sum / placements.len() as f64 })
}

/// ⦀Z⦀_{X,d} = (Σ_{π⊢d} y_π κ_π Re T_π(Z))^{1/d}, even d ≤ 12.
pub fn cnorm_trace_poly(
    z: &ComplexMatrix,
    spec: &DistributionSpec,
    d: u32,
) -> Result<NormResult> {
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    if d > 12 {
        return Err(Error::DegreeTooLarge(d, 12));
    }
    let table = distributions::moments(spec, d as usize)?;
    let mut interior = 0.0;
    for pi in enumerate_partitions(d)? {
        let kappa_pi: f64 = pi.parts().iter().map(|&j| table.cumulants[j as usize]).product();
        let t = t_pi(z, &pi)?;
        interior += y_coeff(&pi) as f64 * kappa_pi * t.value.re;
    }
    let scale = {
        let m2 = table.moments[2];
        (m2.sqrt() * z.frobenius_norm()).powi(d as i32).max(1.0)
    };
    if interior / scale < -1e-9 {
        return Err(Error::NegativeInterior(interior));
    }
    Ok(NormResult {
        value: interior.max(0.0).powf(1.0 / d as f64),
        d: d as f64,
        method: Method::PartitionSum,
        stderr: None,
    })
}

/// The Hermitian section e^{it}Z + e^{−it}Z* at angle t.
pub fn hermitian_section(z: &ComplexMatrix, t: f64) -> HermitianMatrix {
    let phase = Complex64::from_polar(1.0, t);
    let b = z.scale(phase).add(&z.adjoint().scale(phase.conj()));
    HermitianMatrix::new(b).expect("e^{it}Z + e^{-it}Z* is Hermitian by construction")
}

/// ⦀Z⦀_{X,d} by the trapezoid rule on a uniform angular grid. For even
/// integer d each node is evaluated deterministically (Bell pathway or closed
/// form); otherwise each node runs Monte Carlo with a seed derived from the
/// node index, and the node errors are propagated.
pub fn cnorm_quadrature(
    z: &ComplexMatrix,
    spec: &DistributionSpec,
    d: f64,
    nodes: usize,
    samples: usize,
    seed: u64,
) -> Result<NormResult> {
    assert!(d >= 1.0 && nodes >= 2);
    let m = nodes;
    let deterministic = d.fract() == 0.0 && (d as u64) % 2 == 0;
    let mut mean_pow = 0.0;
    let mut var_pow = 0.0;
    let mut stochastic = false;
    for k in 0..m {
        let t = 2.0 * PI * k as f64 / m as f64;
        let section = hermitian_section(z, t);
        let r = if deterministic {
            hnorm::norm_auto(&section, spec, d, samples, seed)?
        } else {
            let node_seed = SplitMix64::for_index(seed, k as u64).next_u64();
            hnorm::norm_auto(&section, spec, d, samples, node_seed)?
        };
        let pow = r.value.powf(d);
        mean_pow += pow / m as f64;
        if let Some(se) = r.stderr {
            stochastic = true;
            // stderr of value^d by the delta method: d·value^{d−1}·se.
            let se_pow = d * r.value.powf(d - 1.0) * se;
            var_pow += (se_pow / m as f64).powi(2);
        }
    }
    let interior = mean_pow / central_binomial(d);
    let value = interior.max(0.0).powf(1.0 / d);
    let stderr = if stochastic {
        let se_interior = var_pow.sqrt() / central_binomial(d);
        if interior > 0.0 {
            Some(se_interior * value / (d * interior))
        } else {
            Some(se_interior)
        }
    } else {
        None
    };
    let method = if stochastic { Method::MonteCarlo } else { Method::ClosedForm };
    Ok(NormResult { value, d, method, stderr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::DistributionSpec::*;
    use crate::linalg::{random_complex, random_hermitian};
    use approx::assert_relative_eq;

    fn nilpotent() -> ComplexMatrix {
        ComplexMatrix::new(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn t_pi_pair_of_singletons_is_abs_trace_squared() {
        let mut rng = SplitMix64::new(3);
        let z = random_complex(3, &mut rng);
        let t = t_pi(&z, &Partition::new(vec![1, 1])).unwrap();
        let tr = z.trace();
        assert_relative_eq!(t.value.re, tr.norm_sqr(), max_relative = 1e-12);
        assert!(t.value.im.abs() < 1e-12 * (1.0 + tr.norm_sqr()));
    }

    #[test]
    fn t_pi_two_on_nilpotent() {
        let t = t_pi(&nilpotent(), &Partition::new(vec![2])).unwrap();
        assert_relative_eq!(t.value.re, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn t_pi_three_one_expansion() {
        // 6·T_{(3,1)} = 3 tr(Z*²Z) tr(Z) + 3 tr(Z²Z*) tr(Z*).
        let mut rng = SplitMix64::new(5);
        let z = random_complex(3, &mut rng);
        let t = t_pi(&z, &Partition::new(vec![3, 1])).unwrap();
        let w1 = trace_word(&z, &Word::new(vec![Letter::ZStar, Letter::ZStar, Letter::Z]));
        let w2 = trace_word(&z, &Word::new(vec![Letter::Z, Letter::Z, Letter::ZStar]));
        let expect = (w1 * z.trace() * 3.0 + w2 * z.trace().conj() * 3.0) / 6.0;
        assert!((t.value - expect).norm() <= 1e-10 * (1.0 + expect.norm()));
    }

    #[test]
    fn t_pi_real_on_hermitian_and_matches_power_traces() {
        let mut rng = SplitMix64::new(7);
        let a = random_hermitian(3, &mut rng);
        let traces = crate::linalg::power_traces(&a, 6);
        for parts in [vec![2u32], vec![1, 1], vec![3, 1], vec![2, 2], vec![4, 2]] {
            let pi = Partition::new(parts);
            let t = t_pi(a.matrix(), &pi).unwrap();
            let p_pi: f64 = pi.parts().iter().map(|&j| traces[j as usize - 1]).product();
            assert!(
                (t.value.re - p_pi).abs() <= 1e-9 * (1.0 + p_pi.abs()),
                "π = {:?}: {} vs {}",
                pi.parts(),
                t.value.re,
                p_pi
            );
            assert!(t.value.im.abs() <= 1e-9 * (1.0 + p_pi.abs()));
        }
    }

    #[test]
    fn cnorm_d2_is_moment_formula() {
        // ⦀Z⦀² = σ²‖Z‖_F² + μ²|tr Z|².
        let mut rng = SplitMix64::new(11);
        let z = random_complex(3, &mut rng);
        let (mu, sigma2) = (0.7, 1.3);
        let r = cnorm_trace_poly(&z, &Normal { mu, sigma2 }, 2).unwrap();
        let expect = sigma2 * z.frobenius_norm().powi(2) + mu * mu * z.trace().norm_sqr();
        assert_relative_eq!(r.value * r.value, expect, max_relative = 1e-10);
    }

    #[test]
    fn cnorm_normal_d4_has_no_higher_cumulants() {
        // For Normal the d = 4 trace polynomial uses only κ₁, κ₂; verify by
        // zeroing higher cumulants of a non-normal family with matching κ₁, κ₂.
        let mut rng = SplitMix64::new(13);
        let z = random_complex(2, &mut rng);
        let spec = Normal { mu: 0.5, sigma2: 2.0 };
        let table = distributions::moments(&spec, 4).unwrap();
        let mut interior = 0.0;
        for pi in enumerate_partitions(4).unwrap() {
            if pi.parts().iter().any(|&p| p > 2) {
                continue; // κ₃ = κ₄ = 0 kill these terms
            }
            let kappa: f64 = pi.parts().iter().map(|&j| table.cumulants[j as usize]).product();
            interior += y_coeff(&pi) as f64 * kappa * t_pi(&z, &pi).unwrap().value.re;
        }
        let r = cnorm_trace_poly(&z, &spec, 4).unwrap();
        assert_relative_eq!(r.value.powi(4), interior, max_relative = 1e-10);
    }

    #[test]
    fn restriction_to_hermitian() {
        let mut rng = SplitMix64::new(17);
        for d in [2u32, 4, 6, 8] {
            let a = random_hermitian(3, &mut rng);
            for spec in [Exponential, Rademacher, Poisson { alpha: 1.1 }] {
                let c = cnorm_trace_poly(a.matrix(), &spec, d).unwrap().value;
                let h = hnorm::norm_bell(&a, &spec, d).unwrap().value;
                assert_relative_eq!(c, h, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn quadrature_matches_trace_poly() {
        let mut rng = SplitMix64::new(19);
        for d in [2u32, 4, 6] {
            let z = random_complex(3, &mut rng);
            let spec = Gamma { alpha: 0.9, beta: 0.8 };
            let tp = cnorm_trace_poly(&z, &spec, d).unwrap().value;
            let q = cnorm_quadrature(&z, &spec, d as f64, default_nodes(d as f64), 0, 0)
                .unwrap()
                .value;
            assert_relative_eq!(tp, q, max_relative = 1e-8);
        }
    }

    #[test]
    fn quadrature_restriction_for_hermitian() {
        // The |2cos t|^d factor integrates to 2π·C(d, d/2), so Hermitian input
        // reproduces the hnorm value even for non-even d (Monte Carlo nodes).
        let mut rng = SplitMix64::new(23);
        let a = random_hermitian(2, &mut rng);
        let spec = Exponential;
        for d in [2.0, 4.0] {
            let q = cnorm_quadrature(a.matrix(), &spec, d, default_nodes(d), 0, 0)
                .unwrap()
                .value;
            let h = hnorm::norm_bell(&a, &spec, d as u32).unwrap().value;
            assert_relative_eq!(q, h, max_relative = 1e-8);
        }
        // Non-even d: stochastic nodes; compare against direct Monte Carlo.
        let d = 3.0;
        let q = cnorm_quadrature(a.matrix(), &spec, d, 24, 200_000, 31).unwrap();
        let h = hnorm::norm_monte_carlo(&a, &spec, d, 400_000, 33).unwrap();
        let se = q.stderr.unwrap().hypot(h.stderr.unwrap());
        assert!((q.value - h.value).abs() <= 5.0 * se, "{q:?} vs {h:?}");
    }

    #[test]
    fn nilpotent_chs_value() {
        // CHS spec (Gamma(1, (d!)^{−1/d})): ⦀Z⦀_d^d = C(d, d/2)^{−1}; d = 2 → 1/2.
        let z = nilpotent();
        let d = 2u32;
        let spec = Gamma { alpha: 1.0, beta: (2.0f64).powf(-0.5) };
        let r = cnorm_trace_poly(&z, &spec, d).unwrap();
        assert_relative_eq!(r.value * r.value, 0.5, max_relative = 1e-10);
        let q = cnorm_quadrature(&z, &spec, 2.0, default_nodes(2.0), 0, 0).unwrap();
        assert_relative_eq!(q.value, 0.5f64.sqrt(), max_relative = 1e-8);
    }

    #[test]
    fn word_count_across_partitions() {
        // Σ_{π⊢d} C(d, d/2) placements each — sanity on the enumeration size.
        for d in [2u32, 4, 6] {
            let parts = enumerate_partitions(d).unwrap();
            let total: usize = parts
                .iter()
                .map(|pi| star_placements(pi).unwrap().len())
                .sum();
            let expect =
                parts.len() as u128 * crate::partitions::binomial_u128(d, d / 2);
            assert_eq!(total as u128, expect);
        }
    }

    #[test]
    fn central_binomial_real_extension() {
        assert_relative_eq!(central_binomial(2.0), 2.0, max_relative = 1e-12);
        assert_relative_eq!(central_binomial(4.0), 6.0, max_relative = 1e-12);
        assert_relative_eq!(central_binomial(6.0), 20.0, max_relative = 1e-12);
        assert_relative_eq!(central_binomial(8.0), 70.0, max_relative = 1e-12);
    }
}
