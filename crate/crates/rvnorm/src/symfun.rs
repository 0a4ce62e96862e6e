//! Symmetric functions and formal series: truncated power-series algebra,
//! power sums, complete homogeneous symmetric (CHS) polynomials, monomial
//! symmetric polynomials, complete Bell polynomials, and Kummer's ₁F₁.

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Real formal power series truncated at order D: coefficients c_0 … c_D.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<f64>,
}

impl TruncatedSeries {
    /// Series from coefficients c_0…c_D (length = D+1).
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![0.0; order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1.0;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, v: f64) {
        self.coeffs[k] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let d = self.order();
        let mut out = vec![0.0; d + 1];
        for i in 0..=d {
            if self.coeffs[i] == 0.0 {
                continue;
            }
            for j in 0..=(d - i) {
                out[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires c_0 ≠ 0.
    pub fn recip(&self) -> Result<Self> {
        if self.coeffs[0] == 0.0 {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let d = self.order();
        let mut b = vec![0.0; d + 1];
        b[0] = 1.0 / self.coeffs[0];
        for k in 1..=d {
            let mut s = 0.0;
            for j in 1..=k {
                s += self.coeffs[j] * b[k - j];
            }
            b[k] = -s / self.coeffs[0];
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// exp of the series by the differential recurrence b′ = a′·b.
    pub fn exp(&self) -> Self {
        let d = self.order();
        let mut b = vec![0.0; d + 1];
        b[0] = self.coeffs[0].exp();
        for k in 1..=d {
            let mut s = 0.0;
            for j in 1..=k {
                s += j as f64 * self.coeffs[j] * b[k - j];
            }
            b[k] = s / k as f64;
        }
        TruncatedSeries { coeffs: b }
    }

    /// log of the series; requires c_0 > 0 for the real branch.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] <= 0.0 {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let d = self.order();
        let mut c = vec![0.0; d + 1];
        c[0] = self.coeffs[0].ln();
        for k in 1..=d {
            let mut s = 0.0;
            for j in 1..k {
                s += j as f64 * c[j] * self.coeffs[k - j];
            }
            c[k] = (k as f64 * self.coeffs[k] - s) / (k as f64 * self.coeffs[0]);
        }
        Ok(TruncatedSeries { coeffs: c })
    }

    /// a^α for real α via exp(α·log a); requires a_0 = 1.
    pub fn powf(&self, alpha: f64) -> Result<Self> {
        if (self.coeffs[0] - 1.0).abs() > 1e-12 {
            return Err(Error::BadParameter(format!(
                "pow requires constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let mut l = self.log()?;
        for c in &mut l.coeffs {
            *c *= alpha;
        }
        Ok(l.exp())
    }
}

/// Power-sum symmetric polynomial p_k(x) = Σ x_i^k.
pub fn power_sum(k: u32, x: &[f64]) -> f64 {
    assert!(k >= 1);
    x.iter().map(|&v| v.powi(k as i32)).sum()
}

/// h_0, h_1, …, h_d from the power sums p_1…p_d by Newton–Girard:
/// k·h_k = Σ_{i=1}^{k} h_{k−i} p_i.
pub fn chs_from_power_sums(d: usize, p: &[f64]) -> Vec<f64> {
    assert!(p.len() >= d);
    let mut h = vec![0.0; d + 1];
    h[0] = 1.0;
    for k in 1..=d {
        let mut s = 0.0;
        for i in 1..=k {
            s += h[k - i] * p[i - 1];
        }
        h[k] = s / k as f64;
    }
    h
}

/// Complete homogeneous symmetric polynomial h_d(x).
pub fn chs(d: usize, x: &[f64]) -> f64 {
    if d == 0 {
        return 1.0;
    }
    let p: Vec<f64> = (1..=d as u32).map(|k| power_sum(k, x)).collect();
    chs_from_power_sums(d, &p)[d]
}

/// Monomial symmetric polynomial m_π(x): sum of x^α over distinct
/// rearrangements α of π padded with zeros. Exponential in size; retained as
/// a small-case oracle (|π| ≤ len(x), modest d).
pub fn monomial_sym(pi: &Partition, x: &[f64]) -> f64 {
    assert!(pi.len() <= x.len(), "partition has more parts than variables");
    // Multiset of exponents: the parts of π plus zeros up to n.
    let mut exponents: Vec<u32> = pi.parts().to_vec();
    exponents.resize(x.len(), 0);
    let mut distinct: Vec<(u32, usize)> = Vec::new();
    for &e in &exponents {
        match distinct.iter_mut().find(|(v, _)| *v == e) {
            Some((_, c)) => *c += 1,
            None => distinct.push((e, 1)),
        }
    }
    fn rec(x: &[f64], pos: usize, counts: &mut Vec<(u32, usize)>, acc: f64) -> f64 {
        if pos == x.len() {
            return acc;
        }
        let mut total = 0.0;
        for idx in 0..counts.len() {
            if counts[idx].1 == 0 {
                continue;
            }
            let e = counts[idx].0;
            counts[idx].1 -= 1;
            total += rec(x, pos + 1, counts, acc * x[pos].powi(e as i32));
            counts[idx].1 += 1;
        }
        total
    }
    rec(x, 0, &mut distinct, 1.0)
}

/// Complete Bell polynomial B_ℓ(x_1,…,x_ℓ) = ℓ!·[t^ℓ] exp(Σ_j x_j t^j / j!).
pub fn bell_complete(ell: usize, x: &[f64]) -> f64 {
    if ell == 0 {
        return 1.0;
    }
    assert!(x.len() >= ell);
    let mut arg = TruncatedSeries::zero(ell);
    let mut fact = 1.0;
    for j in 1..=ell {
        fact *= j as f64;
        arg.set_coeff(j, x[j - 1] / fact);
    }
    let e = arg.exp();
    let mut ell_fact = 1.0;
    for j in 2..=ell {
        ell_fact *= j as f64;
    }
    ell_fact * e.coeff(ell)
}

/// Kummer confluent hypergeometric ₁F₁(a; b; z) by direct series summation
/// with term-ratio stopping at 1e-14 relative. Terminates exactly when a is a
/// nonpositive integer.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    if b <= 0.0 && (b - b.round()).abs() < 1e-12 {
        return Err(Error::BadParameter(format!("1F1 pole: b = {b}")));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..10_000u32 {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term.abs() <= 1e-14 * sum.abs().max(1e-300) {
            return Ok(sum);
        }
    }
    Err(Error::BadParameter(format!("1F1({a};{b};{z}) did not converge")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use crate::partitions::z_coeff;
    use crate::rng::SplitMix64;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn power_sum_examples() {
        assert_relative_eq!(power_sum(2, &[1.0, 2.0, 3.0]), 14.0);
        assert_relative_eq!(power_sum(1, &[0.5, -0.5, 2.0]), 2.0);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        // p_3(φ, 1−φ) = Lucas L₃ = 4.
        assert_relative_eq!(power_sum(3, &[phi, 1.0 - phi]), 4.0, epsilon = 1e-12);
    }

    #[test]
    fn chs_examples() {
        assert_relative_eq!(chs(2, &[1.0, 1.0]), 3.0, epsilon = 1e-12);
        // h_d(1,…,1) = C(n+d−1, d)
        assert_relative_eq!(chs(4, &[1.0; 3]), 15.0, epsilon = 1e-10);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        // h_4(φ, 1−φ) = Fibonacci f₄ = 5 (f₀ = f₁ = 1 convention).
        assert_relative_eq!(chs(4, &[phi, 1.0 - phi]), 5.0, epsilon = 1e-10);
        assert_relative_eq!(chs(0, &[2.0, 3.0]), 1.0);
    }

    #[test]
    fn series_recip_fibonacci() {
        // 1/(1 − t − t²) = Σ f_n t^n
        let mut a = TruncatedSeries::one(8);
        a.set_coeff(1, -1.0);
        a.set_coeff(2, -1.0);
        let f = a.recip().unwrap();
        let expect = [1.0, 1.0, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0, 34.0];
        for (k, &e) in expect.iter().enumerate() {
            assert_relative_eq!(f.coeff(k), e, epsilon = 1e-12);
        }
    }

    #[test]
    fn series_pow_binomial() {
        // (1/(1−t))³ has coefficients C(k+2, 2).
        let mut a = TruncatedSeries::one(6);
        a.set_coeff(1, -1.0);
        let g = a.recip().unwrap().powf(3.0).unwrap();
        for k in 0..=6usize {
            let expect = ((k + 2) * (k + 1) / 2) as f64;
            assert_relative_eq!(g.coeff(k), expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn series_recip_requires_nonzero_constant() {
        let s = TruncatedSeries::zero(3);
        assert!(matches!(s.recip(), Err(Error::DivisionByZeroConstantTerm)));
    }

    #[test]
    fn monomial_sym_examples() {
        let m11 = Partition::new(vec![1, 1]);
        assert_relative_eq!(monomial_sym(&m11, &[3.0, 4.0]), 12.0);
        let m2 = Partition::new(vec![2]);
        assert_relative_eq!(monomial_sym(&m2, &[1.0, 2.0, 3.0]), 14.0);
        let m21 = Partition::new(vec![2, 1]);
        assert_relative_eq!(monomial_sym(&m21, &[1.0, 2.0]), 6.0);
    }

    #[test]
    fn bell_complete_examples() {
        // B_4 = x1⁴ + 6x1²x2 + 4x1x3 + 3x2² + x4
        let x = [2.0, -1.0, 0.5, 3.0];
        let expect = 16.0 + 6.0 * 4.0 * (-1.0) + 4.0 * 2.0 * 0.5 + 3.0 * 1.0 + 3.0;
        assert_relative_eq!(bell_complete(4, &x), expect, epsilon = 1e-10);
        assert_relative_eq!(bell_complete(0, &[]), 1.0);
        assert_relative_eq!(bell_complete(1, &[7.0]), 7.0);
        // B_3(1,1,1) = Bell number 5.
        assert_relative_eq!(bell_complete(3, &[1.0; 3]), 5.0, epsilon = 1e-12);
    }

    #[test]
    fn kummer_examples() {
        assert_relative_eq!(kummer_1f1(-2.0, 0.5, 0.0).unwrap(), 1.0);
        assert_relative_eq!(kummer_1f1(1.5, 1.5, 0.7).unwrap(), 0.7f64.exp(), epsilon = 1e-12);
        assert_relative_eq!(
            kummer_1f1(-1.0, 2.5, 1.3).unwrap(),
            1.0 - 1.3 / 2.5,
            epsilon = 1e-12
        );
        assert!(kummer_1f1(1.0, -2.0, 0.1).is_err());
    }

    #[test]
    fn newton_girard_matches_generating_function() {
        // h_d(x) = [t^d] Π 1/(1 − x_i t)
        let mut rng = SplitMix64::new(3);
        for _ in 0..20 {
            let n = 2 + (rng.next_u64() % 5) as usize;
            let x: Vec<f64> = (0..n).map(|_| rng.next_normal()).collect();
            let d = 10;
            let mut prod = TruncatedSeries::one(d);
            for &xi in &x {
                let mut f = TruncatedSeries::one(d);
                f.set_coeff(1, -xi);
                prod = prod.mul(&f.recip().unwrap());
            }
            for k in 1..=d {
                let direct = chs(k, &x);
                assert!(
                    (direct - prod.coeff(k)).abs() <= 1e-10 * (1.0 + direct.abs()),
                    "k={k}"
                );
            }
        }
    }

    #[test]
    fn partition_sum_identity() {
        // h_d(x) = Σ_{π⊢d} p_π(x)/z_π
        let mut rng = SplitMix64::new(5);
        for d in 1..=8u32 {
            let x: Vec<f64> = (0..4).map(|_| rng.next_normal()).collect();
            let sum: f64 = enumerate_partitions(d)
                .unwrap()
                .iter()
                .map(|pi| {
                    let p_pi: f64 = pi.parts().iter().map(|&k| power_sum(k, &x)).product();
                    p_pi / z_coeff(pi) as f64
                })
                .sum();
            let direct = chs(d as usize, &x);
            assert!((sum - direct).abs() <= 1e-10 * (1.0 + direct.abs()), "d={d}");
        }
    }

    #[test]
    fn hunter_positivity_on_unit_sphere() {
        // h_d(x) ≥ 1/(2^{d/2} (d/2)!) for ‖x‖ = 1, even d.
        let mut rng = SplitMix64::new(9);
        for _ in 0..10_000 {
            let n = 2 + (rng.next_u64() % 4) as usize;
            let mut x: Vec<f64> = (0..n).map(|_| rng.next_normal()).collect();
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm < 1e-12 {
                continue;
            }
            x.iter_mut().for_each(|v| *v /= norm);
            for d in [2usize, 4, 6, 8] {
                let half = d / 2;
                let bound = 1.0
                    / (2f64.powi(half as i32) * (1..=half).product::<usize>() as f64);
                assert!(chs(d, &x) >= bound - 1e-12, "d={d} x={x:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn exp_log_are_inverse(coeffs in proptest::collection::vec(-0.5f64..0.5, 6)) {
            let mut a = TruncatedSeries::one(6);
            for (k, &c) in coeffs.iter().enumerate() {
                a.set_coeff(k + 1, c);
            }
            let back = a.log().unwrap().exp();
            for k in 0..=6 {
                prop_assert!((back.coeff(k) - a.coeff(k)).abs() < 1e-12);
            }
        }

        #[test]
        fn mul_recip_is_one(coeffs in proptest::collection::vec(-0.9f64..0.9, 6)) {
            let mut a = TruncatedSeries::one(6);
            for (k, &c) in coeffs.iter().enumerate() {
                a.set_coeff(k + 1, c);
            }
            let prod = a.mul(&a.recip().unwrap());
            prop_assert!((prod.coeff(0) - 1.0).abs() < 1e-12);
            for k in 1..=6 {
                prop_assert!(prod.coeff(k).abs() < 1e-9);
            }
        }

        #[test]
        fn monomial_sum_equals_chs(xs in proptest::collection::vec(-2.0f64..2.0, 3)) {
            // Σ_{π⊢d} m_π(x) = h_d(x) — every degree-d monomial appears once.
            for d in [2u32, 3, 4] {
                let total: f64 = enumerate_partitions(d)
                    .unwrap()
                    .iter()
                    .filter(|pi| pi.len() <= xs.len())
                    .map(|pi| monomial_sym(pi, &xs))
                    .sum();
                let direct = chs(d as usize, &xs);
                prop_assert!((total - direct).abs() <= 1e-9 * (1.0 + direct.abs()));
            }
        }
    }
}
